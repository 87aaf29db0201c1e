#pragma once

#include <string>
#include <vector>

#include "tanaka/fixtures.hpp"
#include "tanaka/io.hpp"

namespace tanaka::catalog {

using nlohmann::json;

// name -> which CLI command consumes the emitted document
inline std::vector<std::pair<std::string, std::string>> fixture_index() {
  return {
      {"heisenberg", "check-gla / prolong"},
      {"abelian-<n>", "check-gla / prolong"},
      {"gl-symbol", "prolong"},
      {"so-symbol", "prolong"},
      {"co-symbol", "prolong"},
      {"heisenberg-gl2", "prolong"},
      {"ode2-pp", "pseudo"},
      {"split-abelian-pp", "pseudo"},
      {"contact-vf", "dist-flag / dist-symbol"},
      {"engel-vf", "dist-flag / dist-symbol"},
      {"gr-taut-<m>-<c>", "dist-flag / dist-symbol"},
      {"jet-fibration", "dist-pp"},
  };
}

namespace detail {

// parses "<prefix><n>" with n >= 1, returns -1 on mismatch
inline int suffix_number(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0) return -1;
  const std::string tail = name.substr(prefix.size());
  if (tail.empty()) return -1;
  for (char ch : tail)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return -1;
  const int n = std::stoi(tail);
  return n >= 1 ? n : -1;
}

}  // namespace detail

inline json fixture_document(const std::string& name) {
  using namespace tanaka::fixtures;
  if (name == "heisenberg") return io::serialize_algebra(heisenberg());
  if (const int n = detail::suffix_number(name, "abelian-"); n > 0)
    return io::serialize_algebra(abelian(n));
  if (name == "gl-symbol") return io::serialize_algebra(gl2_symbol());
  if (name == "so-symbol") return io::serialize_algebra(so3_symbol());
  if (name == "co-symbol") return io::serialize_algebra(co3_symbol());
  if (name == "heisenberg-gl2") return io::serialize_algebra(heisenberg_gl2());
  if (name == "ode2-pp") {
    const auto s = ode2_pp();
    return io::serialize_pp(s.minus(), s.e(), s.f());
  }
  if (name == "split-abelian-pp") {
    const auto s = split_abelian_pp();
    return io::serialize_pp(s.minus(), s.e(), s.f());
  }
  if (name == "contact-vf") {
    const auto m = contact_vf();
    return io::serialize_vf_model(m.generators(), contact_vf_var_names(), m.base_point());
  }
  if (name == "engel-vf") {
    const auto m = engel_vf();
    return io::serialize_vf_model(m.generators(), engel_vf_var_names(), m.base_point());
  }
  if (name.rfind("gr-taut-", 0) == 0) {
    const std::string tail = name.substr(8);
    const auto dash = tail.find('-');
    if (dash != std::string::npos) {
      const int m = detail::suffix_number("n" + tail.substr(0, dash), "n");
      const int c = detail::suffix_number("n" + tail.substr(dash + 1), "n");
      if (m > 0 && c > 0) {
        const auto model = gr_tautological_fixture(m, c);
        return io::serialize_vf_model(model.generators(), gr_tautological_var_names(m, c),
                                      model.base_point());
      }
    }
  }
  if (name == "jet-fibration") {
    const auto fx = jet_fibration();
    return io::serialize_fibration(fx.e_fields, fx.f_fields, fx.var_names, fx.base_point);
  }
  throw ParseError("UnknownFixture", "no fixture named '" + name + "' (try --list)");
}

}  // namespace tanaka::catalog
