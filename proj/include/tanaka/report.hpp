#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include "tanaka/distribution.hpp"
#include "tanaka/io.hpp"
#include "tanaka/partial.hpp"
#include "tanaka/prolong.hpp"
#include "tanaka/pseudo.hpp"

namespace tanaka::report {

using nlohmann::json;

// ∂-rank rows and the kernel cross-check are reported for 0 <= n <= this
// bound on cap-reached runs; the fh/Tor spaces of infinite prolongations grow
// too fast for exact elimination at every n up to the cap.
inline constexpr int kPartialDepthInfinite = 3;

inline json status_json(const ProlongationStatus& st) {
  json j;
  if (st.finite) {
    j["kind"] = "finite";
    j["height"] = st.height;
  } else {
    j["kind"] = "cap_reached";
    j["cap"] = st.cap;
  }
  j["g0_is_zero"] = st.g0_is_zero;
  return j;
}

inline json dims_json(const ProlongationResult& pr) {
  json j;
  j["min_degree"] = pr.min_degree;
  j["dims"] = pr.dims_by_degree;
  return j;
}

inline int partial_report_depth(const ProlongationResult& pr) {
  if (pr.status.finite) return std::min(pr.status.cap, pr.status.height + 2);
  return std::min(kPartialDepthInfinite, pr.status.cap - 1);
}

// dims, status, per-n ∂ ranks and named invariant checks
inline json prolong_report(ProlongationResult& pr) {
  json rep;
  rep["dims_by_degree"] = dims_json(pr);
  rep["status"] = status_json(pr.status);

  const int depth = partial_report_depth(pr);
  extend_layers(pr.algebra, depth + 1);

  json ranks = json::array();
  json checks = json::array();
  checks.push_back({{"name", "jacobi_grading"},
                    {"pass", true},
                    {"detail", "verified on every basis pair/triple at construction"}});
  std::string fail;
  const bool rel = verify_prolongation_relation(pr.algebra, &fail);
  checks.push_back({{"name", "prolongation_relation_full_pairs"},
                    {"pass", rel},
                    {"detail", rel ? "A([u,v]) = [A(u),v] + [u,A(v)] on all pairs of g^-" : fail}});
  if (pr.status.finite)
    checks.push_back({{"name", "termination_guard"},
                      {"pass", true},
                      {"detail", "g^" + std::to_string(pr.status.height + 1) + " and g^" +
                                     std::to_string(pr.status.height + 2) + " both vanish"}});

  for (int n = 0; n <= depth; ++n) {
    const PartialRankRow row = partial_ranks(pr.algebra, n);
    ranks.push_back({{"n", n},
                     {"domain_dim", row.domain_dim},
                     {"rank", row.rank},
                     {"tor_dim", row.tor_dim},
                     {"w_dim", row.w_dim}});
    KernelCheckDiagnostics kd;
    const bool ok = verify_partial_kernel(pr.algebra, n, &kd);
    checks.push_back(
        {{"name", "kernel_identity_n" + std::to_string(n)},
         {"pass", ok},
         {"detail", "dim ker = " + std::to_string(kd.kernel_dim) + ", dim g^" +
                        std::to_string(n + 1) + " = " + std::to_string(kd.layer_dim) +
                        ", dim gl_" + std::to_string(n + 2) + " = " + std::to_string(kd.gl_tail_dim)}});
    const Subspace w = tor_complement(pr.algebra, n);
    const PartialOperator op = partial_operator(pr.algebra, n);
    const Subspace im = image_basis(op.matrix);
    auto stacked = im.basis();
    for (const auto& v : w.basis()) stacked.push_back(v);
    const bool direct =
        im.dim() + w.dim() == op.codomain_dim &&
        rank_of_rows(stacked, op.codomain_dim) == op.codomain_dim;
    checks.push_back({{"name", "tor_complement_direct_sum_n" + std::to_string(n)},
                      {"pass", direct},
                      {"detail", "rank(Im ∂ ∪ W) = " + std::to_string(op.codomain_dim)}});
  }
  rep["partial_ranks"] = ranks;
  rep["checks"] = checks;
  return rep;
}

inline json fundamental_json(const FundamentalReport& f) {
  return {{"generated_by_minus_one", f.generated_by_minus_one},
          {"adjoint_injective_on_g0", f.adjoint_injective_on_g0},
          {"is_fundamental", f.is_fundamental()},
          {"violations", f.violations}};
}

inline json check_gla_report(const GradedLieAlgebra& g) {
  json rep;
  const auto& sp = g.space();
  json degrees = json::object();
  for (int d = sp.min_degree(); d <= sp.max_degree(); ++d)
    degrees[std::to_string(d)] = sp.dim(d);
  rep["degrees"] = degrees;
  rep["total_dim"] = g.total_dim();
  json checks = json::array();
  checks.push_back({{"name", "jacobi_grading"}, {"pass", true}, {"detail", "verified at construction"}});
  rep["checks"] = checks;
  if (sp.max_degree() <= 0) rep["fundamental"] = fundamental_json(is_fundamental(g));
  return rep;
}

inline json pp_report(PPReport& rep) {
  json j;
  j["g0_dim"] = rep.g0_dim;
  j["g0_dim_without_derivation"] = rep.g0_dim_without_derivation;
  j["fundamental"] = fundamental_json(rep.fundamental);
  j["levi_nondegenerate"] = rep.levi_nondegenerate;
  j["ch_dim"] = rep.ch_dim;
  j["prolongation"] = prolong_report(rep.prolongation);
  if (rep.height_finite)
    j["height"] = rep.height;
  else
    j["height"] = "cap_reached";
  json checks = json::array();
  checks.push_back({{"name", "ch_decomposition"},
                    {"pass", rep.ch_decomposition_ok},
                    {"detail", "Ch = (Ch ∩ e) + (Ch ∩ f)"}});
  j["checks"] = checks;
  return j;
}

inline json flag_report(const FlagReport& fl, const LeviCauchyReport& lc, bool regular,
                        int samples) {
  json j;
  j["dims"] = fl.dims;
  j["depth"] = fl.depth;
  j["bracket_generating"] = fl.bracket_generating;
  j["stabilized"] = fl.stabilized;
  j["levi_rank"] = lc.levi_rank;
  j["ch_dim"] = lc.ch_dim;
  j["regularity_probe"] = {{"pass", regular},
                           {"samples", samples},
                           {"detail", "flag and Levi ranks constant at seeded sample points"}};
  return j;
}

// ---- plain-text rendering ---------------------------------------------------

inline void render_checks(const json& checks, std::string& out) {
  for (const auto& c : checks)
    out += "  [" + std::string(c.at("pass").get<bool>() ? "ok" : "FAIL") + "] " +
           c.at("name").get<std::string>() + ": " + c.at("detail").get<std::string>() + "\n";
}

inline std::string render_dims(const json& dims) {
  std::string s = "degrees " + std::to_string(dims.at("min_degree").get<int>()) + "..:";
  for (const auto& d : dims.at("dims")) s += " " + std::to_string(d.get<int>());
  return s;
}

inline std::string prolong_text(const json& rep) {
  std::string out;
  const auto& st = rep.at("status");
  out += "status: ";
  if (st.at("kind") == "finite") {
    out += "finite height " + std::to_string(st.at("height").get<int>());
    if (st.at("g0_is_zero").get<bool>()) out += " (g^0 = 0)";
  } else {
    out += "cap reached (" + std::to_string(st.at("cap").get<int>()) + "), prolongation keeps growing";
  }
  out += "\n" + render_dims(rep.at("dims_by_degree")) + "\n";
  out += "partial operators:\n";
  for (const auto& r : rep.at("partial_ranks"))
    out += "  n=" + std::to_string(r.at("n").get<int>()) + ": dim fh = " +
           std::to_string(r.at("domain_dim").get<std::size_t>()) + ", rank = " +
           std::to_string(r.at("rank").get<std::size_t>()) + ", dim Tor = " +
           std::to_string(r.at("tor_dim").get<std::size_t>()) + ", dim W = " +
           std::to_string(r.at("w_dim").get<std::size_t>()) + "\n";
  out += "checks:\n";
  render_checks(rep.at("checks"), out);
  return out;
}

inline std::string check_gla_text(const json& rep) {
  std::string out = "valid graded Lie algebra, total dim " +
                    std::to_string(rep.at("total_dim").get<int>()) + "\n";
  if (rep.contains("fundamental")) {
    const auto& f = rep.at("fundamental");
    out += std::string("fundamental: ") + (f.at("is_fundamental").get<bool>() ? "yes" : "no") +
           " (generated by g^-1: " + (f.at("generated_by_minus_one").get<bool>() ? "yes" : "no") +
           ", adjoint injective on g^0: " +
           (f.at("adjoint_injective_on_g0").get<bool>() ? "yes" : "no") + ")\n";
    for (const auto& v : f.at("violations")) out += "  note: " + v.get<std::string>() + "\n";
  }
  render_checks(rep.at("checks"), out);
  return out;
}

inline std::string pp_text(const json& rep) {
  std::string out;
  out += "g^0 dim: " + std::to_string(rep.at("g0_dim").get<std::size_t>()) +
         " (without the derivation identity: " +
         std::to_string(rep.at("g0_dim_without_derivation").get<std::size_t>()) + ")\n";
  out += std::string("Levi-nondegenerate: ") +
         (rep.at("levi_nondegenerate").get<bool>() ? "yes" : "no") +
         " (ch_dim " + std::to_string(rep.at("ch_dim").get<std::size_t>()) + ")\n";
  if (rep.at("height").is_number())
    out += "height: " + std::to_string(rep.at("height").get<int>()) + "\n";
  else
    out += "height: cap reached\n";
  out += prolong_text(rep.at("prolongation"));
  render_checks(rep.at("checks"), out);
  return out;
}

inline std::string flag_text(const json& rep) {
  std::string out = "flag dims:";
  for (const auto& d : rep.at("dims")) out += " " + std::to_string(d.get<int>());
  out += "\ndepth: " + std::to_string(rep.at("depth").get<int>());
  out += std::string("\nbracket-generating: ") +
         (rep.at("bracket_generating").get<bool>() ? "yes" : "no");
  out += std::string("\nstabilized: ") + (rep.at("stabilized").get<bool>() ? "yes" : "no");
  out += "\nlevi_rank: " + std::to_string(rep.at("levi_rank").get<std::size_t>());
  out += "\nch_dim: " + std::to_string(rep.at("ch_dim").get<std::size_t>());
  const auto& pr = rep.at("regularity_probe");
  out += std::string("\nregularity probe: ") + (pr.at("pass").get<bool>() ? "pass" : "FAIL") +
         " (" + std::to_string(pr.at("samples").get<int>()) + " samples)\n";
  return out;
}

}  // namespace tanaka::report
