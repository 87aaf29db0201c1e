#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tanaka/distribution.hpp"
#include "tanaka/errors.hpp"
#include "tanaka/lie.hpp"
#include "tanaka/pseudo.hpp"

namespace tanaka::io {

using nlohmann::json;

// ---- small helpers ---------------------------------------------------------

inline json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("BadJson", "input is not valid JSON");
  return doc;
}

inline Rational rational_from(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError("BadRational", where + ": " + e.what());
  }
  throw ParseError("BadRational", where + ": expected an integer or a 'p/q' string");
}

inline const json& require(const json& doc, const std::string& key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError("MissingField", "required field '" + key + "' is absent");
  return doc.at(key);
}

inline int int_from(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError("BadField", where + ": expected an integer");
  return j.get<int>();
}

inline Vec vec_from(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError("BadField", where + ": expected an array");
  Vec v;
  for (const auto& x : j) v.push_back(rational_from(x, where));
  return v;
}

// ---- algebra documents ------------------------------------------------------
//
// {
//   "degrees":     {"-2": 1, "-1": 2},
//   "basis_names": {"-2": ["z"], "-1": ["x", "y"]},        (optional)
//   "brackets":    [{"left": "x", "right": "y",
//                    "result": [["z", "1"]]}]              (optional; rest zero)
// }

struct AlgebraDoc {
  GradedVectorSpace space{-1, -1, {0}};
  std::vector<std::string> names;
  std::vector<BracketEntry> entries;

  GradedLieAlgebra build() const { return make_gla(space, entries, names); }
};

inline AlgebraDoc parse_algebra_doc(const json& doc) {
  AlgebraDoc out;
  const json& degrees = require(doc, "degrees");
  if (!degrees.is_object() || degrees.empty())
    throw ParseError("BadField", "'degrees' must be a nonempty object of degree -> dimension");
  std::map<int, int> dims;
  for (auto it = degrees.begin(); it != degrees.end(); ++it) {
    int deg = 0;
    try {
      deg = std::stoi(it.key());
    } catch (const std::exception&) {
      throw ParseError("BadField", "'degrees' key '" + it.key() + "' is not an integer");
    }
    const int d = int_from(it.value(), "degrees[" + it.key() + "]");
    if (d < 0) throw ParseError("BadField", "negative dimension for degree " + it.key());
    dims[deg] = d;
  }
  try {
    out.space = GradedVectorSpace::from_map(dims);
  } catch (const ValidationError& e) {
    throw ParseError("BadField", std::string("'degrees': ") + e.what());
  }

  // names: user-declared per degree, defaults elsewhere
  std::map<std::pair<int, int>, std::string> declared;
  if (doc.contains("basis_names")) {
    const json& bn = doc.at("basis_names");
    if (!bn.is_object()) throw ParseError("BadField", "'basis_names' must be an object");
    for (auto it = bn.begin(); it != bn.end(); ++it) {
      int deg = 0;
      try {
        deg = std::stoi(it.key());
      } catch (const std::exception&) {
        throw ParseError("BadField", "'basis_names' key '" + it.key() + "' is not an integer");
      }
      if (!it.value().is_array() ||
          static_cast<int>(it.value().size()) != out.space.dim(deg))
        throw ParseError("BadField", "'basis_names[" + it.key() + "]' must list " +
                                         std::to_string(out.space.dim(deg)) + " names");
      int o = 0;
      for (const auto& s : it.value()) {
        if (!s.is_string()) throw ParseError("BadField", "basis names must be strings");
        declared[{deg, o++}] = s.get<std::string>();
      }
    }
  }
  std::map<std::string, BasisIndex> by_name;
  for (int d = out.space.min_degree(); d <= out.space.max_degree(); ++d)
    for (int o = 0; o < out.space.dim(d); ++o) {
      auto it = declared.find({d, o});
      const std::string name = it != declared.end() ? it->second : default_basis_name(d, o);
      if (by_name.count(name)) throw ParseError("BadField", "duplicate basis name '" + name + "'");
      by_name[name] = {d, o};
      out.names.push_back(name);
    }

  if (doc.contains("brackets")) {
    const json& brs = doc.at("brackets");
    if (!brs.is_array()) throw ParseError("BadField", "'brackets' must be an array");
    for (const auto& b : brs) {
      const json& left = require(b, "left");
      const json& right = require(b, "right");
      const json& result = require(b, "result");
      auto look = [&](const json& j) {
        if (!j.is_string()) throw ParseError("BadField", "bracket operands must be basis names");
        auto it = by_name.find(j.get<std::string>());
        if (it == by_name.end())
          throw ParseError("BadField", "unknown basis name '" + j.get<std::string>() + "'");
        return it->second;
      };
      BracketEntry e{look(left), look(right), {}};
      if (!result.is_array()) throw ParseError("BadField", "'result' must be an array of [name, coeff]");
      for (const auto& term : result) {
        if (!term.is_array() || term.size() != 2)
          throw ParseError("BadField", "'result' entries must be [name, coeff] pairs");
        e.result.push_back({look(term.at(0)), rational_from(term.at(1), "bracket coefficient")});
      }
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

inline json serialize_algebra(const GradedLieAlgebra& g) {
  const auto& sp = g.space();
  json degrees = json::object();
  json names = json::object();
  for (int d = sp.min_degree(); d <= sp.max_degree(); ++d) {
    degrees[std::to_string(d)] = sp.dim(d);
    json list = json::array();
    for (int o = 0; o < sp.dim(d); ++o) list.push_back(g.name(sp.flat_index(d, o)));
    names[std::to_string(d)] = list;
  }
  json brackets = json::array();
  const int n = g.total_dim();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const Vec v = g.bracket_basis(a, b);
      if (is_zero_vec(v)) continue;
      json result = json::array();
      for (int t = 0; t < n; ++t)
        if (v[static_cast<std::size_t>(t)] != 0)
          result.push_back(json::array({g.name(t), to_string(v[static_cast<std::size_t>(t)])}));
      brackets.push_back({{"left", g.name(a)}, {"right", g.name(b)}, {"result", result}});
    }
  return {{"degrees", degrees}, {"basis_names", names}, {"brackets", brackets}};
}

// ---- pseudo-product documents: algebra fields + e_basis / f_basis ----------

struct PPDoc {
  AlgebraDoc algebra;
  std::vector<Vec> e_basis;
  std::vector<Vec> f_basis;

  PseudoProductSymbol build() const {
    const GradedLieAlgebra minus = algebra.build();
    const std::size_t d1 = static_cast<std::size_t>(minus.space().dim(-1));
    auto mk = [&](const std::vector<Vec>& rows, const char* which) {
      for (const auto& r : rows)
        if (r.size() != d1)
          throw ParseError("BadField", std::string(which) +
                                           " rows must have length dim g^{-1} = " +
                                           std::to_string(d1));
      try {
        return Subspace(d1, rows);
      } catch (const std::invalid_argument& e) {
        throw ValidationError("NotDirectSum", std::string(which) + ": " + e.what());
      }
    };
    return make_pp_symbol(minus, mk(e_basis, "e_basis"), mk(f_basis, "f_basis"));
  }
};

inline PPDoc parse_pp_doc(const json& doc) {
  PPDoc out;
  out.algebra = parse_algebra_doc(doc);
  auto rows = [&](const char* key) {
    const json& arr = require(doc, key);
    if (!arr.is_array() || arr.empty())
      throw ParseError("BadField", std::string("'") + key + "' must be a nonempty array of rows");
    std::vector<Vec> rs;
    for (const auto& r : arr) rs.push_back(vec_from(r, key));
    return rs;
  };
  out.e_basis = rows("e_basis");
  out.f_basis = rows("f_basis");
  return out;
}

inline json serialize_pp(const GradedLieAlgebra& minus, const Subspace& e, const Subspace& f) {
  json doc = serialize_algebra(minus);
  json eb = json::array(), fb = json::array();
  auto rows_of = [](const Subspace& s) {
    json rows = json::array();
    for (const auto& v : s.basis()) {
      json row = json::array();
      for (const auto& x : v) row.push_back(to_string(x));
      rows.push_back(row);
    }
    return rows;
  };
  doc["e_basis"] = rows_of(e);
  doc["f_basis"] = rows_of(f);
  return doc;
}

// ---- vector-field documents -------------------------------------------------
//
// {
//   "n_vars": 3,
//   "var_names": ["x", "y", "z"],                          (optional)
//   "fields": [["1", "0", "0"], ["0", "1", "x"]],          (component polynomials)
//   "base_point": ["0", "0", "0"]
// }
// Fibration documents use "E_fields" and "F_fields" instead of "fields".

struct VFDoc {
  int n_vars = 0;
  std::vector<std::string> var_names;
  std::vector<PolyVectorField> fields;
  Vec base_point;

  DistributionModel build() const { return DistributionModel(n_vars, fields, base_point); }
};

struct FibrationDoc {
  int n_vars = 0;
  std::vector<std::string> var_names;
  std::vector<PolyVectorField> e_fields;
  std::vector<PolyVectorField> f_fields;
  Vec base_point;
};

namespace detail {

inline std::vector<std::string> var_names_from(const json& doc, int n_vars) {
  std::vector<std::string> names;
  if (doc.contains("var_names")) {
    const json& vn = doc.at("var_names");
    if (!vn.is_array() || static_cast<int>(vn.size()) != n_vars)
      throw ParseError("BadField", "'var_names' must list exactly n_vars names");
    for (const auto& s : vn) {
      if (!s.is_string()) throw ParseError("BadField", "'var_names' entries must be strings");
      names.push_back(s.get<std::string>());
    }
  } else {
    for (int i = 0; i < n_vars; ++i) names.push_back("x" + std::to_string(i));
  }
  return names;
}

inline std::vector<PolyVectorField> fields_from(const json& arr, int n_vars,
                                                const std::vector<std::string>& names,
                                                const std::string& key) {
  if (!arr.is_array() || arr.empty())
    throw ParseError("BadField", "'" + key + "' must be a nonempty array of fields");
  std::vector<PolyVectorField> out;
  for (const auto& fj : arr) {
    if (!fj.is_array() || static_cast<int>(fj.size()) != n_vars)
      throw ParseError("BadField", "each field in '" + key + "' must list n_vars components");
    PolyVectorField f = PolyVectorField::zero(n_vars);
    int a = 0;
    for (const auto& comp : fj) {
      if (!comp.is_string())
        throw ParseError("BadField", "field components must be polynomial strings");
      f.components[static_cast<std::size_t>(a++)] =
          Polynomial::parse(comp.get<std::string>(), names);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

inline VFDoc parse_vf_doc(const json& doc) {
  VFDoc out;
  out.n_vars = int_from(require(doc, "n_vars"), "n_vars");
  if (out.n_vars < 1) throw ParseError("BadField", "n_vars must be >= 1");
  out.var_names = detail::var_names_from(doc, out.n_vars);
  out.fields = detail::fields_from(require(doc, "fields"), out.n_vars, out.var_names, "fields");
  out.base_point = vec_from(require(doc, "base_point"), "base_point");
  if (static_cast<int>(out.base_point.size()) != out.n_vars)
    throw ParseError("BadField", "'base_point' must have n_vars coordinates");
  return out;
}

inline FibrationDoc parse_fibration_doc(const json& doc) {
  FibrationDoc out;
  out.n_vars = int_from(require(doc, "n_vars"), "n_vars");
  if (out.n_vars < 1) throw ParseError("BadField", "n_vars must be >= 1");
  out.var_names = detail::var_names_from(doc, out.n_vars);
  out.e_fields =
      detail::fields_from(require(doc, "E_fields"), out.n_vars, out.var_names, "E_fields");
  out.f_fields =
      detail::fields_from(require(doc, "F_fields"), out.n_vars, out.var_names, "F_fields");
  out.base_point = vec_from(require(doc, "base_point"), "base_point");
  if (static_cast<int>(out.base_point.size()) != out.n_vars)
    throw ParseError("BadField", "'base_point' must have n_vars coordinates");
  return out;
}

inline json serialize_vf_model(const std::vector<PolyVectorField>& fields,
                               const std::vector<std::string>& var_names, const Vec& base_point) {
  json jf = json::array();
  for (const auto& f : fields) {
    json comps = json::array();
    for (const auto& p : f.components) comps.push_back(p.to_text(var_names));
    jf.push_back(comps);
  }
  json bp = json::array();
  for (const auto& x : base_point) bp.push_back(to_string(x));
  return {{"n_vars", static_cast<int>(var_names.size())},
          {"var_names", var_names},
          {"fields", jf},
          {"base_point", bp}};
}

inline json serialize_fibration(const std::vector<PolyVectorField>& e_fields,
                                const std::vector<PolyVectorField>& f_fields,
                                const std::vector<std::string>& var_names, const Vec& base_point) {
  json je = json::array(), jf = json::array();
  for (const auto& f : e_fields) {
    json comps = json::array();
    for (const auto& p : f.components) comps.push_back(p.to_text(var_names));
    je.push_back(comps);
  }
  for (const auto& f : f_fields) {
    json comps = json::array();
    for (const auto& p : f.components) comps.push_back(p.to_text(var_names));
    jf.push_back(comps);
  }
  json bp = json::array();
  for (const auto& x : base_point) bp.push_back(to_string(x));
  return {{"n_vars", static_cast<int>(var_names.size())},
          {"var_names", var_names},
          {"E_fields", je},
          {"F_fields", jf},
          {"base_point", bp}};
}

}  // namespace tanaka::io
