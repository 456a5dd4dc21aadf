#pragma once

// JSON formats shared by the library and the CLI.
//
// tensor:   {"n": 3, "k": 2, "symmetry": "general"|"symmetric"|"antisymmetric",
//            "entries": [{"idx": [1, 2], "re": 0.5, "im": 0.0}, ...]}
// tableau:  {"partition": [2, 1], "numbering": [[1, 2], [3]]}

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"
#include "srank/decompositions.hpp"
#include "srank/entanglement.hpp"
#include "srank/error.hpp"
#include "srank/jamiolkowski.hpp"
#include "srank/tensor.hpp"

namespace srank::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Symmetry parse_symmetry(const std::string& s) {
  if (s == "general") return Symmetry::general;
  if (s == "symmetric") return Symmetry::symmetric;
  if (s == "antisymmetric") return Symmetry::antisymmetric;
  fail(ErrorCode::parse_error, "unknown symmetry '" + s + "'");
}

inline std::string symmetry_name(Symmetry s) {
  return s == Symmetry::young ? "general" : to_string(s);
}

/// Parses the shared tensor format; an asserted symmetry is verified to `eps`.
inline Tensor tensor_from_json(const json& j, double eps = kDefaultEpsilon) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    const Symmetry sym = parse_symmetry(j.value("symmetry", std::string("general")));
    std::vector<Entry> entries;
    for (const auto& e : j.value("entries", json::array())) {
      Entry en;
      en.index = e.at("idx").get<MultiIndex>();
      en.value = Complex(e.value("re", 0.0), e.value("im", 0.0));
      entries.push_back(std::move(en));
    }
    return make_tensor(n, k, entries, sym, eps);
  } catch (const json::exception& ex) {
    fail(ErrorCode::parse_error, ex.what());
  }
}

/// Non-zero coefficients in lexicographic order.
inline json tensor_to_json(const Tensor& t) {
  json entries = json::array();
  MultiIndex idx(static_cast<std::size_t>(t.order()), 0);
  std::size_t flat = 0;
  do {
    const Complex c = t[flat++];
    if (c != Complex{}) {
      MultiIndex one = idx;
      for (auto& x : one) ++x;
      entries.push_back({{"idx", one}, {"re", c.real()}, {"im", c.imag()}});
    }
  } while (next_index(t.dim(), idx));
  return {{"n", t.dim()}, {"k", t.order()}, {"symmetry", symmetry_name(t.symmetry())}, {"entries", entries}};
}

inline json four_leg_to_json(const FourLegTensor& phi) {
  json j = tensor_to_json(phi.data);
  j["legs"] = leg_names(phi.layout);
  return j;
}

inline YoungTableau tableau_from_json(const json& j) {
  try {
    auto rows = j.at("numbering").get<std::vector<std::vector<int>>>();
    if (j.contains("partition")) return YoungTableau(Partition(j.at("partition").get<std::vector<int>>()), rows);
    return YoungTableau(std::move(rows));
  } catch (const json::exception& ex) {
    fail(ErrorCode::parse_error, ex.what());
  } catch (const Error& ex) {
    fail(ErrorCode::parse_error, ex.what());
  }
}

inline json tableau_to_json(const YoungTableau& t) {
  return {{"partition", t.shape().parts()}, {"numbering", t.rows()}};
}

inline json complex_to_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

inline json vector_to_json(const Vector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(complex_to_json(c));
  return a;
}

inline json witness_to_json(const Witness& w) {
  json j = {{"first", w.first}, {"second", w.second}, {"lhs", complex_to_json(w.lhs)}, {"rhs", complex_to_json(w.rhs)}};
  if (w.slot > 0) j["slot"] = w.slot;
  return j;
}

inline json verdict_to_json(const Verdict& v) {
  json j = {{"schema", kSchemaVersion},
            {"symmetry", to_string(v.symmetry)},
            {"s_rank", v.s_rank},
            {"minimal_rank", v.minimal_rank},
            {"simple", v.simple}};
  j["witness"] = v.witness ? witness_to_json(*v.witness) : json(nullptr);
  j["score"] = v.score ? json(*v.score) : json(nullptr);
  return j;
}

inline json decomposition_to_json(const SchmidtDecomposition& d) {
  json vecs = json::array(), partners = json::array();
  for (const auto& v : d.left) vecs.push_back(vector_to_json(v));
  for (const auto& v : d.right) partners.push_back(vector_to_json(v));
  return {{"schema", kSchemaVersion}, {"kind", "schmidt"},    {"lambdas", d.lambdas}, {"vectors", vecs},
          {"partner_vectors", partners}, {"rank", d.rank()}, {"residual", d.residual}};
}

inline json decomposition_to_json(const SlaterDecomposition& d) {
  json vecs = json::array();
  for (const auto& v : d.vectors) vecs.push_back(vector_to_json(v));
  json j = {{"schema", kSchemaVersion},
            {"kind", d.kind == SlaterKind::symmetric ? "takagi" : "youla"},
            {"lambdas", d.lambdas},
            {"vectors", vecs},
            {"rank", d.rank()},
            {"residual", d.residual}};
  if (d.kind == SlaterKind::antisymmetric) {
    json partners = json::array();
    for (const auto& v : d.partners) partners.push_back(vector_to_json(v));
    j["partner_vectors"] = partners;
  }
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& ex) {
    fail(ErrorCode::parse_error, path + ": " + ex.what());
  }
}

}  // namespace srank::io
