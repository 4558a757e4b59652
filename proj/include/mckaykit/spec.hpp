#pragma once

#include "mckaykit/catalog.hpp"

#include <json.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mckaykit {

namespace detail {

// A number, a rational string "p/q", or a list of terms [coeff, N, k] meaning sum coeff * zeta_N^k.
inline CycloNum entry_from_json(const nlohmann::json& e) {
  if (e.is_number_integer()) return CycloNum(Rational(e.get<long long>()));
  if (e.is_string()) return CycloNum(Rational::parse(e.get<std::string>()));
  if (e.is_array()) {
    CycloNum z(0);
    for (const auto& t : e) {
      if (!t.is_array() || t.size() != 3 || !t[1].is_number_integer() || !t[2].is_number_integer())
        throw std::invalid_argument("matrix entry term must be [coeff, N, k]");
      int N = t[1].get<int>();
      if (N < 1) throw std::invalid_argument("root of unity order must be positive");
      z += entry_from_json(t[0]) * CycloNum::zeta(N, t[2].get<long long>());
    }
    return z;
  }
  throw std::invalid_argument("bad matrix entry: " + e.dump());
}

inline Mat matrix_from_json(const nlohmann::json& m) {
  if (!m.is_array() || m.empty() || !m[0].is_array()) throw std::invalid_argument("matrix must be a list of rows");
  std::size_t r = m.size(), c = m[0].size();
  Mat out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!m[i].is_array() || m[i].size() != c) throw std::invalid_argument("matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = entry_from_json(m[i][j]);
  }
  return out;
}

inline MatrixGroup group_from_matrix_file(const std::string& path, std::size_t cap) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matrix file: " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("matrix file is not JSON: " + std::string(e.what()));
  }
  if (!doc.contains("J") || !doc.contains("gens") || !doc["gens"].is_array())
    throw std::invalid_argument("matrix file needs \"J\" and \"gens\"");
  std::vector<Mat> gens;
  for (const auto& g : doc["gens"]) gens.push_back(matrix_from_json(g));
  return generate(gens, SympSpace(matrix_from_json(doc["J"])), cap);
}

inline MatrixGroup single_group(const std::string& spec, std::size_t cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("group spec needs kind:argument, got '" + spec + "'");
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "matrix-file") return group_from_matrix_file(arg, cap);
  if (known_order(spec) > cap) throw CapExceeded(cap);
  if (kind == "cyclic" || kind == "binary-dihedral") return sl2_subgroup(kind, parse_positive(arg, "order"), cap);
  if (kind == "symmetric") return symmetric_group(parse_positive(arg, "degree"), cap);
  if (kind == "weyl") {
    if (arg.size() < 2) throw std::invalid_argument("weyl spec is weyl:Xr, got '" + spec + "'");
    char t = arg[0];
    int r = parse_positive(arg.substr(1), "rank");
    if (!valid_root_type(t, r)) throw std::invalid_argument("no root system " + arg);
    return weyl_group(t, r, cap);
  }
  throw std::invalid_argument("unknown group kind '" + kind + "'");
}

}  // namespace detail

// "cyclic:n", "binary-dihedral:n", "weyl:Xr", "symmetric:n", "matrix-file:PATH", joined by '*' for products.
inline MatrixGroup group_from_spec(const std::string& spec, std::size_t cap = 3000000) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    auto star = spec.find('*', start);
    parts.push_back(spec.substr(start, star - start));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  MatrixGroup G = detail::single_group(parts[0], cap);
  for (std::size_t i = 1; i < parts.size(); ++i) G = direct_product(G, detail::single_group(parts[i], cap), cap);
  return G;
}

}  // namespace mckaykit
