#pragma once

#include "mckaykit/group.hpp"
#include "mckaykit/molien.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mckaykit {

struct RootSystemInfo {
  char type = 'A';
  int rank = 1;
  std::vector<std::vector<long long>> cartan;  // A_ij = 2 (a_i, a_j) / (a_i, a_i)
  QMat simple_roots;                           // rows are simple roots in an orthonormal basis
  QMat gram;                                   // (a_i, a_j)
  unsigned long long weyl_order = 0;
  std::vector<int> exponents;                  // filled by exponents() when computed
  bool resolution_exists = false;
  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

inline bool valid_root_type(char t, int r) {
  switch (t) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

inline unsigned long long weyl_order_formula(char t, int r) {
  auto fact = [](int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  switch (t) {
    case 'A': return fact(r + 1);
    case 'B':
    case 'C': return (1ULL << r) * fact(r);
    case 'D': return (1ULL << (r - 1)) * fact(r);
    case 'E': return r == 6 ? 51840ULL : r == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152ULL;
    case 'G': return 12ULL;
  }
  throw std::invalid_argument("unknown root system type");
}

inline QMat simple_roots(char t, int r) {
  if (!valid_root_type(t, r)) throw std::invalid_argument(std::string("invalid root system ") + t + std::to_string(r));
  auto e = [](std::size_t n, std::vector<std::pair<int, Rational>> entries) {
    std::vector<Rational> v(n);
    for (auto& [i, c] : entries) v[i] = c;
    return v;
  };
  std::vector<std::vector<Rational>> rows;
  Rational h(1, 2), mh(-1, 2);
  switch (t) {
    case 'A':
      for (int i = 0; i < r; ++i) rows.push_back(e(r + 1, {{i, 1}, {i + 1, -1}}));
      break;
    case 'B':
    case 'C':
    case 'D':
      for (int i = 0; i + 1 < r; ++i) rows.push_back(e(r, {{i, 1}, {i + 1, -1}}));
      if (t == 'B') rows.push_back(e(r, {{r - 1, 1}}));
      if (t == 'C') rows.push_back(e(r, {{r - 1, 2}}));
      if (t == 'D') rows.push_back(e(r, {{r - 2, 1}, {r - 1, 1}}));
      break;
    case 'G':
      rows.push_back(e(3, {{0, 1}, {1, -1}}));
      rows.push_back(e(3, {{0, -2}, {1, 1}, {2, 1}}));
      break;
    case 'F':
      rows.push_back(e(4, {{1, 1}, {2, -1}}));
      rows.push_back(e(4, {{2, 1}, {3, -1}}));
      rows.push_back(e(4, {{3, 1}}));
      rows.push_back(e(4, {{0, h}, {1, mh}, {2, mh}, {3, mh}}));
      break;
    case 'E': {
      rows.push_back(e(8, {{0, h}, {1, mh}, {2, mh}, {3, mh}, {4, mh}, {5, mh}, {6, mh}, {7, h}}));
      rows.push_back(e(8, {{0, 1}, {1, 1}}));
      for (int i = 0; i < 6; ++i) rows.push_back(e(8, {{i, -1}, {i + 1, 1}}));
      rows.resize(r);
      break;
    }
  }
  QMat m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline RootSystemInfo root_system(char t, int r) {
  RootSystemInfo info;
  info.type = t;
  info.rank = r;
  info.simple_roots = simple_roots(t, r);
  info.gram = info.simple_roots * info.simple_roots.transpose();
  info.cartan.assign(r, std::vector<long long>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational a = Rational(2) * info.gram(i, j) / info.gram(i, i);
      if (!a.is_integer()) throw std::logic_error("non-integral Cartan entry");
      info.cartan[i][j] = a.small_num();
    }
  info.weyl_order = weyl_order_formula(t, r);
  info.resolution_exists = (t == 'A' || t == 'B' || t == 'C');
  return info;
}

inline std::string resolution_citation(char t) {
  if (t == 'A' || t == 'B' || t == 'C') return "admits a symplectic resolution of Hilbert scheme type";
  return "h + h*/W admits no symplectic resolution for this type";
}

// Simple reflections diag(S_i, S_i) on h + h*, h in the root basis, form [[0,B],[-B,0]].
inline std::pair<std::vector<Mat>, SympSpace> weyl_generators(char t, int r) {
  RootSystemInfo info = root_system(t, r);
  std::size_t n = 2 * static_cast<std::size_t>(r);
  Mat J(n, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      J(i, r + j) = CycloNum(info.gram(i, j));
      J(r + i, j) = CycloNum(-info.gram(i, j));
    }
  std::vector<Mat> gens;
  for (int i = 0; i < r; ++i) {
    Mat g = Mat::identity(n);
    for (int j = 0; j < r; ++j) {
      CycloNum a(static_cast<int>(info.cartan[i][j]));
      g(i, j) -= a;
      g(r + i, r + j) -= a;
    }
    gens.push_back(std::move(g));
  }
  return {gens, SympSpace(J)};
}

inline MatrixGroup weyl_group(char t, int r, std::size_t cap = 3000000) {
  if (!valid_root_type(t, r)) throw std::invalid_argument(std::string("invalid root system ") + t + std::to_string(r));
  if (weyl_order_formula(t, r) > cap) throw CapExceeded(cap);
  auto [gens, V] = weyl_generators(t, r);
  return generate(gens, V, cap);
}

inline int coxeter_number(char t, int r) {
  switch (t) {
    case 'A': return r + 1;
    case 'B':
    case 'C': return 2 * r;
    case 'D': return 2 * r - 2;
    case 'E': return r == 6 ? 12 : r == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
  }
  throw std::invalid_argument("unknown root system type");
}

// Invariant degrees of W on h read off the Molien series; exponents are degrees minus one.
inline std::vector<int> exponents(const MatrixGroup& W, int rank, int coxeter) {
  std::size_t D = static_cast<std::size_t>(rank * coxeter / 2 + rank);
  auto degs = free_degrees(molien(W, D, static_cast<std::size_t>(rank)), static_cast<std::size_t>(rank));
  for (auto& d : degs) --d;
  return degs;
}

inline std::vector<int> exponents(char t, int r, std::size_t cap = 3000000) {
  return exponents(weyl_group(t, r, cap), r, coxeter_number(t, r));
}

inline SympSpace plane() {
  Mat J(2, 2);
  J(0, 1) = CycloNum(1);
  J(1, 0) = CycloNum(-1);
  return SympSpace(J);
}

inline MatrixGroup sl2_subgroup(const std::string& kind, int n, std::size_t cap = 3000000) {
  if (n < 1) throw std::invalid_argument("subgroup parameter must be positive");
  std::vector<Mat> gens;
  if (kind == "cyclic") {
    Mat g(2, 2);
    g(0, 0) = CycloNum::zeta(n, 1);
    g(1, 1) = CycloNum::zeta(n, -1);
    gens.push_back(g);
  } else if (kind == "binary-dihedral") {
    Mat g(2, 2);
    g(0, 0) = CycloNum::zeta(2 * n, 1);
    g(1, 1) = CycloNum::zeta(2 * n, -1);
    Mat s(2, 2);
    s(0, 1) = CycloNum(1);
    s(1, 0) = CycloNum(-1);
    gens = {g, s};
  } else {
    throw std::invalid_argument("unknown SL(2) subgroup kind: " + kind);
  }
  return generate(gens, plane(), cap);
}

// S_n permuting coordinates of C^n + C^n diagonally.
inline MatrixGroup symmetric_group(int n, std::size_t cap = 3000000) {
  if (n < 1) throw std::invalid_argument("symmetric group degree must be positive");
  std::size_t d = static_cast<std::size_t>(n);
  std::vector<Mat> gens;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    Mat g = Mat::identity(2 * d);
    for (std::size_t b : {std::size_t(0), d}) {
      g(b + i, b + i) = CycloNum(0);
      g(b + i + 1, b + i + 1) = CycloNum(0);
      g(b + i, b + i + 1) = CycloNum(1);
      g(b + i + 1, b + i) = CycloNum(1);
    }
    gens.push_back(std::move(g));
  }
  return generate(gens, SympSpace::standard(d), cap);
}

// Blockwise action of G1 x G2 on V1 + V2.
inline MatrixGroup direct_product(const MatrixGroup& A, const MatrixGroup& B, std::size_t cap = 3000000) {
  std::size_t a = A.dim(), b = B.dim();
  Mat J(a + b, a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < a; ++j) J(i, j) = A.space().form(i, j);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) J(a + i, a + j) = B.space().form(i, j);
  std::vector<Mat> gens;
  auto embed = [&](const Mat& g, std::size_t off) {
    Mat m = Mat::identity(a + b);
    for (std::size_t i = 0; i < g.rows(); ++i)
      for (std::size_t j = 0; j < g.cols(); ++j) m(off + i, off + j) = g(i, j);
    return m;
  };
  for (auto gi : A.generators()) gens.push_back(embed(A.element(gi), 0));
  for (auto gi : B.generators()) gens.push_back(embed(B.element(gi), a));
  return generate(gens, SympSpace(J), cap);
}

namespace detail {

inline int parse_positive(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9) throw std::invalid_argument("bad " + what + ": '" + s + "'");
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad " + what + ": '" + s + "'");
  return std::stoi(s);
}

}  // namespace detail

inline unsigned long long known_order(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return 0;
  std::string kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "cyclic") return static_cast<unsigned long long>(detail::parse_positive(arg, "order"));
  if (kind == "binary-dihedral") return 4ULL * static_cast<unsigned long long>(detail::parse_positive(arg, "order"));
  if (kind == "symmetric") {
    int n = detail::parse_positive(arg, "degree");
    if (n > 20) return ~0ULL;
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  }
  if (kind == "weyl" && arg.size() >= 2) {
    int r = detail::parse_positive(arg.substr(1), "rank");
    if (!valid_root_type(arg[0], r)) return 0;
    return r > 19 ? ~0ULL : weyl_order_formula(arg[0], r);
  }
  return 0;
}

// Catalog specs used by the exhaustive property checks.
inline std::vector<std::string> catalog_specs(unsigned long long max_order) {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 2; n <= 12; ++n) out.push_back("binary-dihedral:" + std::to_string(n));
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'A', 6}, {'A', 7},
                                                   {'B', 2}, {'B', 3}, {'B', 4}, {'B', 5}, {'C', 2}, {'C', 3}, {'C', 4},
                                                   {'C', 5}, {'D', 4}, {'D', 5}, {'D', 6}, {'E', 6}, {'E', 7}, {'E', 8},
                                                   {'F', 4}, {'G', 2}};
  for (auto [t, r] : types) out.push_back("weyl:" + std::string(1, t) + std::to_string(r));
  for (int n = 2; n <= 8; ++n) out.push_back("symmetric:" + std::to_string(n));
  std::vector<std::string> kept;
  for (auto& s : out)
    if (known_order(s) <= max_order) kept.push_back(s);
  return kept;
}

}  // namespace mckaykit
