#pragma once

#include "mckaykit/symplectic.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mckaykit {

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::size_t cap) : std::runtime_error("group order exceeds cap " + std::to_string(cap)) {}
};
struct NotSymplectic : std::invalid_argument {
  NotSymplectic() : std::invalid_argument("generator does not preserve the symplectic form") {}
};

struct ConjClass {
  std::uint32_t rep = 0;
  std::vector<std::uint32_t> members;
  std::size_t size() const { return members.size(); }
  int degree = 0;  // rank(id - g), constant on the class
};

using ClassFunction = std::vector<CycloNum>;

namespace detail {

inline void put_varint(std::string& s, std::uint64_t v) {
  while (v >= 0x80) {
    s.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  s.push_back(static_cast<char>(v));
}
inline std::uint64_t get_varint(const std::string& s, std::size_t& pos) {
  std::uint64_t v = 0;
  int shift = 0;
  while (true) {
    auto b = static_cast<unsigned char>(s[pos++]);
    v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
  }
}
inline std::uint64_t zigzag(std::int64_t v) { return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63); }
inline std::int64_t unzigzag(std::uint64_t v) { return static_cast<std::int64_t>(v >> 1) ^ -static_cast<std::int64_t>(v & 1); }

inline void put_rational(std::string& s, const Rational& r) {
  if (!r.is_big()) {
    s.push_back(0);
    put_varint(s, zigzag(r.small_num()));
    put_varint(s, static_cast<std::uint64_t>(r.small_den()));
  } else {
    s.push_back(1);
    std::string t = r.str();
    put_varint(s, t.size());
    s += t;
  }
}
inline Rational get_rational(const std::string& s, std::size_t& pos) {
  char tag = s[pos++];
  if (tag == 0) {
    std::int64_t n = unzigzag(get_varint(s, pos));
    auto d = static_cast<std::int64_t>(get_varint(s, pos));
    return Rational(n, d);
  }
  std::size_t len = get_varint(s, pos);
  Rational r = Rational::parse(s.substr(pos, len));
  pos += len;
  return r;
}

// Open-addressing table of indices into an external string store.
class StringIndex {
 public:
  std::optional<std::uint32_t> find(const std::vector<std::string>& store, std::string_view key) const {
    if (slots_.empty()) return std::nullopt;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t h = hash(key) & mask;; h = (h + 1) & mask) {
      std::uint32_t v = slots_[h];
      if (v == kEmpty) return std::nullopt;
      if (store[v] == key) return v;
    }
  }
  void insert(const std::vector<std::string>& store, std::uint32_t v) {
    if (2 * (count_ + 1) > slots_.size()) rehash(store, std::max<std::size_t>(64, 2 * slots_.size()));
    place(store[v], v);
    ++count_;
  }
  void clear() {
    slots_.clear();
    count_ = 0;
  }

 private:
  static constexpr std::uint32_t kEmpty = UINT32_MAX;
  std::vector<std::uint32_t> slots_;
  std::size_t count_ = 0;
  static std::size_t hash(std::string_view k) { return std::hash<std::string_view>{}(k); }
  void place(std::string_view key, std::uint32_t v) {
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash(key) & mask;
    while (slots_[h] != kEmpty) h = (h + 1) & mask;
    slots_[h] = v;
  }
  void rehash(const std::vector<std::string>& store, std::size_t n) {
    slots_.assign(n, kEmpty);
    for (std::uint32_t i = 0; i < count_; ++i) place(store[i], i);
  }
};

}  // namespace detail

class MatrixGroup {
 public:
  const SympSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  int conductor() const { return conductor_; }
  std::size_t order() const { return packed_.size(); }
  const std::vector<std::uint32_t>& generators() const { return gen_index_; }
  const std::vector<ConjClass>& classes() const { return classes_; }
  std::uint32_t class_of(std::uint32_t g) const { return class_of_[g]; }
  std::uint32_t inverse(std::uint32_t g) const { return inverse_[g]; }
  std::uint32_t identity() const { return identity_; }
  int degree(std::uint32_t g) const { return degree_[g]; }

  Mat element(std::uint32_t i) const { return decode(packed_[i]); }
  QMat element_q(std::uint32_t i) const {
    if (conductor_ != 1) throw std::logic_error("group is not rational");
    return decode_q(packed_[i]);
  }

  std::optional<std::uint32_t> index_of(const Mat& m) const {
    if (m.rows() != dim() || m.cols() != dim()) return std::nullopt;
    for (const auto& z : m.data())
      if (!z.is_rational() && conductor_ % z.conductor() != 0) return std::nullopt;
    return index_.find(packed_, encode(m));
  }

  // a*b by following the generator word of b through the right-multiplication tables.
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t buf[128];
    std::vector<std::uint32_t> heap;
    std::uint32_t* word = buf;
    if (max_depth_ > 128) {
      heap.resize(max_depth_);
      word = heap.data();
    }
    std::size_t len = 0;
    for (std::uint32_t x = b; x != identity_; x = parent_[x]) word[len++] = pgen_[x];
    for (std::size_t i = len; i-- > 0;) a = right_[word[i]][a];
    return a;
  }

  // Coefficients of C_i * C_j in the class-sum basis (nonnegative integers).
  std::vector<long long> class_sum_product(std::size_t i, std::size_t j) const {
    std::vector<long long> out(classes_.size(), 0);
    for (std::size_t k = 0; k < classes_.size(); ++k) {
      std::uint32_t z = classes_[k].rep;
      long long cnt = 0;
      for (std::uint32_t x : classes_[i].members)
        if (class_of_[mul(inverse_[x], z)] == j) ++cnt;
      out[k] = cnt;
    }
    return out;
  }

  friend MatrixGroup generate(const std::vector<Mat>& gens, const SympSpace& space, std::size_t cap);

  std::string encode(const Mat& m) const {
    std::string s;
    s.reserve(m.rows() * m.cols() * 3);
    for (const auto& z : m.data()) {
      CycloNum p = z.is_rational() ? CycloNum(z.rational_part()).promote(conductor_) : z.promote(conductor_);
      for (const auto& c : p.coeffs()) detail::put_rational(s, c);
    }
    return s;
  }

 private:
  SympSpace space_;
  int conductor_ = 1;
  std::vector<std::string> packed_;
  detail::StringIndex index_;
  std::vector<std::uint32_t> gen_index_;
  std::vector<std::vector<std::uint32_t>> right_;  // right_[s][g] = g * gens[s]
  std::vector<std::uint32_t> parent_, pgen_;       // g = parent_[g] * gens[pgen_[g]]
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> class_of_;
  std::vector<int> degree_;
  std::vector<ConjClass> classes_;
  std::uint32_t identity_ = 0;
  std::size_t max_depth_ = 0;

  std::string encode_q(const QMat& m) const {
    std::string s;
    s.reserve(m.rows() * m.cols() * 3);
    for (const auto& c : m.data()) detail::put_rational(s, c);
    return s;
  }
  Mat decode(const std::string& s) const {
    std::size_t n = dim(), pos = 0;
    int phi = cyclo_ctx(conductor_)->phi;
    Mat m(n, n);
    std::vector<Rational> buf(phi);
    for (std::size_t i = 0; i < n * n; ++i) {
      for (int k = 0; k < phi; ++k) buf[k] = detail::get_rational(s, pos);
      m(i / n, i % n) = CycloNum(conductor_, buf);
    }
    return m;
  }
  QMat decode_q(const std::string& s) const {
    std::size_t n = dim(), pos = 0;
    QMat m(n, n);
    for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = detail::get_rational(s, pos);
    return m;
  }

  template <class T>
  void build(const std::vector<Matrix<T>>& gens, std::size_t cap);
  template <class T>
  Matrix<T> dec(const std::string& s) const {
    if constexpr (std::is_same_v<T, Rational>)
      return decode_q(s);
    else
      return decode(s);
  }
  template <class T>
  std::string enc(const Matrix<T>& m) const {
    if constexpr (std::is_same_v<T, Rational>)
      return encode_q(m);
    else
      return encode(m);
  }
};

template <class T>
void MatrixGroup::build(const std::vector<Matrix<T>>& gens, std::size_t cap) {
  std::size_t n = dim();
  std::size_t ng = gens.size();
  std::vector<Matrix<T>> gen_inv;
  for (const auto& g : gens) gen_inv.push_back(mckaykit::inverse(g));

  // breadth-first closure; element i = elem[parent[i]] * gens[pgen[i]]
  std::vector<std::string> elems;
  detail::StringIndex idx;
  std::vector<std::uint32_t> parent, pgen;
  std::vector<std::vector<std::uint32_t>> right(ng);
  auto add = [&](std::string key, std::uint32_t par, std::uint32_t gi) -> std::uint32_t {
    if (auto f = idx.find(elems, key)) return *f;
    if (elems.size() + 1 > cap) throw CapExceeded(cap);
    auto id = static_cast<std::uint32_t>(elems.size());
    elems.push_back(std::move(key));
    idx.insert(elems, id);
    parent.push_back(par);
    pgen.push_back(gi);
    return id;
  };
  add(enc(Matrix<T>::identity(n)), 0, 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Matrix<T> g = dec<T>(elems[i]);
    for (std::size_t s = 0; s < ng; ++s) {
      std::uint32_t j = add(enc(g * gens[s]), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(s));
      right[s].push_back(j);
    }
  }
  std::size_t N = elems.size();
  std::vector<std::vector<std::uint32_t>> left_inv(ng, std::vector<std::uint32_t>(N));
  for (std::size_t i = 0; i < N; ++i) {
    Matrix<T> g = dec<T>(elems[i]);
    for (std::size_t s = 0; s < ng; ++s) left_inv[s][i] = *idx.find(elems, enc(gen_inv[s] * g));
  }
  idx.clear();
  std::vector<std::uint32_t> inv(N);
  inv[0] = 0;
  for (std::size_t i = 1; i < N; ++i) inv[i] = left_inv[pgen[i]][inv[parent[i]]];

  // canonical order: bytewise on the serialization
  std::vector<std::uint32_t> perm(N);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) { return elems[a] < elems[b]; });
  std::vector<std::uint32_t> pos(N);
  for (std::size_t k = 0; k < N; ++k) pos[perm[k]] = static_cast<std::uint32_t>(k);

  packed_.resize(N);
  index_.clear();
  for (std::size_t k = 0; k < N; ++k) {
    packed_[k] = std::move(elems[perm[k]]);
    index_.insert(packed_, static_cast<std::uint32_t>(k));
  }
  identity_ = pos[0];
  inverse_.resize(N);
  parent_.resize(N);
  pgen_.resize(N);
  for (std::size_t i = 0; i < N; ++i) {
    inverse_[pos[i]] = pos[inv[i]];
    parent_[pos[i]] = pos[parent[i]];
    pgen_[pos[i]] = pgen[i];
  }
  gen_index_.clear();
  for (std::size_t s = 0; s < ng; ++s) gen_index_.push_back(pos[right[s][0]]);
  std::vector<std::size_t> depth(N, 0);
  for (std::size_t i = 1; i < N; ++i) depth[i] = depth[parent[i]] + 1;
  max_depth_ = N > 0 ? *std::max_element(depth.begin(), depth.end()) : 0;

  // conjugacy classes: orbits of g -> s^-1 g s
  std::vector<std::uint32_t> cls(N, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> orbits;
  for (std::size_t k = 0; k < N; ++k) {
    if (cls[k] != UINT32_MAX) continue;
    auto id = static_cast<std::uint32_t>(orbits.size());
    std::vector<std::uint32_t> orbit{static_cast<std::uint32_t>(k)};
    cls[k] = id;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      std::uint32_t old = perm[orbit[h]];
      for (std::size_t s = 0; s < ng; ++s) {
        std::uint32_t c = pos[right[s][left_inv[s][old]]];
        if (cls[c] == UINT32_MAX) {
          cls[c] = id;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  left_inv.clear();

  right_.assign(ng, std::vector<std::uint32_t>(N));
  for (std::size_t s = 0; s < ng; ++s)
    for (std::size_t i = 0; i < N; ++i) right_[s][pos[i]] = pos[right[s][i]];

  degree_.assign(N, 0);
  for (std::size_t k = 0; k < N; ++k) degree_[k] = static_cast<int>(reflection_rank(dec<T>(packed_[k])));

  std::vector<ConjClass> out;
  for (auto& o : orbits) {
    ConjClass c;
    c.rep = o.front();
    c.degree = degree_[c.rep];
    for (auto m : o)
      if (degree_[m] != c.degree) throw std::logic_error("rank(id - g) not constant on a conjugacy class");
    c.members = std::move(o);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ConjClass& a, const ConjClass& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.rep < b.rep;
  });
  classes_ = std::move(out);
  class_of_.assign(N, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto m : classes_[c].members) class_of_[m] = static_cast<std::uint32_t>(c);
}

inline int common_conductor(const std::vector<Mat>& ms) {
  int N = 1;
  for (const auto& m : ms)
    for (const auto& z : m.data())
      if (!z.is_rational()) N = std::lcm(N, z.conductor());
  return N;
}

inline MatrixGroup generate(const std::vector<Mat>& gens, const SympSpace& space, std::size_t cap = 3000000) {
  MatrixGroup G;
  G.space_ = space;
  for (const auto& g : gens) {
    if (g.rows() != space.dim() || g.cols() != space.dim()) throw std::invalid_argument("generator has wrong size");
    if (!preserves_form(g, space.form)) throw NotSymplectic();
  }
  G.conductor_ = common_conductor(gens);
  if (G.conductor_ == 1) {
    std::vector<QMat> q;
    for (const auto& g : gens) {
      QMat m(g.rows(), g.cols());
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = g(i, j).rational_part();
      q.push_back(std::move(m));
    }
    G.build(q, cap);
  } else {
    std::vector<Mat> p;
    for (const auto& g : gens) {
      Mat m(g.rows(), g.cols());
      for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) m(i, j) = g(i, j).promote(G.conductor_);
      p.push_back(std::move(m));
    }
    G.build(p, cap);
  }
  return G;
}

}  // namespace mckaykit
