#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hsd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (row, value) pairs sorted by row with no zero values.
template <class T>
using SparseVector = std::vector<std::pair<std::size_t, T>>;

/// Largest row index of a nonempty vector.
template <class T>
std::size_t low(const SparseVector<T>& v) {
  return v.back().first;
}

// Arithmetic adaptors used by the generic reductions.

struct IntegerOps {
  using value_type = Integer;
  static bool is_zero(const Integer& a) { return a.is_zero(); }
  static Integer add(const Integer& a, const Integer& b) { return a + b; }
  static Integer mul(const Integer& a, const Integer& b) { return a * b; }
  static Integer neg(const Integer& a) { return -a; }
  static Integer from_integer(const Integer& a) { return a; }
};

struct RationalOps {
  using value_type = Rational;
  static bool is_zero(const Rational& a) { return a.is_zero(); }
  static Rational add(const Rational& a, const Rational& b) { return a + b; }
  static Rational mul(const Rational& a, const Rational& b) { return a * b; }
  static Rational neg(const Rational& a) { return -a; }
  static Rational inv(const Rational& a) { return 1 / a; }
  static Rational from_integer(const Integer& a) { return Rational(a); }
};

/// Arithmetic in GF(p) for a prime p < 2^32.
struct ModPOps {
  using value_type = std::uint64_t;
  std::uint64_t p;

  bool is_zero(std::uint64_t a) const { return a == 0; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_integer(const Integer& a) const;
};

/// Returns a sorted copy with duplicate rows summed and zeros removed.
template <class Ops>
SparseVector<typename Ops::value_type> normalize(const Ops& ops,
                                                 SparseVector<typename Ops::value_type> v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector<typename Ops::value_type> out;
  out.reserve(v.size());
  for (auto& [r, x] : v) {
    if (!out.empty() && out.back().first == r)
      out.back().second = ops.add(out.back().second, x);
    else
      out.emplace_back(r, std::move(x));
    if (ops.is_zero(out.back().second)) out.pop_back();
  }
  return out;
}

/// a*x + b*y.
template <class Ops>
SparseVector<typename Ops::value_type> combine(const Ops& ops, const typename Ops::value_type& a,
                                               const SparseVector<typename Ops::value_type>& x,
                                               const typename Ops::value_type& b,
                                               const SparseVector<typename Ops::value_type>& y) {
  SparseVector<typename Ops::value_type> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      auto v = ops.mul(a, x[i].second);
      if (!ops.is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      auto v = ops.mul(b, y[j].second);
      if (!ops.is_zero(v)) out.emplace_back(y[j].first, std::move(v));
      ++j;
    } else {
      auto v = ops.add(ops.mul(a, x[i].second), ops.mul(b, y[j].second));
      if (!ops.is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

template <class Ops>
typename Ops::value_type entry(const Ops& ops, const SparseVector<typename Ops::value_type>& v,
                               std::size_t row) {
  auto it = std::lower_bound(v.begin(), v.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it == v.end() || it->first != row) return ops.from_integer(0);
  return it->second;
}

/// Incremental column reduction over a field. Stored vectors have pairwise
/// distinct lows, so a vector lies in their span iff it reduces to zero.
template <class Ops>
class FieldReducer {
 public:
  using V = typename Ops::value_type;
  using Vec = SparseVector<V>;

  explicit FieldReducer(Ops ops, bool track = false) : ops_(std::move(ops)), track_(track) {}

  struct Outcome {
    bool independent;
    /// Input ids combining to the residue (only when tracking).
    Vec transform;
  };

  /// Reduces v and keeps the residue when nonzero. `id` names v in transforms.
  Outcome insert(Vec v, std::size_t id) {
    Vec t;
    if (track_) t.emplace_back(id, ops_.from_integer(1));
    eliminate(v, &t, nullptr);
    if (v.empty()) return {false, std::move(t)};
    by_low_.emplace(low(v), stored_.size());
    stored_.push_back(std::move(v));
    if (track_) transforms_.push_back(t);
    return {true, std::move(t)};
  }

  /// Residue of v; `coeffs` (stored index, c) satisfy v = residue + sum c * stored.
  Vec reduce(Vec v, Vec* coeffs = nullptr) const {
    eliminate(v, nullptr, coeffs);
    return v;
  }

  [[nodiscard]] std::size_t size() const { return stored_.size(); }
  [[nodiscard]] const Vec& stored(std::size_t k) const { return stored_[k]; }
  [[nodiscard]] const Ops& ops() const { return ops_; }

 private:
  void eliminate(Vec& v, Vec* t, Vec* coeffs) const {
    const V one = ops_.from_integer(1);
    while (!v.empty()) {
      auto it = by_low_.find(low(v));
      if (it == by_low_.end()) break;
      const Vec& s = stored_[it->second];
      V c = ops_.mul(v.back().second, ops_.inv(s.back().second));
      v = combine(ops_, one, v, ops_.neg(c), s);
      if (t && track_) *t = combine(ops_, one, *t, ops_.neg(c), transforms_[it->second]);
      if (coeffs) coeffs->emplace_back(it->second, std::move(c));
    }
    if (coeffs) *coeffs = normalize(ops_, std::move(*coeffs));
  }

  Ops ops_;
  bool track_;
  std::vector<Vec> stored_;
  std::vector<Vec> transforms_;
  std::unordered_map<std::size_t, std::size_t> by_low_;
};

/// Sparse integer matrix stored by columns.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}
  static IntMatrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const SparseVector<Integer>& column(std::size_t j) const { return data_.at(j); }
  /// Normalizes `v`. Throws std::out_of_range for a row outside the matrix.
  void set_column(std::size_t j, SparseVector<Integer> v);
  [[nodiscard]] Integer at(std::size_t r, std::size_t c) const;
  [[nodiscard]] std::size_t nnz() const;
  [[nodiscard]] bool is_zero() const { return nnz() == 0; }

  [[nodiscard]] IntMatrix transposed() const;
  /// Keeps the listed columns, in the given order.
  [[nodiscard]] IntMatrix select_columns(const std::vector<std::size_t>& cols) const;
  /// Keeps the listed rows (ascending), renumbered 0..k-1.
  [[nodiscard]] IntMatrix select_rows(const std::vector<std::size_t>& rows) const;
  /// Entries reduced into [0, p).
  [[nodiscard]] IntMatrix mod(std::uint64_t p) const;
  /// Applies the matrix to a sparse vector.
  [[nodiscard]] SparseVector<Integer> apply(const SparseVector<Integer>& v) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVector<Integer>> data_;
};

/// Nonzero invariant factors of the Smith normal form, positive and in
/// divisibility order.
std::vector<Integer> smith_invariants(const IntMatrix& m);
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Z-basis of {x : m x = 0} as columns in echelon form (distinct lows). The
/// basis spans the full saturated kernel lattice.
IntMatrix integer_kernel(const IntMatrix& m);
/// GF(p)-basis of the kernel, echelon form, entries in [0, p).
IntMatrix kernel_mod_p(const IntMatrix& m, std::uint64_t p);

/// Brings independent lattice generators into echelon form by unimodular
/// column operations. Throws std::invalid_argument if they are dependent.
IntMatrix echelon_lattice_basis(const IntMatrix& basis);

/// Coordinates of vectors with respect to columns in echelon form, over Z
/// (modulus 0) or GF(p).
class EchelonBasis {
 public:
  EchelonBasis(IntMatrix columns, std::uint64_t modulus);

  [[nodiscard]] const IntMatrix& columns() const { return columns_; }
  [[nodiscard]] std::size_t size() const { return columns_.cols(); }
  /// Empty optional when v is not in the span (lattice).
  [[nodiscard]] std::optional<SparseVector<Integer>> coordinates(SparseVector<Integer> v) const;

 private:
  IntMatrix columns_;
  std::uint64_t modulus_;
  std::unordered_map<std::size_t, std::size_t> by_low_;
};

std::pair<Integer, std::pair<Integer, Integer>> extended_gcd(const Integer& a, const Integer& b);
bool is_prime(std::uint64_t n);

}  // namespace hsd
