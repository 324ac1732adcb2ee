#include "hsd/linalg.hpp"

#include <numeric>

namespace hsd {

namespace {

using Vec = SparseVector<Integer>;

Integer floor_mod(const Integer& a, std::uint64_t p) {
  Integer r = a % p;
  if (r < 0) r += p;
  return r;
}

// Unimodular column reduction to pairwise distinct lows. A clash between two
// columns is resolved by a 2x2 gcd step, so the transform stays invertible
// over Z and the transforms of zeroed columns span the kernel lattice.
void reduce_integer_columns(std::vector<Vec>& cols, std::vector<Vec>* trans) {
  const IntegerOps ops;
  std::unordered_map<std::size_t, std::size_t> pivot;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    while (!cols[j].empty()) {
      auto it = pivot.find(low(cols[j]));
      if (it == pivot.end()) {
        pivot.emplace(low(cols[j]), j);
        break;
      }
      const std::size_t i = it->second;
      const Integer a = cols[i].back().second;
      const Integer b = cols[j].back().second;
      if (b % a == 0) {
        const Integer q = -(b / a);
        cols[j] = combine(ops, Integer(1), cols[j], q, cols[i]);
        if (trans) (*trans)[j] = combine(ops, Integer(1), (*trans)[j], q, (*trans)[i]);
        continue;
      }
      auto [g, xy] = extended_gcd(a, b);
      const auto& [x, y] = xy;
      const Integer u = -(b / g);
      const Integer w = a / g;
      Vec ci = combine(ops, x, cols[i], y, cols[j]);
      Vec cj = combine(ops, u, cols[i], w, cols[j]);
      cols[i] = std::move(ci);
      cols[j] = std::move(cj);
      if (trans) {
        Vec ti = combine(ops, x, (*trans)[i], y, (*trans)[j]);
        Vec tj = combine(ops, u, (*trans)[i], w, (*trans)[j]);
        (*trans)[i] = std::move(ti);
        (*trans)[j] = std::move(tj);
      }
    }
  }
}

std::vector<Vec> columns_of(const IntMatrix& m) {
  std::vector<Vec> cols(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols[j] = m.column(j);
  return cols;
}

IntMatrix matrix_from(std::size_t rows, std::vector<Vec> cols) {
  IntMatrix out(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) out.set_column(j, std::move(cols[j]));
  return out;
}

// Diagonalizes a dense integer matrix by row and column operations and returns
// the absolute values of the nonzero diagonal entries.
std::vector<Integer> dense_diagonal(std::vector<std::vector<Integer>> a) {
  std::vector<Integer> diag;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!a[i][j].is_zero() && (bi == rows || abs(a[i][j]) < abs(a[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    std::swap(a[t], a[bi]);
    swap_cols(t, bj);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t].is_zero()) continue;
        const Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (!a[i][t].is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j].is_zero()) continue;
        const Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (!a[t][j].is_zero()) clean = false;
      }
      if (clean) break;
      std::size_t si = t, sj = t;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!a[i][t].is_zero() && abs(a[i][t]) < abs(a[si][sj])) si = i, sj = t;
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!a[t][j].is_zero() && abs(a[t][j]) < abs(a[si][sj])) si = t, sj = j;
      std::swap(a[t], a[si]);
      swap_cols(t, sj);
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace

// ----------------------------------------------------------------- helpers --

std::uint64_t ModPOps::inv(std::uint64_t a) const {
  if (a == 0) throw std::domain_error("zero has no inverse");
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::uint64_t ModPOps::from_integer(const Integer& a) const {
  return floor_mod(a, p).convert_to<std::uint64_t>();
}

std::pair<Integer, std::pair<Integer, Integer>> extended_gcd(const Integer& a, const Integer& b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    const Integer q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  return {r0, {s0, t0}};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// --------------------------------------------------------------- IntMatrix --

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].emplace_back(i, Integer(1));
  return m;
}

void IntMatrix::set_column(std::size_t j, SparseVector<Integer> v) {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  v = normalize(IntegerOps{}, std::move(v));
  if (!v.empty() && low(v) >= rows_) throw std::out_of_range("row index out of range");
  data_[j] = std::move(v);
}

Integer IntMatrix::at(std::size_t r, std::size_t c) const {
  return entry(IntegerOps{}, data_.at(c), r);
}

std::size_t IntMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : data_) n += c.size();
  return n;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [r, v] : data_[j]) t.data_[r].emplace_back(j, v);
  return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) out.data_[k] = data_.at(cols[k]);
  return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& rows) const {
  std::vector<std::size_t> renumber(rows_, rows_);
  for (std::size_t k = 0; k < rows.size(); ++k) renumber.at(rows[k]) = k;
  IntMatrix out(rows.size(), cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [r, v] : data_[j])
      if (renumber[r] != rows_) out.data_[j].emplace_back(renumber[r], v);
  return out;
}

IntMatrix IntMatrix::mod(std::uint64_t p) const {
  IntMatrix out(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [r, v] : data_[j]) {
      Integer x = floor_mod(v, p);
      if (!x.is_zero()) out.data_[j].emplace_back(r, std::move(x));
    }
  return out;
}

SparseVector<Integer> IntMatrix::apply(const SparseVector<Integer>& v) const {
  SparseVector<Integer> acc;
  for (const auto& [k, x] : v)
    for (const auto& [r, y] : data_.at(k)) acc.emplace_back(r, x * y);
  return normalize(IntegerOps{}, std::move(acc));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " times " + std::to_string(b.rows_) +
                                "x" + std::to_string(b.cols_));
  IntMatrix out(a.rows_, b.cols_);
  std::vector<Integer> acc(a.rows_);
  std::vector<char> seen(a.rows_, 0);
  std::vector<std::size_t> touched;
  for (std::size_t j = 0; j < b.cols_; ++j) {
    touched.clear();
    for (const auto& [k, x] : b.data_[j])
      for (const auto& [r, y] : a.data_[k]) {
        if (!seen[r]) {
          seen[r] = 1;
          touched.push_back(r);
          acc[r] = 0;
        }
        acc[r] += x * y;
      }
    std::sort(touched.begin(), touched.end());
    for (std::size_t r : touched) {
      if (!acc[r].is_zero()) out.data_[j].emplace_back(r, acc[r]);
      seen[r] = 0;
    }
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum shape mismatch");
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j)
    out.data_[j] = combine(IntegerOps{}, Integer(1), a.data_[j], Integer(1), b.data_[j]);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference shape mismatch");
  IntMatrix out(a.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j)
    out.data_[j] = combine(IntegerOps{}, Integer(1), a.data_[j], Integer(-1), b.data_[j]);
  return out;
}

// -------------------------------------------------------- normal forms --

// Unit pivots are eliminated sparsely first (each contributes an invariant
// factor 1); whatever is left is diagonalized densely.
std::vector<Integer> smith_invariants(const IntMatrix& m) {
  const IntegerOps ops;
  std::vector<Vec> cols = columns_of(m);
  std::vector<std::vector<std::size_t>> row_cols(m.rows());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [r, v] : cols[j]) row_cols[r].push_back(j);
  std::vector<char> col_alive(cols.size(), 1), row_alive(m.rows(), 1);
  std::vector<std::size_t> stamp(cols.size(), 0);
  std::size_t epoch = 0;
  std::size_t units = 0;

  for (bool progress = true; progress;) {
    progress = false;
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (col_alive[j] && !cols[j].empty()) order.push_back(j);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return cols[x].size() < cols[y].size(); });
    for (std::size_t j : order) {
      if (!col_alive[j] || cols[j].empty()) continue;
      std::size_t best = m.rows();
      for (const auto& [r, v] : cols[j])
        if (abs(v) == 1 && (best == m.rows() || row_cols[r].size() < row_cols[best].size()))
          best = r;
      if (best == m.rows()) continue;
      const Integer pivot = entry(ops, cols[j], best);
      ++epoch;
      for (std::size_t c : row_cols[best]) {
        if (c == j || !col_alive[c] || stamp[c] == epoch) continue;
        stamp[c] = epoch;
        const Integer v = entry(ops, cols[c], best);
        if (v.is_zero()) continue;
        cols[c] = combine(ops, Integer(1), cols[c], -(v * pivot), cols[j]);
        for (const auto& [r, x] : cols[c]) row_cols[r].push_back(c);
      }
      for (auto& rc : row_cols)
        if (rc.size() > 4 * cols.size()) {
          std::sort(rc.begin(), rc.end());
          rc.erase(std::unique(rc.begin(), rc.end()), rc.end());
        }
      col_alive[j] = 0;
      row_alive[best] = 0;
      ++units;
      progress = true;
    }
  }

  std::vector<std::size_t> rest_cols, rest_rows;
  std::vector<char> row_used(m.rows(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (!col_alive[j] || cols[j].empty()) continue;
    rest_cols.push_back(j);
    for (const auto& [r, v] : cols[j]) row_used[r] = 1;
  }
  std::vector<std::size_t> renumber(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (row_used[r]) {
      renumber[r] = rest_rows.size();
      rest_rows.push_back(r);
    }
  std::vector<std::vector<Integer>> dense(rest_rows.size(), std::vector<Integer>(rest_cols.size()));
  for (std::size_t k = 0; k < rest_cols.size(); ++k)
    for (const auto& [r, v] : cols[rest_cols[k]]) dense[renumber[r]][k] = v;
  std::vector<Integer> diag = dense_diagonal(std::move(dense));

  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Integer g = gcd(diag[i], diag[j]);
      const Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::vector<Integer> out(units, Integer(1));
  out.insert(out.end(), diag.begin(), diag.end());
  return out;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  FieldReducer<ModPOps> red(ModPOps{p});
  std::size_t rank = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector<std::uint64_t> v;
    for (const auto& [r, x] : m.column(j)) v.emplace_back(r, red.ops().from_integer(x));
    v = normalize(red.ops(), std::move(v));
    if (red.insert(std::move(v), j).independent) ++rank;
  }
  return rank;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  std::vector<Vec> cols = columns_of(m);
  std::vector<Vec> trans(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) trans[j].emplace_back(j, Integer(1));
  reduce_integer_columns(cols, &trans);
  std::vector<Vec> kernel;
  for (std::size_t j = 0; j < cols.size(); ++j)
    if (cols[j].empty()) kernel.push_back(std::move(trans[j]));
  return echelon_lattice_basis(matrix_from(m.cols(), std::move(kernel)));
}

IntMatrix kernel_mod_p(const IntMatrix& m, std::uint64_t p) {
  FieldReducer<ModPOps> red(ModPOps{p}, true);
  std::vector<Vec> kernel;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector<std::uint64_t> v;
    for (const auto& [r, x] : m.column(j)) v.emplace_back(r, red.ops().from_integer(x));
    auto outcome = red.insert(normalize(red.ops(), std::move(v)), j);
    if (outcome.independent) continue;
    Vec k;
    for (const auto& [r, x] : outcome.transform) k.emplace_back(r, Integer(x));
    kernel.push_back(std::move(k));
  }
  return matrix_from(m.cols(), std::move(kernel));
}

IntMatrix echelon_lattice_basis(const IntMatrix& basis) {
  std::vector<Vec> cols = columns_of(basis);
  reduce_integer_columns(cols, nullptr);
  for (const Vec& c : cols)
    if (c.empty()) throw std::invalid_argument("lattice generators are linearly dependent");
  for (Vec& c : cols)
    if (c.back().second < 0)
      for (auto& e : c) e.second = -e.second;
  std::sort(cols.begin(), cols.end(), [](const Vec& a, const Vec& b) { return low(a) < low(b); });
  return matrix_from(basis.rows(), std::move(cols));
}

// ------------------------------------------------------------ EchelonBasis --

EchelonBasis::EchelonBasis(IntMatrix columns, std::uint64_t modulus)
    : columns_(modulus ? columns.mod(modulus) : std::move(columns)), modulus_(modulus) {
  for (std::size_t k = 0; k < columns_.cols(); ++k) {
    const Vec& c = columns_.column(k);
    if (c.empty() || !by_low_.emplace(low(c), k).second)
      throw std::invalid_argument("basis columns must be nonzero with distinct lows");
  }
}

std::optional<SparseVector<Integer>> EchelonBasis::coordinates(SparseVector<Integer> v) const {
  const IntegerOps ops;
  if (modulus_) {
    for (auto& e : v) e.second = floor_mod(e.second, modulus_);
    v = normalize(ops, std::move(v));
  }
  const ModPOps field{modulus_ ? modulus_ : 2};
  SparseVector<Integer> coords;
  while (!v.empty()) {
    auto it = by_low_.find(low(v));
    if (it == by_low_.end()) return std::nullopt;
    const Vec& c = columns_.column(it->second);
    Integer q;
    if (modulus_) {
      const std::uint64_t a = c.back().second.convert_to<std::uint64_t>();
      const std::uint64_t b = v.back().second.convert_to<std::uint64_t>();
      q = field.mul(b, field.inv(a));
    } else {
      if (v.back().second % c.back().second != 0) return std::nullopt;
      q = v.back().second / c.back().second;
    }
    v = combine(ops, Integer(1), v, Integer(-q), c);
    if (modulus_) {
      for (auto& e : v) e.second = floor_mod(e.second, modulus_);
      v = normalize(ops, std::move(v));
    }
    coords.emplace_back(it->second, std::move(q));
  }
  return normalize(ops, std::move(coords));
}

}  // namespace hsd
