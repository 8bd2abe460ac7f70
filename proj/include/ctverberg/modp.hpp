#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ctv {

/// Arithmetic in Z_p for a prime p < 2^31.
class ModP {
 public:
  explicit ModP(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31)) throw std::invalid_argument("modulus out of range");
  }

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(((x % m) + m) % m);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p_); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>((std::uint64_t{a} + p_ - b) % p_); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_); }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }

 private:
  std::uint32_t p_;
};

struct Entry {
  std::uint32_t row;
  std::uint32_t value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Column-major sparse matrix over Z_p. Each column lists nonzero entries in
/// increasing row order.
struct SparseMatrixModP {
  std::size_t rows = 0;
  std::vector<std::vector<Entry>> columns;

  std::size_t cols() const noexcept { return columns.size(); }

  std::size_t nonzeros() const noexcept {
    std::size_t n = 0;
    for (const auto& c : columns) n += c.size();
    return n;
  }
};

/// Dense Gaussian elimination.
inline std::size_t rank_dense(const SparseMatrixModP& m, std::uint32_t p) {
  const ModP f(p);
  const std::size_t R = m.rows, C = m.cols();
  if (R == 0 || C == 0) return 0;
  // Row-major copy of the matrix.
  std::vector<std::uint32_t> a(R * C, 0);
  for (std::size_t c = 0; c < C; ++c)
    for (const auto& e : m.columns[c]) a[e.row * C + c] = e.value % p;

  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t pivot = rank;
    while (pivot < R && a[pivot * C + col] == 0) ++pivot;
    if (pivot == R) continue;
    if (pivot != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(pivot * C),
                       a.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * C),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * C));
    const std::uint32_t inv = f.inv(a[rank * C + col]);
    for (std::size_t r = rank + 1; r < R; ++r) {
      const std::uint32_t x = a[r * C + col];
      if (x == 0) continue;
      const std::uint32_t factor = f.mul(x, inv);
      for (std::size_t c = col; c < C; ++c)
        a[r * C + c] = f.sub(a[r * C + c], f.mul(factor, a[rank * C + c]));
    }
    ++rank;
  }
  return rank;
}

/// Sparse elimination. Columns are processed sparsest first; each column is
/// reduced against the stored pivot columns keyed by their lowest row until it
/// vanishes or exposes a new pivot row.
inline std::size_t rank_sparse(const SparseMatrixModP& m, std::uint32_t p) {
  const ModP f(p);
  std::vector<std::size_t> order(m.cols());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.columns[a].size() < m.columns[b].size();
  });

  std::unordered_map<std::uint32_t, std::vector<Entry>> pivots;
  pivots.reserve(m.cols());
  std::vector<Entry> work, scratch;
  for (std::size_t ci : order) {
    work.clear();
    for (const auto& e : m.columns[ci])
      if (e.value % p) work.push_back({e.row, e.value % p});
    while (!work.empty()) {
      auto it = pivots.find(work.front().row);
      if (it == pivots.end()) break;
      const auto& piv = it->second;
      // work -= factor * piv, where piv is normalized to lead with 1.
      const std::uint32_t factor = work.front().value;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < work.size() || j < piv.size()) {
        if (j == piv.size() || (i < work.size() && work[i].row < piv[j].row)) {
          scratch.push_back(work[i++]);
        } else if (i == work.size() || piv[j].row < work[i].row) {
          scratch.push_back({piv[j].row, f.sub(0, f.mul(factor, piv[j].value))});
          ++j;
        } else {
          const std::uint32_t v = f.sub(work[i].value, f.mul(factor, piv[j].value));
          if (v) scratch.push_back({work[i].row, v});
          ++i;
          ++j;
        }
      }
      work.swap(scratch);
    }
    if (!work.empty()) {
      const std::uint32_t inv = f.inv(work.front().value);
      for (auto& e : work) e.value = f.mul(e.value, inv);
      const std::uint32_t lead = work.front().row;
      pivots.emplace(lead, work);
    }
  }
  return pivots.size();
}

/// Matrices with at most this many entries use dense elimination.
inline constexpr std::size_t kDenseRankThreshold = 1u << 18;

inline std::size_t rank_mod_p(const SparseMatrixModP& m, std::uint32_t p,
                              std::size_t dense_threshold = kDenseRankThreshold) {
  if (m.rows * m.cols() <= dense_threshold) return rank_dense(m, p);
  return rank_sparse(m, p);
}

/// Product a * b over Z_p.
inline SparseMatrixModP multiply(const SparseMatrixModP& a, const SparseMatrixModP& b, std::uint32_t p) {
  if (a.cols() != b.rows) throw std::invalid_argument("shape mismatch in product");
  const ModP f(p);
  SparseMatrixModP out;
  out.rows = a.rows;
  out.columns.resize(b.cols());
  std::vector<std::uint32_t> acc(a.rows, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    touched.clear();
    for (const auto& eb : b.columns[c]) {
      for (const auto& ea : a.columns[eb.row]) {
        if (acc[ea.row] == 0) touched.push_back(ea.row);
        acc[ea.row] = f.add(acc[ea.row], f.mul(ea.value, eb.value));
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (auto r : touched) {
      if (acc[r]) out.columns[c].push_back({r, acc[r]});
      acc[r] = 0;
    }
  }
  return out;
}

}  // namespace ctv
