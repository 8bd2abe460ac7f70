#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modp.hpp"
#include "product_complex.hpp"
#include "simplicial_complex.hpp"
#include "symmetry.hpp"

namespace ctv {

/// Augmented chain complex over Z_p. Degree -1 has a single cell.
/// dims[i + 1] is the number of cells in degree i, and boundaries[i] maps
/// degree i to degree i - 1 (boundaries[0] is the augmentation).
struct ChainComplexModP {
  std::uint32_t p = 2;
  std::vector<std::size_t> dims{1};
  std::vector<SparseMatrixModP> boundaries;

  int top_degree() const noexcept { return static_cast<int>(dims.size()) - 2; }
  std::size_t cells(int degree) const {
    if (degree < -1 || degree > top_degree()) return 0;
    return dims[static_cast<std::size_t>(degree + 1)];
  }
  const SparseMatrixModP& boundary(int degree) const { return boundaries.at(static_cast<std::size_t>(degree)); }
};

/// Reduced Betti numbers over Z_p. betti[i] is the rank of reduced H_i for
/// 0 <= i <= top degree; `minus_one` is reduced H_{-1}, nonzero only for the
/// empty complex.
struct BettiProfile {
  std::uint32_t p = 2;
  std::size_t minus_one = 0;
  std::vector<std::size_t> betti;

  std::size_t operator[](int i) const {
    if (i == -1) return minus_one;
    if (i < 0 || static_cast<std::size_t>(i) >= betti.size()) return 0;
    return betti[static_cast<std::size_t>(i)];
  }
  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

/// Homological connectivity: one less than the first degree carrying reduced
/// homology. When nothing is found through the top degree, `at_least` is set
/// and `value` is only a lower bound (the top degree).
struct HConn {
  int value = -2;
  bool at_least = false;
  friend bool operator==(const HConn&, const HConn&) = default;
};

namespace detail {

inline void require_prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("coefficient modulus must be prime, got " + std::to_string(p));
}

inline SparseMatrixModP augmentation(std::size_t vertices) {
  SparseMatrixModP m;
  m.rows = 1;
  m.columns.assign(vertices, std::vector<Entry>{{0, 1}});
  return m;
}

}  // namespace detail

/// Simplicial chain complex with the canonical orientation: the boundary of
/// [v_0 < ... < v_d] is sum_i (-1)^i [.. v_i omitted ..].
inline ChainComplexModP chain_complex(const SimplicialComplex& c, std::uint32_t p) {
  detail::require_prime(p);
  ChainComplexModP cc;
  cc.p = p;
  if (c.empty()) return cc;
  for (int d = 0; d <= c.dim(); ++d) cc.dims.push_back(c.faces(d).size());
  cc.boundaries.push_back(detail::augmentation(c.faces(0).size()));
  for (int d = 1; d <= c.dim(); ++d) {
    SparseMatrixModP m;
    m.rows = c.faces(d - 1).size();
    m.columns.reserve(c.faces(d).size());
    for (const auto& face : c.faces(d)) {
      std::vector<Entry> col;
      col.reserve(face.size());
      for (std::size_t i = 0; i < face.size(); ++i) {
        Face sub = face;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
        auto idx = c.index_of(sub);
        if (!idx) throw std::logic_error("complex is not downward closed");
        col.push_back({static_cast<std::uint32_t>(*idx), i % 2 == 0 ? 1u : p - 1});
      }
      std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
      m.columns.push_back(std::move(col));
    }
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

/// Cellular chain complex of a product cell complex with the Leibniz rule:
/// d(s_1 x ... x s_n) = sum_i (-1)^(dim s_1 + ... + dim s_{i-1}) s_1 x .. d s_i .. x s_n,
/// where terms whose i-th factor would become empty are dropped.
inline ChainComplexModP cellular_chain_complex(const ProductCellComplex& c, std::uint32_t p) {
  detail::require_prime(p);
  ChainComplexModP cc;
  cc.p = p;
  if (c.empty()) return cc;
  for (int d = 0; d <= c.dim(); ++d) cc.dims.push_back(c.cells(d).size());
  cc.boundaries.push_back(detail::augmentation(c.cells(0).size()));
  for (int d = 1; d <= c.dim(); ++d) {
    SparseMatrixModP m;
    m.rows = c.cells(d - 1).size();
    for (const auto& cell : c.cells(d)) {
      std::vector<Entry> col;
      int prefix = 0;
      for (std::size_t i = 0; i < cell.factors.size(); ++i) {
        const auto& fi = cell.factors[i];
        if (fi.size() >= 2) {
          for (std::size_t j = 0; j < fi.size(); ++j) {
            ProductCell sub = cell;
            sub.factors[i].erase(sub.factors[i].begin() + static_cast<std::ptrdiff_t>(j));
            auto idx = c.index_of(sub);
            if (!idx) throw std::logic_error("product complex is not closed under faces");
            const bool negative = (prefix + static_cast<int>(j)) % 2 != 0;
            col.push_back({static_cast<std::uint32_t>(*idx), negative ? p - 1 : 1u});
          }
        }
        prefix += face_dim(fi);
      }
      std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
      m.columns.push_back(std::move(col));
    }
    cc.boundaries.push_back(std::move(m));
  }
  return cc;
}

/// Checks that consecutive boundary shapes chain and every composite vanishes.
inline bool boundary_squared_is_zero(const ChainComplexModP& cc) {
  for (int d = 0; d <= cc.top_degree(); ++d) {
    const auto& bd = cc.boundary(d);
    if (bd.rows != cc.cells(d - 1) || bd.cols() != cc.cells(d)) return false;
  }
  for (int d = 1; d <= cc.top_degree(); ++d)
    if (multiply(cc.boundary(d - 1), cc.boundary(d), cc.p).nonzeros() != 0) return false;
  return true;
}

inline BettiProfile betti(const ChainComplexModP& cc, std::size_t dense_threshold = kDenseRankThreshold) {
  BettiProfile out;
  out.p = cc.p;
  const int top = cc.top_degree();
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  for (int d = 0; d <= top; ++d) rank[static_cast<std::size_t>(d)] = rank_mod_p(cc.boundary(d), cc.p, dense_threshold);
  out.minus_one = 1 - (top >= 0 ? rank[0] : 0);
  for (int d = 0; d <= top; ++d) {
    const auto ud = static_cast<std::size_t>(d);
    out.betti.push_back(cc.cells(d) - rank[ud] - rank[ud + 1]);
  }
  return out;
}

inline HConn hconn(const BettiProfile& b) {
  if (b.minus_one != 0) return {-2, false};
  for (std::size_t i = 0; i < b.betti.size(); ++i)
    if (b.betti[i] != 0) return {static_cast<int>(i) - 1, false};
  return {static_cast<int>(b.betti.size()) - 1, true};
}

inline HConn hconn(const SimplicialComplex& c, std::uint32_t p) { return hconn(betti(chain_complex(c, p))); }

/// Alternating sum of cell counts in degrees >= 0.
inline long long euler_characteristic(const ChainComplexModP& cc) {
  long long chi = 0;
  for (int d = 0; d <= cc.top_degree(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(cc.cells(d));
  return chi;
}

/// Alternating sum of unreduced Betti numbers.
inline long long euler_characteristic(const BettiProfile& b) {
  long long chi = 0;
  for (std::size_t i = 0; i < b.betti.size(); ++i) {
    long long unreduced = static_cast<long long>(b.betti[i]) + (i == 0 ? 1 : 0);
    chi += (i % 2 == 0 ? 1 : -1) * unreduced;
  }
  return chi;
}

}  // namespace ctv
