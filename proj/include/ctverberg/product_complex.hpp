#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "simplicial_complex.hpp"

namespace ctv {

/// Product cell s_1 x ... x s_n of nonempty faces of a base complex.
struct ProductCell {
  std::vector<Face> factors;

  int dim() const noexcept {
    int d = 0;
    for (const auto& f : factors) d += face_dim(f);
    return d;
  }

  friend bool operator==(const ProductCell&, const ProductCell&) = default;
  friend auto operator<=>(const ProductCell&, const ProductCell&) = default;
};

/// Graded cell complex of product cells. Cells of each total dimension are
/// sorted lexicographically by their factor tuples.
class ProductCellComplex {
 public:
  ProductCellComplex() = default;
  ProductCellComplex(std::shared_ptr<const SimplicialComplex> base, std::uint32_t n, std::uint32_t k,
                     std::vector<ProductCell> cells)
      : base_(std::move(base)), n_(n), k_(k) {
    for (auto& c : cells) {
      if (c.factors.size() != n_) throw std::invalid_argument("cell has wrong factor count");
      for (const auto& f : c.factors)
        if (f.empty()) throw std::invalid_argument("product cells need nonempty factors");
      const auto d = static_cast<std::size_t>(c.dim());
      if (by_dim_.size() <= d) by_dim_.resize(d + 1);
      by_dim_[d].push_back(std::move(c));
    }
    for (auto& layer : by_dim_) {
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
  }

  const SimplicialComplex& base() const { return *base_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }
  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const noexcept { return by_dim_.empty(); }

  const std::vector<ProductCell>& cells(int d) const {
    static const std::vector<ProductCell> none;
    if (d < 0 || d > dim()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  std::vector<std::size_t> cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& layer : by_dim_) out.push_back(layer.size());
    return out;
  }

  std::size_t cell_count() const noexcept {
    std::size_t n = 0;
    for (const auto& layer : by_dim_) n += layer.size();
    return n;
  }

  std::optional<std::size_t> index_of(const ProductCell& c) const {
    const auto& layer = cells(c.dim());
    auto it = std::lower_bound(layer.begin(), layer.end(), c);
    if (it == layer.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - layer.begin());
  }

  /// Replacing any factor of a stored cell by a nonempty codimension-1 face
  /// yields a stored cell.
  bool is_closed() const {
    for (int d = 1; d <= dim(); ++d) {
      for (const auto& c : cells(d)) {
        for (std::size_t i = 0; i < c.factors.size(); ++i) {
          if (c.factors[i].size() < 2) continue;
          for (std::size_t j = 0; j < c.factors[i].size(); ++j) {
            ProductCell sub = c;
            sub.factors[i].erase(sub.factors[i].begin() + static_cast<std::ptrdiff_t>(j));
            if (!index_of(sub)) return false;
          }
        }
      }
    }
    return true;
  }

 private:
  std::shared_ptr<const SimplicialComplex> base_;
  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  std::vector<std::vector<ProductCell>> by_dim_;
};

/// n-fold k-wise deleted product: tuples of nonempty faces of K in which no
/// vertex of K is used by k or more factors.
inline ProductCellComplex deleted_product(const SimplicialComplex& base, std::uint32_t n, std::uint32_t k,
                                          std::size_t face_budget = kDefaultFaceBudget) {
  if (n < 2) throw std::invalid_argument("deleted product needs n >= 2");
  if (k < 2) throw std::invalid_argument("deleted product needs k >= 2");

  std::vector<const Face*> options;
  for (int d = 0; d <= base.dim(); ++d)
    for (const auto& f : base.faces(d)) options.push_back(&f);

  std::vector<std::uint32_t> usage(base.vertex_count(), 0);
  std::vector<ProductCell> cells;
  ProductCell current;
  current.factors.reserve(n);
  auto pick = [&](auto&& self, std::uint32_t slot) -> void {
    if (slot == n) {
      if (cells.size() >= face_budget) throw BudgetExceeded(cells.size() + 1, face_budget);
      cells.push_back(current);
      return;
    }
    for (const Face* f : options) {
      bool ok = true;
      for (VertexId v : *f)
        if (usage[v] + 1 >= k) { ok = false; break; }
      if (!ok) continue;
      for (VertexId v : *f) ++usage[v];
      current.factors.push_back(*f);
      self(self, slot + 1);
      current.factors.pop_back();
      for (VertexId v : *f) --usage[v];
    }
  };
  pick(pick, 0);
  return ProductCellComplex(std::make_shared<const SimplicialComplex>(base), n, k, std::move(cells));
}

}  // namespace ctv
