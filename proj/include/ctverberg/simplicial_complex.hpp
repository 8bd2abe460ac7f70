#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ctv {

using VertexId = std::uint32_t;

/// A face is a strictly increasing list of vertex indices. The empty list is
/// the empty face; "no face" is expressed with std::optional<Face>.
using Face = std::vector<VertexId>;

inline constexpr std::size_t kDefaultFaceBudget = 10'000'000;

/// Thrown by constructors that would materialize more faces or cells than the
/// caller's budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t requested, std::size_t budget)
      : std::runtime_error("face budget exceeded: " + std::to_string(requested) +
                           " > " + std::to_string(budget)),
        requested_(requested),
        budget_(budget) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t requested_;
  std::size_t budget_;
};

/// Reads CTV_FACE_BUDGET from the environment, falling back to the default.
inline std::size_t face_budget_from_env() {
  if (const char* env = std::getenv("CTV_FACE_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CTV_FACE_BUDGET is not an integer: ") + env);
    }
  }
  return kDefaultFaceBudget;
}

/// Vertex label. `id` is the vertex's identity inside its source (a chessboard
/// cell, a vertex of the base complex, a point of a color class); `tag`, when
/// present, is the join factor or deleted-join copy the vertex belongs to.
struct Vertex {
  std::int64_t id = 0;
  std::optional<std::uint32_t> tag;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline bool is_canonical(const Face& f) {
  return std::adjacent_find(f.begin(), f.end(), std::greater_equal<>{}) == f.end();
}

inline int face_dim(const Face& f) { return static_cast<int>(f.size()) - 1; }

inline bool disjoint(const Face& a, const Face& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

/// Finite abstract simplicial complex. Every nonempty face is stored, grouped
/// by dimension and sorted lexicographically; the empty face is implicit.
/// Immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds a complex from a face list that is already downward closed.
  /// Faces are canonicalized, deduplicated and grouped; closure is not
  /// re-derived, use `closure` for arbitrary generators.
  static SimplicialComplex from_closed_faces(std::vector<Vertex> vertices, std::vector<Face> faces,
                                             std::uint32_t factor_count = 0) {
    SimplicialComplex c;
    c.vertices_ = std::move(vertices);
    c.factor_count_ = factor_count;
    for (auto& f : faces) {
      if (f.empty()) continue;
      std::sort(f.begin(), f.end());
      if (!is_canonical(f)) throw std::invalid_argument("face has a repeated vertex");
      if (f.back() >= c.vertices_.size()) throw std::invalid_argument("face references unknown vertex");
      const auto d = static_cast<std::size_t>(f.size() - 1);
      if (c.by_dim_.size() <= d) c.by_dim_.resize(d + 1);
      c.by_dim_[d].push_back(std::move(f));
    }
    for (auto& layer : c.by_dim_) {
      std::sort(layer.begin(), layer.end());
      layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    return c;
  }

  /// Downward closure of the given generating faces.
  static SimplicialComplex closure(std::vector<Vertex> vertices, std::span<const Face> generators,
                                   std::size_t face_budget = kDefaultFaceBudget) {
    std::vector<Face> all;
    std::size_t estimate = 0;
    for (const auto& g : generators) {
      if (g.size() >= 63) throw BudgetExceeded(std::size_t(-1), face_budget);
      estimate += (std::size_t{1} << g.size()) - 1;
      if (estimate > face_budget * 4 + 64) throw BudgetExceeded(estimate, face_budget);
    }
    for (auto g : generators) {
      std::sort(g.begin(), g.end());
      if (!is_canonical(g)) throw std::invalid_argument("generator has a repeated vertex");
      const std::size_t n = g.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Face sub;
        for (std::size_t b = 0; b < n; ++b)
          if (mask & (std::size_t{1} << b)) sub.push_back(g[b]);
        all.push_back(std::move(sub));
      }
    }
    auto c = from_closed_faces(std::move(vertices), std::move(all));
    if (c.face_count() > face_budget) throw BudgetExceeded(c.face_count(), face_budget);
    return c;
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }

  /// Number of join factors or deleted-join copies the vertex tags refer to;
  /// zero for untagged complexes.
  std::uint32_t factor_count() const noexcept { return factor_count_; }

  /// -1 for the empty complex.
  int dim() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }

  bool empty() const noexcept { return by_dim_.empty(); }

  const std::vector<Face>& faces(int d) const {
    static const std::vector<Face> none;
    if (d < 0 || d > dim()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
  }

  std::vector<std::size_t> f_vector() const {
    std::vector<std::size_t> f;
    for (const auto& layer : by_dim_) f.push_back(layer.size());
    return f;
  }

  std::size_t face_count() const noexcept {
    std::size_t n = 0;
    for (const auto& layer : by_dim_) n += layer.size();
    return n;
  }

  std::optional<std::size_t> index_of(const Face& f) const {
    if (f.empty()) return std::nullopt;
    const auto& layer = faces(face_dim(f));
    auto it = std::lower_bound(layer.begin(), layer.end(), f);
    if (it == layer.end() || *it != f) return std::nullopt;
    return static_cast<std::size_t>(it - layer.begin());
  }

  /// The empty face is always contained.
  bool contains(const Face& f) const { return f.empty() || index_of(f).has_value(); }

  /// Maximal faces, in dimension-then-lexicographic order.
  std::vector<Face> facets() const {
    std::vector<Face> out;
    for (int d = 0; d <= dim(); ++d) {
      for (const auto& f : faces(d)) {
        bool maximal = true;
        if (d < dim()) {
          // f is maximal iff no vertex can be added to it.
          for (VertexId v = 0; v < vertices_.size() && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            Face g = f;
            g.insert(std::upper_bound(g.begin(), g.end(), v), v);
            if (index_of(g)) maximal = false;
          }
        }
        if (maximal) out.push_back(f);
      }
    }
    return out;
  }

  /// Every subset of every stored face is stored, and every used vertex is a
  /// 0-face.
  bool is_downward_closed() const {
    for (int d = 1; d <= dim(); ++d) {
      for (const auto& f : faces(d)) {
        for (std::size_t i = 0; i < f.size(); ++i) {
          Face sub = f;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
          if (!index_of(sub)) return false;
        }
      }
    }
    return true;
  }

  std::optional<VertexId> find_vertex(const Vertex& label) const {
    for (VertexId v = 0; v < vertices_.size(); ++v)
      if (vertices_[v] == label) return v;
    return std::nullopt;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_.size() == b.vertices_.size() && a.by_dim_ == b.by_dim_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Face>> by_dim_;
  std::uint32_t factor_count_ = 0;
};

/// Ordered partition of a vertex range into color classes.
struct Coloring {
  std::vector<std::vector<VertexId>> classes;

  std::size_t color_count() const noexcept { return classes.size(); }

  /// Throws unless the classes are nonempty, disjoint, and cover [0, vertex_count).
  void validate(std::size_t vertex_count) const {
    std::vector<char> seen(vertex_count, 0);
    std::size_t covered = 0;
    for (const auto& cls : classes) {
      if (cls.empty()) throw std::invalid_argument("empty color class");
      for (VertexId v : cls) {
        if (v >= vertex_count) throw std::invalid_argument("color class references unknown vertex");
        if (seen[v]) throw std::invalid_argument("color classes overlap");
        seen[v] = 1;
        ++covered;
      }
    }
    if (covered != vertex_count) throw std::invalid_argument("color classes do not cover the vertex set");
  }

  /// Color index of every vertex.
  std::vector<std::uint32_t> color_of(std::size_t vertex_count) const {
    std::vector<std::uint32_t> out(vertex_count, 0);
    for (std::uint32_t c = 0; c < classes.size(); ++c)
      for (VertexId v : classes[c]) out.at(v) = c;
    return out;
  }
};

// ---------------------------------------------------------------------------
// Elementary complexes

/// The full simplex on `vertex_count` vertices (all nonempty subsets).
inline SimplicialComplex full_simplex(std::size_t vertex_count, std::size_t face_budget = kDefaultFaceBudget) {
  if (vertex_count == 0) return {};
  std::vector<Vertex> verts(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) verts[i].id = static_cast<std::int64_t>(i);
  Face all(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) all[i] = static_cast<VertexId>(i);
  return SimplicialComplex::closure(std::move(verts), std::span<const Face>(&all, 1), face_budget);
}

/// Boundary of the simplex on `vertex_count` vertices: all proper nonempty subsets.
/// A cohomological sphere of dimension vertex_count - 2.
inline SimplicialComplex simplex_boundary(std::size_t vertex_count,
                                          std::size_t face_budget = kDefaultFaceBudget) {
  if (vertex_count < 2) throw std::invalid_argument("simplex boundary needs at least 2 vertices");
  std::vector<Vertex> verts(vertex_count);
  for (std::size_t i = 0; i < vertex_count; ++i) verts[i].id = static_cast<std::int64_t>(i);
  std::vector<Face> gens;
  for (std::size_t skip = 0; skip < vertex_count; ++skip) {
    Face f;
    for (std::size_t i = 0; i < vertex_count; ++i)
      if (i != skip) f.push_back(static_cast<VertexId>(i));
    gens.push_back(std::move(f));
  }
  return SimplicialComplex::closure(std::move(verts), gens, face_budget);
}

/// `count` isolated points.
inline SimplicialComplex discrete_points(std::size_t count) {
  std::vector<Vertex> verts(count);
  std::vector<Face> faces;
  for (std::size_t i = 0; i < count; ++i) {
    verts[i].id = static_cast<std::int64_t>(i);
    faces.push_back({static_cast<VertexId>(i)});
  }
  return SimplicialComplex::from_closed_faces(std::move(verts), std::move(faces));
}

// ---------------------------------------------------------------------------
// Chessboard complexes

/// Vertex index of cell (row, col) in chessboard(rows, cols).
inline VertexId chessboard_vertex(std::size_t row, std::size_t col, std::size_t cols) {
  return static_cast<VertexId>(row * cols + col);
}

/// Number of partial permutation matrices with exactly j rooks: C(m,j)^2 j!
/// with m == n; in general C(m,j) C(n,j) j!.
inline std::size_t rook_placements(std::size_t rows, std::size_t cols, std::size_t j) {
  if (j > rows || j > cols) return 0;
  long double v = 1;
  for (std::size_t i = 0; i < j; ++i) v *= static_cast<long double>((rows - i) * (cols - i));
  for (std::size_t i = 2; i <= j; ++i) v /= static_cast<long double>(i);
  return static_cast<std::size_t>(v + 0.5L);
}

/// Non-attacking rook placements on a rows x cols board. Vertex row*cols+col
/// is the cell (row, col).
inline SimplicialComplex chessboard(std::size_t rows, std::size_t cols,
                                    std::size_t face_budget = kDefaultFaceBudget) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("chessboard dimensions must be positive");
  std::size_t total = 0;
  for (std::size_t j = 1; j <= std::min(rows, cols); ++j) {
    total += rook_placements(rows, cols, j);
    if (total > face_budget) throw BudgetExceeded(total, face_budget);
  }

  std::vector<Vertex> verts(rows * cols);
  for (std::size_t v = 0; v < verts.size(); ++v) verts[v].id = static_cast<std::int64_t>(v);

  std::vector<Face> faces;
  faces.reserve(total);
  std::vector<char> col_used(cols, 0);
  Face current;
  // Rows are visited in increasing order, so vertex ids come out increasing.
  auto place = [&](auto&& self, std::size_t row) -> void {
    if (row == rows) {
      if (!current.empty()) faces.push_back(current);
      return;
    }
    self(self, row + 1);
    for (std::size_t c = 0; c < cols; ++c) {
      if (col_used[c]) continue;
      col_used[c] = 1;
      current.push_back(chessboard_vertex(row, c, cols));
      self(self, row + 1);
      current.pop_back();
      col_used[c] = 0;
    }
  };
  place(place, 0);
  return SimplicialComplex::from_closed_faces(std::move(verts), std::move(faces));
}

// ---------------------------------------------------------------------------
// Joins

/// Iterated join K_0 * K_1 * ... with tagged disjoint-union vertex set: vertex
/// v of factor i gets tag i and id v, and factors occupy consecutive index
/// ranges in order.
inline SimplicialComplex join_all(std::span<const SimplicialComplex> factors,
                                  std::size_t face_budget = kDefaultFaceBudget) {
  std::vector<Vertex> verts;
  std::vector<VertexId> offset;
  long double total = 1;
  for (std::uint32_t i = 0; i < factors.size(); ++i) {
    offset.push_back(static_cast<VertexId>(verts.size()));
    for (VertexId v = 0; v < factors[i].vertex_count(); ++v)
      verts.push_back(Vertex{static_cast<std::int64_t>(v), i});
    total *= static_cast<long double>(factors[i].face_count() + 1);
  }
  total -= 1;
  if (total > static_cast<long double>(face_budget))
    throw BudgetExceeded(static_cast<std::size_t>(std::min<long double>(total, 1e18L)), face_budget);

  // Flattened face lists per factor, the empty face first.
  std::vector<std::vector<Face>> options(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    options[i].push_back({});
    for (int d = 0; d <= factors[i].dim(); ++d)
      for (const auto& f : factors[i].faces(d)) options[i].push_back(f);
  }

  std::vector<Face> faces;
  faces.reserve(static_cast<std::size_t>(total));
  Face current;
  auto pick = [&](auto&& self, std::size_t i) -> void {
    if (i == factors.size()) {
      if (!current.empty()) faces.push_back(current);
      return;
    }
    for (const auto& f : options[i]) {
      const auto mark = current.size();
      for (VertexId v : f) current.push_back(offset[i] + v);
      self(self, i + 1);
      current.resize(mark);
    }
  };
  pick(pick, 0);
  return SimplicialComplex::from_closed_faces(std::move(verts), std::move(faces),
                                              static_cast<std::uint32_t>(factors.size()));
}

inline SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                              std::size_t face_budget = kDefaultFaceBudget) {
  const SimplicialComplex pair[] = {k, l};
  return join_all(pair, face_budget);
}

struct RainbowComplex {
  SimplicialComplex complex;
  Coloring coloring;
};

/// Join of discrete color classes of the given sizes. Vertices of class i
/// occupy a consecutive index range, tagged i.
inline RainbowComplex rainbow_complex(std::span<const std::size_t> sizes,
                                      std::size_t face_budget = kDefaultFaceBudget) {
  if (sizes.empty()) throw std::invalid_argument("rainbow complex needs at least one color class");
  std::vector<SimplicialComplex> parts;
  Coloring coloring;
  VertexId next = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw std::invalid_argument("color class sizes must be positive");
    parts.push_back(discrete_points(s));
    std::vector<VertexId> cls(s);
    for (auto& v : cls) v = next++;
    coloring.classes.push_back(std::move(cls));
  }
  return {join_all(parts, face_budget), std::move(coloring)};
}

// ---------------------------------------------------------------------------
// Deleted joins

/// Index of copy `copy` of base vertex `v` in a deleted join of a complex with
/// `base_vertices` vertices.
inline VertexId deleted_join_vertex(std::uint32_t copy, VertexId v, std::size_t base_vertices) {
  return static_cast<VertexId>(copy * base_vertices + v);
}

/// n-fold k-wise deleted join: tagged unions s_1 + ... + s_n of faces of K
/// (empty allowed) in which no vertex of K is used by k or more of the s_i.
inline SimplicialComplex deleted_join(const SimplicialComplex& base, std::uint32_t n, std::uint32_t k,
                                      std::size_t face_budget = kDefaultFaceBudget) {
  if (n < 2) throw std::invalid_argument("deleted join needs n >= 2");
  if (k < 2) throw std::invalid_argument("deleted join needs k >= 2");
  const std::size_t nv = base.vertex_count();

  std::vector<Vertex> verts;
  for (std::uint32_t c = 0; c < n; ++c)
    for (VertexId v = 0; v < nv; ++v) verts.push_back(Vertex{static_cast<std::int64_t>(v), c});

  std::vector<const Face*> options{nullptr};
  for (int d = 0; d <= base.dim(); ++d)
    for (const auto& f : base.faces(d)) options.push_back(&f);

  std::vector<std::uint32_t> usage(nv, 0);
  std::vector<Face> faces;
  Face current;
  auto pick = [&](auto&& self, std::uint32_t copy) -> void {
    if (copy == n) {
      if (!current.empty()) {
        if (faces.size() >= face_budget) throw BudgetExceeded(faces.size() + 1, face_budget);
        faces.push_back(current);
      }
      return;
    }
    for (const Face* f : options) {
      if (f != nullptr) {
        bool ok = true;
        for (VertexId v : *f)
          if (usage[v] + 1 >= k) { ok = false; break; }
        if (!ok) continue;
        for (VertexId v : *f) ++usage[v];
      }
      const auto mark = current.size();
      if (f != nullptr)
        for (VertexId v : *f) current.push_back(deleted_join_vertex(copy, v, nv));
      self(self, copy + 1);
      current.resize(mark);
      if (f != nullptr)
        for (VertexId v : *f) --usage[v];
    }
  };
  pick(pick, 0);
  return SimplicialComplex::from_closed_faces(std::move(verts), std::move(faces), n);
}

}  // namespace ctv
