#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplicial_complex.hpp"

namespace ctv {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Integer power with overflow check.
inline std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("power overflows 64 bits");
    r *= base;
  }
  return r;
}

/// Permutation of {0, ..., degree-1} stored as its image list: i -> images[i].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<char> hit(images_.size(), 0);
    for (auto x : images_) {
      if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation");
      hit[x] = 1;
    }
  }

  static Permutation identity(std::size_t degree) {
    std::vector<std::uint32_t> im(degree);
    std::iota(im.begin(), im.end(), 0u);
    return Permutation(std::move(im));
  }

  /// Swaps a and b.
  static Permutation transposition(std::size_t degree, std::uint32_t a, std::uint32_t b) {
    auto p = identity(degree);
    std::swap(p.images_.at(a), p.images_.at(b));
    return p;
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return images_.at(i); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<std::uint32_t> im(a.degree());
    for (std::uint32_t i = 0; i < im.size(); ++i) im[i] = a(b(i));
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> im(degree());
    for (std::uint32_t i = 0; i < im.size(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (std::uint32_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t n = 0;
    for (std::uint32_t i = 0; i < images_.size(); ++i) n += images_[i] == i;
    return n;
  }

  std::size_t order() const {
    std::size_t ord = 1;
    std::vector<char> seen(degree(), 0);
    for (std::uint32_t i = 0; i < degree(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = 1;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

/// Image of every face under a complex automorphism: image[d][i] is the index
/// (within dimension d) of the image of faces(d)[i].
struct FacePermutation {
  std::vector<std::vector<std::size_t>> image;

  bool is_identity() const {
    for (const auto& layer : image)
      for (std::size_t i = 0; i < layer.size(); ++i)
        if (layer[i] != i) return false;
    return true;
  }
};

/// Moves copy j of a deleted-join vertex to copy pi(j). Requires every vertex
/// to be tagged by its copy.
inline Face act_on_face(const SimplicialComplex& c, const Permutation& pi, const Face& f) {
  const std::size_t copies = c.factor_count();
  const std::size_t base = copies == 0 ? 0 : c.vertex_count() / copies;
  Face out;
  out.reserve(f.size());
  for (VertexId v : f) {
    const auto& label = c.vertex(v);
    if (!label.tag) throw std::invalid_argument("vertex has no copy tag");
    out.push_back(deleted_join_vertex(pi(*label.tag), static_cast<VertexId>(label.id), base));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Sym(n) action on an n-fold deleted join. Throws if pi has the wrong degree,
/// or if some face image falls outside the complex.
inline FacePermutation apply_symmetry(const SimplicialComplex& c, const Permutation& pi) {
  if (c.factor_count() == 0 || c.vertex_count() % c.factor_count() != 0)
    throw std::invalid_argument("complex is not a deleted join");
  if (pi.degree() != c.factor_count())
    throw std::invalid_argument("permutation degree " + std::to_string(pi.degree()) +
                                " does not match copy count " + std::to_string(c.factor_count()));
  FacePermutation fp;
  for (int d = 0; d <= c.dim(); ++d) {
    std::vector<std::size_t> layer;
    layer.reserve(c.faces(d).size());
    for (const auto& f : c.faces(d)) {
      auto idx = c.index_of(act_on_face(c, pi, f));
      if (!idx) throw std::logic_error("symmetry does not preserve the complex");
      layer.push_back(*idx);
    }
    fp.image.push_back(std::move(layer));
  }
  return fp;
}

/// Regular representation of (Z_p)^n in Sym(p^n). Group elements are indexed
/// by their base-p digit vectors; element g maps h to h + g. The returned list
/// is in index order, so entry 0 is the identity.
inline std::vector<Permutation> regular_embedding(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const std::uint64_t order = checked_pow(p, n);
  if (order > (1u << 20)) throw std::invalid_argument("group too large to materialize");

  auto add = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t sum = 0;
    std::uint64_t place = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      sum += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return sum;
  };

  std::vector<Permutation> out;
  out.reserve(order);
  for (std::uint64_t g = 0; g < order; ++g) {
    std::vector<std::uint32_t> im(order);
    for (std::uint64_t h = 0; h < order; ++h) im[h] = static_cast<std::uint32_t>(add(h, g));
    out.emplace_back(std::move(im));
  }
  return out;
}

}  // namespace ctv
