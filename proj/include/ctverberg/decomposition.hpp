#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplicial_complex.hpp"

namespace ctv {

/// Raised when the decomposition bijection fails to carry faces to faces.
class IsomorphismFailure : public std::logic_error {
 public:
  IsomorphismFailure(const std::string& what, Face counterexample)
      : std::logic_error(what), counterexample_(std::move(counterexample)) {}
  const Face& counterexample() const noexcept { return counterexample_; }

 private:
  Face counterexample_;
};

/// Explicit vertex bijection between the r-fold 2-wise deleted join of a
/// rainbow complex and the join of chessboards Δ(|C_i|, r).
struct DecompositionWitness {
  std::vector<std::size_t> sizes;
  std::uint32_t r = 0;
  SimplicialComplex deleted_join_side;
  SimplicialComplex chessboard_side;
  /// vertex_map[v] is the chessboard-side image of deleted-join vertex v.
  std::vector<VertexId> vertex_map;
  bool verified = false;
};

namespace detail {

inline std::string format_face(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

}  // namespace detail

/// Copy j of the v-th vertex of color class i maps to chessboard cell (v, j)
/// of factor i. Both directions are checked face by face; a failure throws
/// IsomorphismFailure carrying the offending face.
inline DecompositionWitness decomposition_isomorphism(std::span<const std::size_t> sizes, std::uint32_t r,
                                                      std::size_t face_budget = kDefaultFaceBudget) {
  if (sizes.empty()) throw std::invalid_argument("sizes must be nonempty");
  if (r < 2) throw std::invalid_argument("r must be at least 2");

  DecompositionWitness w;
  w.sizes.assign(sizes.begin(), sizes.end());
  w.r = r;

  auto rainbow = rainbow_complex(sizes, face_budget);
  w.deleted_join_side = deleted_join(rainbow.complex, r, 2, face_budget);

  std::vector<SimplicialComplex> boards;
  for (std::size_t s : sizes) boards.push_back(chessboard(s, r, face_budget));
  w.chessboard_side = join_all(boards, face_budget);

  // Offsets of each chessboard factor in the join.
  std::vector<VertexId> board_offset;
  VertexId off = 0;
  for (std::size_t s : sizes) {
    board_offset.push_back(off);
    off += static_cast<VertexId>(s * r);
  }

  const auto& rainbow_vertices = rainbow.complex.vertices();
  w.vertex_map.assign(w.deleted_join_side.vertex_count(), 0);
  std::vector<char> hit(w.chessboard_side.vertex_count(), 0);
  for (VertexId u = 0; u < w.deleted_join_side.vertex_count(); ++u) {
    const auto& label = w.deleted_join_side.vertex(u);
    const std::uint32_t copy = *label.tag;
    const auto& base_label = rainbow_vertices.at(static_cast<std::size_t>(label.id));
    const std::uint32_t color = *base_label.tag;
    const auto v = static_cast<std::size_t>(base_label.id);
    const VertexId image = board_offset[color] + chessboard_vertex(v, copy, r);
    if (image >= hit.size() || hit[image]) throw IsomorphismFailure("vertex map is not injective", {u});
    hit[image] = 1;
    w.vertex_map[u] = image;
  }

  std::vector<VertexId> inverse(w.chessboard_side.vertex_count(), 0);
  for (VertexId u = 0; u < w.vertex_map.size(); ++u) inverse[w.vertex_map[u]] = u;

  auto mapped = [](const Face& f, const std::vector<VertexId>& map) {
    Face out;
    out.reserve(f.size());
    for (VertexId v : f) out.push_back(map[v]);
    std::sort(out.begin(), out.end());
    return out;
  };

  for (int d = 0; d <= w.deleted_join_side.dim(); ++d)
    for (const auto& f : w.deleted_join_side.faces(d))
      if (!w.chessboard_side.contains(mapped(f, w.vertex_map)))
        throw IsomorphismFailure("image of deleted-join face " + detail::format_face(f) +
                                     " is not a face of the chessboard join",
                                 f);
  for (int d = 0; d <= w.chessboard_side.dim(); ++d)
    for (const auto& f : w.chessboard_side.faces(d))
      if (!w.deleted_join_side.contains(mapped(f, inverse)))
        throw IsomorphismFailure("preimage of chessboard-join face " + detail::format_face(f) +
                                     " is not a face of the deleted join",
                                 f);
  w.verified = true;
  return w;
}

}  // namespace ctv
