#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace maglab {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using FaceId = std::uint32_t;

enum class ElementClass : std::uint8_t { vertex = 0, edge = 1, face = 2 };

std::string_view to_string(ElementClass c);

/// A vertex, edge or face of a graph. Ids are dense and 0-based per class.
struct ElementRef {
  ElementClass cls = ElementClass::vertex;
  std::uint32_t id = 0;

  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    id_out_of_range,
    self_loop,
    duplicate_edge,
    face_not_closed,
    face_too_short,
    face_uses_non_edge,
    invalid_element,
  };

  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Compressed row storage for one incidence relation.
class Incidence {
 public:
  Incidence() = default;
  explicit Incidence(const std::vector<std::vector<std::uint32_t>>& rows);

  std::span<const std::uint32_t> operator[](std::size_t row) const {
    return {entries_.data() + offsets_[row], offsets_[row + 1] - offsets_[row]};
  }
  std::size_t rows() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

  friend bool operator==(const Incidence&, const Incidence&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> entries_;
};

/// Graph with optional faces. Immutable after construction.
///
/// Faces are closed walks v0..vk (v0 == vk) over existing edges. Incidence
/// between faces and vertices/edges uses set semantics: a walk that visits a
/// vertex or edge twice still records it once. All incidence rows are sorted.
class Graph {
 public:
  /// Validates the input and builds every incidence table. Throws GraphError.
  static Graph build(std::size_t vertex_count,
                     std::vector<std::pair<VertexId, VertexId>> edges,
                     std::vector<std::vector<VertexId>> faces = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t face_count() const { return faces_.size(); }
  std::size_t count(ElementClass c) const;
  std::size_t element_count() const { return vertex_count_ + edges_.size() + faces_.size(); }

  /// Endpoints of an edge, smaller id first.
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
  /// Closed walk as given at construction (first vertex repeated last).
  const std::vector<VertexId>& face_walk(FaceId f) const { return faces_.at(f); }
  const std::vector<std::vector<VertexId>>& faces() const { return faces_; }

  std::span<const VertexId> neighbours(VertexId v) const { return vertex_vertices_[v]; }
  std::span<const EdgeId> vertex_edges(VertexId v) const { return vertex_edges_[v]; }
  std::span<const FaceId> vertex_faces(VertexId v) const { return vertex_faces_[v]; }
  std::span<const FaceId> edge_faces(EdgeId e) const { return edge_faces_[e]; }
  std::span<const VertexId> face_vertices(FaceId f) const { return face_vertices_[f]; }
  std::span<const EdgeId> face_edges(FaceId f) const { return face_edges_[f]; }
  /// Faces sharing at least one edge with f (f itself excluded).
  std::span<const FaceId> face_faces(FaceId f) const { return face_faces_[f]; }

  std::size_t degree(VertexId v) const { return vertex_edges_[v].size(); }

  /// Id of the edge {u, v}, or -1 when absent.
  std::int64_t find_edge(VertexId u, VertexId v) const;

  /// Generic incidence query: the ids of class `target` incident to `element`.
  /// vertex->vertex is adjacency, face->face is shared-edge adjacency, and
  /// edge->edge returns edges sharing an endpoint.
  std::vector<std::uint32_t> incident(ElementRef element, ElementClass target) const;

  /// Position of an element in the concatenated order V, E, F.
  std::size_t global_index(ElementRef e) const;
  ElementRef element_at(std::size_t global) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> faces_;

  Incidence vertex_vertices_;
  Incidence vertex_edges_;
  Incidence vertex_faces_;
  Incidence edge_faces_;
  Incidence face_vertices_;
  Incidence face_edges_;
  Incidence face_faces_;
};

}  // namespace maglab
