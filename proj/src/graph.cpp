#include "maglab/graph.hpp"

#include <algorithm>
#include <map>

namespace maglab {

std::string_view to_string(ElementClass c) {
  switch (c) {
    case ElementClass::vertex: return "vertex";
    case ElementClass::edge: return "edge";
    case ElementClass::face: return "face";
  }
  return "?";
}

Incidence::Incidence(const std::vector<std::vector<std::uint32_t>>& rows) {
  offsets_.reserve(rows.size() + 1);
  for (const auto& row : rows) {
    entries_.insert(entries_.end(), row.begin(), row.end());
    offsets_.push_back(entries_.size());
  }
}

namespace {

void sort_unique(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Graph Graph::build(std::size_t vertex_count,
                   std::vector<std::pair<VertexId, VertexId>> edges,
                   std::vector<std::vector<VertexId>> faces) {
  using K = GraphError::Kind;
  Graph g;
  g.vertex_count_ = vertex_count;

  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    const std::string name = "edge " + std::to_string(i) + " {" + std::to_string(u) + "," +
                             std::to_string(v) + "}";
    if (u >= vertex_count || v >= vertex_count)
      throw GraphError(K::id_out_of_range, name + " references a vertex outside [0," +
                                               std::to_string(vertex_count) + ")");
    if (u == v) throw GraphError(K::self_loop, name + " is a self-loop");
    if (u > v) std::swap(u, v);
    if (!edge_index.emplace(std::pair{u, v}, static_cast<EdgeId>(i)).second)
      throw GraphError(K::duplicate_edge,
                       name + " duplicates edge " + std::to_string(edge_index.at({u, v})));
    edges[i] = {u, v};
  }

  std::vector<std::vector<std::uint32_t>> vv(vertex_count), ve(vertex_count), vf(vertex_count);
  std::vector<std::vector<std::uint32_t>> ef(edges.size());
  std::vector<std::vector<std::uint32_t>> fv(faces.size()), fe(faces.size()), ff(faces.size());

  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    vv[u].push_back(v);
    vv[v].push_back(u);
    ve[u].push_back(static_cast<EdgeId>(i));
    ve[v].push_back(static_cast<EdgeId>(i));
  }

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& walk = faces[f];
    const std::string name = "face " + std::to_string(f);
    if (walk.size() < 3)
      throw GraphError(K::face_too_short, name + " must traverse at least one edge");
    if (walk.front() != walk.back())
      throw GraphError(K::face_not_closed, name + " is not a closed walk");
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (walk[i] >= vertex_count)
        throw GraphError(K::id_out_of_range,
                         name + " references vertex " + std::to_string(walk[i]));
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      auto a = walk[i], b = walk[i + 1];
      auto it = edge_index.find({std::min(a, b), std::max(a, b)});
      if (it == edge_index.end())
        throw GraphError(K::face_uses_non_edge, name + " steps along non-edge {" +
                                                    std::to_string(a) + "," +
                                                    std::to_string(b) + "}");
      fe[f].push_back(it->second);
      fv[f].push_back(b);
    }
    sort_unique(fv[f]);
    sort_unique(fe[f]);
    for (auto v : fv[f]) vf[v].push_back(static_cast<FaceId>(f));
    for (auto e : fe[f]) ef[e].push_back(static_cast<FaceId>(f));
  }

  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (auto e : fe[f])
      for (auto other : ef[e])
        if (other != f) ff[f].push_back(other);
    sort_unique(ff[f]);
  }
  for (auto& row : vv) sort_unique(row);
  for (auto& row : ve) sort_unique(row);

  g.edges_ = std::move(edges);
  g.faces_ = std::move(faces);
  g.vertex_vertices_ = Incidence(vv);
  g.vertex_edges_ = Incidence(ve);
  g.vertex_faces_ = Incidence(vf);
  g.edge_faces_ = Incidence(ef);
  g.face_vertices_ = Incidence(fv);
  g.face_edges_ = Incidence(fe);
  g.face_faces_ = Incidence(ff);
  return g;
}

std::size_t Graph::count(ElementClass c) const {
  switch (c) {
    case ElementClass::vertex: return vertex_count_;
    case ElementClass::edge: return edges_.size();
    case ElementClass::face: return faces_.size();
  }
  return 0;
}

std::int64_t Graph::find_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count_ || v >= vertex_count_) return -1;
  for (auto e : vertex_edges(u)) {
    auto [a, b] = edges_[e];
    if ((a == v && b == u) || (a == u && b == v)) return e;
  }
  return -1;
}

std::vector<std::uint32_t> Graph::incident(ElementRef element, ElementClass target) const {
  if (element.id >= count(element.cls))
    throw GraphError(GraphError::Kind::invalid_element,
                     std::string(to_string(element.cls)) + " " + std::to_string(element.id) +
                         " does not exist");
  auto as_vec = [](std::span<const std::uint32_t> s) {
    return std::vector<std::uint32_t>(s.begin(), s.end());
  };
  const auto id = element.id;
  switch (element.cls) {
    case ElementClass::vertex:
      if (target == ElementClass::vertex) return as_vec(neighbours(id));
      if (target == ElementClass::edge) return as_vec(vertex_edges(id));
      return as_vec(vertex_faces(id));
    case ElementClass::edge: {
      auto [u, v] = edges_[id];
      if (target == ElementClass::vertex) return {u, v};
      if (target == ElementClass::face) return as_vec(edge_faces(id));
      std::vector<std::uint32_t> out;
      for (auto x : {u, v})
        for (auto e : vertex_edges(x))
          if (e != id) out.push_back(e);
      sort_unique(out);
      return out;
    }
    case ElementClass::face:
      if (target == ElementClass::vertex) return as_vec(face_vertices(id));
      if (target == ElementClass::edge) return as_vec(face_edges(id));
      return as_vec(face_faces(id));
  }
  return {};
}

std::size_t Graph::global_index(ElementRef e) const {
  if (e.id >= count(e.cls))
    throw GraphError(GraphError::Kind::invalid_element,
                     std::string(to_string(e.cls)) + " " + std::to_string(e.id) +
                         " does not exist");
  switch (e.cls) {
    case ElementClass::vertex: return e.id;
    case ElementClass::edge: return vertex_count_ + e.id;
    case ElementClass::face: return vertex_count_ + edges_.size() + e.id;
  }
  return 0;
}

ElementRef Graph::element_at(std::size_t global) const {
  if (global < vertex_count_) return {ElementClass::vertex, static_cast<std::uint32_t>(global)};
  global -= vertex_count_;
  if (global < edges_.size()) return {ElementClass::edge, static_cast<std::uint32_t>(global)};
  global -= edges_.size();
  if (global < faces_.size()) return {ElementClass::face, static_cast<std::uint32_t>(global)};
  throw GraphError(GraphError::Kind::invalid_element, "element index out of range");
}

}  // namespace maglab
