// quiver.hpp
//
// Finite quivers (directed multigraphs with named vertices/arrows), the
// separated-quiver construction and classification of underlying diagrams
// into the Dynkin / Euclidean tables.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace tautri {

struct Arrow {
  std::string id;
  int src = 0;  // vertex index
  int tgt = 0;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_[i]; }

  int vertex_index(const std::string& id) const;  // -1 if absent
  std::optional<int> arrow_index(const std::string& id) const;

  bool connected() const;  // of the underlying undirected graph; empty quiver counts as connected

  std::string dot(const std::string& graph_name = "quiver") const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

// Underlying-diagram type of one connected component.
struct DiagramType {
  enum class Kind { A, D, E, ATilde, DTilde, ETilde, Other };
  Kind kind = Kind::Other;
  int n = 0;  // index in the series (A(n) has n vertices, A~(n) has n+1, ...)

  bool operator==(const DiagramType&) const = default;
  std::string str() const;
  bool is_type_A() const { return kind == Kind::A; }
};

struct Component {
  std::vector<int> vertices;  // indices into the quiver's vertex list, sorted
  DiagramType type;
};

// ---------------------------------------------------------------------------

// vertices 1..n, arrows a1..a(n-1) with ai : i -> i+1
Quiver build_linear_quiver(int n);

// single oriented cycle 1 -> 2 -> ... -> r -> 1 (r = 1 gives a loop)
Quiver build_cycle_quiver(int r);

// Separated quiver: vertex set {i} u {i'}, one arrow i -> j' per arrow i -> j.
// `characters` records, per new vertex, the index of the original vertex it
// copies (the paper's "same character" relation), primed or not.
struct SeparatedQuiver {
  Quiver quiver;
  std::vector<int> base_vertex;   // per vertex of `quiver`
  std::vector<bool> primed;       // per vertex of `quiver`
};
SeparatedQuiver separated_quiver(const Quiver& q);

std::vector<Component> component_types(const Quiver& q);
DiagramType classify_component_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

bool has_loop(const Quiver& q);
bool has_multiple_arrow(const Quiver& q);  // parallel = same source and same target
bool is_linear_An_shape(const Quiver& q);
bool is_cyclic_shape(const Quiver& q);

}  // namespace tautri
