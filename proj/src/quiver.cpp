// quiver.cpp

#include "tautri/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "tautri/field.hpp"  // for tautri::error

namespace tautri {

Quiver::Quiver(std::vector<std::string> vertices,
               std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (v.empty()) throw error("quiver: empty vertex id");
    if (!seen.insert(v).second) throw error("quiver: duplicate vertex id '" + v + "'");
  }
  vertices_ = std::move(vertices);
  std::set<std::string> aseen;
  for (const auto& [id, src, tgt] : arrows) {
    if (id.empty()) throw error("quiver: empty arrow id");
    if (!aseen.insert(id).second) throw error("quiver: duplicate arrow id '" + id + "'");
    int s = vertex_index(src), t = vertex_index(tgt);
    if (s < 0) throw error("quiver: arrow '" + id + "' has undeclared source '" + src + "'");
    if (t < 0) throw error("quiver: arrow '" + id + "' has undeclared target '" + tgt + "'");
    arrows_.push_back(Arrow{id, s, t});
  }
}

int Quiver::vertex_index(const std::string& id) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == id) return static_cast<int>(i);
  return -1;
}

std::optional<int> Quiver::arrow_index(const std::string& id) const {
  for (size_t i = 0; i < arrows_.size(); ++i)
    if (arrows_[i].id == id) return static_cast<int>(i);
  return std::nullopt;
}

namespace {

// union-find over vertex indices
struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool Quiver::connected() const {
  if (vertex_count() <= 1) return true;
  DSU dsu(vertex_count());
  for (const auto& a : arrows_) dsu.unite(a.src, a.tgt);
  int root = dsu.find(0);
  for (int v = 1; v < vertex_count(); ++v)
    if (dsu.find(v) != root) return false;
  return true;
}

std::string Quiver::dot(const std::string& graph_name) const {
  std::vector<int> vorder(vertex_count());
  std::iota(vorder.begin(), vorder.end(), 0);
  std::sort(vorder.begin(), vorder.end(),
            [&](int a, int b) { return vertices_[a] < vertices_[b]; });
  std::vector<int> aorder(arrow_count());
  std::iota(aorder.begin(), aorder.end(), 0);
  std::sort(aorder.begin(), aorder.end(),
            [&](int a, int b) { return arrows_[a].id < arrows_[b].id; });

  std::ostringstream out;
  out << "digraph \"" << graph_name << "\" {\n";
  for (int v : vorder) out << "  \"" << vertices_[v] << "\";\n";
  for (int i : aorder) {
    const Arrow& a = arrows_[i];
    out << "  \"" << vertices_[a.src] << "\" -> \"" << vertices_[a.tgt]
        << "\" [label=\"" << a.id << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string DiagramType::str() const {
  switch (kind) {
    case Kind::A: return "A(" + std::to_string(n) + ")";
    case Kind::D: return "D(" + std::to_string(n) + ")";
    case Kind::E: return "E(" + std::to_string(n) + ")";
    case Kind::ATilde: return "A~(" + std::to_string(n) + ")";
    case Kind::DTilde: return "D~(" + std::to_string(n) + ")";
    case Kind::ETilde: return "E~(" + std::to_string(n) + ")";
    case Kind::Other: return "Other";
  }
  return "Other";
}

Quiver build_linear_quiver(int n) {
  if (n < 1) throw error("build_linear_quiver: n must be >= 1");
  std::vector<std::string> verts;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (int i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i)
    arrows.emplace_back("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1));
  return Quiver(std::move(verts), std::move(arrows));
}

Quiver build_cycle_quiver(int r) {
  if (r < 1) throw error("build_cycle_quiver: r must be >= 1");
  std::vector<std::string> verts;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (int i = 1; i <= r; ++i) verts.push_back(std::to_string(i));
  for (int i = 1; i <= r; ++i)
    arrows.emplace_back("a" + std::to_string(i), std::to_string(i),
                        std::to_string(i % r + 1));
  return Quiver(std::move(verts), std::move(arrows));
}

SeparatedQuiver separated_quiver(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<std::string> verts;
  std::vector<int> base;
  std::vector<bool> primed;
  verts.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    verts.push_back(q.vertices()[i]);
    base.push_back(i);
    primed.push_back(false);
  }
  for (int i = 0; i < n; ++i) {
    verts.push_back(q.vertices()[i] + "'");
    base.push_back(i);
    primed.push_back(true);
  }
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : q.arrows())
    arrows.emplace_back(a.id, q.vertices()[a.src], q.vertices()[a.tgt] + "'");
  return SeparatedQuiver{Quiver(std::move(verts), std::move(arrows)), std::move(base),
                         std::move(primed)};
}

// Classification of one connected undirected multigraph against the
// Dynkin/Euclidean tables.  Degree-sequence based; loops and anything
// outside the tables land in Other.
DiagramType classify_component_graph(int vc, const std::vector<std::pair<int, int>>& edges) {
  const int ec = static_cast<int>(edges.size());
  for (const auto& [a, b] : edges)
    if (a == b) return {DiagramType::Kind::Other, 0};

  std::vector<int> deg(vc, 0);
  for (const auto& [a, b] : edges) { ++deg[a]; ++deg[b]; }

  if (ec == vc) {
    // exactly one cycle; a plain cycle (all degrees 2) is A~(vc-1),
    // anything with a tail is outside the tables
    for (int d : deg)
      if (d != 2) return {DiagramType::Kind::Other, 0};
    return {DiagramType::Kind::ATilde, vc - 1};
  }
  if (ec != vc - 1) return {DiagramType::Kind::Other, 0};

  // tree cases; no multi-edges possible here (a doubled edge forms a cycle)
  std::vector<int> big;  // vertices of degree >= 3
  for (int v = 0; v < vc; ++v)
    if (deg[v] >= 3) big.push_back(v);

  if (big.empty()) return {DiagramType::Kind::A, vc};

  std::vector<std::vector<int>> adj(vc);
  for (const auto& [a, b] : edges) { adj[a].push_back(b); adj[b].push_back(a); }

  // branch lengths walking away from a fork until a leaf or another fork
  auto branch = [&](int fork, int first) -> std::optional<int> {
    int prev = fork, cur = first, len = 1;
    while (deg[cur] == 2) {
      int nxt = -1;
      for (int w : adj[cur])
        if (w != prev) { nxt = w; break; }
      prev = cur;
      cur = nxt;
      ++len;
    }
    if (deg[cur] >= 3) return std::nullopt;  // runs into another fork
    return len;
  };

  if (big.size() == 1) {
    int fork = big[0];
    if (deg[fork] == 4) {
      // star with four length-1 branches is D~(4)
      if (vc == 5) return {DiagramType::Kind::DTilde, 4};
      return {DiagramType::Kind::Other, 0};
    }
    if (deg[fork] > 4) return {DiagramType::Kind::Other, 0};
    std::vector<int> lens;
    for (int w : adj[fork]) {
      auto l = branch(fork, w);
      if (!l) return {DiagramType::Kind::Other, 0};
      lens.push_back(*l);
    }
    std::sort(lens.begin(), lens.end());
    int a = lens[0], b = lens[1], c = lens[2];
    if (a == 1 && b == 1) return {DiagramType::Kind::D, vc};  // D(n), n = c + 3 = vc
    if (a == 1 && b == 2 && c == 2) return {DiagramType::Kind::E, 6};
    if (a == 1 && b == 2 && c == 3) return {DiagramType::Kind::E, 7};
    if (a == 1 && b == 2 && c == 4) return {DiagramType::Kind::E, 8};
    if (a == 2 && b == 2 && c == 2) return {DiagramType::Kind::ETilde, 6};
    if (a == 1 && b == 3 && c == 3) return {DiagramType::Kind::ETilde, 7};
    if (a == 1 && b == 2 && c == 5) return {DiagramType::Kind::ETilde, 8};
    return {DiagramType::Kind::Other, 0};
  }

  if (big.size() == 2) {
    // D~(n), n >= 5: two degree-3 forks, two length-1 branches each,
    // joined by a path
    if (deg[big[0]] != 3 || deg[big[1]] != 3) return {DiagramType::Kind::Other, 0};
    for (int fork : big) {
      int leaves = 0;
      for (int w : adj[fork]) {
        auto l = branch(fork, w);
        if (l && *l == 1) ++leaves;
      }
      if (leaves != 2) return {DiagramType::Kind::Other, 0};
    }
    return {DiagramType::Kind::DTilde, vc - 1};
  }

  return {DiagramType::Kind::Other, 0};
}

std::vector<Component> component_types(const Quiver& q) {
  const int n = q.vertex_count();
  DSU dsu(n);
  for (const auto& a : q.arrows()) dsu.unite(a.src, a.tgt);

  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < n; ++v) groups[dsu.find(v)].push_back(v);

  std::vector<Component> out;
  for (auto& [root, verts] : groups) {
    std::sort(verts.begin(), verts.end());
    std::map<int, int> local;
    for (size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& a : q.arrows())
      if (dsu.find(a.src) == root) edges.emplace_back(local[a.src], local[a.tgt]);
    out.push_back(Component{verts, classify_component_graph(static_cast<int>(verts.size()), edges)});
  }
  return out;
}

bool has_loop(const Quiver& q) {
  for (const auto& a : q.arrows())
    if (a.src == a.tgt) return true;
  return false;
}

bool has_multiple_arrow(const Quiver& q) {
  std::set<std::pair<int, int>> seen;
  for (const auto& a : q.arrows())
    if (!seen.insert({a.src, a.tgt}).second) return true;
  return false;
}

namespace {

bool degrees_at_most_one(const Quiver& q, std::vector<int>& indeg, std::vector<int>& outdeg) {
  indeg.assign(q.vertex_count(), 0);
  outdeg.assign(q.vertex_count(), 0);
  for (const auto& a : q.arrows()) {
    ++outdeg[a.src];
    ++indeg[a.tgt];
  }
  for (int v = 0; v < q.vertex_count(); ++v)
    if (indeg[v] > 1 || outdeg[v] > 1) return false;
  return true;
}

}  // namespace

bool is_linear_An_shape(const Quiver& q) {
  if (q.vertex_count() == 0) return false;
  std::vector<int> indeg, outdeg;
  if (!degrees_at_most_one(q, indeg, outdeg)) return false;
  if (q.arrow_count() != q.vertex_count() - 1) return false;
  return q.connected() && !has_loop(q);
}

bool is_cyclic_shape(const Quiver& q) {
  if (q.vertex_count() == 0) return false;
  std::vector<int> indeg, outdeg;
  if (!degrees_at_most_one(q, indeg, outdeg)) return false;
  if (q.arrow_count() != q.vertex_count()) return false;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (indeg[v] != 1 || outdeg[v] != 1) return false;
  return q.connected();
}

}  // namespace tautri
