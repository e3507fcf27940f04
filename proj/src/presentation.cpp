// presentation.cpp

#include "tautri/presentation.hpp"

#include <numeric>
#include <set>

namespace tautri {

int BoundPresentation::path_source(const std::vector<int>& path) const {
  if (path.empty()) throw error("presentation: empty path in relation");
  return quiver.arrow(path.front()).src;
}

int BoundPresentation::path_target(const std::vector<int>& path) const {
  if (path.empty()) throw error("presentation: empty path in relation");
  return quiver.arrow(path.back()).tgt;
}

void BoundPresentation::validate() const {
  field.validate();
  if (nilpotency_cap < 2) throw error("presentation: nilpotency cap must be >= 2");
  for (const Relation& rel : relations) {
    if (rel.empty()) throw error("presentation: empty relation");
    int src = -1, tgt = -1;
    for (const RelationTerm& t : rel) {
      if (t.den == 0) throw error("presentation: zero denominator in relation coefficient");
      if (t.path.size() < 2)
        throw error("presentation: relation path of length < 2 (ideal must lie in rad^2)");
      int prev = -1;
      for (int ai : t.path) {
        if (ai < 0 || ai >= quiver.arrow_count())
          throw error("presentation: relation references unknown arrow");
        if (prev >= 0 && quiver.arrow(prev).tgt != quiver.arrow(ai).src)
          throw error("presentation: relation path is not composable");
        prev = ai;
      }
      int s = path_source(t.path), g = path_target(t.path);
      if (src < 0) { src = s; tgt = g; }
      else if (s != src || g != tgt)
        throw error("presentation: relation mixes sources/targets");
    }
  }
  if (tag.kind == ConstructionTag::Kind::TriangularMatrix && tag.n < 1)
    throw error("presentation: triangular matrix tag with n < 1");
  for (const auto& f : tag.factors) f.validate();
}

BoundPresentation path_algebra(Quiver q, int cap, FieldSpec field) {
  BoundPresentation p;
  p.quiver = std::move(q);
  p.nilpotency_cap = cap < 2 ? 2 : cap;
  p.field = field;
  p.validate();
  return p;
}

BoundPresentation linear_path_algebra(int n, FieldSpec field) {
  return path_algebra(build_linear_quiver(n), n < 2 ? 2 : n, field);
}

BoundPresentation ground_field(FieldSpec field) {
  return linear_path_algebra(1, field);
}

namespace {

std::string combine_id(const std::string& a, const std::string& b) {
  return a + "x" + b;
}

}  // namespace

BoundPresentation tensor_product(const BoundPresentation& a, const BoundPresentation& b) {
  a.validate();
  b.validate();
  if (!(a.field == b.field))
    throw error("tensor_product: field specs must match (" + a.field.str() + " vs " + b.field.str() + ")");

  const Quiver& qa = a.quiver;
  const Quiver& qb = b.quiver;

  std::vector<std::string> verts;
  for (const auto& va : qa.vertices())
    for (const auto& vb : qb.vertices()) verts.push_back(combine_id(va, vb));

  // arrows (alpha, j) : (s(alpha), j) -> (t(alpha), j), then (i, beta)
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& al : qa.arrows())
    for (const auto& vb : qb.vertices())
      arrows.emplace_back(combine_id(al.id, vb), combine_id(qa.vertices()[al.src], vb),
                          combine_id(qa.vertices()[al.tgt], vb));
  for (const auto& va : qa.vertices())
    for (const auto& be : qb.arrows())
      arrows.emplace_back(combine_id(va, be.id), combine_id(va, qb.vertices()[be.src]),
                          combine_id(va, qb.vertices()[be.tgt]));

  BoundPresentation p;
  p.quiver = Quiver(std::move(verts), std::move(arrows));  // throws on id collisions
  p.field = a.field;
  p.nilpotency_cap = a.nilpotency_cap + b.nilpotency_cap - 1;

  const int nb_arrows_a = qa.arrow_count();
  auto a_arrow_at = [&](int ai, int bj) { return ai * qb.vertex_count() + bj; };
  auto b_arrow_at = [&](int av, int bi) { return nb_arrows_a * qb.vertex_count() + av * qb.arrow_count() + bi; };

  // A-relations lifted at each B-vertex
  for (const Relation& rel : a.relations)
    for (int j = 0; j < qb.vertex_count(); ++j) {
      Relation lifted;
      for (const RelationTerm& t : rel) {
        RelationTerm lt{t.num, t.den, {}};
        for (int ai : t.path) lt.path.push_back(a_arrow_at(ai, j));
        lifted.push_back(std::move(lt));
      }
      p.relations.push_back(std::move(lifted));
    }
  // B-relations lifted at each A-vertex
  for (const Relation& rel : b.relations)
    for (int i = 0; i < qa.vertex_count(); ++i) {
      Relation lifted;
      for (const RelationTerm& t : rel) {
        RelationTerm lt{t.num, t.den, {}};
        for (int bi : t.path) lt.path.push_back(b_arrow_at(i, bi));
        lifted.push_back(std::move(lt));
      }
      p.relations.push_back(std::move(lifted));
    }
  // commutativity squares: (alpha, s(beta)).(t(alpha), beta) = (s(alpha), beta).(alpha, t(beta))
  for (int ai = 0; ai < qa.arrow_count(); ++ai)
    for (int bi = 0; bi < qb.arrow_count(); ++bi) {
      const Arrow& al = qa.arrows()[ai];
      const Arrow& be = qb.arrows()[bi];
      Relation rel;
      rel.push_back(RelationTerm{1, 1, {a_arrow_at(ai, be.src), b_arrow_at(al.tgt, bi)}});
      rel.push_back(RelationTerm{-1, 1, {b_arrow_at(al.src, bi), a_arrow_at(ai, be.tgt)}});
      p.relations.push_back(std::move(rel));
    }

  p.tag.kind = ConstructionTag::Kind::Tensor;
  p.tag.factors = {a, b};
  p.validate();
  return p;
}

BoundPresentation triangular_matrix(const BoundPresentation& a, int n) {
  if (n < 1) throw error("triangular_matrix: n must be >= 1");
  BoundPresentation p = tensor_product(a, linear_path_algebra(n, a.field));
  p.tag = ConstructionTag{};
  p.tag.kind = ConstructionTag::Kind::TriangularMatrix;
  p.tag.n = n;
  p.tag.factors = {a};
  return p;
}

BoundPresentation radical_square_truncation(const BoundPresentation& a) {
  a.validate();
  BoundPresentation p;
  p.quiver = a.quiver;
  p.field = a.field;
  p.nilpotency_cap = 2;
  for (int ai = 0; ai < p.quiver.arrow_count(); ++ai)
    for (int bi = 0; bi < p.quiver.arrow_count(); ++bi)
      if (p.quiver.arrow(ai).tgt == p.quiver.arrow(bi).src)
        p.relations.push_back(Relation{RelationTerm{1, 1, {ai, bi}}});
  p.tag.kind = ConstructionTag::Kind::RadSquareTruncation;
  p.tag.factors = {a};
  p.validate();
  return p;
}

BoundPresentation build_nakayama(int r, bool cyclic, int length_cap, FieldSpec field) {
  if (r < 1) throw error("build_nakayama: r must be >= 1");
  if (length_cap < 2) throw error("build_nakayama: length cap must be >= 2 (admissibility)");
  BoundPresentation p;
  p.quiver = cyclic ? build_cycle_quiver(r) : build_linear_quiver(r);
  p.field = field;
  // every path of length = length_cap becomes a relation
  std::vector<Relation> rels;
  for (int start = 0; start < p.quiver.arrow_count(); ++start) {
    std::vector<int> path{start};
    while (static_cast<int>(path.size()) < length_cap) {
      int at = p.quiver.arrow(path.back()).tgt;
      int next = -1;
      for (int ai = 0; ai < p.quiver.arrow_count(); ++ai)
        if (p.quiver.arrow(ai).src == at) { next = ai; break; }
      if (next < 0) break;  // linear quiver ran off the end
      path.push_back(next);
    }
    if (static_cast<int>(path.size()) == length_cap)
      rels.push_back(Relation{RelationTerm{1, 1, path}});
  }
  p.relations = std::move(rels);
  p.nilpotency_cap = length_cap + 1;
  p.validate();
  return p;
}

BoundPresentation build_truncated_polynomial(int m, FieldSpec field) {
  if (m < 2) throw error("build_truncated_polynomial: m must be >= 2");
  Quiver q({"1"}, {{"x", "1", "1"}});
  BoundPresentation p;
  p.quiver = std::move(q);
  p.field = field;
  p.relations.push_back(Relation{RelationTerm{1, 1, std::vector<int>(m, 0)}});
  p.nilpotency_cap = m + 1;
  p.validate();
  return p;
}

}  // namespace tautri
