// algebra.hpp
//
// Computation of a finite dimensional algebra from a bound quiver
// presentation.  The path space up to the nilpotency cap is finite; the
// two-sided ideal spanned by the relations (closed under multiplication by
// arrows on both sides) is reduced to echelon form whose leading terms are
// the greatest paths in (length, lex) order.  The surviving paths -- the
// least representative of each class -- form the basis, and products reduce
// against the echelon rows.  No Groebner machinery needed: every algebra
// here is admissible, so the cap-bounded path space already contains a full
// set of representatives.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tautri/matrix.hpp"
#include "tautri/presentation.hpp"

namespace tautri {

template <class F>
struct Algebra {
  using Elem = typename F::Elem;
  using AlgVec = std::vector<Elem>;             // coordinates over the basis
  using Sparse = std::vector<std::pair<int, Elem>>;

  BoundPresentation pres;
  F k;

  struct BasisElem {
    int src = 0, tgt = 0, len = 0;
    std::vector<int> arrows;   // empty for the trivial path at src
    std::string label;
  };
  std::vector<BasisElem> basis;
  std::vector<int> unit;                        // basis id of e_i, per vertex
  std::vector<int> arrow_basis;                 // basis id of each arrow
  std::vector<std::vector<std::vector<int>>> graded;  // [src][tgt] -> basis ids
  std::vector<std::string> warnings;

  explicit Algebra(const F& field) : k(field) {}

  int dim() const { return static_cast<int>(basis.size()); }
  int vertex_count() const { return pres.quiver.vertex_count(); }

  const Sparse& product(int i, int j) const { return mult_[i * dim() + j]; }

  AlgVec zero_vec() const { return AlgVec(basis.size(), k.zero()); }

  AlgVec unit_vec(int vertex) const {
    AlgVec v = zero_vec();
    v[unit[vertex]] = k.one();
    return v;
  }

  AlgVec mul(const AlgVec& a, const AlgVec& b) const {
    AlgVec out = zero_vec();
    for (int i = 0; i < dim(); ++i) {
      if (k.is_zero(a[i])) continue;
      for (int j = 0; j < dim(); ++j) {
        if (k.is_zero(b[j])) continue;
        auto c = k.mul(a[i], b[j]);
        for (const auto& [b_id, coef] : product(i, j))
          out[b_id] = k.add(out[b_id], k.mul(c, coef));
      }
    }
    return out;
  }

  bool is_zero_vec(const AlgVec& v) const {
    for (const auto& x : v)
      if (!k.is_zero(x)) return false;
    return true;
  }

  // an element of e_i Lambda e_i with nonzero scalar part is a unit there;
  // invert by the geometric series against the nilpotent remainder
  AlgVec local_unit_inverse(int vertex, const AlgVec& u) const {
    auto c = u[unit[vertex]];
    if (k.is_zero(c)) throw error("algebra: element is not a unit in e_i A e_i");
    auto cinv = k.inv(c);
    AlgVec nil = u;
    nil[unit[vertex]] = k.zero();
    AlgVec out = unit_vec(vertex);
    AlgVec term = unit_vec(vertex);
    for (int step = 0; step < pres.nilpotency_cap; ++step) {
      // term <- -cinv * nil * term
      term = mul(nil, term);
      bool all_zero = true;
      for (auto& x : term) {
        x = k.mul(k.neg(cinv), x);
        if (!k.is_zero(x)) all_zero = false;
      }
      if (all_zero) break;
      for (int i = 0; i < dim(); ++i) out[i] = k.add(out[i], term[i]);
    }
    for (auto& x : out) x = k.mul(cinv, x);
    return out;
  }

  // filled by compute_algebra; indexed i * dim + j
  std::vector<Sparse> mult_;
};

// ---------------------------------------------------------------------------

template <class F>
std::shared_ptr<const Algebra<F>> compute_algebra_impl(const BoundPresentation& pres,
                                                       const F& field) {
  pres.validate();
  const Quiver& q = pres.quiver;
  const int cap = pres.nilpotency_cap;
  const int nv = q.vertex_count();
  const int na = q.arrow_count();

  auto alg = std::make_shared<Algebra<F>>(field);
  alg->pres = pres;
  const F& k = alg->k;

  // --- enumerate paths of length < cap, ordered by (length, lex) ---
  struct Path {
    int src, tgt, len;
    std::vector<int> arrows;
  };
  std::vector<Path> paths;
  std::vector<std::vector<int>> child;  // child[p][arrow] -> path id or -1
  std::vector<std::vector<int>> arrows_from(nv);
  for (int a = 0; a < na; ++a) arrows_from[q.arrow(a).src].push_back(a);

  for (int v = 0; v < nv; ++v) paths.push_back(Path{v, v, 0, {}});
  size_t level_begin = 0;
  for (int len = 1; len < cap; ++len) {
    size_t level_end = paths.size();
    for (size_t p = level_begin; p < level_end; ++p)
      for (int a = 0; a < na; ++a) {
        if (q.arrow(a).src != paths[p].tgt) continue;
        Path np{paths[p].src, q.arrow(a).tgt, len, paths[p].arrows};
        np.arrows.push_back(a);
        paths.push_back(std::move(np));
      }
    level_begin = level_end;
  }
  const int npaths = static_cast<int>(paths.size());
  child.assign(npaths, std::vector<int>(na, -1));
  {
    std::map<std::vector<int>, int> by_arrows;
    for (int p = 0; p < npaths; ++p) by_arrows[paths[p].arrows] = p;
    for (int p = 0; p < npaths; ++p)
      for (int a = 0; a < na; ++a) {
        if (q.arrow(a).src != paths[p].tgt) continue;
        if (paths[p].len + 1 >= cap) continue;
        auto ext = paths[p].arrows;
        ext.push_back(a);
        child[p][a] = by_arrows.at(ext);
      }
  }
  // walk a path id through an arrow sequence; -1 once the cap is exceeded
  auto extend = [&](int pid, const std::vector<int>& arrows) -> int {
    for (int a : arrows) {
      if (pid < 0) return -1;
      pid = child[pid][a];
    }
    return pid;
  };
  std::vector<int> trivial(nv);
  for (int v = 0; v < nv; ++v) trivial[v] = v;  // first nv paths are trivial

  // --- relation vectors over path space ---
  using Vec = std::vector<typename F::Elem>;
  auto make_vec = [&]() { return Vec(npaths, k.zero()); };

  RowSpace<F> ideal(k, npaths, /*pivot_from_back=*/true);
  std::vector<Vec> queue;
  auto offer = [&](Vec v) {
    Vec res = ideal.residue(std::move(v));
    if (ideal.insert(res)) queue.push_back(std::move(res));
  };

  for (const Relation& rel : pres.relations) {
    Vec v = make_vec();
    bool truncated = false;
    for (const RelationTerm& t : rel) {
      if (static_cast<int>(t.path.size()) >= cap) {
        truncated = true;
        continue;
      }
      int pid = extend(trivial[pres.path_source(t.path)], t.path);
      if (pid < 0) { truncated = true; continue; }
      v[pid] = k.add(v[pid], k.from_fraction(t.num, t.den));
    }
    if (truncated)
      alg->warnings.push_back(
          "relation contains a path meeting the nilpotency cap; the cap may truncate intended structure");
    offer(std::move(v));
  }

  // close the span under left/right multiplication by arrows
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    for (int a = 0; a < na; ++a) {
      Vec left = make_vec(), right = make_vec();
      bool lnz = false, rnz = false;
      for (int p = 0; p < npaths; ++p) {
        if (k.is_zero(v[p])) continue;
        // left multiply: a . p, requires tgt(a) = src(p)
        if (q.arrow(a).tgt == paths[p].src) {
          std::vector<int> seq{a};
          seq.insert(seq.end(), paths[p].arrows.begin(), paths[p].arrows.end());
          int np = extend(trivial[q.arrow(a).src], seq);
          if (np >= 0) { left[np] = k.add(left[np], v[p]); lnz = true; }
        }
        // right multiply: p . a
        if (paths[p].tgt == q.arrow(a).src) {
          int np = child[p][a];
          if (np >= 0) { right[np] = k.add(right[np], v[p]); rnz = true; }
        }
      }
      if (lnz) offer(std::move(left));
      if (rnz) offer(std::move(right));
    }
  }

  // --- basis = non-pivot paths ---
  std::vector<bool> is_pivot(npaths, false);
  for (int pc : ideal.pivot_cols()) is_pivot[pc] = true;
  std::vector<int> path_to_basis(npaths, -1);
  for (int p = 0; p < npaths; ++p) {
    if (is_pivot[p]) continue;
    typename Algebra<F>::BasisElem be;
    be.src = paths[p].src;
    be.tgt = paths[p].tgt;
    be.len = paths[p].len;
    be.arrows = paths[p].arrows;
    if (be.arrows.empty()) {
      be.label = "e" + q.vertices()[be.src];
    } else {
      for (size_t i = 0; i < be.arrows.size(); ++i)
        be.label += (i ? "." : "") + q.arrow(be.arrows[i]).id;
    }
    path_to_basis[p] = static_cast<int>(alg->basis.size());
    alg->basis.push_back(std::move(be));
  }
  const int dim = alg->dim();

  alg->unit.assign(nv, -1);
  for (int v = 0; v < nv; ++v) alg->unit[v] = path_to_basis[trivial[v]];
  alg->arrow_basis.assign(na, -1);
  for (int a = 0; a < na; ++a) {
    int pid = child.empty() ? -1 : extend(trivial[q.arrow(a).src], {a});
    if (pid >= 0) alg->arrow_basis[a] = path_to_basis[pid];
    if (alg->arrow_basis[a] < 0)
      throw error("algebra: an arrow was absorbed by the ideal; presentation is not admissible");
  }

  alg->graded.assign(nv, std::vector<std::vector<int>>(nv));
  for (int b = 0; b < dim; ++b)
    alg->graded[alg->basis[b].src][alg->basis[b].tgt].push_back(b);

  // --- structure constants: reduce concatenations against the ideal ---
  auto reduce_path = [&](int pid) -> typename Algebra<F>::Sparse {
    typename Algebra<F>::Sparse out;
    if (!is_pivot[pid]) {
      out.emplace_back(path_to_basis[pid], k.one());
      return out;
    }
    Vec v = make_vec();
    v[pid] = k.one();
    v = ideal.residue(std::move(v));
    for (int p = 0; p < npaths; ++p)
      if (!k.is_zero(v[p])) out.emplace_back(path_to_basis[p], v[p]);
    return out;
  };

  alg->mult_.assign(static_cast<size_t>(dim) * dim, {});
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const auto& bi = alg->basis[i];
      const auto& bj = alg->basis[j];
      if (bi.tgt != bj.src) continue;
      if (bi.len + bj.len >= cap) continue;
      std::vector<int> seq = bi.arrows;
      seq.insert(seq.end(), bj.arrows.begin(), bj.arrows.end());
      int pid = extend(trivial[bi.src], seq);
      if (pid < 0) continue;
      alg->mult_[i * dim + j] = reduce_path(pid);
    }

  return alg;
}

template <class F>
std::shared_ptr<const Algebra<F>> compute_algebra(const BoundPresentation& pres, const F& field) {
  return compute_algebra_impl(pres, field);
}

inline std::shared_ptr<const Algebra<PrimeField>> compute_algebra_fp(const BoundPresentation& pres) {
  if (pres.field.kind != FieldSpec::Kind::Prime)
    throw error("compute_algebra_fp: presentation declares a non-prime field");
  return compute_algebra(pres, PrimeField(pres.field.p));
}

// Opposite presentation: reversed arrows, relation paths reversed.
// Construction tags do not survive (the opposite of a tagged construction is
// not the tagged construction of the opposites in general).
inline BoundPresentation opposite_presentation(const BoundPresentation& pres) {
  const Quiver& q = pres.quiver;
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const auto& a : q.arrows())
    arrows.emplace_back(a.id, q.vertices()[a.tgt], q.vertices()[a.src]);
  BoundPresentation op;
  op.quiver = Quiver(q.vertices(), std::move(arrows));
  op.field = pres.field;
  op.nilpotency_cap = pres.nilpotency_cap;
  for (const Relation& rel : pres.relations) {
    Relation r;
    for (const RelationTerm& t : rel) {
      RelationTerm rt{t.num, t.den, t.path};
      std::reverse(rt.path.begin(), rt.path.end());
      r.push_back(std::move(rt));
    }
    op.relations.push_back(std::move(r));
  }
  op.validate();
  return op;
}

}  // namespace tautri
