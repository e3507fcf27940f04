// rep.hpp
//
// Modules over a computed algebra as quiver representations: one vector
// space per vertex, one matrix per arrow, relations acting by zero.
//
// Conventions.  Paths compose left to right and modules are right modules,
// so an arrow a : i -> j acts M_i -> M_j and a path a1...ak acts by
// Mat(ak) ... Mat(a1).  Projectives are P(i) = e_i A with P(i)_j = e_i A e_j;
// with these conventions Hom(P(i), X) = X_i holds on the nose.
//
// On top of the plain representation type this header provides Hom spaces,
// projectives/injectives/simples, minimal projective presentations, the
// Auslander-Reiten translate (kernel of the Nakayama functor applied to a
// minimal presentation), the transpose into the opposite algebra,
// Fitting-lemma decomposition with an End-modulo-radical certificate, brick
// tests and Fac-membership.

#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "tautri/algebra.hpp"
#include "tautri/matrix.hpp"

namespace tautri {

struct decomposition_unresolved : error {
  using error::error;
};

template <class F>
struct Rep {
  std::shared_ptr<const Algebra<F>> A;
  std::vector<int> dims;       // per vertex
  std::vector<Mat<F>> arr;     // per arrow: dims[tgt] x dims[src]

  int total_dim() const {
    int t = 0;
    for (int d : dims) t += d;
    return t;
  }
};

// a homomorphism M -> N as one matrix per vertex
template <class F>
using HomElt = std::vector<Mat<F>>;

template <class F>
struct HomBasis {
  std::vector<HomElt<F>> elts;
  int dim() const { return static_cast<int>(elts.size()); }
};

// ---------------------------------------------------------------------------
// basic constructions

template <class F>
Rep<F> rep_zero(std::shared_ptr<const Algebra<F>> A) {
  Rep<F> m;
  m.A = A;
  m.dims.assign(A->vertex_count(), 0);
  const auto& q = A->pres.quiver;
  for (int a = 0; a < q.arrow_count(); ++a)
    m.arr.push_back(Mat<F>(0, 0));
  return m;
}

template <class F>
Rep<F> rep_simple(std::shared_ptr<const Algebra<F>> A, int vertex) {
  Rep<F> m = rep_zero(A);
  m.dims[vertex] = 1;
  const auto& q = A->pres.quiver;
  for (int a = 0; a < q.arrow_count(); ++a)
    m.arr[a] = Mat<F>(m.dims[q.arrow(a).tgt], m.dims[q.arrow(a).src], A->k.zero());
  return m;
}

// matrix of right multiplication by basis element b on the graded pieces:
// e_i A e_src(b) -> e_i A e_tgt(b)
template <class F>
Mat<F> right_mult_on_graded(const Algebra<F>& A, int i, int b) {
  const auto& from = A.graded[i][A.basis[b].src];
  const auto& to = A.graded[i][A.basis[b].tgt];
  Mat<F> m(static_cast<int>(to.size()), static_cast<int>(from.size()), A.k.zero());
  for (size_t c = 0; c < from.size(); ++c)
    for (const auto& [prod, coef] : A.product(from[c], b)) {
      for (size_t r = 0; r < to.size(); ++r)
        if (to[r] == prod) m.at(static_cast<int>(r), static_cast<int>(c)) = coef;
    }
  return m;
}

// P(i) = e_i A as a representation
template <class F>
Rep<F> rep_projective(std::shared_ptr<const Algebra<F>> A, int i) {
  Rep<F> m;
  m.A = A;
  const int nv = A->vertex_count();
  m.dims.assign(nv, 0);
  for (int j = 0; j < nv; ++j) m.dims[j] = static_cast<int>(A->graded[i][j].size());
  const auto& q = A->pres.quiver;
  for (int a = 0; a < q.arrow_count(); ++a)
    m.arr.push_back(right_mult_on_graded(*A, i, A->arrow_basis[a]));
  return m;
}

// I(i) = D(A e_i): basis at j is the dual of e_j A e_i; an arrow a : j -> l
// acts by the transpose of left multiplication e_l A e_i -> e_j A e_i.
template <class F>
Rep<F> rep_injective(std::shared_ptr<const Algebra<F>> A, int i) {
  Rep<F> m;
  m.A = A;
  const int nv = A->vertex_count();
  m.dims.assign(nv, 0);
  for (int j = 0; j < nv; ++j) m.dims[j] = static_cast<int>(A->graded[j][i].size());
  const auto& q = A->pres.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    int j = q.arrow(a).src, l = q.arrow(a).tgt;
    const auto& from = A->graded[l][i];  // e_l A e_i
    const auto& to = A->graded[j][i];    // e_j A e_i
    Mat<F> left(static_cast<int>(to.size()), static_cast<int>(from.size()), A->k.zero());
    int ab = A->arrow_basis[a];
    for (size_t c = 0; c < from.size(); ++c)
      for (const auto& [prod, coef] : A->product(ab, from[c]))
        for (size_t r = 0; r < to.size(); ++r)
          if (to[r] == prod) left.at(static_cast<int>(r), static_cast<int>(c)) = coef;
    m.arr.push_back(left.transposed());
  }
  return m;
}

template <class F>
Rep<F> direct_sum(const Rep<F>& x, const Rep<F>& y) {
  Rep<F> m;
  m.A = x.A;
  const auto& k = x.A->k;
  const int nv = x.A->vertex_count();
  for (int v = 0; v < nv; ++v) m.dims.push_back(x.dims[v] + y.dims[v]);
  const auto& q = x.A->pres.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    Mat<F> blk(m.dims[t], m.dims[s], k.zero());
    for (int r = 0; r < x.dims[t]; ++r)
      for (int c = 0; c < x.dims[s]; ++c) blk.at(r, c) = x.arr[a].at(r, c);
    for (int r = 0; r < y.dims[t]; ++r)
      for (int c = 0; c < y.dims[s]; ++c)
        blk.at(x.dims[t] + r, x.dims[s] + c) = y.arr[a].at(r, c);
    m.arr.push_back(std::move(blk));
  }
  return m;
}

template <class F>
Mat<F> path_action(const Rep<F>& m, const std::vector<int>& arrows, int src_vertex) {
  const auto& k = m.A->k;
  if (arrows.empty()) return Mat<F>::identity(k, m.dims[src_vertex]);
  Mat<F> acc = m.arr[arrows[0]];
  for (size_t i = 1; i < arrows.size(); ++i) acc = mat_mul(k, m.arr[arrows[i]], acc);
  return acc;
}

// action of e_src(b) A e_tgt(b) basis element class on the representation
template <class F>
Mat<F> basis_action(const Rep<F>& m, int b) {
  return path_action(m, m.A->basis[b].arrows, m.A->basis[b].src);
}

template <class F>
bool rep_satisfies_relations(const Rep<F>& m) {
  const auto& A = *m.A;
  const auto& k = A.k;
  const auto& q = A.pres.quiver;
  for (int a = 0; a < q.arrow_count(); ++a) {
    if (m.arr[a].rows() != m.dims[q.arrow(a).tgt] || m.arr[a].cols() != m.dims[q.arrow(a).src])
      return false;
  }
  for (const Relation& rel : A.pres.relations) {
    int src = A.pres.path_source(rel.front().path);
    int tgt = A.pres.path_target(rel.front().path);
    Mat<F> sum(m.dims[tgt], m.dims[src], k.zero());
    for (const RelationTerm& t : rel) {
      auto coef = k.from_fraction(t.num, t.den);
      Mat<F> act = path_action(m, t.path, src);
      sum = mat_add(k, sum, mat_scale(k, coef, act));
    }
    if (!sum.is_zero(k)) return false;
  }
  // cap: all paths of length nilpotency_cap act by zero.  Products of length
  // >= cap vanish automatically over the computed algebra, but an arbitrary
  // matrix tuple must be checked.
  const int cap = A.pres.nilpotency_cap;
  const int nv = A.vertex_count();
  std::vector<std::vector<std::pair<int, Mat<F>>>> cur(nv);  // (current end vertex, matrix)
  for (int v = 0; v < nv; ++v) cur[v] = {{v, Mat<F>::identity(k, m.dims[v])}};
  for (int len = 1; len <= cap; ++len) {
    std::vector<std::vector<std::pair<int, Mat<F>>>> next(nv);
    for (int v = 0; v < nv; ++v)
      for (const auto& [end, mat] : cur[v])
        for (int a = 0; a < q.arrow_count(); ++a) {
          if (q.arrow(a).src != end) continue;
          next[v].emplace_back(q.arrow(a).tgt, mat_mul(k, m.arr[a], mat));
        }
    cur = std::move(next);
    if (len == cap)
      for (int v = 0; v < nv; ++v)
        for (const auto& [end, mat] : cur[v])
          if (!mat.is_zero(k)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hom spaces: solve the intertwining system N_a phi_s = phi_t M_a.

template <class F>
HomBasis<F> hom_space(const Rep<F>& m, const Rep<F>& n) {
  const auto& k = m.A->k;
  const auto& q = m.A->pres.quiver;
  const int nv = m.A->vertex_count();

  std::vector<int> offset(nv + 1, 0);
  for (int v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
  const int unknowns = offset[nv];

  int eqs = 0;
  for (int a = 0; a < q.arrow_count(); ++a)
    eqs += n.dims[q.arrow(a).tgt] * m.dims[q.arrow(a).src];

  Mat<F> sys(eqs, unknowns, k.zero());
  int row = 0;
  auto idx = [&](int v, int r, int c) { return offset[v] + r * m.dims[v] + c; };
  for (int a = 0; a < q.arrow_count(); ++a) {
    int s = q.arrow(a).src, t = q.arrow(a).tgt;
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[s]; ++c) {
        // sum_l N_a[r][l] phi_s[l][c] - sum_l phi_t[r][l] M_a[l][c] = 0
        for (int l = 0; l < n.dims[s]; ++l)
          sys.at(row, idx(s, l, c)) = k.add(sys.at(row, idx(s, l, c)), n.arr[a].at(r, l));
        for (int l = 0; l < m.dims[t]; ++l)
          sys.at(row, idx(t, r, l)) = k.sub(sys.at(row, idx(t, r, l)), m.arr[a].at(l, c));
        ++row;
      }
  }

  Mat<F> ker = kernel_basis(k, std::move(sys));
  HomBasis<F> basis;
  for (int j = 0; j < ker.cols(); ++j) {
    HomElt<F> phi;
    for (int v = 0; v < nv; ++v) {
      Mat<F> block(n.dims[v], m.dims[v], k.zero());
      for (int r = 0; r < n.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) block.at(r, c) = ker.at(idx(v, r, c), j);
      phi.push_back(std::move(block));
    }
    basis.elts.push_back(std::move(phi));
  }
  return basis;
}

template <class F>
int hom_dim(const Rep<F>& m, const Rep<F>& n) {
  return hom_space(m, n).dim();
}

template <class F>
HomElt<F> hom_compose(const F& k, const HomElt<F>& f, const HomElt<F>& g) {
  // f after g
  HomElt<F> h;
  for (size_t v = 0; v < f.size(); ++v) h.push_back(mat_mul(k, f[v], g[v]));
  return h;
}

template <class F>
HomElt<F> hom_combo(const F& k, const HomBasis<F>& basis,
                    const std::vector<typename F::Elem>& coef) {
  HomElt<F> out;
  if (basis.elts.empty()) return out;
  const auto& first = basis.elts.front();
  for (size_t v = 0; v < first.size(); ++v) {
    Mat<F> acc(first[v].rows(), first[v].cols(), k.zero());
    for (size_t h = 0; h < basis.elts.size(); ++h) {
      if (k.is_zero(coef[h])) continue;
      acc = mat_add(k, acc, mat_scale(k, coef[h], basis.elts[h][v]));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

template <class F>
std::vector<typename F::Elem> hom_flatten(const F& k, const HomElt<F>& f) {
  std::vector<typename F::Elem> v;
  for (const auto& blk : f)
    for (int r = 0; r < blk.rows(); ++r)
      for (int c = 0; c < blk.cols(); ++c) v.push_back(blk.at(r, c));
  return v;
}

// ---------------------------------------------------------------------------
// sub / quotient machinery.  A subspace family is one matrix per vertex whose
// columns span the subspace; callers must pass arrow-stable families.

template <class F>
Mat<F> col_space_basis(const F& k, const Mat<F>& m) {
  Mat<F> t = m.transposed();
  auto pivots = rref(k, t);
  Mat<F> out(m.rows(), static_cast<int>(pivots.size()), k.zero());
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int c = 0; c < m.rows(); ++c) out.at(c, static_cast<int>(r)) = t.at(static_cast<int>(r), c);
  return out;
}

// X with A X = B (A injective on its column space; B inside it)
template <class F>
Mat<F> solve_matrix(const F& k, const Mat<F>& a, const Mat<F>& b) {
  Mat<F> aug = hstack(a, b);
  auto pivots = rref(k, aug);
  Mat<F> x(a.cols(), b.cols(), k.zero());
  for (size_t r = 0; r < pivots.size(); ++r) {
    int pc = pivots[r];
    if (pc >= a.cols()) throw error("solve_matrix: inconsistent system");
    for (int c = 0; c < b.cols(); ++c)
      x.at(pc, c) = aug.at(static_cast<int>(r), a.cols() + c);
  }
  return x;
}

template <class F>
Rep<F> sub_rep(const Rep<F>& m, const std::vector<Mat<F>>& inclusion) {
  const auto& k = m.A->k;
  const auto& q = m.A->pres.quiver;
  Rep<F> s;
  s.A = m.A;
  for (const auto& inc : inclusion) s.dims.push_back(inc.cols());
  for (int a = 0; a < q.arrow_count(); ++a) {
    int sv = q.arrow(a).src, tv = q.arrow(a).tgt;
    Mat<F> rhs = mat_mul(k, m.arr[a], inclusion[sv]);
    s.arr.push_back(solve_matrix(k, inclusion[tv], rhs));
  }
  return s;
}

template <class F>
struct Quotient {
  Rep<F> rep;
  std::vector<Mat<F>> projection;  // per vertex: quotient_dim x ambient_dim
};

template <class F>
Quotient<F> quotient_rep(const Rep<F>& m, const std::vector<Mat<F>>& sub) {
  const auto& k = m.A->k;
  const auto& q = m.A->pres.quiver;
  const int nv = m.A->vertex_count();
  Quotient<F> out;
  out.rep.A = m.A;
  std::vector<Mat<F>> reps;  // representatives of the quotient basis
  for (int v = 0; v < nv; ++v) {
    // choose complement columns: run rref over [sub | id]
    Mat<F> aug = hstack(sub[v], Mat<F>::identity(k, m.dims[v]));
    auto pivots = rref(k, aug);
    std::vector<int> comp;
    for (int p : pivots)
      if (p >= sub[v].cols()) comp.push_back(p - sub[v].cols());
    int qd = static_cast<int>(comp.size());
    out.rep.dims.push_back(qd);
    Mat<F> cmat(m.dims[v], qd, k.zero());
    for (int j = 0; j < qd; ++j) cmat.at(comp[j], j) = k.one();
    reps.push_back(cmat);
    // projection: invert [sub | comp] and keep the comp-coordinate rows
    Mat<F> basis = hstack(sub[v], cmat);
    Mat<F> inv = inverse(k, basis);
    Mat<F> proj(qd, m.dims[v], k.zero());
    for (int r = 0; r < qd; ++r)
      for (int c = 0; c < m.dims[v]; ++c) proj.at(r, c) = inv.at(sub[v].cols() + r, c);
    out.projection.push_back(std::move(proj));
  }
  for (int a = 0; a < q.arrow_count(); ++a) {
    int sv = q.arrow(a).src, tv = q.arrow(a).tgt;
    out.rep.arr.push_back(
        mat_mul(k, out.projection[tv], mat_mul(k, m.arr[a], reps[sv])));
  }
  return out;
}

template <class F>
std::vector<Mat<F>> hom_kernel_subspaces(const F& k, const HomElt<F>& phi) {
  std::vector<Mat<F>> out;
  for (const auto& blk : phi) out.push_back(kernel_basis(k, blk));
  return out;
}

template <class F>
std::vector<Mat<F>> hom_image_subspaces(const F& k, const HomElt<F>& phi) {
  std::vector<Mat<F>> out;
  for (const auto& blk : phi) out.push_back(col_space_basis(k, blk));
  return out;
}

// radical M = sum of arrow images; a submodule because later arrows only map
// images into images
template <class F>
std::vector<Mat<F>> radical_subspaces(const Rep<F>& m) {
  const auto& k = m.A->k;
  const auto& q = m.A->pres.quiver;
  const int nv = m.A->vertex_count();
  std::vector<Mat<F>> out;
  for (int v = 0; v < nv; ++v) {
    Mat<F> stacked(m.dims[v], 0);
    for (int a = 0; a < q.arrow_count(); ++a)
      if (q.arrow(a).tgt == v) stacked = hstack(stacked, m.arr[a]);
    out.push_back(col_space_basis(k, stacked));
  }
  return out;
}

// ---------------------------------------------------------------------------
// minimal projective presentations

template <class F>
struct ProjPresentation {
  std::vector<int> p0, p1;  // vertices with multiplicity
  // lam[r][s] in e_{p0[r]} A e_{p1[s]}: the s-th generator of the syzygy
  // written in the basis paths of the r-th cover summand
  std::vector<std::vector<typename Algebra<F>::AlgVec>> lam;
};

namespace detail {

// generators of the top with lifted representatives
template <class F>
std::vector<std::pair<int, std::vector<typename F::Elem>>> top_generators(
    const Rep<F>& m, const std::vector<Mat<F>>& rad) {
  const auto& k = m.A->k;
  const int nv = m.A->vertex_count();
  std::vector<std::pair<int, std::vector<typename F::Elem>>> gens;
  for (int v = 0; v < nv; ++v) {
    Mat<F> aug = hstack(rad[v], Mat<F>::identity(k, m.dims[v]));
    auto pivots = rref(k, aug);
    for (int p : pivots) {
      if (p < rad[v].cols()) continue;
      std::vector<typename F::Elem> vec(m.dims[v], k.zero());
      vec[p - rad[v].cols()] = k.one();
      gens.emplace_back(v, std::move(vec));
    }
  }
  return gens;
}

}  // namespace detail

// projective cover of M: vertices of the cover and the surjection
// matrices P0_w -> M_w; P0_w is ordered by (generator index, basis path)
template <class F>
struct Cover {
  std::vector<int> vertices;                      // generator vertices
  std::vector<std::vector<typename F::Elem>> gen_vectors;  // lifted generators
  Rep<F> p0;
  std::vector<Mat<F>> onto;                       // per vertex w: M_w x P0_w
};

template <class F>
Cover<F> projective_cover(const Rep<F>& m) {
  const auto& A = *m.A;
  const auto& k = A.k;
  const int nv = A.vertex_count();
  Cover<F> cov;
  auto rad = radical_subspaces(m);
  auto gens = detail::top_generators(m, rad);
  for (auto& [v, vec] : gens) {
    cov.vertices.push_back(v);
    cov.gen_vectors.push_back(vec);
  }
  cov.p0 = rep_zero(m.A);
  for (int v : cov.vertices) cov.p0 = direct_sum(cov.p0, rep_projective(m.A, v));

  // the surjection: basis path b of generator r maps to (action of b) gen_r
  for (int w = 0; w < nv; ++w) {
    Mat<F> onto(m.dims[w], cov.p0.dims[w], k.zero());
    int colbase = 0;
    for (size_t r = 0; r < cov.vertices.size(); ++r) {
      int gv = cov.vertices[r];
      const auto& piece = A.graded[gv][w];
      for (size_t pb = 0; pb < piece.size(); ++pb) {
        Mat<F> act = basis_action(m, piece[pb]);  // M_gv -> M_w
        for (int row = 0; row < m.dims[w]; ++row) {
          auto val = k.zero();
          for (int c = 0; c < m.dims[gv]; ++c)
            val = k.add(val, k.mul(act.at(row, c), cov.gen_vectors[r][c]));
          onto.at(row, colbase + static_cast<int>(pb)) = val;
        }
      }
      colbase += static_cast<int>(piece.size());
    }
    cov.onto.push_back(std::move(onto));
  }
  return cov;
}

template <class F>
ProjPresentation<F> minimal_projective_presentation(const Rep<F>& m) {
  if (m.total_dim() == 0) throw error("minimal_projective_presentation: zero module");
  const auto& A = *m.A;
  const auto& k = A.k;
  const int nv = A.vertex_count();

  Cover<F> cov = projective_cover(m);
  ProjPresentation<F> pres;
  pres.p0 = cov.vertices;

  // kernel of the cover as a subrepresentation of P0
  std::vector<Mat<F>> kerbases;
  for (int w = 0; w < nv; ++w) kerbases.push_back(kernel_basis(k, cov.onto[w]));
  Rep<F> K = sub_rep(cov.p0, kerbases);

  if (K.total_dim() == 0) return pres;  // projective module: P1 = 0

  auto radK = radical_subspaces(K);
  auto gens = detail::top_generators(K, radK);
  for (const auto& [bvert, kvec] : gens) {
    pres.p1.push_back(bvert);
    // lift the K-coordinates back to P0 coordinates at vertex bvert
    std::vector<typename F::Elem> p0vec(cov.p0.dims[bvert], k.zero());
    for (int row = 0; row < cov.p0.dims[bvert]; ++row) {
      auto val = k.zero();
      for (int c = 0; c < K.dims[bvert]; ++c)
        val = k.add(val, k.mul(kerbases[bvert].at(row, c), kvec[c]));
      p0vec[row] = val;
    }
    // split into blocks: block r covers the basis of e_{p0[r]} A e_{bvert}
    std::vector<typename Algebra<F>::AlgVec> column;
    int offset = 0;
    for (size_t r = 0; r < pres.p0.size(); ++r) {
      const auto& piece = A.graded[pres.p0[r]][bvert];
      auto lam = A.zero_vec();
      for (size_t pb = 0; pb < piece.size(); ++pb)
        lam[piece[pb]] = p0vec[offset + static_cast<int>(pb)];
      offset += static_cast<int>(piece.size());
      column.push_back(std::move(lam));
    }
    // store as lam[r][s]
    if (pres.lam.empty()) pres.lam.assign(pres.p0.size(), {});
    for (size_t r = 0; r < pres.p0.size(); ++r) pres.lam[r].push_back(column[r]);
  }
  return pres;
}

template <class F>
std::vector<int> g_vector(const Rep<F>& m) {
  auto pres = minimal_projective_presentation(m);
  std::vector<int> g(m.A->vertex_count(), 0);
  for (int v : pres.p0) ++g[v];
  for (int v : pres.p1) --g[v];
  return g;
}

// ---------------------------------------------------------------------------
// Auslander-Reiten translate: tau M = ker(nu P1 -> nu P0) for a minimal
// presentation P1 -> P0 -> M -> 0.  nu P(i) = I(i); on a map given by
// lambda in e_a A e_b the Nakayama functor acts as the dual of right
// multiplication by lambda.

template <class F>
Mat<F> right_mult_matrix(const Algebra<F>& A, int w, int a, int b,
                         const typename Algebra<F>::AlgVec& lam) {
  // e_w A e_a -> e_w A e_b, x -> x lam
  const auto& from = A.graded[w][a];
  const auto& to = A.graded[w][b];
  const auto& k = A.k;
  Mat<F> m(static_cast<int>(to.size()), static_cast<int>(from.size()), k.zero());
  for (size_t c = 0; c < from.size(); ++c) {
    for (int bb = 0; bb < A.dim(); ++bb) {
      if (k.is_zero(lam[bb])) continue;
      for (const auto& [prod, coef] : A.product(from[c], bb))
        for (size_t r = 0; r < to.size(); ++r)
          if (to[r] == prod)
            m.at(static_cast<int>(r), static_cast<int>(c)) =
                k.add(m.at(static_cast<int>(r), static_cast<int>(c)), k.mul(lam[bb], coef));
    }
  }
  return m;
}

template <class F>
Rep<F> ar_translate(const Rep<F>& m) {
  if (m.total_dim() == 0) throw error("ar_translate: zero module");
  const auto& A = *m.A;
  const auto& k = A.k;
  const int nv = A.vertex_count();

  auto pres = minimal_projective_presentation(m);
  if (pres.p1.empty()) return rep_zero(m.A);  // projective

  Rep<F> nu0 = rep_zero(m.A), nu1 = rep_zero(m.A);
  for (int v : pres.p0) nu0 = direct_sum(nu0, rep_injective(m.A, v));
  for (int v : pres.p1) nu1 = direct_sum(nu1, rep_injective(m.A, v));

  // block offsets inside the injective sums, per vertex; summand I(v)
  // contributes dim e_w A e_v at vertex w
  auto offsets = [&](const std::vector<int>& verts) {
    std::vector<std::vector<int>> off(nv, std::vector<int>(verts.size() + 1, 0));
    for (int w = 0; w < nv; ++w)
      for (size_t s = 0; s < verts.size(); ++s)
        off[w][s + 1] = off[w][s] + static_cast<int>(A.graded[w][verts[s]].size());
    return off;
  };
  auto off1 = offsets(pres.p1);
  auto off0 = offsets(pres.p0);

  HomElt<F> nug;
  for (int w = 0; w < nv; ++w) {
    Mat<F> blk(nu0.dims[w], nu1.dims[w], k.zero());
    for (size_t r = 0; r < pres.p0.size(); ++r)
      for (size_t s = 0; s < pres.p1.size(); ++s) {
        // I(p1[s]) -> I(p0[r]) at vertex w: transpose of right mult by lam
        Mat<F> rm = right_mult_matrix(A, w, pres.p0[r], pres.p1[s], pres.lam[r][s]);
        Mat<F> t = rm.transposed();  // (e_w A e_a)^dim x (e_w A e_b)^dim
        for (int rr = 0; rr < t.rows(); ++rr)
          for (int cc = 0; cc < t.cols(); ++cc)
            blk.at(off0[w][r] + rr, off1[w][s] + cc) = t.at(rr, cc);
      }
    nug.push_back(std::move(blk));
  }

  auto ker = hom_kernel_subspaces(k, nug);
  return sub_rep(nu1, ker);
}

// ---------------------------------------------------------------------------
// transpose into the opposite algebra: Tr M = coker( P0* -> P1* ) computed
// over op(A).  Expects M without projective summands (minimal presentations
// of such M have entries in the radical on both sides).

template <class F>
typename Algebra<F>::AlgVec translate_element_to_op(const Algebra<F>& A, const Algebra<F>& Aop,
                                                    const typename Algebra<F>::AlgVec& v) {
  // reverse every basis path of A and reduce in Aop
  auto out = Aop.zero_vec();
  const auto& k = A.k;
  for (int b = 0; b < A.dim(); ++b) {
    if (k.is_zero(v[b])) continue;
    const auto& be = A.basis[b];
    typename Algebra<F>::AlgVec cls;
    if (be.arrows.empty()) {
      cls = Aop.unit_vec(be.src);
    } else {
      std::vector<int> rev(be.arrows.rbegin(), be.arrows.rend());
      cls = Aop.unit_vec(be.tgt);
      for (int a : rev) {
        auto av = Aop.zero_vec();
        av[Aop.arrow_basis[a]] = k.one();
        cls = Aop.mul(cls, av);
      }
    }
    for (int i = 0; i < Aop.dim(); ++i) out[i] = k.add(out[i], k.mul(v[b], cls[i]));
  }
  return out;
}

template <class F>
Rep<F> transpose_to_op(const Rep<F>& m, std::shared_ptr<const Algebra<F>> Aop) {
  const auto& A = *m.A;
  const auto& k = A.k;
  auto pres = minimal_projective_presentation(m);

  // build map op-P(p0[r]) (r-th) -> op-P(p1[s]) summand blocks given by left
  // multiplication with the reversed lambda entries
  Rep<F> src = rep_zero(Aop), tgt = rep_zero(Aop);
  for (int v : pres.p0) src = direct_sum(src, rep_projective(Aop, v));
  for (int v : pres.p1) tgt = direct_sum(tgt, rep_projective(Aop, v));

  const int nv = A.vertex_count();
  std::vector<std::vector<int>> offs(nv, std::vector<int>(pres.p0.size() + 1, 0)),
      offt(nv, std::vector<int>(pres.p1.size() + 1, 0));
  for (int w = 0; w < nv; ++w) {
    for (size_t r = 0; r < pres.p0.size(); ++r)
      offs[w][r + 1] = offs[w][r] + static_cast<int>(Aop->graded[pres.p0[r]][w].size());
    for (size_t s = 0; s < pres.p1.size(); ++s)
      offt[w][s + 1] = offt[w][s] + static_cast<int>(Aop->graded[pres.p1[s]][w].size());
  }

  HomElt<F> dual;
  for (int w = 0; w < nv; ++w) {
    Mat<F> blk(tgt.dims[w], src.dims[w], k.zero());
    for (size_t r = 0; r < pres.p0.size(); ++r)
      for (size_t s = 0; s < pres.p1.size(); ++s) {
        auto mu = translate_element_to_op(A, *Aop, pres.lam[r][s]);
        // left multiplication by mu in e_{p1[s]} Aop e_{p0[r]}:
        // e_{p0[r]} Aop e_w -> e_{p1[s]} Aop e_w
        const auto& from = Aop->graded[pres.p0[r]][w];
        const auto& to = Aop->graded[pres.p1[s]][w];
        for (size_t c = 0; c < from.size(); ++c)
          for (int bb = 0; bb < Aop->dim(); ++bb) {
            if (k.is_zero(mu[bb])) continue;
            for (const auto& [prod, coef] : Aop->product(bb, from[c]))
              for (size_t rr = 0; rr < to.size(); ++rr)
                if (to[rr] == prod)
                  blk.at(offt[w][s] + static_cast<int>(rr), offs[w][r] + static_cast<int>(c)) =
                      k.add(blk.at(offt[w][s] + static_cast<int>(rr), offs[w][r] + static_cast<int>(c)),
                            k.mul(mu[bb], coef));
          }
      }
    dual.push_back(std::move(blk));
  }

  auto img = hom_image_subspaces(k, dual);
  return quotient_rep(tgt, img).rep;
}

// ---------------------------------------------------------------------------
// Fac membership: X lies in Fac(M) iff the evaluation Hom(M,X) (x) M -> X is
// surjective (multiplicity-free formulation; the bound k is audit metadata).

template <class F>
bool in_fac(const Rep<F>& m, const Rep<F>& x, int /*k_audit*/ = 0) {
  const auto& k = m.A->k;
  auto homs = hom_space(m, x);
  const int nv = m.A->vertex_count();
  for (int v = 0; v < nv; ++v) {
    if (x.dims[v] == 0) continue;
    Mat<F> stacked(x.dims[v], 0);
    for (const auto& phi : homs.elts) stacked = hstack(stacked, phi[v]);
    if (rank(k, stacked) < x.dims[v]) return false;
  }
  return true;
}

template <class F>
bool is_brick(const Rep<F>& m) {
  if (m.total_dim() == 0) throw error("is_brick: zero module");
  return hom_dim(m, m) == 1;
}

// ---------------------------------------------------------------------------
// isomorphism testing: compare dimension vectors, then search for an
// invertible element of Hom(M, N) with seeded random combinations.  Over the
// default prime field a decomposable iso escapes detection with probability
// bounded by (total dim / p) per sample.

template <class F>
bool rep_iso(const Rep<F>& m, const Rep<F>& n, std::uint64_t seed = 0) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const auto& k = m.A->k;
  auto homs = hom_space(m, n);
  if (homs.dim() == 0) return false;
  if (hom_dim(m, m) != hom_dim(n, n)) return false;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<typename F::Elem> coef;
    for (int h = 0; h < homs.dim(); ++h)
      coef.push_back(k.from_int(static_cast<long long>(rng() % 65537)));
    auto phi = hom_combo(k, homs, coef);
    bool inv = true;
    for (const auto& blk : phi)
      if (!is_invertible(k, blk)) { inv = false; break; }
    if (inv) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Fitting decomposition with End-modulo-radical certificate.
//
// The radical of End(M) is computed as the kernel of the trace form of the
// regular representation, which identifies the Jacobson radical whenever the
// characteristic is zero or exceeds dim End(M).  Splitting elements are
// sampled with a deterministic seed; exhausting the retry budget without a
// certificate raises decomposition_unresolved rather than guessing.

template <class F>
struct EndData {
  HomBasis<F> basis;
  Mat<F> coords;                  // flattened basis vectors as columns
  std::vector<int> coord_pivots;  // rref bookkeeping for coordinate solving

  // structure constants: (i, j) -> coordinates of basis[i] o basis[j]
};

template <class F>
std::vector<typename F::Elem> hom_coordinates(const F& k, const HomBasis<F>& basis,
                                              const HomElt<F>& f) {
  // solve basis-matrix * x = flatten(f)
  std::vector<typename F::Elem> target = hom_flatten(k, f);
  const int amb = static_cast<int>(target.size());
  Mat<F> sys(amb, basis.dim(), k.zero());
  for (int h = 0; h < basis.dim(); ++h) {
    auto col = hom_flatten(k, basis.elts[h]);
    for (int r = 0; r < amb; ++r) sys.at(r, h) = col[r];
  }
  auto sol = solve(k, sys, target);
  if (!sol) throw error("hom_coordinates: element outside the span");
  return *sol;
}

// basis of rad End(M) in End coordinates; requires char 0 or p > dim End
template <class F>
std::vector<std::vector<typename F::Elem>> end_radical_coords(const F& k,
                                                              const HomBasis<F>& endb) {
  const int h = endb.dim();
  if constexpr (std::is_same_v<F, PrimeField>) {
    if (k.modulus() <= static_cast<std::uint64_t>(h))
      throw error("end_radical_coords: field too small for the trace-form radical (p <= dim End)");
  }
  // structure constants
  std::vector<std::vector<std::vector<typename F::Elem>>> sc(h);
  for (int i = 0; i < h; ++i) {
    sc[i].resize(h);
    for (int j = 0; j < h; ++j)
      sc[i][j] = hom_coordinates(k, endb, hom_compose(k, endb.elts[i], endb.elts[j]));
  }
  // left multiplication trace: tr(L_{e_i e_j}) = sum_l (e_i e_j e_l)_l
  Mat<F> gram(h, h, k.zero());
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      auto t = k.zero();
      for (int l = 0; l < h; ++l) {
        // coordinates of (e_i e_j) e_l
        const auto& ij = sc[i][j];
        auto diag = k.zero();
        for (int m2 = 0; m2 < h; ++m2) {
          if (k.is_zero(ij[m2])) continue;
          diag = k.add(diag, k.mul(ij[m2], sc[m2][l][l]));
        }
        t = k.add(t, diag);
      }
      gram.at(i, j) = t;
    }
  Mat<F> ker = kernel_basis(k, std::move(gram));
  std::vector<std::vector<typename F::Elem>> out;
  for (int c = 0; c < ker.cols(); ++c) out.push_back(ker.col(c));
  return out;
}

template <class F>
int end_semisimple_dim(const F& k, const HomBasis<F>& endb) {
  return endb.dim() - static_cast<int>(end_radical_coords(k, endb).size());
}

template <class F>
void decompose_impl(const Rep<F>& m, std::uint64_t seed, int budget,
                    std::vector<Rep<F>>& out) {
  if (m.total_dim() == 0) return;
  const auto& k = m.A->k;
  auto endb = hom_space(m, m);
  if (endb.dim() == 1) {
    out.push_back(m);
    return;
  }

  std::mt19937_64 rng(seed);
  const int total = m.total_dim();
  for (int attempt = 0; attempt < budget; ++attempt) {
    HomElt<F> phi;
    if (attempt < endb.dim()) {
      phi = endb.elts[attempt];
    } else {
      std::vector<typename F::Elem> coef;
      for (int h = 0; h < endb.dim(); ++h)
        coef.push_back(k.from_int(static_cast<long long>(rng() % 65537)));
      phi = hom_combo(k, endb, coef);
    }
    // stabilize by squaring: once rank(phi^t) = rank(phi^{2t}), Fitting holds
    HomElt<F> pow = phi;
    auto hom_rank = [&](const HomElt<F>& f) {
      int r = 0;
      for (const auto& blk : f) r += rank(k, blk);
      return r;
    };
    int steps = 0;
    while ((1 << steps) < total + 1) ++steps;
    int prev = hom_rank(pow);
    for (int s2 = 0; s2 < steps + 1; ++s2) {
      pow = hom_compose(k, pow, pow);
      int cur = hom_rank(pow);
      if (cur == prev) break;
      prev = cur;
    }
    int r = prev;
    if (r == 0 || r == total) continue;
    auto kerb = hom_kernel_subspaces(k, pow);
    auto imb = hom_image_subspaces(k, pow);
    Rep<F> mk = sub_rep(m, kerb);
    Rep<F> mi = sub_rep(m, imb);
    if (mk.total_dim() + mi.total_dim() != total) continue;  // not yet stable
    decompose_impl(mk, seed * 2 + 1, budget, out);
    decompose_impl(mi, seed * 2 + 2, budget, out);
    return;
  }

  // no split found: certify indecomposability or give up honestly
  if (end_semisimple_dim(k, endb) == 1) {
    out.push_back(m);
    return;
  }
  throw decomposition_unresolved(
      "decomposition unresolved: Fitting sampling found no splitting and End/rad is not one-dimensional");
}

template <class F>
struct Summand {
  Rep<F> rep;
  int multiplicity = 1;
};

template <class F>
std::vector<Summand<F>> decompose(const Rep<F>& m, std::uint64_t seed = 0, int budget = 48) {
  std::vector<Rep<F>> parts;
  decompose_impl(m, seed ^ 0xabcdef12345ull, budget, parts);
  std::vector<Summand<F>> grouped;
  for (auto& p : parts) {
    bool found = false;
    for (auto& g : grouped)
      if (rep_iso(g.rep, p, seed)) {
        ++g.multiplicity;
        found = true;
        break;
      }
    if (!found) grouped.push_back(Summand<F>{std::move(p), 1});
  }
  return grouped;
}

}  // namespace tautri
