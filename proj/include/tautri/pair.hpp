// pair.hpp
//
// Support tau-tilting pairs and their mutation.
//
// A pair holds pairwise non-isomorphic indecomposable tau-rigid summands plus
// support projective vertices, with |summands| + |support| = #vertices.
// Summands are interned by g-vector: the g-vector of an indecomposable
// tau-rigid module determines it, which makes interning, deduplication and
// canonical pair keys cheap exact-integer work.
//
// Mutation at a position k exchanges exactly one slot.  The downward exchange
// is computed in mod Lambda: a minimal left approximation of X into the
// additive closure of the remaining summands, then the cokernel; a vanishing
// cokernel moves the vertex into the support slot.  Upward exchanges are
// computed as downward exchanges over the opposite algebra: the assignment
// sending a module summand with presentation P1 -> P0 to the complex
// P0* -> P1* (the transpose) and swapping the roles of projective summands
// and support vertices is an order-reversing bijection onto the opposite
// side, so one downward engine serves both directions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tautri/rep.hpp"

namespace tautri {

inline std::string int_vec_key(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

template <class F>
struct SummandInfo {
  Rep<F> rep;
  Rep<F> tau;                // zero representation when projective
  std::vector<int> gvec;
  std::string gkey;
  bool projective = false;
  int proj_vertex = -1;
};

template <class F>
using SummandRef = std::shared_ptr<const SummandInfo<F>>;

template <class F>
struct TauTiltingPair {
  std::vector<SummandRef<F>> summands;  // sorted by gkey
  std::vector<int> support;             // sorted vertex indices

  int size() const { return static_cast<int>(summands.size() + support.size()); }
};

struct GMatrix {
  int n = 0;
  std::vector<std::vector<int>> cols;  // sorted lexicographically

  long long det() const {
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) m[r][c] = cols[c][r];
    return int_det_bareiss(std::move(m));
  }

  std::string key() const {
    std::string s;
    for (size_t c = 0; c < cols.size(); ++c) {
      if (c) s += ';';
      s += int_vec_key(cols[c]);
    }
    return s;
  }
};

// ---------------------------------------------------------------------------

template <class F>
class TauTiltEngine {
 public:
  TauTiltEngine(const BoundPresentation& pres, const F& field, std::uint64_t seed = 0)
      : k_(field), seed_(seed) {
    alg_[0] = compute_algebra(pres, field);
    alg_[1] = compute_algebra(opposite_presentation(pres), field);
  }

  const F& field() const { return k_; }
  std::shared_ptr<const Algebra<F>> algebra(int side = 0) const { return alg_[side]; }
  std::uint64_t seed() const { return seed_; }

  // ---- pair constructors -------------------------------------------------

  TauTiltingPair<F> initial_pair(int side = 0) {
    TauTiltingPair<F> p;
    for (int v = 0; v < alg_[side]->vertex_count(); ++v)
      p.summands.push_back(intern(side, rep_projective(alg_[side], v)));
    sort_pair(p);
    validate_pair(p, side);
    return p;
  }

  TauTiltingPair<F> final_pair(int side = 0) {
    TauTiltingPair<F> p;
    for (int v = 0; v < alg_[side]->vertex_count(); ++v) p.support.push_back(v);
    validate_pair(p, side);
    return p;
  }

  // ---- keys and order ----------------------------------------------------

  GMatrix g_matrix(const TauTiltingPair<F>& p, int side = 0) const {
    GMatrix g;
    g.n = alg_[side]->vertex_count();
    for (const auto& s : p.summands) g.cols.push_back(s->gvec);
    for (int j : p.support) {
      std::vector<int> col(g.n, 0);
      col[j] = -1;
      g.cols.push_back(col);
    }
    std::sort(g.cols.begin(), g.cols.end());
    return g;
  }

  std::string canonical_key(const TauTiltingPair<F>& p, int side = 0) const {
    return g_matrix(p, side).key();
  }

  // p <= q: every summand of p in Fac(module part of q), supports compatible
  bool leq(const TauTiltingPair<F>& p, const TauTiltingPair<F>& q, int side = 0) {
    std::set<int> ps(p.support.begin(), p.support.end());
    for (int j : q.support)
      if (!ps.count(j)) return false;
    for (const auto& x : p.summands)
      if (!in_fac_of_summands(q.summands, x, side)) return false;
    return true;
  }

  // ---- validation ---------------------------------------------------------

  void validate_pair(const TauTiltingPair<F>& p, int side = 0) {
    const auto A = alg_[side];
    if (p.size() != A->vertex_count())
      throw error("pair validation: |summands| + |support| != number of vertices");
    std::set<std::string> keys;
    for (const auto& s : p.summands)
      if (!keys.insert(s->gkey).second)
        throw error("pair validation: repeated summand");
    for (int j : p.support)
      for (const auto& s : p.summands)
        if (s->rep.dims[j] != 0)
          throw error("pair validation: summand not orthogonal to support projective");
    for (const auto& a : p.summands)
      for (const auto& b : p.summands)
        if (hom_to_tau_dim(side, a, b) != 0)
          throw error("pair validation: module part is not tau-rigid");
    if (g_matrix(p, side).det() != 1 && g_matrix(p, side).det() != -1)
      throw error("pair validation: g-matrix is not unimodular");
  }

  // ---- mutation -----------------------------------------------------------

  // position: 0..|summands|-1 module slots (sorted order), then support slots
  TauTiltingPair<F> mutate(const TauTiltingPair<F>& p, int position, int side = 0) {
    const int ns = static_cast<int>(p.summands.size());
    if (position < 0 || position >= p.size()) throw error("mutate: position out of range");
    if (position < ns) {
      const auto& x = p.summands[position];
      if (!x->projective && x_in_fac_of_rest(p, position, side))
        return up_mutate_module(p, position, side);
      return down_mutate(p, position, side, mutation_seed(p, position, side));
    }
    return up_mutate_support(p, p.support[position - ns], side);
  }

  // module positions whose exchange descends (used by the explorer)
  std::vector<int> down_positions(const TauTiltingPair<F>& p, int side = 0) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(p.summands.size()); ++i) {
      if (p.summands[i]->projective) {
        out.push_back(i);  // projective summands never lie in Fac of the rest
        continue;
      }
      if (!x_in_fac_of_rest(p, i, side)) out.push_back(i);
    }
    return out;
  }

  TauTiltingPair<F> down_mutate(const TauTiltingPair<F>& p, int idx, int side,
                                std::uint64_t dseed) {
    const auto A = alg_[side];
    const auto& x = p.summands[idx];
    std::vector<SummandRef<F>> rest;
    for (int i = 0; i < static_cast<int>(p.summands.size()); ++i)
      if (i != idx) rest.push_back(p.summands[i]);

    // minimal left add(rest)-approximation of x
    Rep<F> target = rep_zero(A);
    std::vector<HomElt<F>> lift_blocks;  // maps x.rep -> U_t, in target order
    for (const auto& u : rest) {
      auto H = hom_basis(side, x, u);
      if (H->dim() == 0) continue;
      // span of approximations factoring through the radical of add(rest)
      RowSpace<F> span(k_, static_cast<int>(hom_flatten(k_, H->elts[0]).size()));
      for (const auto& s : rest) {
        auto Hs = hom_basis(side, x, s);
        if (Hs->dim() == 0) continue;
        std::vector<HomElt<F>> connectors;
        if (s->gkey == u->gkey) {
          for (const auto& r : *rad_end(side, u)) connectors.push_back(r);
        } else {
          auto Hsu = hom_basis(side, s, u);
          for (const auto& g : Hsu->elts) connectors.push_back(g);
        }
        for (const auto& g : connectors)
          for (const auto& h : Hs->elts)
            span.insert(hom_flatten(k_, hom_compose(k_, g, h)));
      }
      for (const auto& phi : H->elts)
        if (span.insert(hom_flatten(k_, phi))) {
          target = direct_sum(target, u->rep);
          lift_blocks.push_back(phi);
        }
    }

    // assemble f : X -> target and take its cokernel
    const int nv = A->vertex_count();
    HomElt<F> f;
    for (int v = 0; v < nv; ++v) {
      Mat<F> blk(target.dims[v], x->rep.dims[v], k_.zero());
      int row = 0;
      for (const auto& lb : lift_blocks) {
        for (int r = 0; r < lb[v].rows(); ++r)
          for (int c = 0; c < lb[v].cols(); ++c) blk.at(row + r, c) = lb[v].at(r, c);
        row += lb[v].rows();
      }
      f.push_back(std::move(blk));
    }
    Rep<F> coker = quotient_rep(target, hom_image_subspaces(k_, f)).rep;

    TauTiltingPair<F> out;
    out.summands = rest;
    out.support = p.support;
    if (coker.total_dim() == 0) {
      // the vertex the module part abandons joins the support
      std::set<int> sup(p.support.begin(), p.support.end());
      std::vector<int> zeros;
      for (int v = 0; v < nv; ++v) {
        bool zero = true;
        for (const auto& u : rest)
          if (u->rep.dims[v] != 0) { zero = false; break; }
        if (zero && !sup.count(v)) zeros.push_back(v);
      }
      if (zeros.size() != 1)
        throw error("mutation: expected a unique support candidate, found " +
                    std::to_string(zeros.size()));
      out.support.push_back(zeros[0]);
      std::sort(out.support.begin(), out.support.end());
    } else {
      auto parts = decompose(coker, dseed);
      for (size_t i = 1; i < parts.size(); ++i)
        if (!rep_iso(parts[0].rep, parts[i].rep, dseed))
          throw error("mutation: cokernel decomposed into non-isomorphic summands");
      auto z = intern(side, parts[0].rep);
      if (z->gkey == x->gkey) throw error("mutation: exchange returned the removed summand");
      for (const auto& u : rest)
        if (u->gkey == z->gkey) throw error("mutation: exchange collided with a remaining summand");
      out.summands.push_back(z);
    }
    sort_pair(out);
    validate_pair(out, side);
    return out;
  }

  // ---- duality with the opposite side -------------------------------------

  TauTiltingPair<F> translate_pair(const TauTiltingPair<F>& p, int side) {
    const int other = 1 - side;
    TauTiltingPair<F> q;
    for (const auto& s : p.summands) {
      if (s->projective)
        q.support.push_back(s->proj_vertex);
      else
        q.summands.push_back(translate_summand(side, s));
    }
    for (int j : p.support) q.summands.push_back(intern(other, rep_projective(alg_[other], j)));
    sort_pair(q);
    std::sort(q.support.begin(), q.support.end());
    validate_pair(q, other);
    return q;
  }

 private:
  // ---- caches --------------------------------------------------------------

  SummandRef<F> intern(int side, const Rep<F>& rep) {
    auto pres = minimal_projective_presentation(rep);
    auto info = std::make_shared<SummandInfo<F>>();
    info->rep = rep;
    info->gvec.assign(alg_[side]->vertex_count(), 0);
    for (int v : pres.p0) ++info->gvec[v];
    for (int v : pres.p1) --info->gvec[v];
    info->gkey = int_vec_key(info->gvec);
    if (pres.p1.empty()) {
      if (pres.p0.size() != 1)
        throw error("intern: decomposable projective offered as a summand");
      info->projective = true;
      info->proj_vertex = pres.p0[0];
      info->tau = rep_zero(alg_[side]);
    } else {
      info->tau = ar_translate(rep);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = summands_[side].try_emplace(info->gkey, info);
    if (!inserted && it->second->rep.dims != rep.dims)
      throw error("intern: distinct summands share a g-vector");
    return it->second;
  }

  std::shared_ptr<const HomBasis<F>> hom_basis(int side, const SummandRef<F>& a,
                                               const SummandRef<F>& b) {
    const std::string key = a->gkey + "|" + b->gkey;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = homs_[side].find(key);
      if (it != homs_[side].end()) return it->second;
    }
    auto val = std::make_shared<HomBasis<F>>(hom_space(a->rep, b->rep));
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, _] = homs_[side].try_emplace(key, val);
    if (homs_[side].size() > hom_cache_cap_) homs_[side].clear();  // coarse pressure valve
    return it->second;
  }

  int hom_to_tau_dim(int side, const SummandRef<F>& a, const SummandRef<F>& b) {
    if (b->projective) return 0;
    const std::string key = a->gkey + "|" + b->gkey;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = homtau_[side].find(key);
      if (it != homtau_[side].end()) return it->second;
    }
    int d = hom_dim(a->rep, b->tau);
    std::lock_guard<std::mutex> lock(mu_);
    return homtau_[side].try_emplace(key, d).first->second;
  }

  std::shared_ptr<const std::vector<HomElt<F>>> rad_end(int side, const SummandRef<F>& u) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = radend_[side].find(u->gkey);
      if (it != radend_[side].end()) return it->second;
    }
    auto endb = hom_space(u->rep, u->rep);
    auto rad = std::make_shared<std::vector<HomElt<F>>>();
    if (endb.dim() > 1) {
      auto coords = end_radical_coords(k_, endb);
      // an indecomposable summand must have End/rad = K; anything else means
      // the scalar field is too small to carry this exploration
      if (endb.dim() - static_cast<int>(coords.size()) != 1)
        throw error("summand endomorphism ring has a non-trivial division algebra quotient; "
                    "rerun over a different prime");
      for (const auto& c : coords) rad->push_back(hom_combo(k_, endb, c));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return radend_[side].try_emplace(u->gkey, rad).first->second;
  }

  SummandRef<F> translate_summand(int side, const SummandRef<F>& s) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = translate_[side].find(s->gkey);
      if (it != translate_[side].end()) return it->second;
    }
    auto tr = transpose_to_op(s->rep, alg_[1 - side]);
    auto info = intern(1 - side, tr);
    std::lock_guard<std::mutex> lock(mu_);
    translate_[side].try_emplace(s->gkey, info);
    translate_[1 - side].try_emplace(info->gkey, s);
    return info;
  }

  // ---- mutation internals --------------------------------------------------

  bool in_fac_of_summands(const std::vector<SummandRef<F>>& gens, const SummandRef<F>& x,
                          int side) {
    const int nv = alg_[side]->vertex_count();
    std::vector<Mat<F>> stacked(nv);
    for (int v = 0; v < nv; ++v) stacked[v] = Mat<F>(x->rep.dims[v], 0);
    for (const auto& g : gens) {
      auto H = hom_basis(side, g, x);
      for (const auto& phi : H->elts)
        for (int v = 0; v < nv; ++v) stacked[v] = hstack(stacked[v], phi[v]);
    }
    for (int v = 0; v < nv; ++v) {
      if (x->rep.dims[v] == 0) continue;
      if (rank(k_, stacked[v]) < x->rep.dims[v]) return false;
    }
    return true;
  }

  bool x_in_fac_of_rest(const TauTiltingPair<F>& p, int idx, int side) {
    std::vector<SummandRef<F>> rest;
    for (int i = 0; i < static_cast<int>(p.summands.size()); ++i)
      if (i != idx) rest.push_back(p.summands[i]);
    return in_fac_of_summands(rest, p.summands[idx], side);
  }

  TauTiltingPair<F> up_mutate_module(const TauTiltingPair<F>& p, int idx, int side) {
    const int other = 1 - side;
    auto q = translate_pair(p, side);
    auto target = translate_summand(side, p.summands[idx]);
    return finish_up_mutation(p, q, target->gkey, side, other);
  }

  TauTiltingPair<F> up_mutate_support(const TauTiltingPair<F>& p, int vertex, int side) {
    const int other = 1 - side;
    auto q = translate_pair(p, side);
    auto proj = intern(other, rep_projective(alg_[other], vertex));
    return finish_up_mutation(p, q, proj->gkey, side, other);
  }

  TauTiltingPair<F> finish_up_mutation(const TauTiltingPair<F>& p, const TauTiltingPair<F>& q,
                                       const std::string& opkey, int side, int other) {
    int opidx = -1;
    for (int i = 0; i < static_cast<int>(q.summands.size()); ++i)
      if (q.summands[i]->gkey == opkey) { opidx = i; break; }
    if (opidx < 0) throw error("mutation: translated summand missing on the opposite side");
    if (!q.summands[opidx]->projective && x_in_fac_of_rest(q, opidx, other))
      throw error("mutation: expected a downward exchange on the opposite side");
    auto rq = down_mutate(q, opidx, other, mutation_seed(q, opidx, other));
    auto back = translate_pair(rq, other);
    validate_pair(back, side);
    if (canonical_key(back, side) == canonical_key(p, side))
      throw error("mutation: upward exchange returned the original pair");
    return back;
  }

  std::uint64_t mutation_seed(const TauTiltingPair<F>& p, int position, int side) const {
    std::uint64_t h = seed_ ^ 0x51c7b1a2d4e8f963ull;
    for (char c : canonical_key(p, side)) h = h * 1099511628211ull + static_cast<unsigned char>(c);
    h ^= static_cast<std::uint64_t>(position) * 0x9e3779b97f4a7c15ull + side;
    return h;
  }

  static void sort_pair(TauTiltingPair<F>& p) {
    std::sort(p.summands.begin(), p.summands.end(),
              [](const SummandRef<F>& a, const SummandRef<F>& b) { return a->gkey < b->gkey; });
    std::sort(p.support.begin(), p.support.end());
  }

  F k_;
  std::uint64_t seed_;
  std::shared_ptr<const Algebra<F>> alg_[2];
  std::mutex mu_;
  std::map<std::string, SummandRef<F>> summands_[2];
  std::map<std::string, std::shared_ptr<const HomBasis<F>>> homs_[2];
  std::map<std::string, int> homtau_[2];
  std::map<std::string, std::shared_ptr<const std::vector<HomElt<F>>>> radend_[2];
  std::map<std::string, SummandRef<F>> translate_[2];
  size_t hom_cache_cap_ = 60000;
};

}  // namespace tautri
