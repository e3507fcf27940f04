// oracle.hpp
//
// Desk-scale brute force count of support tau-tilting pairs.  Works over F_2
// on algebras of dimension at most 6: enumerate every representation with
// dimension vector bounded by the regular module's, dedupe isomorphism
// classes by exhaustive search for invertible intertwiners, keep the
// indecomposables (a class is decomposable iff it matches a direct sum of
// two smaller classes), then count the maximal tau-rigid sets directly.
// Deliberately exhaustive and slow: this is the independent check the
// exchange-graph explorer is measured against, not a production path.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tautri/rep.hpp"

namespace tautri {

namespace oracle_detail {

inline bool next_dim_vector(std::vector<int>& d, const std::vector<int>& bound) {
  for (size_t i = 0; i < d.size(); ++i) {
    if (d[i] < bound[i]) {
      ++d[i];
      for (size_t j = 0; j < i; ++j) d[j] = 0;
      return true;
    }
  }
  return false;
}

// exhaustive isomorphism test over F_2: try every combination of the hom
// basis and look for a vertexwise invertible one
inline bool iso_f2(const Rep<PrimeField>& m, const Rep<PrimeField>& n) {
  if (m.dims != n.dims) return false;
  if (m.total_dim() == 0) return true;
  const auto& k = m.A->k;
  auto homs = hom_space(m, n);
  const int h = homs.dim();
  if (h == 0) return false;
  if (h > 20) throw error("oracle: hom space too large for exhaustive isomorphism search");
  for (std::uint64_t mask = 1; mask < (1ull << h); ++mask) {
    std::vector<typename PrimeField::Elem> coef(h, 0);
    for (int b = 0; b < h; ++b)
      if (mask & (1ull << b)) coef[b] = 1;
    auto phi = hom_combo(k, homs, coef);
    bool inv = true;
    for (const auto& blk : phi)
      if (!is_invertible(k, blk)) { inv = false; break; }
    if (inv) return true;
  }
  return false;
}

}  // namespace oracle_detail

// Counts support tau-tilting pairs of A by exhaustive enumeration.
// Preconditions (hard limits): dim A <= 6 and field = F_2; additionally the
// bounded matrix space per dimension vector must stay below 2^24.
inline int brute_force_stau_count(std::shared_ptr<const Algebra<PrimeField>> A) {
  const auto& k = A->k;
  if (k.modulus() != 2) throw error("brute_force_stau_count: oracle requires the prime field F_2");
  if (A->dim() > 6) throw error("brute_force_stau_count: oracle requires dim A <= 6");

  const int nv = A->vertex_count();
  const auto& q = A->pres.quiver;

  // bound: dimension vector of the regular module
  std::vector<int> bound(nv, 0);
  for (int i = 0; i < nv; ++i)
    for (int j = 0; j < nv; ++j) bound[j] += static_cast<int>(A->graded[i][j].size());

  // enumerate all representations up to isomorphism
  std::vector<Rep<PrimeField>> classes;
  std::vector<int> d(nv, 0);
  do {
    long long bits = 0;
    for (int a = 0; a < q.arrow_count(); ++a)
      bits += static_cast<long long>(d[q.arrow(a).tgt]) * d[q.arrow(a).src];
    if (bits > 24) throw error("brute_force_stau_count: representation space too large to enumerate");
    int total = 0;
    for (int v = 0; v < nv; ++v) total += d[v];
    if (total == 0) continue;

    std::vector<Rep<PrimeField>> here;
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
      Rep<PrimeField> m;
      m.A = A;
      m.dims = d;
      int bit = 0;
      for (int a = 0; a < q.arrow_count(); ++a) {
        Mat<PrimeField> blk(d[q.arrow(a).tgt], d[q.arrow(a).src], 0);
        for (int r = 0; r < blk.rows(); ++r)
          for (int c = 0; c < blk.cols(); ++c)
            blk.at(r, c) = (mask >> bit++) & 1;
        m.arr.push_back(std::move(blk));
      }
      if (!rep_satisfies_relations(m)) continue;
      bool known = false;
      for (const auto& cls : here)
        if (oracle_detail::iso_f2(cls, m)) { known = true; break; }
      if (!known) here.push_back(std::move(m));
    }
    for (auto& cls : here) classes.push_back(std::move(cls));
  } while (oracle_detail::next_dim_vector(d, bound));

  // indecomposables: nothing isomorphic to a sum of two smaller classes
  std::vector<int> order(classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<bool> indec(classes.size(), true);
  for (size_t i = 0; i < classes.size(); ++i) {
    const int tot = classes[i].total_dim();
    for (size_t a = 0; a < classes.size() && indec[i]; ++a) {
      if (classes[a].total_dim() >= tot) continue;
      for (size_t b = a; b < classes.size(); ++b) {
        if (classes[a].total_dim() + classes[b].total_dim() != tot) continue;
        if (oracle_detail::iso_f2(classes[i], direct_sum(classes[a], classes[b]))) {
          indec[i] = false;
          break;
        }
      }
    }
  }

  // tau-rigid indecomposables and their pairwise compatibility
  std::vector<Rep<PrimeField>> rigid;
  std::vector<Rep<PrimeField>> rigid_tau;
  for (size_t i = 0; i < classes.size(); ++i) {
    if (!indec[i]) continue;
    Rep<PrimeField> t = ar_translate(classes[i]);
    if (hom_dim(classes[i], t) != 0) continue;
    rigid.push_back(classes[i]);
    rigid_tau.push_back(std::move(t));
  }
  const int nr = static_cast<int>(rigid.size());
  std::vector<std::vector<bool>> compat(nr, std::vector<bool>(nr, false));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j)
      compat[i][j] = (hom_dim(rigid[i], rigid_tau[j]) == 0);

  // count subsets S, pairwise compatible both ways, with
  // |S| + #zero vertices of the sum = number of vertices
  int count = 0;
  std::vector<int> chosen;
  auto zero_locus_size = [&](const std::vector<int>& sel) {
    int z = 0;
    for (int v = 0; v < nv; ++v) {
      int dv = 0;
      for (int i : sel) dv += rigid[i].dims[v];
      if (dv == 0) ++z;
    }
    return z;
  };
  // backtracking over the compatibility graph
  std::function<void(int)> walk = [&](int start) {
    if (static_cast<int>(chosen.size()) + zero_locus_size(chosen) == nv) ++count;
    for (int i = start; i < nr; ++i) {
      bool ok = compat[i][i];
      for (int c : chosen)
        if (!compat[c][i] || !compat[i][c]) { ok = false; break; }
      if (!ok) continue;
      chosen.push_back(i);
      walk(i + 1);
      chosen.pop_back();
    }
  };
  walk(0);
  return count;
}

}  // namespace tautri
