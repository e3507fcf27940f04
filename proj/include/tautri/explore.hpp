// explore.hpp
//
// Budgeted breadth-first exploration of the exchange graph from the pair
// (Lambda, 0).  Every support tau-tilting pair of a tau-tilting finite
// algebra is reachable from the top along descending mutations (a finite
// poset with unique maximum covers every element from above), so the search
// expands only the descending positions of each frontier pair; the upward
// neighbors are recovered as incoming edges, and n-regularity of the finished
// graph certifies that nothing was missed.
//
// The BFS is layer-synchronous: a layer is fully expanded (in parallel when
// workers > 1), the next layer is sorted by canonical key, and budgets are
// checked at layer boundaries.  This keeps reports bit-identical across
// worker counts; only a wall-clock abort (inherently racy) can differ.

#pragma once

#include <atomic>
#include <chrono>
#include <thread>

#include "tautri/pair.hpp"

namespace tautri {

struct ExploreOptions {
  long long max_pairs = 50000;
  double max_seconds = 600.0;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct ExploreStatus {
  enum class Kind { Finite, BudgetExceeded };
  Kind kind = Kind::Finite;
  std::string str() const { return kind == Kind::Finite ? "Finite" : "BudgetExceeded"; }
};

template <class F>
struct ExplorationResult {
  ExploreStatus status;
  long long count = 0;         // distinct pairs (Finite: exact; else pairs found)
  long long frontier_size = 0; // unexpanded pairs at the stop (BudgetExceeded)
  int max_depth = 0;
  double elapsed_seconds = 0;
  std::uint64_t seed = 0;
  std::string field;
  ExploreOptions options;

  std::vector<std::string> node_keys;            // sorted canonical keys
  std::vector<TauTiltingPair<F>> node_pairs;     // aligned with node_keys
  std::vector<std::pair<int, int>> edges;        // descending mutation steps

  bool finite() const { return status.kind == ExploreStatus::Kind::Finite; }

  std::vector<int> in_degrees() const {
    std::vector<int> d(node_keys.size(), 0);
    for (auto& [s, t] : edges) ++d[t];
    return d;
  }
  std::vector<int> out_degrees() const {
    std::vector<int> d(node_keys.size(), 0);
    for (auto& [s, t] : edges) ++d[s];
    return d;
  }
};

inline std::uint64_t mix_seed(std::uint64_t seed, const std::string& key, int pos) {
  std::uint64_t h = seed ^ 0xcbf29ce484222325ull;
  for (char c : key) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h ^ (static_cast<std::uint64_t>(pos) * 0x9e3779b97f4a7c15ull);
}

template <class F>
ExplorationResult<F> explore(TauTiltEngine<F>& eng, const ExploreOptions& opt) {
  if (opt.max_pairs <= 0) throw error("explore: budget must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  ExplorationResult<F> res;
  res.seed = opt.seed;
  res.options = opt;
  res.field = eng.field().spec().str();

  std::map<std::string, TauTiltingPair<F>> visited;
  std::vector<std::pair<std::string, std::string>> key_edges;

  TauTiltingPair<F> top = eng.initial_pair();
  std::string top_key = eng.canonical_key(top);
  visited.emplace(top_key, top);
  std::vector<std::pair<std::string, TauTiltingPair<F>>> layer{{top_key, top}};

  int depth = 0;
  bool out_of_budget = false;
  std::atomic<bool> timed_out{false};

  while (!layer.empty()) {
    if (static_cast<long long>(visited.size()) > opt.max_pairs || elapsed() > opt.max_seconds) {
      out_of_budget = true;
      break;
    }

    // expand the layer
    std::mutex merge_mu;
    std::map<std::string, TauTiltingPair<F>> fresh;
    std::atomic<size_t> next{0};
    auto work = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= layer.size() || timed_out.load()) return;
        if (elapsed() > opt.max_seconds) { timed_out.store(true); return; }
        const auto& [pkey, p] = layer[i];
        std::vector<std::pair<std::string, TauTiltingPair<F>>> local;
        for (int pos : eng.down_positions(p)) {
          auto q = eng.down_mutate(p, pos, 0, mix_seed(opt.seed, pkey, pos));
          local.emplace_back(eng.canonical_key(q), std::move(q));
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        for (auto& [qkey, q] : local) {
          key_edges.emplace_back(pkey, qkey);
          if (!visited.count(qkey)) {
            auto [it, ins] = fresh.try_emplace(qkey, q);
            (void)it; (void)ins;
          }
        }
      }
    };
    if (opt.workers <= 1) {
      work();
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < opt.workers; ++w) threads.emplace_back(work);
      for (auto& th : threads) th.join();
    }
    if (timed_out.load()) {
      out_of_budget = true;
      // unexpanded remainder of this layer still counts as frontier
      for (auto& [key, q] : fresh)
        visited.emplace(key, q);
      break;
    }

    layer.clear();
    for (auto& [key, q] : fresh) {
      visited.emplace(key, q);
      layer.emplace_back(key, q);
    }
    if (!layer.empty()) ++depth;
  }

  res.elapsed_seconds = elapsed();
  res.count = static_cast<long long>(visited.size());
  res.frontier_size = out_of_budget ? static_cast<long long>(layer.size()) : 0;
  res.max_depth = depth;
  res.status.kind =
      out_of_budget ? ExploreStatus::Kind::BudgetExceeded : ExploreStatus::Kind::Finite;

  // canonical, schedule-independent serialization order
  std::map<std::string, int> index;
  for (auto& [key, p] : visited) {
    index.emplace(key, static_cast<int>(res.node_keys.size()));
    res.node_keys.push_back(key);
    res.node_pairs.push_back(p);
  }
  std::sort(key_edges.begin(), key_edges.end());
  key_edges.erase(std::unique(key_edges.begin(), key_edges.end()), key_edges.end());
  for (auto& [s, t] : key_edges)
    if (index.count(s) && index.count(t)) res.edges.emplace_back(index[s], index[t]);

  if (res.finite()) {
    // structural certificates: the mutation theory promises an n-regular
    // Hasse diagram with unique source (Lambda, 0) and sink (0, all)
    const int n = eng.algebra()->vertex_count();
    auto ind = res.in_degrees();
    auto outd = res.out_degrees();
    int sources = 0, sinks = 0;
    for (size_t i = 0; i < res.node_keys.size(); ++i) {
      if (ind[i] + outd[i] != n)
        throw error("explore: finished graph is not n-regular (internal error)");
      if (ind[i] == 0) ++sources;
      if (outd[i] == 0) ++sinks;
    }
    if (sources != 1 || sinks != 1)
      throw error("explore: finished graph must have a unique source and sink");
    if (res.node_keys[0].empty()) throw error("explore: empty canonical key");
    std::string final_key = eng.canonical_key(eng.final_pair());
    if (!index.count(top_key) || ind[index[top_key]] != 0)
      throw error("explore: initial pair is not the unique source");
    if (!index.count(final_key) || outd[index[final_key]] != 0)
      throw error("explore: final pair is not the unique sink");
  }
  return res;
}

}  // namespace tautri
