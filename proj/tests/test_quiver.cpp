// test_quiver.cpp

#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "tautri/quiver.hpp"
#include "tautri/field.hpp"

using namespace tautri;

namespace {

Quiver random_quiver(std::mt19937& rng, int max_v = 6, int max_a = 8) {
  std::uniform_int_distribution<int> nv(1, max_v);
  int n = nv(rng);
  std::uniform_int_distribution<int> na(0, max_a);
  int m = na(rng);
  std::vector<std::string> verts;
  for (int i = 1; i <= n; ++i) verts.push_back("v" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i)
    arrows.emplace_back("a" + std::to_string(i), verts[pick(rng)], verts[pick(rng)]);
  return Quiver(std::move(verts), std::move(arrows));
}

DiagramType type_of_only_nontrivial(const Quiver& q) {
  auto comps = component_types(q);
  REQUIRE(comps.size() == 1);
  return comps[0].type;
}

Quiver path_graph(int n) { return build_linear_quiver(n); }

}  // namespace

TEST_CASE("build_linear_quiver basics") {
  CHECK_THROWS_AS(build_linear_quiver(0), error);

  Quiver q1 = build_linear_quiver(1);
  CHECK(q1.vertex_count() == 1);
  CHECK(q1.arrow_count() == 0);

  Quiver q2 = build_linear_quiver(2);
  CHECK(q2.vertex_count() == 2);
  CHECK(q2.arrow_count() == 1);
  CHECK(q2.arrows()[0].src == q2.vertex_index("1"));
  CHECK(q2.arrows()[0].tgt == q2.vertex_index("2"));

  Quiver q3 = build_linear_quiver(3);
  CHECK(q3.vertex_count() == 3);
  CHECK(q3.arrow_count() == 2);
  CHECK(is_linear_An_shape(q3));
}

TEST_CASE("quiver invariants rejected") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), error);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "2"}}), error);
  CHECK_THROWS_AS(Quiver({"1", "2"}, {{"a", "1", "2"}, {"a", "2", "1"}}), error);
}

TEST_CASE("separated quiver of a single arrow") {
  Quiver q({"1", "2"}, {{"a", "1", "2"}});
  auto sep = separated_quiver(q);
  CHECK(sep.quiver.vertex_count() == 4);
  CHECK(sep.quiver.arrow_count() == 1);
  const Arrow& a = sep.quiver.arrows()[0];
  CHECK(sep.quiver.vertices()[a.src] == "1");
  CHECK(sep.quiver.vertices()[a.tgt] == "2'");

  auto comps = component_types(sep.quiver);
  CHECK(comps.size() == 3);
  std::multiset<std::string> types;
  for (const auto& c : comps) types.insert(c.type.str());
  CHECK(types == std::multiset<std::string>{"A(1)", "A(1)", "A(2)"});
}

TEST_CASE("separated quiver of a loop is A(2)") {
  Quiver q({"1"}, {{"x", "1", "1"}});
  auto sep = separated_quiver(q);
  CHECK(sep.quiver.vertex_count() == 2);
  CHECK(sep.quiver.arrow_count() == 1);
  auto comps = component_types(sep.quiver);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].type == DiagramType{DiagramType::Kind::A, 2});
}

TEST_CASE("separated quiver properties on random quivers") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = random_quiver(rng);
    auto sep = separated_quiver(q);
    CHECK(sep.quiver.vertex_count() == 2 * q.vertex_count());
    CHECK(sep.quiver.arrow_count() == q.arrow_count());
    for (const auto& a : sep.quiver.arrows()) {
      CHECK_FALSE(sep.primed[a.src]);
      CHECK(sep.primed[a.tgt]);
    }
  }
}

TEST_CASE("diagram classification table") {
  CHECK(type_of_only_nontrivial(path_graph(3)) == DiagramType{DiagramType::Kind::A, 3});
  CHECK(type_of_only_nontrivial(path_graph(1)) == DiagramType{DiagramType::Kind::A, 1});

  // 6-cycle, as in the separated quiver of the 8-vertex cube
  CHECK(type_of_only_nontrivial(build_cycle_quiver(6)) ==
        DiagramType{DiagramType::Kind::ATilde, 5});

  // star with three length-1 branches
  Quiver d4({"0", "1", "2", "3"}, {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "0", "3"}});
  CHECK(type_of_only_nontrivial(d4) == DiagramType{DiagramType::Kind::D, 4});

  // D5: fork with branches 1,1,2
  Quiver d5({"0", "1", "2", "3", "4"},
            {{"a", "0", "1"}, {"b", "0", "2"}, {"c", "0", "3"}, {"d", "3", "4"}});
  CHECK(type_of_only_nontrivial(d5) == DiagramType{DiagramType::Kind::D, 5});

  // E6/E7/E8: fork with branches (1,2,2), (1,2,3), (1,2,4)
  auto star = [](std::vector<int> lens) {
    std::vector<std::string> verts{"c"};
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    int id = 0;
    for (size_t b = 0; b < lens.size(); ++b) {
      std::string prev = "c";
      for (int i = 0; i < lens[b]; ++i) {
        std::string v = "b" + std::to_string(b) + "_" + std::to_string(i);
        verts.push_back(v);
        arrows.emplace_back("a" + std::to_string(id++), prev, v);
        prev = v;
      }
    }
    return Quiver(std::move(verts), std::move(arrows));
  };
  CHECK(type_of_only_nontrivial(star({1, 2, 2})) == DiagramType{DiagramType::Kind::E, 6});
  CHECK(type_of_only_nontrivial(star({1, 2, 3})) == DiagramType{DiagramType::Kind::E, 7});
  CHECK(type_of_only_nontrivial(star({1, 2, 4})) == DiagramType{DiagramType::Kind::E, 8});
  CHECK(type_of_only_nontrivial(star({2, 2, 2})) == DiagramType{DiagramType::Kind::ETilde, 6});
  CHECK(type_of_only_nontrivial(star({1, 3, 3})) == DiagramType{DiagramType::Kind::ETilde, 7});
  CHECK(type_of_only_nontrivial(star({1, 2, 5})) == DiagramType{DiagramType::Kind::ETilde, 8});
  CHECK(type_of_only_nontrivial(star({1, 2, 6})) == DiagramType{DiagramType::Kind::Other, 0});
  CHECK(type_of_only_nontrivial(star({1, 1, 1, 1})) == DiagramType{DiagramType::Kind::DTilde, 4});

  // D~(5): two forks joined by an edge, two leaves each
  Quiver dt5({"f", "g", "1", "2", "3", "4"},
             {{"a", "f", "g"}, {"b", "1", "f"}, {"c", "2", "f"}, {"d", "g", "3"}, {"e", "g", "4"}});
  CHECK(type_of_only_nontrivial(dt5) == DiagramType{DiagramType::Kind::DTilde, 5});

  // two parallel arrows (same direction) form a doubled edge: 2-cycle
  Quiver par({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}});
  CHECK(type_of_only_nontrivial(par) == DiagramType{DiagramType::Kind::ATilde, 1});

  // loop classifies as Other
  Quiver loop({"1"}, {{"x", "1", "1"}});
  CHECK(type_of_only_nontrivial(loop) == DiagramType{DiagramType::Kind::Other, 0});
}

TEST_CASE("vertex/edge counts per classified kind") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Quiver q = random_quiver(rng);
    for (const auto& comp : component_types(q)) {
      int vc = static_cast<int>(comp.vertices.size());
      int ec = 0;
      std::set<int> inset(comp.vertices.begin(), comp.vertices.end());
      for (const auto& a : q.arrows())
        if (inset.count(a.src)) ++ec;
      switch (comp.type.kind) {
        case DiagramType::Kind::A:
        case DiagramType::Kind::D:
        case DiagramType::Kind::E:
          CHECK(vc == comp.type.n);
          CHECK(ec == comp.type.n - 1);
          break;
        case DiagramType::Kind::ATilde:
          CHECK(vc == comp.type.n + 1);
          CHECK(ec == comp.type.n + 1);
          break;
        case DiagramType::Kind::DTilde:
        case DiagramType::Kind::ETilde:
          // Euclidean trees: one vertex more than edges
          CHECK(vc == comp.type.n + 1);
          CHECK(ec == comp.type.n);
          break;
        case DiagramType::Kind::Other:
          break;
      }
    }
  }
}

TEST_CASE("component_types invariant under vertex relabeling") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Quiver q = random_quiver(rng);
    int n = q.vertex_count();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> verts(n);
    for (int i = 0; i < n; ++i) verts[perm[i]] = q.vertices()[i];
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const auto& a : q.arrows())
      arrows.emplace_back(a.id, q.vertices()[a.src], q.vertices()[a.tgt]);
    std::shuffle(arrows.begin(), arrows.end(), rng);
    Quiver qp(verts, arrows);

    auto t1 = component_types(q);
    auto t2 = component_types(qp);
    std::multiset<std::string> s1, s2;
    for (const auto& c : t1) s1.insert(c.type.str());
    for (const auto& c : t2) s2.insert(c.type.str());
    CHECK(s1 == s2);
  }
}

TEST_CASE("shape predicates") {
  Quiver a2({"1", "2"}, {{"a", "1", "2"}});
  CHECK_FALSE(has_loop(a2));
  CHECK(is_linear_An_shape(a2));
  CHECK_FALSE(is_cyclic_shape(a2));

  // quiver with a loop at 1 and arrows out to 2 and 3
  Quiver ce({"1", "2", "3"}, {{"l", "1", "1"}, {"a", "1", "2"}, {"b", "1", "3"}});
  CHECK(has_loop(ce));
  CHECK_FALSE(is_linear_An_shape(ce));

  // two arrows in opposite directions: cyclic, not parallel
  Quiver cyc({"1", "2"}, {{"x", "1", "2"}, {"y", "2", "1"}});
  CHECK(is_cyclic_shape(cyc));
  CHECK_FALSE(has_multiple_arrow(cyc));

  Quiver par({"1", "2"}, {{"x", "1", "2"}, {"y", "1", "2"}});
  CHECK(has_multiple_arrow(par));
  CHECK_FALSE(is_cyclic_shape(par));
}

TEST_CASE("dot export is stable and mentions primes") {
  Quiver q({"2", "1"}, {{"b", "2", "1"}, {"a", "1", "2"}});
  std::string d = q.dot("g");
  CHECK(d.find("\"1\" -> \"2\" [label=\"a\"]") != std::string::npos);
  CHECK(d.find("\"1\";") < d.find("\"2\";"));

  auto sep = separated_quiver(q);
  std::string ds = sep.quiver.dot();
  CHECK(ds.find("\"1'\"") != std::string::npos);
}
