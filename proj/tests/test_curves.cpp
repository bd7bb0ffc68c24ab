#include <catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "raag/curves.hpp"
#include "raag/json_io.hpp"

#include "helpers.hpp"

using namespace raag;

namespace {

Graph without_edge(const Graph& g, const std::string& a, const std::string& b) {
  std::vector<std::pair<std::string, std::string>> es;
  for (const auto& [x, y] : g.edges())
    if (!((x == a && y == b) || (x == b && y == a))) es.emplace_back(x, y);
  return Graph(g.vertices(), es);
}

Graph with_edge(const Graph& g, const std::string& a, const std::string& b) {
  auto es = g.edges();
  es.emplace_back(a, b);
  return Graph(g.vertices(), es);
}

// One downstairs intersection spread over both lift pairs: x -> {x1, x2},
// i(xk, yk) upstairs matches i(x, y) downstairs, cross pairs disjoint.
LiftSpec diagonal_spec(const CurveSystem& cs) {
  LiftSpec spec;
  for (const auto& c : cs.curves()) {
    spec.lifts[c.name] = {c.name + "1", c.name + "2"};
    spec.pairing[c.name + "1"] = c.name + "2";
    spec.pairing[c.name + "2"] = c.name + "1";
  }
  const auto& cv = cs.curves();
  for (std::size_t i = 0; i < cv.size(); ++i)
    for (std::size_t j = i + 1; j < cv.size(); ++j)
      if (int n = cs.intersection(cv[i].name, cv[j].name); n > 0)
        for (int k : {1, 2})
          spec.intersections.emplace_back(cv[i].name + std::to_string(k),
                                          cv[j].name + std::to_string(k), n);
  return spec;
}

}  // namespace

TEST_CASE("curve system validation") {
  SurfaceType n13 = surface('N', 1, 3);  // two-sided capacity 1
  CHECK_THROWS_AS(CurveSystem(n13, {{"x", true}, {"y", true}}, {}), input_error);
  CHECK_NOTHROW(CurveSystem(n13, {{"x", true}, {"y", true}}, {{"x", "y", 2}}));

  CHECK_THROWS_AS(CurveSystem(surface('S', 1, 1), {{"x", false}}, {}), input_error);
  CHECK_THROWS_AS(CurveSystem(n13, {{"x", true}, {"x", true}}, {}), input_error);
  CHECK_THROWS_AS(CurveSystem(n13, {{"x", true}}, {{"x", "x", 1}}), input_error);
  CHECK_THROWS_AS(CurveSystem(n13, {{"x", true}, {"y", true}}, {{"x", "y", -1}}), input_error);
}

TEST_CASE("curve graph selections") {
  CurveSystem mixed(surface('N', 2, 2),
                    {{"s", true}, {"t", true}, {"m", false}},
                    {{"s", "t", 2}, {"s", "m", 1}});
  Graph all = curve_graph(mixed, CurveSelection::all);
  CHECK(all.num_vertices() == 3);
  CHECK(all.adjacent("m", "t"));
  CHECK_FALSE(all.adjacent("s", "t"));
  Graph two = curve_graph(mixed, CurveSelection::two_sided_only);
  CHECK(two.num_vertices() == 2);
  CHECK(two.num_edges() == 0);
}

TEST_CASE("one-sided family with complete curve graph") {
  if (!test_helpers::data_present("k5_n5_0.json")) SKIP("bundled data absent");
  CurveSystem cs = load_curve_system(test_helpers::data_file("k5_n5_0.json"));
  CHECK_FALSE(cs.ambient().orientable);
  CHECK(graphs_isomorphic(curve_graph(cs, CurveSelection::all),
                          named_graph(NamedKind::complete, 5)));
  CHECK(curve_graph(cs, CurveSelection::two_sided_only).num_vertices() == 0);
}

TEST_CASE("bundled configurations realize the big graph") {
  for (const char* file : {"gamma1_n1_6.json", "gamma1_n3_3.json", "gamma1_n5_0.json"}) {
    if (!test_helpers::data_present(file)) SKIP("bundled data absent");
    CurveSystem cs = load_curve_system(test_helpers::data_file(file));
    CHECK(xi_two(cs.ambient()) == 4);
    Graph g = curve_graph(cs, CurveSelection::two_sided_only);
    Graph gamma1 = load_graph(test_helpers::data_file("gamma1.json"));
    CHECK(graphs_isomorphic(g, gamma1));
  }
}

TEST_CASE("p4 configuration") {
  for (int p = 4; p <= 10; ++p) {
    CurveSystem cs = p4_configuration(p);
    CHECK(graphs_isomorphic(curve_graph(cs, CurveSelection::two_sided_only),
                            named_graph(NamedKind::path, 4)));
  }
  CHECK_THROWS_AS(p4_configuration(3), input_error);
  CHECK_THROWS_AS(p4_configuration(0), input_error);
}

TEST_CASE("canonical family size matches the complexity formula") {
  for (int g = 1; g <= 5; ++g)
    for (int m = 0; m <= 6; ++m) {
      SurfaceType n = surface('N', g, m);
      CurveSystem fam = canonical_disjoint_family(n);
      CHECK(static_cast<int>(fam.curves().size()) == xi_two(n));
      CHECK(fam.max_disjoint_two_sided() == xi_two(n));
    }
  CHECK_THROWS_AS(canonical_disjoint_family(surface('S', 2, 0)), input_error);
  CHECK_THROWS_AS(canonical_disjoint_family(surface('N', 1, 0, 1)), input_error);
}

TEST_CASE("lift validation accepts the diagonal pattern") {
  CurveSystem cs = p4_configuration(4);
  CHECK(validate_lift(cs, diagonal_spec(cs)).empty());
}

TEST_CASE("lift validation accepts a split pattern") {
  // downstairs i(x,y) = 1; each lift of x meets exactly one lift of y
  CurveSystem cs(surface('N', 1, 4), {{"x", true}, {"y", true}}, {{"x", "y", 1}});
  LiftSpec spec;
  spec.lifts["x"] = {"x1", "x2"};
  spec.lifts["y"] = {"y1", "y2"};
  spec.pairing = {{"x1", "x2"}, {"x2", "x1"}, {"y1", "y2"}, {"y2", "y1"}};
  spec.intersections = {{"x1", "y1", 1}, {"x2", "y2", 1}};
  CHECK(validate_lift(cs, spec).empty());
}

TEST_CASE("lift validation rejects concentrated intersections") {
  // same total, but one lift of x misses every lift of y
  CurveSystem cs(surface('N', 1, 4), {{"x", true}, {"y", true}}, {{"x", "y", 1}});
  LiftSpec spec;
  spec.lifts["x"] = {"x1", "x2"};
  spec.lifts["y"] = {"y1", "y2"};
  spec.pairing = {{"x1", "x2"}, {"x2", "x1"}, {"y1", "y2"}, {"y2", "y1"}};
  spec.intersections = {{"x1", "y1", 2}};
  auto errors = validate_lift(cs, spec);
  REQUIRE_FALSE(errors.empty());
  bool misses = std::any_of(errors.begin(), errors.end(), [](const std::string& e) {
    return e.find("meets no lift") != std::string::npos;
  });
  CHECK(misses);
}

TEST_CASE("lift validation rejects wrong totals and bad pairings") {
  CurveSystem cs = p4_configuration(4);
  LiftSpec spec = diagonal_spec(cs);

  SECTION("sum mismatch") {
    spec.intersections.pop_back();
    auto errors = validate_lift(cs, spec);
    bool sum = std::any_of(errors.begin(), errors.end(), [](const std::string& e) {
      return e.find("sum to") != std::string::npos;
    });
    CHECK(sum);
  }
  SECTION("pairing must swap the lifts of each curve") {
    spec.pairing["alpha11"] = "alpha21";
    auto errors = validate_lift(cs, spec);
    bool swap = std::any_of(errors.begin(), errors.end(), [](const std::string& e) {
      return e.find("pairing must swap") != std::string::npos;
    });
    CHECK(swap);
  }
  SECTION("fiber components must be disjoint") {
    spec.intersections.emplace_back("alpha11", "alpha12", 1);
    auto errors = validate_lift(cs, spec);
    bool disj = std::any_of(errors.begin(), errors.end(), [](const std::string& e) {
      return e.find("mutually disjoint") != std::string::npos;
    });
    CHECK(disj);
  }
  SECTION("missing lift entry") {
    spec.lifts.erase("alpha1");
    auto errors = validate_lift(cs, spec);
    bool missing = std::any_of(errors.begin(), errors.end(), [](const std::string& e) {
      return e.find("no lift entry") != std::string::npos;
    });
    CHECK(missing);
  }
}

TEST_CASE("build lift produces a certified covering projection") {
  CurveSystem cs = p4_configuration(4);
  LiftResult lift = build_lift(cs, diagonal_spec(cs));
  CHECK(lift.lifted.ambient() == orientation_double_cover(cs.ambient()));
  CHECK(lift.lifted.curves().size() == 8);
  CHECK(is_surjective(lift.projection));
  CHECK(is_full(lift.projection));
  CHECK(satisfies_condition_star(lift.projection));
  for (const auto& [down, up] : fibers(lift.projection)) CHECK(up.size() == 2);

  LiftSpec broken = diagonal_spec(cs);
  broken.intersections.clear();
  CHECK_THROWS_AS(build_lift(cs, broken), input_error);
}

TEST_CASE("pipeline succeeds on the path configuration") {
  CurveSystem cs = p4_configuration(4);
  PipelineReport rep = theorem1_pipeline(cs, named_graph(NamedKind::path, 4),
                                         diagonal_spec(cs));
  CHECK(rep.embedding.size() == 4);
  CHECK(graphs_isomorphic(rep.downstairs_graph, named_graph(NamedKind::path, 4)));
  CHECK(rep.lifted_graph.num_vertices() == 8);
  CHECK(rep.hom.lipschitz == 2);
  CHECK(rep.recipe.entries.size() == 8);

  // deck-equivariance: the twist curve set is closed under the pairing
  for (const auto& e : rep.recipe.entries) {
    auto it = rep.recipe.deck_pairing.find(e.curve);
    REQUIRE(it != rep.recipe.deck_pairing.end());
    bool present = std::any_of(rep.recipe.entries.begin(), rep.recipe.entries.end(),
                               [&](const TwistEntry& o) { return o.curve == it->second; });
    CHECK(present);
  }
}

TEST_CASE("pipeline succeeds on the bundled big configuration") {
  if (!test_helpers::data_present("gamma1_n1_6.json")) SKIP("bundled data absent");
  CurveSystem cs = load_curve_system(test_helpers::data_file("gamma1_n1_6.json"));
  LiftSpec spec = load_lift_spec(test_helpers::data_file("gamma1_n1_6_lift.json"));
  Graph gamma1 = load_graph(test_helpers::data_file("gamma1.json"));
  PipelineReport rep = theorem1_pipeline(cs, gamma1, spec);
  CHECK(rep.lifted_graph.num_vertices() == 16);
  CHECK(rep.hom.lipschitz == 2);
}

TEST_CASE("pipeline rejects unrealizable targets") {
  CurveSystem cs = p4_configuration(4);
  CHECK_THROWS_AS(
      theorem1_pipeline(cs, named_graph(NamedKind::complete, 3), diagonal_spec(cs)),
      input_error);
  CHECK_THROWS_AS(
      theorem1_pipeline(cs, named_graph(NamedKind::cycle, 4), diagonal_spec(cs)),
      input_error);
}

TEST_CASE("gamma bundle validation") {
  if (!test_helpers::data_present("gamma0.json")) SKIP("bundled data absent");
  Graph g0 = load_graph(test_helpers::data_file("gamma0.json"));
  Graph g1 = load_graph(test_helpers::data_file("gamma1.json"));
  GammaBundle bundle = make_gamma_bundle(g0, g1);
  CHECK(bundle.hom.lipschitz == 2);
  CHECK(bundle.hom.images.at("q") == VertexSet{"e", "f"});

  CHECK_THROWS_AS(make_gamma_bundle(g0, without_edge(g1, "a", "b")), data_error);
  CHECK_THROWS_AS(make_gamma_bundle(with_edge(g0, "g", "h"), g1), data_error);
  CHECK_THROWS_AS(make_gamma_bundle(g0, without_edge(g1, "e", "a")), data_error);
  CHECK_THROWS_AS(make_gamma_bundle(g1, g1), data_error);  // no q upstairs
}

TEST_CASE("curve system json round trip") {
  CurveSystem cs = p4_configuration(5);
  CurveSystem back = curve_system_from_json(curve_system_to_json(cs));
  CHECK(back.ambient() == cs.ambient());
  REQUIRE(back.curves().size() == cs.curves().size());
  for (const auto& a : cs.curves())
    for (const auto& b : cs.curves())
      if (a.name != b.name) CHECK(back.intersection(a.name, b.name) ==
                                  cs.intersection(a.name, b.name));

  CHECK_THROWS_AS(curve_system_from_json(json::parse(R"({"surface":"N{1,4}"})")), input_error);
  CHECK_THROWS_AS(curve_system_from_json(json::parse(
                      R"({"surface":"N{1,4}","curves":[{"name":"x","sided":"both"}]})")),
                  input_error);
}

TEST_CASE("lift spec json round trip") {
  CurveSystem cs = p4_configuration(4);
  LiftSpec spec = diagonal_spec(cs);
  LiftSpec back = lift_spec_from_json(lift_spec_to_json(spec));
  CHECK(back.lifts == spec.lifts);
  CHECK(back.pairing == spec.pairing);
  CHECK(validate_lift(cs, back).empty());
}
