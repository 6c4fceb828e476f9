#include <map>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "kmroot/catalog.hpp"
#include "util.hpp"

using namespace kmroot;

TEST_CASE("catalog shape and ranks") {
  const auto& entries = catalog_entries();
  CHECK(entries.size() == 43);  // 23 hyperbolic + 2 auxiliary indefinite + 16 affine + 2 finite

  const auto& names = hyperbolic_names();
  REQUIRE(names.size() == 23);
  CHECK(names.front() == "HA_1(1)");
  CHECK(names.back() == "T_0");

  std::map<std::string, int> rank_of;
  for (const auto& e : entries) rank_of[e.name] = e.rank;
  for (int k = 1; k <= 7; ++k) CHECK(rank_of["HA_" + std::to_string(k) + "(1)"] == k + 2);
  for (int k = 4; k <= 8; ++k) CHECK(rank_of["HD_" + std::to_string(k) + "(1)"] == k + 2);
  CHECK(rank_of["HE_6(1)"] == 8);
  CHECK(rank_of["HE_7(1)"] == 9);
  CHECK(rank_of["E10"] == 10);
  CHECK(rank_of["X_6"] == 6);
  CHECK(rank_of["Y_5"] == 5);
  CHECK(rank_of["Y_4"] == 4);
  CHECK(rank_of["Z_4"] == 4);
  CHECK(rank_of["Y_3"] == 3);
  CHECK(rank_of["T_2"] == 3);
  CHECK(rank_of["HA_8(1)"] == 10);
  CHECK(rank_of["P10"] == 10);

  // Expected per-rank distribution of the 23 hyperbolic entries.
  std::map<int, int> by_rank;
  for (const auto& n : names) ++by_rank[rank_of[n]];
  CHECK(by_rank == std::map<int, int>{{3, 5}, {4, 3}, {5, 2}, {6, 3}, {7, 2}, {8, 3}, {9, 3}, {10, 2}});

  // Every entry carries a validated simply laced matrix and matching labels.
  for (const auto& e : entries) {
    CHECK(e.gcm.simply_laced());
    CHECK(e.diagram.n() == e.rank);
    CHECK(static_cast<int>(e.diagram.labels().size()) == e.rank);
  }
}

TEST_CASE("name lookup tolerates aliases") {
  CHECK(get("ha_3(1)").name == "HA_3(1)");
  CHECK(get("HA3(1)").name == "HA_3(1)");
  CHECK(get("e10").name == "E10");
  CHECK(get("HE_8(1)").name == "E10");  // same object under its series alias
  CHECK(get("t_0").name == "T_0");
  CHECK(get("Y 5").name == "Y_5");

  CHECK_THROWS_AS(get("nope"), UnknownName);
  CHECK_FALSE(try_get("nope").has_value());
  CHECK(try_get("x_6").has_value());
}

TEST_CASE("rank-2 family is parameterized") {
  const auto h2 = get("H2(5)");
  CHECK(h2.name == "H2(5)");
  CHECK(h2.rank == 2);
  CHECK(h2.gcm.at(0, 1) == -5);
  CHECK(h2.family == Family::Rank2);
  CHECK(get("h2(12)").gcm.at(1, 0) == -12);

  CHECK_THROWS_AS(get("H2(2)"), UnknownName);   // a < 3 is not hyperbolic
  CHECK_THROWS_AS(get("H2(x)"), UnknownName);
  CHECK_THROWS_AS(get("H2()"), UnknownName);
}

TEST_CASE("identify recognizes every entry and the rank-2 family") {
  for (const auto& e : catalog_entries()) {
    const auto found = identify(e.diagram);
    REQUIRE(found.has_value());
    CHECK(*found == e.name);
    // Label independent: the canonical representative identifies identically.
    CHECK(identify(canonical_relabel(e.diagram)) == e.name);
  }

  const auto h2 = DynkinDiagram::from_edges(2, {{0, 1, 7}});
  CHECK(identify(h2) == "H2(7)");

  // Not in the catalog: a triple bond hanging off a path.
  const auto odd = DynkinDiagram::from_edges(3, {{0, 1, 3}, {1, 2, 1}});
  CHECK_FALSE(identify(odd).has_value());
  const auto a2 = finite_diagram('A', 2);
  CHECK(identify(a2) == "A2");
}

TEST_CASE("standard diagram builders") {
  const auto a3 = finite_diagram('A', 3);
  CHECK(a3.labels() == std::vector<std::string>{"1", "2", "3"});
  CHECK(a3.mult(0, 1) == 1);
  CHECK(a3.mult(0, 2) == 0);

  const auto d4 = finite_diagram('D', 4);
  CHECK(d4.n() == 4);

  const auto a11 = affine_diagram('A', 1);
  CHECK(a11.mult(0, 1) == 2);  // the rank-1 affine closes into a double bond

  const auto a31 = affine_diagram('A', 3);
  CHECK(a31.mult(0, 3) == 1);  // cycle closes

  CHECK_THROWS_AS(finite_diagram('E', 5), BadParameter);
  CHECK_THROWS_AS(finite_diagram('D', 3), BadParameter);
  CHECK_THROWS_AS(finite_diagram('Q', 3), BadParameter);
  CHECK_THROWS_AS(affine_diagram('E', 9), BadParameter);

  const auto ext = extend_affine(affine_diagram('A', 2));
  CHECK(ext.n() == 4);
  CHECK(ext.label(0) == "-1");
  CHECK(ext.mult(0, ext.index_of_label("0")) == 1);
  CHECK(ext.mult(0, ext.index_of_label("1")) == 0);
  CHECK_THROWS_AS(extend_affine(finite_diagram('A', 2)), BadVertex);  // no vertex "0"
}

TEST_CASE("enumeration: counts, coverage, and path agreement") {
  CHECK_THROWS_AS(enumerate_hyperbolic_simply_laced(2), RankOutOfRange);
  CHECK_THROWS_AS(enumerate_hyperbolic_simply_laced(11), RankOutOfRange);
  CHECK_THROWS_AS(enumerate_hyperbolic_serial(11), RankOutOfRange);

  const std::map<int, size_t> expected = {{3, 5}, {4, 3}, {5, 2}, {6, 3}, {7, 2}};
  for (const auto& [rank, count] : expected) {
    const auto parallel = enumerate_hyperbolic_simply_laced(rank, true);
    const auto level_serial = enumerate_hyperbolic_simply_laced(rank, false);
    const auto reference = enumerate_hyperbolic_serial(rank);
    CHECK(parallel.size() == count);
    // Same diagrams in the same order, from all three paths.
    CHECK(parallel == level_serial);
    CHECK(parallel == reference);

    // Every result is a known catalog entry of that rank, no repeats.
    std::set<std::string> seen;
    for (const auto& d : parallel) {
      const auto name = identify(d);
      REQUIRE(name.has_value());
      CHECK(get(*name).rank == rank);
      CHECK(seen.insert(*name).second);
    }
    // And every catalog hyperbolic of that rank was produced.
    for (const auto& n : hyperbolic_names())
      if (get(n).rank == rank) CHECK(seen.count(n) == 1);
  }
}

TEST_CASE("enumeration results are canonical representatives") {
  for (const auto& d : enumerate_hyperbolic_simply_laced(4)) {
    CHECK(d == canonical_relabel(d));
    CHECK(d.labels().empty());
  }
}
