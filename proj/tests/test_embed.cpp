#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "kmroot/embed.hpp"
#include "util.hpp"

using namespace kmroot;

namespace {

HxLattice e10_hx() { return hx_structure(get("E10")); }

std::vector<Int> row_coords(const Embedding& e, const std::string& label) {
  return e.roots[static_cast<size_t>(e.row_of_label(label))].c;
}

bool iso_to(const Embedding& e, const std::string& name) {
  return are_isomorphic(e.diagram(), get(name).diagram).has_value();
}

}  // namespace

TEST_CASE("host lattice and hyperbolic-extension structure") {
  const auto& L = e10_lattice();
  CHECK(L->rank() == 10);
  CHECK(L->type().hyperbolic);
  CHECK(L->labels().front() == "-1");

  const auto hx = e10_hx();
  CHECK(hx.lattice->gcm() == L->gcm());
  CHECK(hx.minus_one == 0);
  CHECK(hx.zero == 1);
  CHECK(hx.delta.c == std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 4, 2, 3});
  CHECK(norm(hx.delta) == 0);
  CHECK(pairing(hx.delta, simple_root(hx.lattice, hx.minus_one)) == -1);

  // Building the extension from the affine entry gives the same lattice.
  const auto built = hyperbolic_extension(get("E_8(1)"));
  CHECK(built.lattice->gcm() == L->gcm());
  CHECK(built.delta.c == hx.delta.c);

  CHECK_THROWS_AS(hyperbolic_extension(get("A2")), NotAffine);
  CHECK_THROWS_AS(hx_structure(get("A2")), BadVertex);  // no vertex labeled "-1"

  // Deleting "-1" from the 5-star leaves the affine 4-star, so the structure
  // read succeeds and lifts its null vector.
  const auto star = hx_structure(get("X_6"));
  CHECK(star.delta.c == std::vector<Int>{0, 1, 1, 2, 1, 1});

  // A genuinely finite part after the deletion is rejected.
  const auto path3 = DynkinDiagram::from_edges(3, {{0, 1, 1}, {1, 2, 1}}, {"-1", "0", "1"});
  const CatalogEntry fake{"fake", 3, path3.to_gcm(), path3, Family::Auxiliary};
  CHECK_THROWS_AS(hx_structure(fake), NotAffine);
}

TEST_CASE("root-subdiagram certification errors") {
  const auto& L = e10_lattice();
  const auto a = [&](int i) { return simple_root(L, i); };

  CHECK_THROWS_AS(check_root_subdiagram(L, {}), BadParameter);
  CHECK_THROWS_AS(check_root_subdiagram(L, {a(0)}, {"x", "y"}), BadParameter);
  CHECK_THROWS_AS(check_root_subdiagram(L, {-1 * a(0)}), NotPositive);
  CHECK_THROWS_AS(check_root_subdiagram(L, {a(0) + a(2)}), NotRealRoot);  // norm 4
  CHECK_THROWS_AS(check_root_subdiagram(L, {a(0), a(0)}), PositivePairing);

  const auto A2 = RootLattice::make(kmtest::gcm({{2, -1}, {-1, 2}}));
  CHECK_THROWS_AS(check_root_subdiagram(L, {simple_root(A2, 0)}), HostMismatch);

  const auto e = check_root_subdiagram(L, {a(0), a(1)}, {"u", "v"});
  CHECK(e.validated);
  CHECK(e.size() == 2);
  CHECK(e.gram(0, 1) == -1);
  CHECK(e.labels == std::vector<std::string>{"u", "v"});
  CHECK(e.row_of_label("v") == 1);
  CHECK_THROWS_AS(e.row_of_label("w"), BadVertex);
  CHECK(identify(e.diagram()) == "A2");
}

TEST_CASE("identity embedding") {
  const auto e = identity_embedding(e10_lattice());
  CHECK(e.validated);
  CHECK(e.size() == 10);
  CHECK(e.gram == e10_lattice()->gcm().mat());
  CHECK(e.labels == e10_lattice()->labels());
  CHECK(iso_to(e, "E10"));
}

TEST_CASE("extension by the lifted null vector: the three named identities") {
  const auto hx = e10_hx();

  const auto ea = principle_a(hx);
  CHECK(ea.validated);
  CHECK(iso_to(ea, "HD_8(1)"));
  CHECK(row_coords(ea, "-1") == std::vector<Int>{2, 2, 2, 3, 4, 5, 6, 4, 2, 3});

  const auto eb7 = principle_b(hx, 7);
  CHECK(eb7.validated);
  CHECK(iso_to(eb7, "HA_8(1)"));
  CHECK(row_coords(eb7, "7") == std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 4, 3, 3});

  const auto eb8 = principle_b(hx, 8);
  CHECK(eb8.validated);
  CHECK(iso_to(eb8, "P10"));
  CHECK(row_coords(eb8, "8") == std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 4, 2, 4});

  CHECK_THROWS_AS(principle_b(hx, 0), BadVertex);
  CHECK_THROWS_AS(principle_b(hx, 9), BadVertex);
  CHECK_THROWS_AS(principle_b(hx, -1), BadVertex);
}

TEST_CASE("several vertices at once") {
  const auto hx = e10_hx();
  const auto none = principle_b_prime(hx, {});
  CHECK(none.gram == e10_lattice()->gcm().mat());

  const auto hx2 = hx_structure(get("HA_2(1)"));
  const auto z4 = principle_b_prime(hx2, {1, 2});
  CHECK(z4.validated);
  CHECK(iso_to(z4, "Z_4"));

  CHECK_THROWS_AS(principle_b_prime(hx2, {1, 1}), BadVertex);
  CHECK_THROWS_AS(principle_b_prime(hx2, {3}), BadVertex);
}

TEST_CASE("chain shrinking") {
  const auto id = identity_embedding(e10_lattice());

  // Shrinking the chain "1","2" of the identity merges two path vertices.
  const auto shrunk = principle_c(id, {id.row_of_label("1"), id.row_of_label("2")});
  CHECK(shrunk.validated);
  CHECK(shrunk.size() == 9);
  CHECK(shrunk.gram(0, 0) == 2);
  CHECK(row_coords(shrunk, "1") == std::vector<Int>{0, 0, 1, 1, 0, 0, 0, 0, 0, 0});

  // A one-row chain is a no-op merge.
  const auto solo = principle_c(id, {3});
  CHECK(solo.size() == 10);

  CHECK_THROWS_AS(principle_c(id, {}), NotAChain);
  CHECK_THROWS_AS(principle_c(id, {0, 2}), NotAChain);        // not adjacent
  CHECK_THROWS_AS(principle_c(id, {0, 0}), NotAChain);        // repeated row
  CHECK_THROWS_AS(principle_c(id, {0, 42}), NotAChain);       // out of range
  CHECK_THROWS_AS(principle_c(id, {0, 1, 3}), NotAChain);     // 1 and 3 not adjacent

  // A double bond inside the candidate chain is rejected.
  const auto t1 = t_family(1);
  CHECK_THROWS_AS(principle_c(t1, {0, 1}), NotAChain);

  // A common neighbor of the chain ends produces a double bond after merging.
  const auto ha2 = prove_main("HA_2(1)").embedding;
  const auto merged = principle_c(ha2, {ha2.row_of_label("1"), ha2.row_of_label("2")});
  CHECK(merged.validated);
  CHECK(identify(merged.diagram()) == "HA_1(1)");
}

TEST_CASE("row dropping") {
  const auto id = identity_embedding(e10_lattice());
  const auto same = principle_d(id, {});
  CHECK(same.size() == 10);

  const auto dropped = principle_d(id, {id.row_of_label("8")});
  CHECK(dropped.size() == 9);
  CHECK(dropped.validated);

  std::vector<int> all(10);
  for (int i = 0; i < 10; ++i) all[static_cast<size_t>(i)] = i;
  CHECK_THROWS_AS(principle_d(id, all), BadParameter);
  CHECK_THROWS_AS(principle_d(id, {0, 0}), BadParameter);
  CHECK_THROWS_AS(principle_d(id, {17}), BadParameter);
}

TEST_CASE("unravelings match the published root lists") {
  const auto hx = e10_hx();

  // Rank 9 shape with arms (4,3,1): replace vertex 7, then delete vertex 0.
  const auto b7 = principle_b(hx, 7);
  const auto he7 = principle_d(b7, {b7.row_of_label("0")});
  CHECK(he7.size() == 9);
  CHECK(iso_to(he7, "HE_7(1)"));
  CHECK(row_coords(he7, "7") == std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 4, 3, 3});
  CHECK(row_coords(he7, "-1") == std::vector<Int>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});

  // Rank 8 shape with arms (3,2,2): replace vertex 8, then delete 0 and 1.
  const auto b8 = principle_b(hx, 8);
  const auto he6 = principle_d(b8, {b8.row_of_label("0"), b8.row_of_label("1")});
  CHECK(he6.size() == 8);
  CHECK(iso_to(he6, "HE_6(1)"));
  CHECK(row_coords(he6, "8") == std::vector<Int>{0, 1, 2, 3, 4, 5, 6, 4, 2, 4});
}

TEST_CASE("composition substitutes roots for rows") {
  const auto ha1 = prove_main("HA_1(1)").embedding;

  const auto t0 = t_family(0);
  const auto composed = compose(ha1, t0);
  CHECK(composed.validated);
  CHECK(composed.host == ha1.host);
  CHECK(composed.gram == t0.gram);
  CHECK(composed.target == t0.target);
  CHECK(identify(composed.diagram()) == "T_0");

  CHECK_THROWS_AS(compose(identity_embedding(e10_lattice()), t0), HostMismatch);

  Embedding raw;  // never validated
  CHECK_THROWS_AS(compose(ha1, raw), BadParameter);
}

TEST_CASE("row permutation and catalog alignment") {
  const auto hx = e10_hx();
  const auto ea = principle_a(hx);

  const auto aligned = align_to_catalog(ea, "HD_8(1)");
  CHECK(aligned.validated);
  CHECK(aligned.target == "HD_8(1)");
  CHECK(aligned.gram == get("HD_8(1)").gcm.mat());
  CHECK(aligned.labels == get("HD_8(1)").diagram.labels());

  CHECK_THROWS_AS(align_to_catalog(ea, "HA_8(1)"), NotIsomorphicTo);
  CHECK_THROWS_AS(align_to_catalog(ea, "zzz"), UnknownName);

  std::vector<int> perm(10);
  for (int i = 0; i < 10; ++i) perm[static_cast<size_t>(i)] = (i + 1) % 10;
  const auto rotated = permute_rows(ea, perm);
  CHECK(rotated.validated);
  CHECK_FALSE(rotated.target.has_value());
  CHECK(rotated.labels[1] == ea.labels[0]);
  CHECK_THROWS_AS(permute_rows(ea, {0, 0}), BadParameter);
}

TEST_CASE("triangle series and the rank-2 series") {
  for (int m = 0; m <= 4; ++m) {
    const auto e = t_family(m);
    CHECK(e.validated);
    REQUIRE(e.size() == 3);
    CHECK(e.gram(0, 0) == 2);
    CHECK(e.gram(0, 1) == -2);
    CHECK(e.gram(0, 2) == -m);
    CHECK(e.gram(1, 2) == -2);
    if (m <= 2)
      CHECK(e.target == "T_" + std::to_string(m));
    else
      CHECK_FALSE(e.target.has_value());
  }
  CHECK_THROWS_AS(t_family(-1), BadParameter);

  for (Int a = 3; a <= 7; ++a) {
    const auto e = rank2_embedding(a);
    CHECK(e.validated);
    REQUIRE(e.size() == 2);
    CHECK(e.gram(0, 1) == -a);
    CHECK(e.target == "H2(" + std::to_string(a) + ")");
  }
  CHECK_THROWS_AS(rank2_embedding(2), BadParameter);
}

TEST_CASE("the full embedding table") {
  std::vector<std::string> targets = hyperbolic_names();
  targets.push_back("HA_8(1)");
  targets.push_back("P10");
  targets.push_back("H2(3)");
  targets.push_back("H2(11)");

  for (const auto& name : targets) {
    CAPTURE(name);
    const auto pr = prove_main(name);
    const auto& e = pr.embedding;
    CHECK(e.validated);
    CHECK(e.host->gcm() == e10_lattice()->gcm());
    CHECK(e.target == get(name).name);
    CHECK(are_isomorphic(e.diagram(), get(name).diagram).has_value());
    CHECK(e.gram == get(name).gcm.mat());
    CHECK_FALSE(pr.word.empty());
    CHECK(pr.trace.size() >= 1);
    for (const auto& r : e.roots) {
      CHECK(norm(r) == 2);
      for (Int v : r.c) CHECK(v >= 0);
    }
  }

  CHECK(prove_main("E10").word == "identity");
  CHECK(prove_main("HD_8(1)").word == "A");
  CHECK(prove_main("HA_8(1)").word == "B(7)");
  CHECK(prove_main("P10").word == "B(8)");
  CHECK(prove_main("HE_7(1)").word == "B(7) . D(0)");

  CHECK_THROWS_AS(prove_main("A_3(1)"), UnknownTarget);
  CHECK_THROWS_AS(prove_main("A2"), UnknownTarget);
  CHECK_THROWS_AS(prove_main("frobnicate"), UnknownTarget);
}
