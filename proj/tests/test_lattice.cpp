#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "kmroot/catalog.hpp"
#include "kmroot/lattice.hpp"
#include "oracles.hpp"
#include "util.hpp"

using namespace kmroot;

namespace {

LatticePtr lattice_of(const std::string& name) {
  const auto e = get(name);
  return RootLattice::make(e.gcm, e.diagram.labels());
}

std::vector<Int> coords(const std::vector<RootVector>& roots, size_t i) { return roots[i].c; }

// Every nonnegative coordinate vector with sum <= maxHeight.
template <typename F>
void for_each_box_vector(int n, Int maxHeight, F&& body) {
  std::vector<Int> c(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int idx, Int budget) -> void {
    if (idx == n) {
      body(c);
      return;
    }
    for (Int v = 0; v <= budget; ++v) {
      c[static_cast<size_t>(idx)] = v;
      self(self, idx + 1, budget - v);
    }
    c[static_cast<size_t>(idx)] = 0;
  };
  rec(rec, 0, maxHeight);
}

}  // namespace

TEST_CASE("lattice construction") {
  CHECK_THROWS_AS(RootLattice::make(kmtest::gcm({{2, -1}, {-2, 2}})), NonSymmetric);
  CHECK_THROWS_AS(RootLattice::make(kmtest::gcm({{2, -1}, {-1, 2}}), {"a", "b", "c"}),
                  BadParameter);

  const auto L = lattice_of("E10");
  CHECK(L->rank() == 10);
  CHECK(L->type().kind == DiagramKind::Indefinite);
  CHECK(L->type().hyperbolic);
  CHECK(L->index_of_label("-1") == 0);
  CHECK(L->index_of_label("8") == 9);
  CHECK_THROWS_AS(L->index_of_label("9"), BadVertex);
}

TEST_CASE("vector algebra against the bilinear form") {
  const auto L = lattice_of("E10");
  const auto& g = L->gcm();
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      CHECK(pairing(simple_root(L, i), simple_root(L, j)) == g.at(i, j));

  const auto a = simple_root(L, 0), b = simple_root(L, 1);
  CHECK(height(a + b) == 2);
  CHECK(norm(a + b) == 2);   // adjacent pair
  CHECK(norm(a - b) == 6);   // 2 + 2 - 2*(-1) with the sign flipped
  CHECK(norm(3 * a) == 18);
  CHECK((a + b) - b == a);

  CHECK_THROWS_AS(simple_root(L, 10), IndexOutOfRange);
  CHECK_THROWS_AS(root_vector(L, {1, 2}), BadParameter);

  const auto M = lattice_of("A2");
  CHECK_THROWS_AS(pairing(simple_root(M, 0), a), HostMismatch);
}

TEST_CASE("simple reflections") {
  const auto L = lattice_of("E10");
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Int> xc(10), yc(10);
    for (auto& v : xc) v = static_cast<Int>(rng() % 9) - 4;
    for (auto& v : yc) v = static_cast<Int>(rng() % 9) - 4;
    const auto x = root_vector(L, xc), y = root_vector(L, yc);
    const int i = static_cast<int>(rng() % 10);
    const auto rx = simple_reflection(x, i), ry = simple_reflection(y, i);
    CHECK(pairing(rx, ry) == pairing(x, y));              // isometry
    CHECK(simple_reflection(rx, i) == x);                 // involution
    CHECK(reflect_by(x, simple_root(L, i)) == rx);        // same mirror
  }
  const auto a0 = simple_root(L, 0);
  CHECK(simple_reflection(a0, 0) == -1 * a0);  // a mirror negates its own root
  CHECK(simple_reflection(a0, 0).c[0] == -1);
  CHECK_THROWS_AS(simple_reflection(a0, 10), IndexOutOfRange);

  const auto A = lattice_of("A_1(1)");
  CHECK_THROWS_AS(reflect_by(simple_root(A, 0), null_root(A)), NotNormTwo);
}

TEST_CASE("null roots match the published marks") {
  CHECK(null_root(lattice_of("A_1(1)")).c == std::vector<Int>{1, 1});
  CHECK(null_root(lattice_of("A_3(1)")).c == std::vector<Int>{1, 1, 1, 1});
  CHECK(null_root(lattice_of("D_4(1)")).c == std::vector<Int>{1, 1, 2, 1, 1});
  CHECK(null_root(lattice_of("D_6(1)")).c == std::vector<Int>{1, 1, 2, 2, 2, 1, 1});
  CHECK(null_root(lattice_of("E_6(1)")).c == std::vector<Int>{1, 2, 3, 2, 1, 2, 1});
  CHECK(null_root(lattice_of("E_7(1)")).c == std::vector<Int>{1, 2, 3, 4, 3, 2, 1, 2});
  CHECK(null_root(lattice_of("E_8(1)")).c == std::vector<Int>{1, 2, 3, 4, 5, 6, 4, 2, 3});

  for (const auto& entry : catalog_entries()) {
    const auto L = RootLattice::make(entry.gcm, entry.diagram.labels());
    if (L->type().kind != DiagramKind::Affine) continue;
    const auto d = null_root(L);
    CHECK(norm(d) == 0);
    Int g = 0;
    for (Int v : d.c) {
      CHECK(v > 0);
      g = std::gcd(g, v);
    }
    CHECK(g == 1);
    for (int i = 0; i < L->rank(); ++i) CHECK(pairing(d, simple_root(L, i)) == 0);
    CHECK(d.c[static_cast<size_t>(L->index_of_label("0"))] == 1);
  }

  CHECK_THROWS_AS(null_root(lattice_of("E10")), NotAffine);
  CHECK_THROWS_AS(null_root(lattice_of("A2")), NotAffine);
}

TEST_CASE("fundamental weights are dual to the simple roots") {
  const auto L = lattice_of("E10");
  const auto weights = fundamental_weights(L);
  REQUIRE(weights.size() == 10);
  for (int i = 0; i < 10; ++i) {
    // E10 is unimodular, so every fundamental weight is integral.
    CHECK(weights[static_cast<size_t>(i)].integral().has_value());
    for (int j = 0; j < 10; ++j) {
      std::vector<Rat> ej(10, Rat(0));
      ej[static_cast<size_t>(j)] = Rat(1);
      const Rat p = pairing(weights[static_cast<size_t>(i)], WeightVector{L, ej});
      CHECK(p == Rat(i == j ? 1 : 0));
    }
  }
  // The weight dual to the extending vertex is minus the affine null vector.
  const auto lam = weights[0].integral();
  REQUIRE(lam.has_value());
  CHECK(lam->c == std::vector<Int>{0, -1, -2, -3, -4, -5, -6, -4, -2, -3});

  const auto A = lattice_of("A2");
  const auto wa = fundamental_weights(A);
  CHECK_FALSE(wa[0].integral().has_value());  // coordinates 2/3, 1/3
  CHECK(wa[0].c[0] == Rat(2, 3));

  CHECK_THROWS_AS(fundamental_weights(lattice_of("A_1(1)")), SingularMatrix);
}

TEST_CASE("norm test scope") {
  const auto bad = lattice_of("HA_8(1)");  // indefinite but not hyperbolic
  CHECK_THROWS_AS(is_positive_real_root_norm(simple_root(bad, 0)), TheoremHypothesisViolated);
  CHECK_THROWS_AS(real_roots_up_to_height(bad, 3), TheoremHypothesisViolated);
  // The descent test still works there.
  CHECK(is_positive_real_root_descent(simple_root(bad, 0)));
  CHECK(is_positive_real_root_descent(simple_root(bad, 1) + simple_root(bad, 2)));
}

TEST_CASE("norm test and descent test agree on height boxes") {
  for (const char* name : {"E10", "HA_1(1)", "A2", "D_4(1)"}) {
    const auto L = lattice_of(name);
    const Int bound = L->rank() > 4 ? 4 : 7;
    long roots_seen = 0;
    for_each_box_vector(L->rank(), bound, [&](const std::vector<Int>& c) {
      const auto x = root_vector(L, c);
      const bool by_norm = is_positive_real_root_norm(x);
      const bool by_descent = is_positive_real_root_descent(x);
      CHECK(by_norm == by_descent);
      roots_seen += by_norm ? 1 : 0;
    });
    CHECK(roots_seen > 0);
  }

  const auto L = lattice_of("E10");
  std::vector<Int> neg(10, 0);
  neg[3] = -1;
  CHECK_THROWS_AS(is_positive_real_root_descent(root_vector(L, neg)), NegativeCoordinates);
}

TEST_CASE("real roots: frozen small cases") {
  const auto A = lattice_of("A_1(1)");
  const auto roots = real_roots_up_to_height(A, 5);
  REQUIRE(roots.size() == 6);
  CHECK(coords(roots, 0) == std::vector<Int>{0, 1});
  CHECK(coords(roots, 1) == std::vector<Int>{1, 0});
  CHECK(coords(roots, 2) == std::vector<Int>{1, 2});
  CHECK(coords(roots, 3) == std::vector<Int>{2, 1});
  CHECK(coords(roots, 4) == std::vector<Int>{2, 3});
  CHECK(coords(roots, 5) == std::vector<Int>{3, 2});

  const auto E = lattice_of("E10");
  CHECK(real_roots_up_to_height(E, 0).empty());
  CHECK(real_roots_up_to_height(E, 1).size() == 10);  // the simple roots
  CHECK(real_roots_up_to_height(E, 2).size() == 19);  // plus one per edge
  CHECK(real_roots_up_to_height(E, 3).size() == 28);  // plus one per 2-path

  CHECK_THROWS_AS(real_roots_up_to_height(E, -1), BadParameter);
}

TEST_CASE("box-scan kernels: serial and parallel agree") {
  for (const char* name : {"E10", "T_2", "HA_1(1)", "A_4(1)"}) {
    const auto g = get(name).gcm;
    const int H = g.n() > 3 ? 10 : 20;
    CHECK(norm2_box_scan_serial(g, H) == norm2_box_scan_parallel(g, H));
  }
  const auto e10 = get("E10").gcm;
  CHECK(norm2_box_scan_serial(e10, 0).empty());
}

TEST_CASE("real roots match the reflection-orbit oracle") {
  {
    const auto L = lattice_of("A2");
    const auto got = real_roots_up_to_height(L, 3);
    const auto want = kmtest::reflection_orbit_roots(L, 3);
    REQUIRE(got.size() == 3);  // a1, a2, a1+a2
    REQUIRE(want.size() == 3);
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].c == want[i]);
  }
  {
    const auto d4 = finite_diagram('D', 4);
    const auto L = RootLattice::make(d4.to_gcm(), d4.labels());
    const auto got = real_roots_up_to_height(L, 5);
    const auto want = kmtest::reflection_orbit_roots(L, 5);
    CHECK(got.size() == 12);  // every positive root of D4
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].c == want[i]);
  }
  for (const char* name : {"E10", "HA_1(1)", "T_2"}) {
    const auto L = lattice_of(name);
    const Int H = L->rank() > 3 ? 6 : 9;
    const auto got = real_roots_up_to_height(L, static_cast<int>(H));
    const auto want = kmtest::reflection_orbit_roots(L, H);
    REQUIRE(got.size() == want.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i].c == want[i]);
  }
}
