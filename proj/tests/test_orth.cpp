#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "doctest.h"
#include "kmroot/orth.hpp"
#include "util.hpp"

using namespace kmroot;

namespace {

// Pairings of a host vector against every simple root, i.e. its coordinates
// in the dual (weight) basis.
std::vector<Int> weight_pattern(const RootVector& x) {
  std::vector<Int> out;
  for (int j = 0; j < x.host->rank(); ++j) out.push_back(pairing(x, simple_root(x.host, j)));
  return out;
}

std::vector<Int> pattern(const LatticePtr& L, const std::map<std::string, Int>& entries) {
  std::vector<Int> out(static_cast<size_t>(L->rank()), 0);
  for (const auto& [label, value] : entries)
    out[static_cast<size_t>(L->index_of_label(label))] = value;
  return out;
}

}  // namespace

TEST_CASE("complement of a full-rank embedding is trivial") {
  const auto id = identity_embedding(e10_lattice());
  const auto sub = orthogonal_sublattice(id);
  CHECK(sub.basis.empty());
  CHECK(find_orthogonal_real_roots(id).empty());
  CHECK_THROWS_AS(extend_direct_sum(id, "A1"), NoExtension);

  const auto hd8 = prove_main("HD_8(1)").embedding;
  CHECK(orthogonal_sublattice(hd8).basis.empty());

  Embedding raw;
  CHECK_THROWS_AS(orthogonal_sublattice(raw), BadParameter);
  CHECK_THROWS_AS(find_orthogonal_real_roots(id, 0), BadParameter);
  CHECK_THROWS_AS(extend_direct_sum(id, "A3"), BadParameter);
}

TEST_CASE("rank-9 arms-(4,3,1) embedding: complement is a single A1") {
  const auto e = prove_main("HE_7(1)").embedding;
  const auto sub = orthogonal_sublattice(e);
  REQUIRE(sub.basis.size() == 1);
  CHECK(sub.gram(0, 0) == 2);

  // The generator is primitive and orthogonal to every embedded root.
  const auto b = root_vector(e.host, sub.basis[0]);
  Int g = 0;
  for (Int v : b.c) g = std::gcd(g, v);
  CHECK(g == 1);
  for (const auto& r : e.roots) CHECK(pairing(b, r) == 0);

  // In the dual basis the generator reads +1 at "7", -3 at "0" (up to sign).
  const auto want = pattern(e.host, {{"7", 1}, {"0", -3}});
  const auto wp = weight_pattern(b);
  bool plus = true, minus = true;
  for (size_t i = 0; i < wp.size(); ++i) {
    plus = plus && wp[i] == want[i];
    minus = minus && wp[i] == -want[i];
  }
  CHECK((plus || minus));

  // Exactly one positive real root spans the complement, with the + sign.
  const auto roots = find_orthogonal_real_roots(e);
  REQUIRE(roots.size() == 1);
  CHECK(norm(roots[0]) == 2);
  CHECK(weight_pattern(roots[0]) == want);

  const auto ext = extend_direct_sum(e, "A1");
  CHECK(ext.validated);
  CHECK(ext.size() == 10);
  CHECK(ext.labels.back() == "g1");
  CHECK(ext.gram(9, 9) == 2);
  for (int j = 0; j < 9; ++j) CHECK(ext.gram(9, j) == 0);  // block diagonal

  // A rank-1 complement cannot host two independent roots.
  CHECK_THROWS_AS(extend_direct_sum(e, "A2"), NoExtension);
}

TEST_CASE("rank-8 arms-(3,2,2) embedding: complement is an A2") {
  const auto e = prove_main("HE_6(1)").embedding;
  const auto sub = orthogonal_sublattice(e);
  REQUIRE(sub.basis.size() == 2);
  CHECK(bareiss_det(sub.gram) == 3);  // A2 lattice discriminant

  for (const auto& bc : sub.basis) {
    const auto b = root_vector(e.host, bc);
    for (const auto& r : e.roots) CHECK(pairing(b, r) == 0);
    Int g = 0;
    for (Int v : bc) g = std::gcd(g, v);
    CHECK(g == 1);
  }

  // The complement holds exactly the three positive roots of an A2, and
  // their dual-basis patterns are the published combinations.
  const auto roots = find_orthogonal_real_roots(e);
  REQUIRE(roots.size() == 3);
  std::vector<std::vector<Int>> got;
  for (const auto& r : roots) {
    CHECK(norm(r) == 2);
    got.push_back(weight_pattern(r));
  }
  const auto w1 = pattern(e.host, {{"8", 1}, {"1", -2}});
  const auto w2 = pattern(e.host, {{"1", 1}, {"0", -2}});
  const auto w3 = pattern(e.host, {{"8", 1}, {"1", -1}, {"0", -2}});
  for (const auto& w : {w1, w2, w3})
    CHECK(std::count(got.begin(), got.end(), w) == 1);

  // One unordered pair pairs to -1; the third root is their sum.
  int neg_pairs = 0;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      const Int p = pairing(roots[i], roots[j]);
      CHECK((p == -1 || p == 1));
      neg_pairs += p == -1 ? 1 : 0;
    }
  CHECK(neg_pairs == 1);

  const auto ext = extend_direct_sum(e, "A2");
  CHECK(ext.validated);
  CHECK(ext.size() == 10);
  CHECK(ext.labels[8] == "g1");
  CHECK(ext.labels[9] == "g2");
  CHECK(ext.gram(8, 9) == -1);
  for (int i = 0; i < 8; ++i) {
    CHECK(ext.gram(i, 8) == 0);
    CHECK(ext.gram(i, 9) == 0);
  }
}

TEST_CASE("complement bases stay orthogonal across the embedding table") {
  for (const char* name : {"X_6", "Y_5", "Z_4", "T_2", "HA_4(1)", "HD_5(1)"}) {
    const auto e = prove_main(name).embedding;
    const auto sub = orthogonal_sublattice(e);
    CHECK(sub.basis.size() == static_cast<size_t>(10 - e.size()));
    for (const auto& bc : sub.basis) {
      const auto b = root_vector(e.host, bc);
      for (const auto& r : e.roots) CHECK(pairing(b, r) == 0);
    }
    // The Gram matrix recorded for the basis matches direct pairings.
    for (size_t i = 0; i < sub.basis.size(); ++i)
      for (size_t j = 0; j < sub.basis.size(); ++j)
        CHECK(sub.gram(static_cast<int>(i), static_cast<int>(j)) ==
              pairing(root_vector(e.host, sub.basis[i]), root_vector(e.host, sub.basis[j])));
  }
}
