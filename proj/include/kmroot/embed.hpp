#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmroot/catalog.hpp"
#include "kmroot/lattice.hpp"

namespace kmroot {

// A verified root subdiagram: positive real roots of the host with pairwise
// nonpositive pairings. The Gram matrix is then a symmetric GCM and its
// diagram is the embedded one.
struct Embedding {
  LatticePtr host;
  std::vector<RootVector> roots;
  SquareMat gram;
  std::vector<std::string> labels;    // one label per row
  std::optional<std::string> target;  // catalog name when aligned
  bool validated = false;

  int size() const { return static_cast<int>(roots.size()); }
  DynkinDiagram diagram() const;
  int row_of_label(const std::string& label) const;  // BadVertex when absent
};

// Certifies the root list: each root positive real (norm test on finite,
// affine, and hyperbolic hosts; descent test on other indefinite hosts, which
// covers the intermediate non-hyperbolic frames), pairwise pairings <= 0.
// Throws NotRealRoot(i), NotPositive(i), PositivePairing(i,j), BadParameter.
Embedding check_root_subdiagram(const LatticePtr& host, std::vector<RootVector> roots,
                                std::vector<std::string> labels = {});

// Hyperbolic extension HX of an affine diagram: vertex "-1" attached to the
// affine vertex "0" by a single edge, plus the lifted null root.
struct HxLattice {
  LatticePtr lattice;
  int minus_one = 0;  // index of the extending vertex
  int zero = 0;       // index of the affine vertex "0"
  RootVector delta;   // null root of the affine part, in HX coordinates
};

// Build HX from an affine entry (labels shift by one; "-1" comes first).
// Throws NotAffine, BadVertex.
HxLattice hyperbolic_extension(const CatalogEntry& affine);
// Read the HX structure off a catalog hyperbolic-extension entry (HA/HD/HE
// families, E10, and the auxiliaries HA_8(1), P10). Throws BadVertex, NotAffine.
HxLattice hx_structure(const CatalogEntry& hx);

Embedding identity_embedding(const LatticePtr& host);

// beta_{-1} = delta + alpha_0 + 2 alpha_{-1}, every other root stays simple.
Embedding principle_a(const HxLattice& hx);
// beta_p = alpha_p + delta for one vertex p in 1..r (paper label; BadVertex).
Embedding principle_b(const HxLattice& hx, int p);
// beta_p = alpha_p + delta for every p in F, F subset of 1..r. Empty F gives
// the identity embedding of HX.
Embedding principle_b_prime(const HxLattice& hx, const std::vector<int>& F);
// Shrink an induced A_p chain (row indices, in order) to the sum of its
// roots. Throws NotAChain; a common neighbor of the chain ends produces a
// double edge in the result.
Embedding principle_c(const Embedding& e, const std::vector<int>& chain_rows);
// Drop the given rows. Deleting nothing returns e unchanged.
Embedding principle_d(const Embedding& e, const std::vector<int>& drop_rows);

// Substitute: every root of inner (coordinates over outer's rows) becomes a
// host vector of outer. pre: inner.host gcm == outer.gram, index aligned
// (HostMismatch). Gram preservation under substitution is asserted.
Embedding compose(const Embedding& outer, const Embedding& inner);

// Row permutation: row i moves to position perm[i].
Embedding permute_rows(const Embedding& e, const std::vector<int>& perm);
// Permute and relabel the rows to match the catalog entry exactly
// (post: gram == entry gcm). Throws NotIsomorphicTo when the diagram does not
// match, UnknownName for an unknown catalog name.
Embedding align_to_catalog(const Embedding& e, const std::string& name);

// The T_m series inside HA_1(1): beta_1 = (m+1) alpha_1 + m alpha_0,
// beta_0 = alpha_1 + 2 alpha_0, beta_{-1} = alpha_{-1}.
// Gram = [[2,-2,-m],[-2,2,-2],[-m,-2,2]] in row order (-1, 0, 1).
Embedding t_family(int m);  // BadParameter when m < 0

// H2(a) inside HA_1(1): beta_1 = alpha_{-1}, beta_2 = (a-1) delta + alpha_0;
// Gram = [[2,-a],[-a,2]]. BadParameter when a < 3.
Embedding rank2_embedding(Int a);

struct ProveResult {
  Embedding embedding;             // in E10, aligned to the target
  std::string word;                // composition word
  std::vector<std::string> trace;  // one line per step
};

// Drives the recipe table: any of the 23 hyperbolic catalog names, the
// auxiliaries HA_8(1) and P10, or parameterized "H2(a)". Throws UnknownTarget.
ProveResult prove_main(const std::string& target);

// The E10 host lattice (shared, built once).
const LatticePtr& e10_lattice();

}  // namespace kmroot
