#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kmroot/cartan.hpp"

namespace kmroot {

enum class Family { HA, HD, HE, Irregular, Rank2, Auxiliary };

struct CatalogEntry {
  std::string name;  // canonical name, e.g. "HA_3(1)", "E10", "X_6"
  int rank = 0;
  Gcm gcm;
  DynkinDiagram diagram;  // carries the published vertex labels
  Family family = Family::Auxiliary;
};

// Fixed published index: the 23 simply laced hyperbolic diagrams, the two
// indefinite non-hyperbolic auxiliaries HA_8(1) and P10, and the finite and
// affine bases the constructions start from. H2(a) is parameterized and
// resolved by get(), not listed.
const std::vector<CatalogEntry>& catalog_entries();

// The 23 hyperbolic names in index order.
const std::vector<std::string>& hyperbolic_names();

// Name lookup is alias tolerant (case, underscores, "E10" vs "HE_8(1)",
// "H2(a)" with a >= 3). Throws UnknownName.
CatalogEntry get(const std::string& name);
std::optional<CatalogEntry> try_get(const std::string& name);

// First isomorphic entry in index order; rank-2 diagrams with multiplicity
// a >= 3 resolve to "H2(a)".
std::optional<std::string> identify(const DynkinDiagram& d);

// Builders for the standard simply laced diagrams, with published labels.
DynkinDiagram finite_diagram(char family, int k);   // 'A' k>=1, 'D' k>=4, 'E' k in 6..8; labels 1..k
DynkinDiagram affine_diagram(char family, int k);   // untwisted X_k^(1); labels 0..k
// New first vertex labeled "-1" attached to the vertex labeled "0" by a single edge.
DynkinDiagram extend_affine(const DynkinDiagram& affine);

// All connected hyperbolic simply laced diagrams of the given rank, sorted by
// canonical form. pre: 3 <= rank <= 10 (RankOutOfRange); the rank-2 family
// H2(a) is infinite and excluded by design.
std::vector<DynkinDiagram> enumerate_hyperbolic_simply_laced(int rank, bool parallel = true);

// Serial reference for the enumerator, compared against the parallel path in tests.
std::vector<DynkinDiagram> enumerate_hyperbolic_serial(int rank);

}  // namespace kmroot
