#pragma once

#include <vector>

#include "kmroot/embed.hpp"

namespace kmroot {

struct SublatticeBasis {
  LatticePtr host;
  std::vector<std::vector<Int>> basis;  // primitive integer kernel basis
  SquareMat gram;                       // induced form on the basis
};

// Saturated integer kernel of x -> ((x, beta_i))_i, by unimodular column
// reduction; every integer vector orthogonal to all roots of e lies in the
// span. pre: e validated (BadParameter).
SublatticeBasis orthogonal_sublattice(const Embedding& e);

// Positive real roots of the host orthogonal to every root of e. When the
// induced form on the complement is positive definite the enumeration is
// exhaustive; otherwise coefficients range over [-bound, bound]. Sorted by
// coordinates. Host must satisfy the norm-test hypotheses.
std::vector<RootVector> find_orthogonal_real_roots(const Embedding& e, Int bound = 10);

// Append an orthogonal A1 (one root) or A2 (two roots pairing to -1) summand
// and revalidate; the Gram matrix must come out block diagonal.
// extra: "A1" or "A2" (BadParameter). Throws NoExtension when no orthogonal
// roots fit.
Embedding extend_direct_sum(const Embedding& e, const std::string& extra, Int bound = 10);

}  // namespace kmroot
