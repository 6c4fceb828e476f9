#pragma once

#include <vector>

#include "kmroot/checked.hpp"

namespace kmroot {

// Dense square integer matrix, row major.
class SquareMat {
  int n_ = 0;
  std::vector<Int> a_;

 public:
  SquareMat() = default;
  explicit SquareMat(int n, Int fill = 0) : n_(n), a_(static_cast<size_t>(n) * n, fill) {}

  int n() const { return n_; }
  Int operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

  bool operator==(const SquareMat&) const = default;

  bool is_symmetric() const;

  // Principal submatrix on the given index list, in the given order.
  SquareMat submatrix(const std::vector<int>& idx) const;
};

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int bareiss_det(SquareMat m);

// Exact positive-semidefiniteness of a symmetric integer matrix, by
// fraction-free symmetric elimination pivoting on positive diagonal entries.
// pre: m symmetric
bool is_positive_semidefinite(SquareMat m);

// Exact rational solve m x = rhs. Throws SingularMatrix.
std::vector<Rat> solve_rational(const SquareMat& m, const std::vector<Rat>& rhs);

}  // namespace kmroot
