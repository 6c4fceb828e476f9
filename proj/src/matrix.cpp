#include "kmroot/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "kmroot/errors.hpp"

namespace kmroot {

bool SquareMat::is_symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

SquareMat SquareMat::submatrix(const std::vector<int>& idx) const {
  SquareMat s(static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      s(static_cast<int>(i), static_cast<int>(j)) = (*this)(idx[i], idx[j]);
  return s;
}

Int bareiss_det(SquareMat m) {
  const int n = m.n();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m(i, j) = exact_div(
            checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j))), prev);
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

// Fraction-free symmetric elimination. Pivots are chosen among positive
// diagonal entries, so each live entry stays a positive multiple of the exact
// Schur complement entry and sign tests on the integers are sound.
bool is_positive_semidefinite(SquareMat m) {
  const int n = m.n();
  std::vector<int> live(n);
  std::iota(live.begin(), live.end(), 0);
  Int prev = 1;
  while (!live.empty()) {
    int pivot = -1;
    for (int i : live) {
      if (m(i, i) < 0) return false;
      if (m(i, i) > 0 && pivot < 0) pivot = i;
    }
    if (pivot < 0) {
      // Zero diagonal throughout: semidefinite iff the whole block vanishes.
      for (int i : live)
        for (int j : live)
          if (m(i, j) != 0) return false;
      return true;
    }
    const Int d = m(pivot, pivot);
    for (int i : live) {
      if (i == pivot) continue;
      for (int j : live) {
        if (j == pivot) continue;
        m(i, j) = exact_div(
            checked_sub(checked_mul(m(i, j), d), checked_mul(m(i, pivot), m(pivot, j))), prev);
      }
    }
    prev = d;
    live.erase(std::find(live.begin(), live.end(), pivot));
  }
  return true;
}

std::vector<Rat> solve_rational(const SquareMat& m, const std::vector<Rat>& rhs) {
  const int n = m.n();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m(i, j));
    a[i][n] = rhs[i];
  }
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) { p = i; break; }
    if (p < 0) throw SingularMatrix{};
    std::swap(a[k], a[p]);
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k].is_zero()) continue;
      Rat f = a[i][k] / a[k][k];
      for (int j = k; j <= n; ++j) a[i][j] = a[i][j] - f * a[k][j];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

}  // namespace kmroot
