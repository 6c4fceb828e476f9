#include "kmroot/orth.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "kmroot/errors.hpp"
#include "kmroot/matrix.hpp"

namespace kmroot {

namespace {

// Principal minor of g with row/column i removed.
Int complementary_minor(const SquareMat& g, int i) {
  std::vector<int> keep;
  for (int j = 0; j < g.n(); ++j)
    if (j != i) keep.push_back(j);
  return bareiss_det(g.submatrix(keep));
}

}  // namespace

SublatticeBasis orthogonal_sublattice(const Embedding& e) {
  if (!e.validated) throw BadParameter("embedding is not validated");
  const int n = e.host->rank();
  const int k = e.size();

  // Constraint matrix M[i][j] = (beta_i, alpha_j).
  std::vector<std::vector<Int>> M(static_cast<size_t>(k), std::vector<Int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j)
      M[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          pairing(e.roots[static_cast<size_t>(i)], simple_root(e.host, j));

  // Unimodular column reduction: kernel columns of the accumulated transform
  // span the saturated orthogonal sublattice.
  std::vector<std::vector<Int>> U(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) U[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int r = 0; r < k; ++r)
      std::swap(M[static_cast<size_t>(r)][static_cast<size_t>(a)],
                M[static_cast<size_t>(r)][static_cast<size_t>(b)]);
    for (int r = 0; r < n; ++r)
      std::swap(U[static_cast<size_t>(r)][static_cast<size_t>(a)],
                U[static_cast<size_t>(r)][static_cast<size_t>(b)]);
  };
  auto addmul_col = [&](int dst, int src, Int q) {  // col_dst -= q * col_src
    if (q == 0) return;
    for (int r = 0; r < k; ++r)
      M[static_cast<size_t>(r)][static_cast<size_t>(dst)] =
          checked_sub(M[static_cast<size_t>(r)][static_cast<size_t>(dst)],
                      checked_mul(q, M[static_cast<size_t>(r)][static_cast<size_t>(src)]));
    for (int r = 0; r < n; ++r)
      U[static_cast<size_t>(r)][static_cast<size_t>(dst)] =
          checked_sub(U[static_cast<size_t>(r)][static_cast<size_t>(dst)],
                      checked_mul(q, U[static_cast<size_t>(r)][static_cast<size_t>(src)]));
  };

  int lead = 0;
  for (int r = 0; r < k && lead < n; ++r) {
    bool any = false;
    for (int j = lead; j < n; ++j)
      if (M[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    for (;;) {
      int best = -1;
      for (int j = lead; j < n; ++j) {
        const Int v = M[static_cast<size_t>(r)][static_cast<size_t>(j)];
        if (v == 0) continue;
        if (best < 0 ||
            std::llabs(v) < std::llabs(M[static_cast<size_t>(r)][static_cast<size_t>(best)]))
          best = j;
      }
      swap_cols(best, lead);
      const Int piv = M[static_cast<size_t>(r)][static_cast<size_t>(lead)];
      bool clean = true;
      for (int j = lead + 1; j < n; ++j) {
        const Int v = M[static_cast<size_t>(r)][static_cast<size_t>(j)];
        addmul_col(j, lead, v / piv);
        if (M[static_cast<size_t>(r)][static_cast<size_t>(j)] != 0) clean = false;
      }
      if (clean) break;
    }
    ++lead;
  }

  SublatticeBasis out;
  out.host = e.host;
  for (int c = lead; c < n; ++c) {
    std::vector<Int> v(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = U[static_cast<size_t>(r)][static_cast<size_t>(c)];
    // Columns of a unimodular transform are primitive already; the division
    // is the documented normalization and must be a no-op.
    Int g0 = 0;
    for (Int x : v) g0 = std::gcd(g0, x);
    if (g0 == 0) throw std::logic_error("zero column in a unimodular transform");
    if (g0 != 1) throw std::logic_error("kernel basis vector is not primitive");
    int firstNz = -1;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        firstNz = static_cast<int>(i);
        break;
      }
    if (firstNz >= 0 && v[static_cast<size_t>(firstNz)] < 0)
      for (auto& x : v) x = checked_neg(x);
    out.basis.push_back(std::move(v));
  }

  const int r = static_cast<int>(out.basis.size());
  SquareMat gram(r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      gram(i, j) = pairing(RootVector{e.host, out.basis[static_cast<size_t>(i)]},
                           RootVector{e.host, out.basis[static_cast<size_t>(j)]});
  out.gram = std::move(gram);

  // Soundness: every basis vector really is orthogonal to every row.
  for (const auto& b : out.basis)
    for (int i = 0; i < k; ++i)
      if (pairing(RootVector{e.host, b}, e.roots[static_cast<size_t>(i)]) != 0)
        throw std::logic_error("kernel basis vector is not orthogonal to the rows");
  return out;
}

std::vector<RootVector> find_orthogonal_real_roots(const Embedding& e, Int bound) {
  if (bound < 1) throw BadParameter("bound must be at least 1");
  const SublatticeBasis sub = orthogonal_sublattice(e);
  const int r = static_cast<int>(sub.basis.size());
  std::vector<RootVector> out;
  if (r == 0) return out;

  // Positive definite complement: the dual bound makes the scan exhaustive.
  std::vector<Int> lim(static_cast<size_t>(r));
  const bool pd = is_positive_semidefinite(sub.gram) && bareiss_det(sub.gram) != 0;
  if (pd) {
    const Int det = bareiss_det(sub.gram);
    for (int i = 0; i < r; ++i) {
      // c_i^2 <= 2 * (G^{-1})_ii = 2 * minor_ii / det.
      const Int m2 = checked_mul(Int(2), complementary_minor(sub.gram, i));
      Int b = 0;
      while (checked_mul(checked_mul(b + 1, b + 1), det) <= m2) ++b;
      lim[static_cast<size_t>(i)] = b;
    }
  } else {
    for (int i = 0; i < r; ++i) lim[static_cast<size_t>(i)] = bound;
  }

  std::vector<Int> coef(static_cast<size_t>(r), 0);
  std::vector<Int> gamma(static_cast<size_t>(e.host->rank()), 0);
  auto emit = [&]() {
    for (int j = 0; j < e.host->rank(); ++j) {
      Int acc = 0;
      for (int i = 0; i < r; ++i)
        acc = checked_add(acc, checked_mul(coef[static_cast<size_t>(i)],
                                           sub.basis[static_cast<size_t>(i)][static_cast<size_t>(j)]));
      gamma[static_cast<size_t>(j)] = acc;
    }
    for (Int v : gamma)
      if (v < 0) return;
    RootVector cand{e.host, gamma};
    if (!is_positive_real_root_norm(cand)) return;
    for (int i = 0; i < e.size(); ++i)
      if (pairing(cand, e.roots[static_cast<size_t>(i)]) != 0)
        throw std::logic_error("orthogonality lost during the coefficient scan");
    out.push_back(std::move(cand));
  };
  // Odometer over the coefficient box.
  for (int i = 0; i < r; ++i) coef[static_cast<size_t>(i)] = -lim[static_cast<size_t>(i)];
  for (;;) {
    bool allZero = true;
    for (Int v : coef)
      if (v != 0) {
        allZero = false;
        break;
      }
    if (!allZero) emit();
    int i = r - 1;
    while (i >= 0 && coef[static_cast<size_t>(i)] == lim[static_cast<size_t>(i)]) {
      coef[static_cast<size_t>(i)] = -lim[static_cast<size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++coef[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end(),
            [](const RootVector& a, const RootVector& b) { return a.c < b.c; });
  return out;
}

Embedding extend_direct_sum(const Embedding& e, const std::string& extra, Int bound) {
  if (extra != "A1" && extra != "A2") throw BadParameter("extra summand must be A1 or A2");
  const std::vector<RootVector> cands = find_orthogonal_real_roots(e, bound);
  std::vector<RootVector> picked;
  if (extra == "A1") {
    if (cands.empty()) throw NoExtension("no orthogonal real root found");
    picked.push_back(cands.front());
  } else {
    bool found = false;
    for (size_t i = 0; i < cands.size() && !found; ++i)
      for (size_t j = i + 1; j < cands.size() && !found; ++j)
        if (pairing(cands[i], cands[j]) == -1) {
          picked.push_back(cands[i]);
          picked.push_back(cands[j]);
          found = true;
        }
    if (!found) throw NoExtension("no orthogonal pair with pairing -1 found");
  }
  std::vector<RootVector> roots = e.roots;
  std::vector<std::string> labels = e.labels;
  for (size_t i = 0; i < picked.size(); ++i) {
    roots.push_back(picked[i]);
    labels.push_back("g" + std::to_string(i + 1));
  }
  Embedding out = check_root_subdiagram(e.host, std::move(roots), std::move(labels));
  const int k = e.size();
  const int m = static_cast<int>(picked.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j)
      if (out.gram(i, k + j) != 0)
        throw std::logic_error("extension is not block diagonal");
  for (int i = 0; i < m; ++i)
    if (out.gram(k + i, k + i) != 2)
      throw std::logic_error("extension block diagonal is not 2");
  if (m == 2 && out.gram(k, k + 1) != -1)
    throw std::logic_error("extension block is not the rank-2 finite form");
  return out;
}

}  // namespace kmroot
