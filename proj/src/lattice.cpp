#include "kmroot/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kmroot/errors.hpp"
#include "kmroot/matrix.hpp"
#include "kmroot/threads.hpp"

namespace kmroot {

RootLattice::RootLattice(Gcm g, std::vector<std::string> labels, DiagramType t)
    : gcm_(std::move(g)), labels_(std::move(labels)), type_(t) {}

LatticePtr RootLattice::make(Gcm g, std::vector<std::string> labels) {
  if (!g.simply_laced()) throw NonSymmetric();
  if (!labels.empty() && static_cast<int>(labels.size()) != g.n())
    throw BadParameter("label count does not match the rank");
  const DiagramType t = classify(g);
  return LatticePtr(new RootLattice(std::move(g), std::move(labels), t));
}

int RootLattice::index_of_label(const std::string& label) const {
  for (int i = 0; i < rank(); ++i) {
    const std::string& li = labels_.empty() ? std::to_string(i) : labels_[static_cast<size_t>(i)];
    if (li == label) return i;
  }
  throw BadVertex("no vertex labeled '" + label + "'");
}

std::string RootVector::str() const {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(c[i]);
  }
  return s;
}

RootVector root_vector(LatticePtr host, std::vector<Int> coords) {
  if (!host) throw BadParameter("null host lattice");
  if (static_cast<int>(coords.size()) != host->rank())
    throw BadParameter("coordinate count does not match the host rank");
  return RootVector{std::move(host), std::move(coords)};
}

RootVector simple_root(const LatticePtr& host, int i) {
  if (!host) throw BadParameter("null host lattice");
  if (i < 0 || i >= host->rank()) throw IndexOutOfRange(i);
  std::vector<Int> c(static_cast<size_t>(host->rank()), 0);
  c[static_cast<size_t>(i)] = 1;
  return RootVector{host, std::move(c)};
}

bool same_host(const RootVector& x, const RootVector& y) {
  if (x.host == y.host) return true;
  return x.host && y.host && x.host->gcm() == y.host->gcm();
}

Int height(const RootVector& x) {
  Int h = 0;
  for (Int v : x.c) h = checked_add(h, v);
  return h;
}

Int pairing(const RootVector& x, const RootVector& y) {
  if (!same_host(x, y)) throw HostMismatch();
  const Gcm& g = x.host->gcm();
  const int n = g.n();
  Int acc = 0;
  for (int i = 0; i < n; ++i) {
    if (x.c[static_cast<size_t>(i)] == 0) continue;
    Int row = 0;
    for (int j = 0; j < n; ++j)
      row = checked_add(row, checked_mul(g.at(i, j), y.c[static_cast<size_t>(j)]));
    acc = checked_add(acc, checked_mul(x.c[static_cast<size_t>(i)], row));
  }
  return acc;
}

Int norm(const RootVector& x) { return pairing(x, x); }

RootVector operator+(const RootVector& x, const RootVector& y) {
  if (!same_host(x, y)) throw HostMismatch();
  RootVector out{x.host, x.c};
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = checked_add(out.c[i], y.c[i]);
  return out;
}

RootVector operator-(const RootVector& x, const RootVector& y) {
  if (!same_host(x, y)) throw HostMismatch();
  RootVector out{x.host, x.c};
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = checked_sub(out.c[i], y.c[i]);
  return out;
}

RootVector operator*(Int k, const RootVector& x) {
  RootVector out{x.host, x.c};
  for (auto& v : out.c) v = checked_mul(k, v);
  return out;
}

bool operator==(const RootVector& x, const RootVector& y) {
  return same_host(x, y) && x.c == y.c;
}

RootVector simple_reflection(const RootVector& x, int i) {
  if (i < 0 || i >= x.host->rank()) throw IndexOutOfRange(i);
  const Gcm& g = x.host->gcm();
  Int coeff = 0;
  for (int j = 0; j < g.n(); ++j)
    coeff = checked_add(coeff, checked_mul(g.at(i, j), x.c[static_cast<size_t>(j)]));
  RootVector out{x.host, x.c};
  out.c[static_cast<size_t>(i)] = checked_sub(out.c[static_cast<size_t>(i)], coeff);
  return out;
}

RootVector reflect_by(const RootVector& x, const RootVector& beta) {
  if (!same_host(x, beta)) throw HostMismatch();
  if (norm(beta) != 2) throw NotNormTwo();
  const Int k = pairing(x, beta);
  RootVector out{x.host, x.c};
  for (size_t i = 0; i < out.c.size(); ++i)
    out.c[i] = checked_sub(out.c[i], checked_mul(k, beta.c[i]));
  return out;
}

RootVector null_root(const LatticePtr& host) {
  if (!host) throw BadParameter("null host lattice");
  if (host->type().kind != DiagramKind::Affine) throw NotAffine();
  const Gcm& g = host->gcm();
  const int n = g.n();

  // Rational row reduction; the kernel must be one-dimensional.
  std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(g.at(i, j));
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int pr = -1;
    for (int r = row; r < n; ++r)
      if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
    const Rat inv = Rat(1) / m[static_cast<size_t>(row)][static_cast<size_t>(col)];
    for (int j = 0; j < n; ++j)
      m[static_cast<size_t>(row)][static_cast<size_t>(j)] =
          m[static_cast<size_t>(row)][static_cast<size_t>(j)] * inv;
    for (int r = 0; r < n; ++r) {
      if (r == row) continue;
      const Rat f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        m[static_cast<size_t>(r)][static_cast<size_t>(j)] =
            m[static_cast<size_t>(r)][static_cast<size_t>(j)] -
            f * m[static_cast<size_t>(row)][static_cast<size_t>(j)];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != n - 1)
    throw NormalizationFailed("kernel is not one-dimensional");
  int free_col = -1;
  for (int col = 0, p = 0; col < n; ++col) {
    if (p < static_cast<int>(pivot_col.size()) && pivot_col[static_cast<size_t>(p)] == col) {
      ++p;
      continue;
    }
    free_col = col;
  }
  std::vector<Rat> x(static_cast<size_t>(n), Rat(0));
  x[static_cast<size_t>(free_col)] = Rat(1);
  for (int r = 0; r < static_cast<int>(pivot_col.size()); ++r)
    x[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
        Rat(0) - m[static_cast<size_t>(r)][static_cast<size_t>(free_col)];

  // Clear denominators, divide by the common gcd, and fix the sign.
  Int lcm = 1;
  for (const Rat& v : x) lcm = checked_mul(lcm / std::gcd(lcm, v.den), v.den);
  std::vector<Int> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Rat& v = x[static_cast<size_t>(i)];
    c[static_cast<size_t>(i)] = checked_mul(v.num, lcm / v.den);
  }
  Int g0 = 0;
  for (Int v : c) g0 = std::gcd(g0, v);
  if (g0 == 0) throw NormalizationFailed("kernel vector is zero");
  for (auto& v : c) v /= g0;
  int neg = 0, pos = 0;
  for (Int v : c) (v < 0 ? neg : pos) += (v != 0);
  if (neg > 0 && pos == 0)
    for (auto& v : c) v = checked_neg(v);
  for (Int v : c)
    if (v <= 0) throw NormalizationFailed("kernel vector is not strictly positive");
  // The normalization convention pins coordinate 1 at the vertex labeled "0".
  for (int i = 0; i < n; ++i) {
    const std::string li =
        host->labels().empty() ? std::to_string(i) : host->labels()[static_cast<size_t>(i)];
    if (li == "0") {
      if (c[static_cast<size_t>(i)] != 1)
        throw NormalizationFailed("coordinate at vertex 0 is not 1");
      break;
    }
  }
  return RootVector{host, std::move(c)};
}

std::optional<RootVector> WeightVector::integral() const {
  std::vector<Int> out;
  out.reserve(c.size());
  for (const Rat& v : c) {
    if (!v.is_integer()) return std::nullopt;
    out.push_back(v.num);
  }
  return RootVector{host, std::move(out)};
}

std::string WeightVector::str() const {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ' ';
    s += c[i].str();
  }
  return s;
}

std::vector<WeightVector> fundamental_weights(const LatticePtr& host) {
  if (!host) throw BadParameter("null host lattice");
  const int n = host->rank();
  std::vector<WeightVector> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> b(static_cast<size_t>(n), Rat(0));
    b[static_cast<size_t>(i)] = Rat(1);
    out.push_back(WeightVector{host, solve_rational(host->gcm().mat(), b)});
  }
  return out;
}

static bool same_host_w(const WeightVector& x, const WeightVector& y) {
  if (x.host == y.host) return true;
  return x.host && y.host && x.host->gcm() == y.host->gcm();
}

Rat pairing(const WeightVector& x, const WeightVector& y) {
  if (!same_host_w(x, y)) throw HostMismatch();
  const Gcm& g = x.host->gcm();
  Rat acc(0);
  for (int i = 0; i < g.n(); ++i) {
    if (x.c[static_cast<size_t>(i)].is_zero()) continue;
    Rat row(0);
    for (int j = 0; j < g.n(); ++j)
      row = row + Rat(g.at(i, j)) * y.c[static_cast<size_t>(j)];
    acc = acc + x.c[static_cast<size_t>(i)] * row;
  }
  return acc;
}

WeightVector operator-(const WeightVector& x, const WeightVector& y) {
  if (!same_host_w(x, y)) throw HostMismatch();
  WeightVector out{x.host, x.c};
  for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = out.c[i] - y.c[i];
  return out;
}

WeightVector operator*(const Rat& k, const WeightVector& x) {
  WeightVector out{x.host, x.c};
  for (auto& v : out.c) v = k * v;
  return out;
}

namespace {

bool norm_test_scope(const DiagramType& t) {
  return t.kind == DiagramKind::Finite || t.kind == DiagramKind::Affine || t.hyperbolic;
}

bool is_simple_vector(const std::vector<Int>& c) {
  int ones = 0;
  for (Int v : c) {
    if (v == 1)
      ++ones;
    else if (v != 0)
      return false;
  }
  return ones == 1;
}

}  // namespace

bool is_positive_real_root_norm(const RootVector& x) {
  if (!norm_test_scope(x.host->type())) throw TheoremHypothesisViolated();
  for (Int v : x.c)
    if (v < 0) return false;
  return norm(x) == 2;
}

bool is_positive_real_root_descent(const RootVector& x) {
  for (Int v : x.c)
    if (v < 0) throw NegativeCoordinates();
  RootVector cur = x;
  Int guard = checked_add(height(x), 1);
  while (guard-- > 0) {
    if (is_simple_vector(cur.c)) return true;
    int i = -1;
    for (int j = 0; j < cur.host->rank(); ++j)
      if (pairing(cur, simple_root(cur.host, j)) > 0) {
        i = j;
        break;
      }
    if (i < 0) return false;
    cur = simple_reflection(cur, i);
    for (Int v : cur.c)
      if (v < 0) return false;
  }
  throw std::logic_error("descent failed to terminate within the height bound");
}

// ---- norm-2 box scan --------------------------------------------------------

namespace {

// Depth-first scan over nonnegative coordinate vectors with sum <= budget.
// t[j] accumulates the pairing of the fixed prefix with alpha_j; q is the norm
// of the prefix. Emits lexicographically ascending coordinate vectors.
void box_scan_rec(const Gcm& g, int idx, Int budget, std::vector<Int>& c, std::vector<Int>& t,
                  Int q, std::vector<std::vector<Int>>& out) {
  const int n = g.n();
  if (idx == n) {
    if (q == 2) out.push_back(c);
    return;
  }
  const Int t_idx_prefix = t[static_cast<size_t>(idx)];
  for (Int val = 0; val <= budget; ++val) {
    const Int qv =
        checked_add(q, checked_add(checked_mul(checked_mul(val, val), g.at(idx, idx)),
                                   checked_mul(2, checked_mul(val, t_idx_prefix))));
    c[static_cast<size_t>(idx)] = val;
    if (val != 0)
      for (int j = 0; j < n; ++j)
        t[static_cast<size_t>(j)] = checked_add(t[static_cast<size_t>(j)], g.at(idx, j));
    box_scan_rec(g, idx + 1, budget - val, c, t, qv, out);
  }
  // Restore: after the loop t holds prefix + budget * row(idx).
  for (int j = 0; j < n; ++j)
    t[static_cast<size_t>(j)] =
        checked_sub(t[static_cast<size_t>(j)], checked_mul(budget, g.at(idx, j)));
  c[static_cast<size_t>(idx)] = 0;
}

}  // namespace

std::vector<std::vector<Int>> norm2_box_scan_serial(const Gcm& g, int maxHeight) {
  if (maxHeight < 0) throw BadParameter("maxHeight must be nonnegative");
  std::vector<std::vector<Int>> out;
  if (g.n() == 0) return out;
  std::vector<Int> c(static_cast<size_t>(g.n()), 0), t(static_cast<size_t>(g.n()), 0);
  box_scan_rec(g, 0, maxHeight, c, t, 0, out);
  return out;
}

std::vector<std::vector<Int>> norm2_box_scan_parallel(const Gcm& g, int maxHeight) {
  if (maxHeight < 0) throw BadParameter("maxHeight must be nonnegative");
#ifdef _OPENMP
  const int n = g.n();
  if (n == 0) return {};
  if (n == 1) return norm2_box_scan_serial(g, maxHeight);
  std::vector<std::vector<std::vector<Int>>> chunks(static_cast<size_t>(maxHeight) + 1);
#pragma omp parallel for schedule(dynamic) num_threads(effective_threads())
  for (int v0 = 0; v0 <= maxHeight; ++v0) {
    std::vector<Int> c(static_cast<size_t>(n), 0), t(static_cast<size_t>(n), 0);
    c[0] = v0;
    for (int j = 0; j < n; ++j)
      t[static_cast<size_t>(j)] = checked_mul(static_cast<Int>(v0), g.at(0, j));
    const Int q = checked_mul(checked_mul(static_cast<Int>(v0), static_cast<Int>(v0)), g.at(0, 0));
    box_scan_rec(g, 1, maxHeight - v0, c, t, q, chunks[static_cast<size_t>(v0)]);
  }
  std::vector<std::vector<Int>> out;
  for (auto& ch : chunks)
    for (auto& v : ch) out.push_back(std::move(v));
  return out;
#else
  return norm2_box_scan_serial(g, maxHeight);
#endif
}

std::vector<RootVector> real_roots_up_to_height(const LatticePtr& host, int maxHeight,
                                                bool parallel) {
  if (!host) throw BadParameter("null host lattice");
  if (!norm_test_scope(host->type())) throw TheoremHypothesisViolated();
  if (maxHeight < 0) throw BadParameter("maxHeight must be nonnegative");
  const auto raw = parallel ? norm2_box_scan_parallel(host->gcm(), maxHeight)
                            : norm2_box_scan_serial(host->gcm(), maxHeight);
  std::vector<RootVector> out;
  out.reserve(raw.size());
  for (const auto& c : raw) out.push_back(RootVector{host, c});
  std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
    const Int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a.c < b.c;
  });
  return out;
}

}  // namespace kmroot
