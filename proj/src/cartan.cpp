#include "kmroot/cartan.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace kmroot {

std::string to_string(DiagramKind k) {
  switch (k) {
    case DiagramKind::Finite: return "finite";
    case DiagramKind::Affine: return "affine";
    case DiagramKind::Indefinite: return "indefinite";
  }
  return "?";
}

// ---- Gcm --------------------------------------------------------------------

Gcm::Gcm(SquareMat m) : a_(std::move(m)) { symmetric_ = a_.is_symmetric(); }

Gcm Gcm::validate(const SquareMat& m) {
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    if (m(i, i) != 2) throw BadDiagonal(i);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m(i, j) > 0) throw PositiveOffDiagonal(i, j);
      if ((m(i, j) == 0) != (m(j, i) == 0)) throw AsymmetricZero(i, j);
    }
  }
  return Gcm(m);
}

// ---- DynkinDiagram ----------------------------------------------------------

DynkinDiagram DynkinDiagram::of_gcm(const Gcm& g, std::vector<std::string> labels) {
  if (!g.simply_laced()) throw NonSymmetric{};
  DynkinDiagram d;
  d.n_ = g.n();
  d.mult_ = SquareMat(d.n_);
  for (int i = 0; i < d.n_; ++i)
    for (int j = 0; j < d.n_; ++j)
      d.mult_(i, j) = i == j ? 0 : checked_neg(g.at(i, j));
  d.set_labels(std::move(labels));
  return d;
}

DynkinDiagram DynkinDiagram::from_edges(int n, const std::vector<std::tuple<int, int, Int>>& edges,
                                        std::vector<std::string> labels) {
  DynkinDiagram d;
  d.n_ = n;
  d.mult_ = SquareMat(n);
  for (auto [i, j, m] : edges) {
    if (i < 0 || i >= n) throw IndexOutOfRange(i);
    if (j < 0 || j >= n) throw IndexOutOfRange(j);
    if (i == j) throw BadMultiplicity("loop edge at vertex " + std::to_string(i));
    if (m < 1) throw BadMultiplicity("edge multiplicity must be positive");
    d.mult_(i, j) = m;
    d.mult_(j, i) = m;
  }
  d.set_labels(std::move(labels));
  return d;
}

Gcm DynkinDiagram::to_gcm() const {
  SquareMat m(n_);
  for (int i = 0; i < n_; ++i) {
    m(i, i) = 2;
    for (int j = 0; j < n_; ++j)
      if (i != j) m(i, j) = checked_neg(mult_(i, j));
  }
  return Gcm::validate(m);
}

void DynkinDiagram::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n_)
    throw BadMultiplicity("label count does not match vertex count");
  labels_ = std::move(labels);
}

std::string DynkinDiagram::label(int i) const {
  if (i < 0 || i >= n_) throw IndexOutOfRange(i);
  return labels_.empty() ? std::to_string(i) : labels_[i];
}

int DynkinDiagram::index_of_label(const std::string& l) const {
  for (int i = 0; i < n_; ++i)
    if (label(i) == l) return i;
  return -1;
}

DynkinDiagram DynkinDiagram::induced(const std::vector<int>& keep) const {
  DynkinDiagram d;
  d.n_ = static_cast<int>(keep.size());
  d.mult_ = mult_.submatrix(keep);
  if (!labels_.empty()) {
    d.labels_.reserve(keep.size());
    for (int v : keep) d.labels_.push_back(labels_[v]);
  }
  return d;
}

// ---- connectivity -----------------------------------------------------------

std::vector<std::vector<int>> connected_components(const DynkinDiagram& d,
                                                   const std::vector<int>& subset) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(d.n(), 1);
  for (int v : subset) seen[v] = 0;
  for (int v : subset) {
    if (seen[v]) continue;
    std::vector<int> comp{v};
    seen[v] = 1;
    for (size_t h = 0; h < comp.size(); ++h)
      for (int u : subset)
        if (!seen[u] && d.mult(comp[h], u) != 0) {
          seen[u] = 1;
          comp.push_back(u);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return comps;
}

std::vector<std::vector<int>> connected_components(const DynkinDiagram& d) {
  std::vector<int> all(d.n());
  std::iota(all.begin(), all.end(), 0);
  return connected_components(d, all);
}

bool is_connected(const Gcm& g) {
  const int n = g.n();
  if (n == 0) return true;
  std::vector<int> comp{0};
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (size_t h = 0; h < comp.size(); ++h)
    for (int u = 0; u < n; ++u)
      if (!seen[u] && g.at(comp[h], u) != 0) {
        seen[u] = 1;
        comp.push_back(u);
      }
  return static_cast<int>(comp.size()) == n;
}

// ---- classification ---------------------------------------------------------

namespace {

// Kind by exhaustive principal minors; no hyperbolic flag.
DiagramKind classify_kind(const Gcm& g) {
  const int n = g.n();
  if (n > 12) throw RankTooLarge(n);
  if (n == 0) return DiagramKind::Finite;
  std::vector<int> idx;
  idx.reserve(n);
  const unsigned full = (1u << n) - 1;
  for (unsigned mask = 1; mask < full; ++mask) {
    idx.clear();
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    if (bareiss_det(g.mat().submatrix(idx)) <= 0) return DiagramKind::Indefinite;
  }
  const Int det = bareiss_det(g.mat());
  if (det > 0) return DiagramKind::Finite;
  if (det == 0) return DiagramKind::Affine;
  return DiagramKind::Indefinite;
}

// Every single-vertex deletion leaves only finite or affine components.
// pre: callers have already established connected + indefinite.
bool hyperbolic_check(const Gcm& g) {
  const int n = g.n();
  DynkinDiagram shape;  // zero-pattern graph works for nonsymmetric input too
  {
    SquareMat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = (i != j && g.at(i, j) != 0) ? 1 : 0;
    std::vector<std::tuple<int, int, Int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (m(i, j) != 0) edges.emplace_back(i, j, 1);
    shape = DynkinDiagram::from_edges(n, edges);
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int u = 0; u < n; ++u)
      if (u != v) rest.push_back(u);
    for (const auto& comp : connected_components(shape, rest))
      if (classify_kind(g.principal(comp)) == DiagramKind::Indefinite) return false;
  }
  return true;
}

}  // namespace

DiagramType classify(const Gcm& g) {
  DiagramType t;
  t.kind = classify_kind(g);
  t.hyperbolic =
      t.kind == DiagramKind::Indefinite && is_connected(g) && hyperbolic_check(g);
  return t;
}

bool is_hyperbolic(const Gcm& g) {
  if (!is_connected(g)) throw NotConnected{};
  if (classify_kind(g) != DiagramKind::Indefinite) throw NotIndefinite{};
  return hyperbolic_check(g);
}

bool is_finite_or_affine(const Gcm& g) {
  if (!g.simply_laced()) throw NonSymmetric{};
  return is_positive_semidefinite(g.mat());
}

// ---- canonical form ---------------------------------------------------------

namespace {

// Branch-and-bound over vertex orderings for the lexicographically minimal
// adjacency encoding. Encoding: [n] then, for each position k, the column of
// multiplicities against positions 0..k-1, two bytes each.
struct Canon {
  const DynkinDiagram& d;
  int n;
  std::vector<unsigned char> best;
  std::vector<int> bestOrder;
  bool haveBest = false;
  std::vector<unsigned char> cur;
  std::vector<int> order;
  std::vector<char> used;

  explicit Canon(const DynkinDiagram& dd) : d(dd), n(dd.n()), used(dd.n(), 0) {
    cur.push_back(static_cast<unsigned char>(n));
    order.reserve(n);
  }

  std::vector<unsigned char> block_for(int v) const {
    std::vector<unsigned char> b;
    b.reserve(order.size() * 2);
    for (int u : order) {
      const Int m = d.mult(u, v);
      if (m > 65535) throw BadMultiplicity("edge multiplicity exceeds the encodable bound");
      b.push_back(static_cast<unsigned char>(m >> 8));
      b.push_back(static_cast<unsigned char>(m & 0xff));
    }
    return b;
  }

  // -1 / 0 / +1 for cur-so-far against the same-length prefix of best.
  int prefix_rel() const {
    if (!haveBest) return -1;
    return std::memcmp(cur.data(), best.data(), cur.size());
  }

  void dfs() {
    const int k = static_cast<int>(order.size());
    if (k == n) {
      if (!haveBest || cur < best) {
        best = cur;
        bestOrder = order;
        haveBest = true;
      }
      return;
    }
    std::vector<std::pair<std::vector<unsigned char>, int>> cands;
    cands.reserve(n - k);
    for (int v = 0; v < n; ++v)
      if (!used[v]) cands.emplace_back(block_for(v), v);
    std::sort(cands.begin(), cands.end());
    for (const auto& [block, v] : cands) {
      if (haveBest && prefix_rel() == 0) {
        const int cmp =
            std::memcmp(block.data(), best.data() + cur.size(), block.size());
        if (cmp > 0) break;  // later candidates only sort higher
      }
      used[v] = 1;
      order.push_back(v);
      cur.insert(cur.end(), block.begin(), block.end());
      dfs();
      cur.resize(cur.size() - block.size());
      order.pop_back();
      used[v] = 0;
    }
  }
};

struct CanonResult {
  CanonicalForm form;
  std::vector<int> order;  // order[i] = original vertex at canonical position i
};

CanonResult canon_with_order(const DynkinDiagram& d) {
  if (d.n() > 12) throw RankTooLarge(d.n());
  if (d.n() == 0) return {{0}, {}};
  Canon c(d);
  c.dfs();
  return {std::move(c.best), std::move(c.bestOrder)};
}

}  // namespace

CanonicalForm canonical_form(const DynkinDiagram& d) { return canon_with_order(d).form; }

std::optional<std::vector<int>> are_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b) {
  if (a.n() != b.n()) return std::nullopt;
  const auto ca = canon_with_order(a);
  const auto cb = canon_with_order(b);
  if (ca.form != cb.form) return std::nullopt;
  std::vector<int> p(a.n());
  for (int pos = 0; pos < a.n(); ++pos) p[ca.order[pos]] = cb.order[pos];
  return p;
}

DynkinDiagram canonical_relabel(const DynkinDiagram& d) {
  const auto c = canon_with_order(d);
  const int n = d.n();
  std::vector<std::tuple<int, int, Int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Int m = d.mult(c.order[i], c.order[j]);
      if (m != 0) edges.emplace_back(i, j, m);
    }
  return DynkinDiagram::from_edges(n, edges);
}

}  // namespace kmroot
