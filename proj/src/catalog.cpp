#include "kmroot/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "kmroot/errors.hpp"
#include "kmroot/matrix.hpp"
#include "kmroot/threads.hpp"

namespace kmroot {

namespace {

using Edge = std::tuple<int, int, Int>;

std::vector<std::string> number_labels(int lo, int hi) {
  std::vector<std::string> out;
  for (int i = lo; i <= hi; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<Edge> edges_of(const DynkinDiagram& d) {
  std::vector<Edge> out;
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j)
      if (d.mult(i, j) != 0) out.emplace_back(i, j, d.mult(i, j));
  return out;
}

std::vector<CatalogEntry> build_entries() {
  std::vector<CatalogEntry> v;
  auto add = [&v](std::string name, DynkinDiagram d, Family f) {
    Gcm g = d.to_gcm();
    v.push_back(CatalogEntry{std::move(name), d.n(), std::move(g), std::move(d), f});
  };

  for (int k = 1; k <= 7; ++k)
    add("HA_" + std::to_string(k) + "(1)", extend_affine(affine_diagram('A', k)), Family::HA);
  for (int k = 4; k <= 8; ++k)
    add("HD_" + std::to_string(k) + "(1)", extend_affine(affine_diagram('D', k)), Family::HD);
  add("HE_6(1)", extend_affine(affine_diagram('E', 6)), Family::HE);
  add("HE_7(1)", extend_affine(affine_diagram('E', 7)), Family::HE);
  add("E10", extend_affine(affine_diagram('E', 8)), Family::HE);

  // Rank 6: a star with center "2" and leaves -1, 0, 1, 3, 4.
  add("X_6",
      DynkinDiagram::from_edges(
          6, {{0, 3, 1}, {1, 3, 1}, {2, 3, 1}, {3, 4, 1}, {3, 5, 1}},
          {"-1", "0", "1", "2", "3", "4"}),
      Family::Irregular);
  // Rank 5: a four-cycle 0-1-2-3 with "-1" attached to the opposite pair 0, 2.
  add("Y_5",
      DynkinDiagram::from_edges(
          5, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {1, 4, 1}, {0, 1, 1}, {0, 3, 1}},
          {"-1", "0", "1", "2", "3"}),
      Family::Irregular);
  // Rank 4: a triangle 0-1-2 with "-1" attached to 0 and 2.
  add("Y_4",
      DynkinDiagram::from_edges(4, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {0, 1, 1}, {0, 3, 1}},
                                {"-1", "0", "1", "2"}),
      Family::Irregular);
  // Rank 4: the complete graph on -1, 0, 1, 2, all single bonds.
  add("Z_4",
      DynkinDiagram::from_edges(
          4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}},
          {"-1", "0", "1", "2"}),
      Family::Irregular);
  // Rank 3: 0=1 double bond, "-1" attached to both by single bonds.
  add("Y_3", DynkinDiagram::from_edges(3, {{1, 2, 2}, {0, 1, 1}, {0, 2, 1}}, {"-1", "0", "1"}),
      Family::Irregular);
  // Rank 3: the multiplicity-m triangles T_m, m = 2, 1, 0; bonds (-1,0) and
  // (0,1) are double, (-1,1) has multiplicity m.
  add("T_2", DynkinDiagram::from_edges(3, {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}}, {"-1", "0", "1"}),
      Family::Irregular);
  add("T_1", DynkinDiagram::from_edges(3, {{0, 1, 2}, {1, 2, 2}, {0, 2, 1}}, {"-1", "0", "1"}),
      Family::Irregular);
  add("T_0", DynkinDiagram::from_edges(3, {{0, 1, 2}, {1, 2, 2}}, {"-1", "0", "1"}),
      Family::Irregular);

  // Indefinite but not hyperbolic: used as intermediate hosts.
  add("HA_8(1)", extend_affine(affine_diagram('A', 8)), Family::Auxiliary);
  {
    const DynkinDiagram e10 = extend_affine(affine_diagram('E', 8));
    auto es = edges_of(e10);
    es.emplace_back(0, e10.index_of_label("8"), 1);  // close -1 against the short arm
    add("P10", DynkinDiagram::from_edges(10, es, e10.labels()), Family::Auxiliary);
  }

  // Affine and finite bases.
  for (int k = 1; k <= 8; ++k)
    add("A_" + std::to_string(k) + "(1)", affine_diagram('A', k), Family::Auxiliary);
  for (int k = 4; k <= 8; ++k)
    add("D_" + std::to_string(k) + "(1)", affine_diagram('D', k), Family::Auxiliary);
  for (int k = 6; k <= 8; ++k)
    add("E_" + std::to_string(k) + "(1)", affine_diagram('E', k), Family::Auxiliary);
  add("A1", finite_diagram('A', 1), Family::Auxiliary);
  add("A2", finite_diagram('A', 2), Family::Auxiliary);
  return v;
}

std::string norm_name(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (c == '_' || c == ' ') continue;
    t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return t;
}

const std::map<std::string, int>& alias_index() {
  static const std::map<std::string, int> m = [] {
    std::map<std::string, int> out;
    const auto& es = catalog_entries();
    for (int i = 0; i < static_cast<int>(es.size()); ++i) out.emplace(norm_name(es[i].name), i);
    out.emplace("he8(1)", out.at("e10"));
    return out;
  }();
  return m;
}

std::optional<Int> parse_rank2_parameter(const std::string& normalized) {
  // Accepts "h2(a)" with an integer a >= 3.
  if (normalized.size() < 5 || normalized.compare(0, 3, "h2(") != 0 || normalized.back() != ')')
    return std::nullopt;
  const std::string digits = normalized.substr(3, normalized.size() - 4);
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  Int a = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
    a = a * 10 + (c - '0');
  }
  if (a < 3) return std::nullopt;
  return a;
}

CatalogEntry rank2_entry(Int a) {
  DynkinDiagram d = DynkinDiagram::from_edges(2, {{0, 1, a}}, {"1", "2"});
  Gcm g = d.to_gcm();
  return CatalogEntry{"H2(" + std::to_string(a) + ")", 2, std::move(g), std::move(d),
                      Family::Rank2};
}

// ---- enumeration ------------------------------------------------------

long pow3(int k) {
  long p = 1;
  for (int i = 0; i < k; ++i) p *= 3;
  return p;
}

// Attach one new vertex to a state; the base-3 digits of pattern (>= 1) give
// the bond multiplicities against the existing vertices.
DynkinDiagram extend_state(const DynkinDiagram& st, long pattern) {
  const int k = st.n();
  auto edges = edges_of(st);
  long p = pattern;
  for (int i = 0; i < k; ++i) {
    const int digit = static_cast<int>(p % 3);
    p /= 3;
    if (digit != 0) edges.emplace_back(i, k, static_cast<Int>(digit));
  }
  return DynkinDiagram::from_edges(k + 1, edges);
}

// Indefinite, and every single-vertex deletion leaves only positive
// semidefinite components. Connectedness is guaranteed by construction.
bool quick_hyperbolic(const DynkinDiagram& d) {
  const Gcm g = d.to_gcm();
  if (is_positive_semidefinite(g.mat())) return false;
  for (int v = 0; v < d.n(); ++v) {
    std::vector<int> rest;
    for (int u = 0; u < d.n(); ++u)
      if (u != v) rest.push_back(u);
    for (const auto& comp : connected_components(d, rest))
      if (!is_positive_semidefinite(g.mat().submatrix(comp))) return false;
  }
  return true;
}

bool keep_candidate(const DynkinDiagram& cand, bool last) {
  return last ? quick_hyperbolic(cand) : is_finite_or_affine(cand.to_gcm());
}

void assert_survivors_hyperbolic(const std::vector<DynkinDiagram>& out) {
  for (const auto& d : out)
    if (!is_hyperbolic(d.to_gcm()))
      throw std::logic_error("enumeration produced a diagram that fails the full check");
}

void serial_grow(const DynkinDiagram& st, int rank, std::vector<std::set<CanonicalForm>>& seen,
                 std::vector<DynkinDiagram>& out) {
  const int k = st.n();
  const long pats = pow3(k) - 1;
  const bool last = (k + 1 == rank);
  for (long p = 1; p <= pats; ++p) {
    const DynkinDiagram cand = extend_state(st, p);
    if (!keep_candidate(cand, last)) continue;
    const CanonicalForm cf = canonical_form(cand);
    if (!seen[static_cast<size_t>(k + 1)].insert(cf).second) continue;
    if (last)
      out.push_back(canonical_relabel(cand));
    else
      serial_grow(canonical_relabel(cand), rank, seen, out);
  }
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> v = build_entries();
  return v;
}

const std::vector<std::string>& hyperbolic_names() {
  static const std::vector<std::string> v = [] {
    std::vector<std::string> out;
    for (int i = 0; i < 23; ++i) out.push_back(catalog_entries()[static_cast<size_t>(i)].name);
    return out;
  }();
  return v;
}

std::optional<CatalogEntry> try_get(const std::string& name) {
  const std::string n = norm_name(name);
  const auto& idx = alias_index();
  if (auto it = idx.find(n); it != idx.end())
    return catalog_entries()[static_cast<size_t>(it->second)];
  if (auto a = parse_rank2_parameter(n)) return rank2_entry(*a);
  return std::nullopt;
}

CatalogEntry get(const std::string& name) {
  if (auto e = try_get(name)) return *e;
  throw UnknownName{name};
}

std::optional<std::string> identify(const DynkinDiagram& d) {
  if (d.n() == 2 && d.mult(0, 1) >= 3) return "H2(" + std::to_string(d.mult(0, 1)) + ")";
  if (d.n() > 12) return std::nullopt;
  static const std::vector<std::pair<int, CanonicalForm>> table = [] {
    std::vector<std::pair<int, CanonicalForm>> out;
    for (const auto& e : catalog_entries()) out.emplace_back(e.rank, canonical_form(e.diagram));
    return out;
  }();
  const CanonicalForm cf = canonical_form(d);
  for (size_t i = 0; i < table.size(); ++i)
    if (table[i].first == d.n() && table[i].second == cf) return catalog_entries()[i].name;
  return std::nullopt;
}

DynkinDiagram finite_diagram(char family, int k) {
  std::vector<Edge> e;
  switch (family) {
    case 'A':
      if (k < 1) throw BadParameter("A_k requires k >= 1");
      for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1, 1);
      break;
    case 'D':
      if (k < 4) throw BadParameter("D_k requires k >= 4");
      for (int i = 0; i + 2 < k; ++i) e.emplace_back(i, i + 1, 1);
      e.emplace_back(k - 3, k - 1, 1);
      break;
    case 'E':
      if (k < 6 || k > 8) throw BadParameter("E_k requires k in 6..8");
      for (int i = 0; i + 2 < k; ++i) e.emplace_back(i, i + 1, 1);
      e.emplace_back(2, k - 1, 1);
      break;
    default:
      throw BadParameter("unknown finite family");
  }
  return DynkinDiagram::from_edges(k, e, number_labels(1, k));
}

DynkinDiagram affine_diagram(char family, int k) {
  std::vector<Edge> e;
  switch (family) {
    case 'A':
      if (k < 1) throw BadParameter("A_k(1) requires k >= 1");
      if (k == 1) {
        e.emplace_back(0, 1, 2);
      } else {
        for (int i = 0; i < k; ++i) e.emplace_back(i, i + 1, 1);
        e.emplace_back(0, k, 1);
      }
      break;
    case 'D':
      if (k < 4) throw BadParameter("D_k(1) requires k >= 4");
      e.emplace_back(0, 2, 1);
      e.emplace_back(1, 2, 1);
      for (int i = 2; i + 1 <= k - 2; ++i) e.emplace_back(i, i + 1, 1);
      e.emplace_back(k - 2, k - 1, 1);
      e.emplace_back(k - 2, k, 1);
      break;
    case 'E':
      if (k == 6) {
        e = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 5, 1}, {5, 6, 1}};
      } else if (k == 7) {
        for (int i = 0; i < 6; ++i) e.emplace_back(i, i + 1, 1);
        e.emplace_back(3, 7, 1);
      } else if (k == 8) {
        for (int i = 0; i < 7; ++i) e.emplace_back(i, i + 1, 1);
        e.emplace_back(5, 8, 1);
      } else {
        throw BadParameter("E_k(1) requires k in 6..8");
      }
      break;
    default:
      throw BadParameter("unknown affine family");
  }
  return DynkinDiagram::from_edges(k + 1, e, number_labels(0, k));
}

DynkinDiagram extend_affine(const DynkinDiagram& affine) {
  const int z = affine.index_of_label("0");
  if (z < 0) throw BadVertex("0");
  std::vector<Edge> e;
  for (const auto& [i, j, m] : edges_of(affine)) e.emplace_back(i + 1, j + 1, m);
  e.emplace_back(0, z + 1, 1);
  std::vector<std::string> labels{"-1"};
  for (const auto& l : affine.labels()) labels.push_back(l);
  return DynkinDiagram::from_edges(affine.n() + 1, e, labels);
}

std::vector<DynkinDiagram> enumerate_hyperbolic_simply_laced(int rank, bool parallel) {
  if (rank < 3 || rank > 10) throw RankOutOfRange{rank};
  std::vector<DynkinDiagram> states{DynkinDiagram::from_edges(1, {})};
  for (int k = 1; k < rank; ++k) {
    const bool last = (k + 1 == rank);
    const long pats = pow3(k) - 1;
    const long total = static_cast<long>(states.size()) * pats;
    std::map<CanonicalForm, DynkinDiagram> next;
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel num_threads(effective_threads())
      {
        std::map<CanonicalForm, DynkinDiagram> local;
#pragma omp for schedule(dynamic, 64)
        for (long g = 0; g < total; ++g) {
          const DynkinDiagram cand =
              extend_state(states[static_cast<size_t>(g / pats)], 1 + (g % pats));
          if (!keep_candidate(cand, last)) continue;
          CanonicalForm cf = canonical_form(cand);
          if (local.find(cf) == local.end()) local.emplace(std::move(cf), canonical_relabel(cand));
        }
#pragma omp critical
        next.merge(local);
      }
    } else
#endif
    {
      (void)parallel;
      for (long g = 0; g < total; ++g) {
        const DynkinDiagram cand =
            extend_state(states[static_cast<size_t>(g / pats)], 1 + (g % pats));
        if (!keep_candidate(cand, last)) continue;
        CanonicalForm cf = canonical_form(cand);
        if (next.find(cf) == next.end()) next.emplace(std::move(cf), canonical_relabel(cand));
      }
    }
    states.clear();
    for (auto& kv : next) states.push_back(std::move(kv.second));
  }
  assert_survivors_hyperbolic(states);
  return states;
}

std::vector<DynkinDiagram> enumerate_hyperbolic_serial(int rank) {
  if (rank < 3 || rank > 10) throw RankOutOfRange{rank};
  std::vector<std::set<CanonicalForm>> seen(static_cast<size_t>(rank) + 1);
  std::vector<DynkinDiagram> out;
  serial_grow(DynkinDiagram::from_edges(1, {}), rank, seen, out);
  std::sort(out.begin(), out.end(), [](const DynkinDiagram& a, const DynkinDiagram& b) {
    return canonical_form(a) < canonical_form(b);
  });
  assert_survivors_hyperbolic(out);
  return out;
}

}  // namespace kmroot
