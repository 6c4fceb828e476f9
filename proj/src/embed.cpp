#include "kmroot/embed.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "kmroot/errors.hpp"

namespace kmroot {

namespace {

std::string label_of(const LatticePtr& host, int i) {
  return host->labels().empty() ? std::to_string(i) : host->labels()[static_cast<size_t>(i)];
}

bool norm_scope(const LatticePtr& host) {
  const DiagramType t = host->type();
  return t.kind == DiagramKind::Finite || t.kind == DiagramKind::Affine || t.hyperbolic;
}

std::string join_labels(const std::vector<std::string>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += xs[i];
  }
  return s;
}

}  // namespace

DynkinDiagram Embedding::diagram() const {
  return DynkinDiagram::of_gcm(Gcm::validate(gram), labels);
}

int Embedding::row_of_label(const std::string& label) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw BadVertex("no row labeled '" + label + "'");
}

Embedding check_root_subdiagram(const LatticePtr& host, std::vector<RootVector> roots,
                                std::vector<std::string> labels) {
  if (!host) throw BadParameter("null host lattice");
  const int k = static_cast<int>(roots.size());
  if (k == 0) throw BadParameter("empty root list");
  if (k > host->rank()) throw BadParameter("more rows than the host rank");
  if (!labels.empty() && static_cast<int>(labels.size()) != k)
    throw BadParameter("label count does not match the row count");
  for (auto& r : roots) {
    if (!(r.host == host || (r.host && r.host->gcm() == host->gcm()))) throw HostMismatch();
    r.host = host;  // share one lattice object across the rows
  }
  const bool useNorm = norm_scope(host);
  for (int i = 0; i < k; ++i) {
    for (Int v : roots[static_cast<size_t>(i)].c)
      if (v < 0) throw NotPositive(i);
    const bool ok = useNorm ? is_positive_real_root_norm(roots[static_cast<size_t>(i)])
                            : is_positive_real_root_descent(roots[static_cast<size_t>(i)]);
    if (!ok) throw NotRealRoot(i);
  }
  SquareMat gram(k);
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      const Int p = pairing(roots[static_cast<size_t>(i)], roots[static_cast<size_t>(j)]);
      if (i != j && p > 0) throw PositivePairing(i, j);
      gram(i, j) = p;
      gram(j, i) = p;
    }
  if (labels.empty())
    for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  return Embedding{host, std::move(roots), std::move(gram), std::move(labels), std::nullopt, true};
}

HxLattice hyperbolic_extension(const CatalogEntry& affine) {
  if (classify(affine.gcm).kind != DiagramKind::Affine) throw NotAffine();
  const DynkinDiagram ext = extend_affine(affine.diagram);
  LatticePtr L = RootLattice::make(ext.to_gcm(), ext.labels());
  const LatticePtr A = RootLattice::make(affine.gcm, affine.diagram.labels());
  const RootVector da = null_root(A);
  std::vector<Int> c(static_cast<size_t>(L->rank()), 0);
  for (int i = 0; i < A->rank(); ++i) c[static_cast<size_t>(i) + 1] = da.c[static_cast<size_t>(i)];
  HxLattice hx;
  hx.lattice = L;
  hx.minus_one = 0;
  hx.zero = L->index_of_label("0");
  hx.delta = RootVector{L, std::move(c)};
  return hx;
}

HxLattice hx_structure(const CatalogEntry& entry) {
  const DynkinDiagram& d = entry.diagram;
  const int m1 = d.index_of_label("-1");
  if (m1 < 0) throw BadVertex("-1");
  const int z = d.index_of_label("0");
  if (z < 0) throw BadVertex("0");
  std::vector<int> keep;
  for (int i = 0; i < d.n(); ++i)
    if (i != m1) keep.push_back(i);
  const DynkinDiagram aff = d.induced(keep);
  const Gcm ag = aff.to_gcm();
  if (classify(ag).kind != DiagramKind::Affine) throw NotAffine();
  const LatticePtr A = RootLattice::make(ag, aff.labels());
  const RootVector da = null_root(A);
  LatticePtr L = RootLattice::make(entry.gcm, d.labels());
  std::vector<Int> c(static_cast<size_t>(L->rank()), 0);
  for (size_t i = 0; i < keep.size(); ++i) c[static_cast<size_t>(keep[i])] = da.c[i];
  HxLattice hx;
  hx.lattice = L;
  hx.minus_one = m1;
  hx.zero = L->index_of_label("0");
  hx.delta = RootVector{L, std::move(c)};
  return hx;
}

Embedding identity_embedding(const LatticePtr& host) {
  if (!host) throw BadParameter("null host lattice");
  std::vector<RootVector> roots;
  std::vector<std::string> labels;
  for (int i = 0; i < host->rank(); ++i) {
    roots.push_back(simple_root(host, i));
    labels.push_back(label_of(host, i));
  }
  return check_root_subdiagram(host, std::move(roots), std::move(labels));
}

Embedding principle_a(const HxLattice& hx) {
  const LatticePtr& L = hx.lattice;
  std::vector<RootVector> roots;
  std::vector<std::string> labels;
  for (int i = 0; i < L->rank(); ++i) {
    if (i == hx.minus_one)
      roots.push_back(hx.delta + simple_root(L, hx.zero) + Int(2) * simple_root(L, hx.minus_one));
    else
      roots.push_back(simple_root(L, i));
    labels.push_back(label_of(L, i));
  }
  return check_root_subdiagram(L, std::move(roots), std::move(labels));
}

Embedding principle_b(const HxLattice& hx, int p) {
  const int r = hx.lattice->rank() - 2;
  if (p < 1 || p > r) throw BadVertex("vertex " + std::to_string(p) + " outside 1.." +
                                      std::to_string(r));
  return principle_b_prime(hx, {p});
}

Embedding principle_b_prime(const HxLattice& hx, const std::vector<int>& F) {
  const LatticePtr& L = hx.lattice;
  const int r = L->rank() - 2;
  std::set<int> rows;
  for (int p : F) {
    if (p < 1 || p > r)
      throw BadVertex("vertex " + std::to_string(p) + " outside 1.." + std::to_string(r));
    const int ip = L->index_of_label(std::to_string(p));
    if (!rows.insert(ip).second) throw BadVertex("duplicate vertex " + std::to_string(p));
  }
  std::vector<RootVector> roots;
  std::vector<std::string> labels;
  for (int i = 0; i < L->rank(); ++i) {
    if (rows.count(i))
      roots.push_back(simple_root(L, i) + hx.delta);
    else
      roots.push_back(simple_root(L, i));
    labels.push_back(label_of(L, i));
  }
  return check_root_subdiagram(L, std::move(roots), std::move(labels));
}

Embedding principle_c(const Embedding& e, const std::vector<int>& chain_rows) {
  if (!e.validated) throw BadParameter("embedding is not validated");
  const int k = e.size();
  if (chain_rows.empty()) throw NotAChain("empty chain");
  std::set<int> seen;
  for (int r : chain_rows) {
    if (r < 0 || r >= k) throw NotAChain("row " + std::to_string(r) + " out of range");
    if (!seen.insert(r).second) throw NotAChain("row " + std::to_string(r) + " repeated");
  }
  const int m = static_cast<int>(chain_rows.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Int g = e.gram(chain_rows[static_cast<size_t>(a)], chain_rows[static_cast<size_t>(b)]);
      const Int want = (b == a + 1) ? -1 : 0;
      if (g != want)
        throw NotAChain("rows " + std::to_string(chain_rows[static_cast<size_t>(a)]) + "," +
                        std::to_string(chain_rows[static_cast<size_t>(b)]) +
                        " do not form an induced chain");
    }
  RootVector merged = e.roots[static_cast<size_t>(chain_rows[0])];
  for (int a = 1; a < m; ++a) merged = merged + e.roots[static_cast<size_t>(chain_rows[a])];
  const int at = *std::min_element(chain_rows.begin(), chain_rows.end());
  std::vector<RootVector> roots;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    if (i == at) {
      roots.push_back(merged);
      labels.push_back(e.labels[static_cast<size_t>(chain_rows[0])]);
    } else if (!seen.count(i)) {
      roots.push_back(e.roots[static_cast<size_t>(i)]);
      labels.push_back(e.labels[static_cast<size_t>(i)]);
    }
  }
  return check_root_subdiagram(e.host, std::move(roots), std::move(labels));
}

Embedding principle_d(const Embedding& e, const std::vector<int>& drop_rows) {
  if (!e.validated) throw BadParameter("embedding is not validated");
  if (drop_rows.empty()) return e;
  const int k = e.size();
  std::set<int> drop;
  for (int r : drop_rows) {
    if (r < 0 || r >= k) throw BadParameter("row " + std::to_string(r) + " out of range");
    if (!drop.insert(r).second) throw BadParameter("row " + std::to_string(r) + " repeated");
  }
  if (static_cast<int>(drop.size()) == k) throw BadParameter("cannot drop every row");
  std::vector<RootVector> roots;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    if (drop.count(i)) continue;
    roots.push_back(e.roots[static_cast<size_t>(i)]);
    labels.push_back(e.labels[static_cast<size_t>(i)]);
  }
  return check_root_subdiagram(e.host, std::move(roots), std::move(labels));
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  if (!outer.validated || !inner.validated) throw BadParameter("embedding is not validated");
  if (!(inner.host->gcm().mat() == outer.gram)) throw HostMismatch();
  std::vector<RootVector> roots;
  for (const RootVector& g : inner.roots) {
    RootVector v{outer.host, std::vector<Int>(static_cast<size_t>(outer.host->rank()), 0)};
    for (int j = 0; j < outer.size(); ++j)
      if (g.c[static_cast<size_t>(j)] != 0)
        v = v + g.c[static_cast<size_t>(j)] * outer.roots[static_cast<size_t>(j)];
    roots.push_back(std::move(v));
  }
  Embedding out = check_root_subdiagram(outer.host, std::move(roots), inner.labels);
  if (!(out.gram == inner.gram))
    throw std::logic_error("substitution did not preserve the Gram matrix");
  out.target = inner.target;
  return out;
}

Embedding permute_rows(const Embedding& e, const std::vector<int>& perm) {
  const int k = e.size();
  if (static_cast<int>(perm.size()) != k) throw BadParameter("permutation size mismatch");
  std::vector<bool> hit(static_cast<size_t>(k), false);
  for (int v : perm) {
    if (v < 0 || v >= k || hit[static_cast<size_t>(v)])
      throw BadParameter("not a permutation of the rows");
    hit[static_cast<size_t>(v)] = true;
  }
  Embedding out = e;
  out.target.reset();
  SquareMat gram(k);
  for (int i = 0; i < k; ++i) {
    out.roots[static_cast<size_t>(perm[i])] = e.roots[static_cast<size_t>(i)];
    out.labels[static_cast<size_t>(perm[i])] = e.labels[static_cast<size_t>(i)];
    for (int j = 0; j < k; ++j) gram(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]) = e.gram(i, j);
  }
  out.gram = gram;
  return out;
}

Embedding align_to_catalog(const Embedding& e, const std::string& name) {
  const CatalogEntry entry = get(name);
  if (e.size() != entry.rank) throw NotIsomorphicTo(entry.name);
  const DynkinDiagram mine = DynkinDiagram::of_gcm(Gcm::validate(e.gram));
  const auto p = are_isomorphic(mine, entry.diagram);
  if (!p) throw NotIsomorphicTo(entry.name);
  Embedding out = permute_rows(e, *p);
  out.labels = entry.diagram.labels();
  if (!(out.gram == entry.gcm.mat()))
    throw std::logic_error("alignment failed to reproduce the catalog Gram matrix");
  out.target = entry.name;
  return out;
}

Embedding t_family(int m) {
  if (m < 0) throw BadParameter("the triangle series needs m >= 0");
  const CatalogEntry ha1 = get("HA_1(1)");
  const LatticePtr L = RootLattice::make(ha1.gcm, ha1.diagram.labels());
  const int i_m1 = L->index_of_label("-1");
  const int i_0 = L->index_of_label("0");
  const int i_1 = L->index_of_label("1");
  const RootVector b_m1 = simple_root(L, i_m1);
  const RootVector b_0 = simple_root(L, i_1) + Int(2) * simple_root(L, i_0);
  const RootVector b_1 =
      Int(m + 1) * simple_root(L, i_1) + Int(m) * simple_root(L, i_0);
  Embedding e = check_root_subdiagram(L, {b_m1, b_0, b_1}, {"-1", "0", "1"});
  const Int mm = static_cast<Int>(m);
  SquareMat want(3);
  want(0, 0) = 2;  want(0, 1) = -2; want(0, 2) = -mm;
  want(1, 0) = -2; want(1, 1) = 2;  want(1, 2) = -2;
  want(2, 0) = -mm; want(2, 1) = -2; want(2, 2) = 2;
  if (!(e.gram == want)) throw std::logic_error("triangle series Gram matrix mismatch");
  if (m <= 2) e.target = "T_" + std::to_string(m);
  return e;
}

Embedding rank2_embedding(Int a) {
  if (a < 3) throw BadParameter("the rank-2 series needs a >= 3");
  const HxLattice hx = hx_structure(get("HA_1(1)"));
  const LatticePtr& L = hx.lattice;
  const RootVector b1 = simple_root(L, hx.minus_one);
  const RootVector b2 = (a - 1) * hx.delta + simple_root(L, hx.zero);
  Embedding e = check_root_subdiagram(L, {b1, b2}, {"1", "2"});
  SquareMat want(2);
  want(0, 0) = 2;  want(0, 1) = -a;
  want(1, 0) = -a; want(1, 1) = 2;
  if (!(e.gram == want)) throw std::logic_error("rank-2 series Gram matrix mismatch");
  e.target = "H2(" + std::to_string(a) + ")";
  return e;
}

// ---- recipe table -----------------------------------------------------------

namespace {

struct Step {
  enum class Kind { Identity, A, B, BPrime, Shrink, Drop, SubA, SubB, SubBPrime, SubT, SubRank2 };
  Kind kind = Kind::Identity;
  int p = 0;                      // B / SubB vertex; SubT parameter m
  std::vector<int> F;             // BPrime / SubBPrime vertex set
  std::vector<std::string> rows;  // Shrink chain labels / Drop labels
  std::string align;              // catalog name to align to afterwards; empty = none
};

const HxLattice& e10_hx() {
  static const HxLattice hx = hx_structure(get("E10"));
  return hx;
}

std::map<std::string, std::vector<Step>> build_recipes() {
  std::map<std::string, std::vector<Step>> t;
  auto mk = [](Step::Kind k) {
    Step s;
    s.kind = k;
    return s;
  };
  {
    Step s = mk(Step::Kind::Identity);
    s.align = "E10";
    t["E10"] = {s};
  }
  {
    Step s = mk(Step::Kind::A);
    s.align = "HD_8(1)";
    t["HD_8(1)"] = {s};
  }
  {
    Step s = mk(Step::Kind::B);
    s.p = 7;
    s.align = "HA_8(1)";
    t["HA_8(1)"] = {s};
  }
  {
    Step s = mk(Step::Kind::B);
    s.p = 8;
    s.align = "P10";
    t["P10"] = {s};
  }
  // Chain contractions walk the two families down one rank at a time.
  {
    auto steps = t["HA_8(1)"];
    for (int j = 8; j >= 2; --j) {
      Step s = mk(Step::Kind::Shrink);
      s.rows = {std::to_string(j - 1), std::to_string(j)};
      s.align = "HA_" + std::to_string(j - 1) + "(1)";
      steps.push_back(s);
      t["HA_" + std::to_string(j - 1) + "(1)"] = steps;
    }
  }
  {
    auto steps = t["HD_8(1)"];
    for (int j = 8; j >= 5; --j) {
      Step s = mk(Step::Kind::Shrink);
      s.rows = {std::to_string(j - 3), std::to_string(j - 2)};
      s.align = "HD_" + std::to_string(j - 1) + "(1)";
      steps.push_back(s);
      t["HD_" + std::to_string(j - 1) + "(1)"] = steps;
    }
  }
  // Rank-9 and rank-8 extensions arise from row deletions of the rank-10 ones.
  {
    Step b = mk(Step::Kind::B);
    b.p = 7;
    Step d = mk(Step::Kind::Drop);
    d.rows = {"0"};
    d.align = "HE_7(1)";
    t["HE_7(1)"] = {b, d};
  }
  {
    Step b = mk(Step::Kind::B);
    b.p = 8;
    Step d = mk(Step::Kind::Drop);
    d.rows = {"0", "1"};
    d.align = "HE_6(1)";
    t["HE_6(1)"] = {b, d};
  }
  // Exceptional targets substitute a second construction into a smaller frame.
  {
    auto steps = t["HD_4(1)"];
    Step s = mk(Step::Kind::SubA);
    s.align = "X_6";
    steps.push_back(s);
    t["X_6"] = steps;
  }
  {
    auto steps = t["HA_3(1)"];
    Step s = mk(Step::Kind::SubB);
    s.p = 2;
    s.align = "Y_5";
    steps.push_back(s);
    t["Y_5"] = steps;
  }
  {
    auto steps = t["HA_2(1)"];
    Step s = mk(Step::Kind::SubB);
    s.p = 2;
    s.align = "Y_4";
    steps.push_back(s);
    t["Y_4"] = steps;
  }
  {
    auto steps = t["HA_1(1)"];
    Step s = mk(Step::Kind::SubB);
    s.p = 1;
    s.align = "Y_3";
    steps.push_back(s);
    t["Y_3"] = steps;
  }
  {
    auto steps = t["HA_2(1)"];
    Step s = mk(Step::Kind::SubBPrime);
    s.F = {1, 2};
    s.align = "Z_4";
    steps.push_back(s);
    t["Z_4"] = steps;
  }
  for (int m = 0; m <= 2; ++m) {
    auto steps = t["HA_1(1)"];
    Step s = mk(Step::Kind::SubT);
    s.p = m;
    s.align = "T_" + std::to_string(m);
    steps.push_back(s);
    t["T_" + std::to_string(m)] = steps;
  }
  {
    auto steps = t["HA_1(1)"];
    Step s = mk(Step::Kind::SubRank2);
    steps.push_back(s);
    t["H2"] = steps;
  }
  return t;
}

const std::map<std::string, std::vector<Step>>& recipe_table() {
  static const auto t = build_recipes();
  return t;
}

std::string join_ints(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

ProveResult prove_main(const std::string& target) {
  std::string key;
  Int h2a = 0;
  if (auto entry = try_get(target)) {
    if (entry->family == Family::Rank2) {
      key = "H2";
      h2a = -entry->gcm.at(0, 1);
    } else {
      key = entry->name;
    }
  } else {
    throw UnknownTarget{target};
  }
  const auto& table = recipe_table();
  const auto it = table.find(key);
  if (it == table.end()) throw UnknownTarget{target};

  std::optional<Embedding> cur;
  std::vector<std::string> frags;
  std::vector<std::string> trace;
  for (const Step& s : it->second) {
    std::string frag;
    switch (s.kind) {
      case Step::Kind::Identity:
        cur = identity_embedding(e10_lattice());
        frag = "identity";
        break;
      case Step::Kind::A:
        cur = principle_a(e10_hx());
        frag = "A";
        break;
      case Step::Kind::B:
        cur = principle_b(e10_hx(), s.p);
        frag = "B(" + std::to_string(s.p) + ")";
        break;
      case Step::Kind::BPrime:
        cur = principle_b_prime(e10_hx(), s.F);
        frag = "B'(" + join_ints(s.F) + ")";
        break;
      case Step::Kind::Shrink: {
        std::vector<int> rows;
        for (const auto& l : s.rows) rows.push_back(cur->row_of_label(l));
        cur = principle_c(*cur, rows);
        frag = "C(" + join_labels(s.rows) + ")";
        break;
      }
      case Step::Kind::Drop: {
        std::vector<int> rows;
        for (const auto& l : s.rows) rows.push_back(cur->row_of_label(l));
        cur = principle_d(*cur, rows);
        frag = "D(" + join_labels(s.rows) + ")";
        break;
      }
      case Step::Kind::SubA: {
        const std::string frame = cur->target.value();
        cur = compose(*cur, principle_a(hx_structure(get(frame))));
        frag = "A on " + frame;
        break;
      }
      case Step::Kind::SubB: {
        const std::string frame = cur->target.value();
        cur = compose(*cur, principle_b(hx_structure(get(frame)), s.p));
        frag = "B(" + std::to_string(s.p) + ") on " + frame;
        break;
      }
      case Step::Kind::SubBPrime: {
        const std::string frame = cur->target.value();
        cur = compose(*cur, principle_b_prime(hx_structure(get(frame)), s.F));
        frag = "B'(" + join_ints(s.F) + ") on " + frame;
        break;
      }
      case Step::Kind::SubT: {
        const std::string frame = cur->target.value();
        cur = compose(*cur, t_family(s.p));
        frag = "T(" + std::to_string(s.p) + ") on " + frame;
        break;
      }
      case Step::Kind::SubRank2: {
        const std::string frame = cur->target.value();
        cur = compose(*cur, rank2_embedding(h2a));
        frag = "H2(" + std::to_string(h2a) + ") on " + frame;
        break;
      }
    }
    if (!s.align.empty()) cur = align_to_catalog(*cur, s.align);
    frags.push_back(frag);
    trace.push_back(s.align.empty() ? frag : frag + " -> " + s.align);
  }
  std::string word;
  for (size_t i = 0; i < frags.size(); ++i) {
    if (i) word += " . ";
    word += frags[i];
  }
  return ProveResult{std::move(*cur), std::move(word), std::move(trace)};
}

const LatticePtr& e10_lattice() {
  static const LatticePtr L = [] {
    const CatalogEntry e = get("E10");
    return RootLattice::make(e.gcm, e.diagram.labels());
  }();
  return L;
}

}  // namespace kmroot
