#include "kmroot/verify.hpp"

#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kmroot/catalog.hpp"
#include "kmroot/embed.hpp"
#include "kmroot/errors.hpp"
#include "kmroot/lattice.hpp"
#include "kmroot/orth.hpp"

namespace kmroot {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

using CheckBody = std::function<std::pair<bool, std::string>()>;

CheckResult run_check(const std::string& name, const CheckBody& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto [pass, detail] = body();
    r.pass = pass;
    r.detail = detail;
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("exception: ") + ex.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

DynkinDiagram expected_diagram(const VerifyOptions& opt, const std::string& name) {
  const auto it = opt.expected_overrides.find(name);
  if (it != opt.expected_overrides.end()) return it->second;
  return get(name).diagram;
}

std::vector<Int> weight_coefficients(const RootVector& g) {
  std::vector<Int> m(static_cast<size_t>(g.host->rank()));
  for (int j = 0; j < g.host->rank(); ++j)
    m[static_cast<size_t>(j)] = pairing(g, simple_root(g.host, j));
  return m;
}

// Every nonnegative coordinate vector with sum <= budget.
void each_box_vector(int n, int idx, Int budget, std::vector<Int>& c,
                     const std::function<void(const std::vector<Int>&)>& f) {
  if (idx == n) {
    f(c);
    return;
  }
  for (Int v = 0; v <= budget; ++v) {
    c[static_cast<size_t>(idx)] = v;
    each_box_vector(n, idx + 1, budget - v, c, f);
  }
  c[static_cast<size_t>(idx)] = 0;
}

std::pair<bool, std::string> check_classification(const VerifyOptions&) {
  for (const auto& name : hyperbolic_names()) {
    const CatalogEntry e = get(name);
    const DiagramType t = classify(e.gcm);
    if (t.kind != DiagramKind::Indefinite || !t.hyperbolic)
      return {false, name + " did not classify as hyperbolic"};
  }
  for (const std::string& name : {std::string("HA_8(1)"), std::string("P10")}) {
    const DiagramType t = classify(get(name).gcm);
    if (t.kind != DiagramKind::Indefinite || t.hyperbolic)
      return {false, name + " should be indefinite and not hyperbolic"};
  }
  int affine = 0, finite = 0;
  for (const auto& e : catalog_entries()) {
    const DiagramType t = classify(e.gcm);
    if (e.family == Family::Auxiliary && e.name.find("(1)") != std::string::npos &&
        e.name[0] != 'H') {
      if (t.kind != DiagramKind::Affine) return {false, e.name + " should classify as affine"};
      ++affine;
    }
    if (e.name == "A1" || e.name == "A2") {
      if (t.kind != DiagramKind::Finite) return {false, e.name + " should classify as finite"};
      ++finite;
    }
  }
  return {true,
          "23 hyperbolic + 2 indefinite auxiliaries + " + std::to_string(affine) + " affine + " +
              std::to_string(finite) + " finite entries classified"};
}

std::pair<bool, std::string> check_counts(const VerifyOptions& opt,
                                          std::map<int, std::vector<DynkinDiagram>>& byRank) {
  const std::vector<int> expected{5, 3, 2, 3, 2, 3, 3, 2};
  int total = 0;
  for (int rank = 3; rank <= 10; ++rank) {
    byRank[rank] = enumerate_hyperbolic_simply_laced(rank, opt.parallel);
    const int got = static_cast<int>(byRank[rank].size());
    const int want = expected[static_cast<size_t>(rank - 3)];
    total += got;
    if (got != want)
      return {false, "rank " + std::to_string(rank) + ": found " + std::to_string(got) +
                         ", expected " + std::to_string(want)};
  }
  if (total != 23) return {false, "total " + std::to_string(total) + ", expected 23"};
  return {true, "per-rank counts 5,3,2,3,2,3,3,2 (total 23)"};
}

std::pair<bool, std::string> check_coverage(
    const std::map<int, std::vector<DynkinDiagram>>& byRank) {
  if (byRank.empty()) return {false, "enumeration unavailable"};
  std::set<std::string> found;
  for (const auto& [rank, list] : byRank) {
    for (const auto& d : list) {
      const auto name = identify(d);
      if (!name) return {false, "rank " + std::to_string(rank) + ": enumerated diagram without a catalog match"};
      const CatalogEntry e = get(*name);
      if (e.rank != rank) return {false, *name + " matched at the wrong rank"};
      if (!found.insert(*name).second) return {false, *name + " matched twice"};
    }
  }
  for (const auto& name : hyperbolic_names())
    if (!found.count(name)) return {false, name + " missing from the enumeration"};
  if (found.size() != 23)
    return {false, "matched " + std::to_string(found.size()) + " names, expected 23"};
  return {true, "enumeration and catalog agree in both directions"};
}

std::pair<bool, std::string> check_principal(const VerifyOptions& opt) {
  const HxLattice hx = hx_structure(get("E10"));
  const LatticePtr& L = hx.lattice;
  if (pairing(hx.delta, simple_root(L, hx.minus_one)) != -1)
    return {false, "(delta, alpha_-1) != -1"};
  const RootVector beta =
      hx.delta + simple_root(L, hx.zero) + Int(2) * simple_root(L, hx.minus_one);
  if (norm(beta) != 2) return {false, "delta + alpha_0 + 2 alpha_-1 does not have norm 2"};
  const struct {
    const char* target;
    Embedding e;
  } cases[] = {
      {"HD_8(1)", principle_a(hx)},
      {"HA_8(1)", principle_b(hx, 7)},
      {"P10", principle_b(hx, 8)},
  };
  for (const auto& c : cases) {
    if (!c.e.validated) return {false, std::string(c.target) + ": embedding not validated"};
    if (!are_isomorphic(c.e.diagram(), expected_diagram(opt, c.target)))
      return {false, std::string(c.target) + ": diagram mismatch"};
  }
  return {true, "A matches HD_8(1); B(7) matches HA_8(1); B(8) matches P10"};
}

std::pair<bool, std::string> validate_in_e10(const Embedding& e) {
  if (!e.validated) return {false, "not validated"};
  if (!(e.host->gcm() == e10_lattice()->gcm())) return {false, "host is not E10"};
  for (int i = 0; i < e.size(); ++i) {
    const auto& r = e.roots[static_cast<size_t>(i)];
    for (Int v : r.c)
      if (v < 0) return {false, "row " + std::to_string(i) + " has a negative coordinate"};
    if (norm(r) != 2) return {false, "row " + std::to_string(i) + " does not have norm 2"};
    if (e.gram(i, i) != 2) return {false, "Gram diagonal is not 2"};
    for (int j = 0; j < e.size(); ++j)
      if (i != j && e.gram(i, j) > 0) return {false, "Gram off-diagonal is positive"};
  }
  return {true, ""};
}

std::pair<bool, std::string> check_all23(const VerifyOptions& opt) {
  for (const auto& name : hyperbolic_names()) {
    const ProveResult pr = prove_main(name);
    const auto [ok, why] = validate_in_e10(pr.embedding);
    if (!ok) return {false, name + ": " + why};
    if (!are_isomorphic(pr.embedding.diagram(), expected_diagram(opt, name)))
      return {false, name + ": diagram is not isomorphic to the catalog entry"};
    if (!pr.embedding.target || *pr.embedding.target != name)
      return {false, name + ": embedding is not aligned to its target"};
  }
  return {true, "all 23 targets embed and validate in E10"};
}

std::pair<bool, std::string> check_rank2(const VerifyOptions&) {
  for (Int a = 3; a <= 8; ++a) {
    const std::string name = "H2(" + std::to_string(a) + ")";
    const ProveResult pr = prove_main(name);
    const auto [ok, why] = validate_in_e10(pr.embedding);
    if (!ok) return {false, name + ": " + why};
    if (pr.embedding.size() != 2 || pr.embedding.gram(0, 1) != -a)
      return {false, name + ": Gram matrix is not [[2,-a],[-a,2]]"};
  }
  return {true, "H2(a) embeds with the exact Gram matrix for a = 3..8"};
}

std::pair<bool, std::string> check_orth_he7(const VerifyOptions&) {
  const Embedding e = prove_main("HE_7(1)").embedding;
  const SublatticeBasis sub = orthogonal_sublattice(e);
  if (sub.basis.size() != 1) return {false, "complement rank is not 1"};
  if (sub.gram.n() != 1 || sub.gram(0, 0) != 2) return {false, "complement form is not [[2]]"};
  const auto roots = find_orthogonal_real_roots(e);
  if (roots.size() != 1) return {false, "expected exactly one orthogonal positive real root"};
  const auto m = weight_coefficients(roots[0]);
  const LatticePtr& L = e.host;
  std::vector<Int> want(static_cast<size_t>(L->rank()), 0);
  want[static_cast<size_t>(L->index_of_label("7"))] = 1;
  want[static_cast<size_t>(L->index_of_label("0"))] = -3;
  if (m != want) return {false, "generator is not the weight combination L7 - 3 L0"};
  const Embedding ext = extend_direct_sum(e, "A1");
  if (ext.size() != 10 || !ext.validated) return {false, "A1 extension did not reach rank 10"};
  for (int i = 0; i < 9; ++i)
    if (ext.gram(i, 9) != 0) return {false, "A1 extension is not block diagonal"};
  return {true, "rank-1 complement generated by L7 - 3 L0; A1 extension reaches rank 10"};
}

std::pair<bool, std::string> check_orth_he6(const VerifyOptions&) {
  const Embedding e = prove_main("HE_6(1)").embedding;
  const SublatticeBasis sub = orthogonal_sublattice(e);
  if (sub.basis.size() != 2) return {false, "complement rank is not 2"};
  if (bareiss_det(sub.gram) != 3) return {false, "complement form does not have determinant 3"};
  const auto roots = find_orthogonal_real_roots(e);
  if (roots.size() != 3) return {false, "expected the three positive roots of an A2"};
  const LatticePtr& L = e.host;
  const int i0 = L->index_of_label("0");
  const int i1 = L->index_of_label("1");
  const int i8 = L->index_of_label("8");
  std::set<std::vector<Int>> want;
  {
    std::vector<Int> v(static_cast<size_t>(L->rank()), 0);
    v[static_cast<size_t>(i8)] = 1;
    v[static_cast<size_t>(i1)] = -2;
    want.insert(v);  // L8 - 2 L1
  }
  {
    std::vector<Int> v(static_cast<size_t>(L->rank()), 0);
    v[static_cast<size_t>(i1)] = 1;
    v[static_cast<size_t>(i0)] = -2;
    want.insert(v);  // L1 - 2 L0
  }
  {
    std::vector<Int> v(static_cast<size_t>(L->rank()), 0);
    v[static_cast<size_t>(i8)] = 1;
    v[static_cast<size_t>(i1)] = -1;
    v[static_cast<size_t>(i0)] = -2;
    want.insert(v);  // their sum
  }
  std::set<std::vector<Int>> got;
  for (const auto& r : roots) got.insert(weight_coefficients(r));
  if (got != want) return {false, "orthogonal roots differ from the expected weight combinations"};
  bool pairFound = false;
  for (size_t i = 0; i < roots.size() && !pairFound; ++i)
    for (size_t j = i + 1; j < roots.size() && !pairFound; ++j)
      if (pairing(roots[i], roots[j]) == -1) pairFound = true;
  if (!pairFound) return {false, "no pair of orthogonal roots pairs to -1"};
  const Embedding ext = extend_direct_sum(e, "A2");
  if (ext.size() != 10 || !ext.validated) return {false, "A2 extension did not reach rank 10"};
  for (int i = 0; i < 8; ++i)
    for (int j = 8; j < 10; ++j)
      if (ext.gram(i, j) != 0) return {false, "A2 extension is not block diagonal"};
  if (ext.gram(8, 9) != -1) return {false, "A2 extension block is wrong"};
  return {true, "rank-2 complement spans an A2; A2 extension reaches rank 10"};
}

std::pair<bool, std::string> check_norm_vs_descent(const VerifyOptions&) {
  long tested = 0;
  for (const char* name : {"E10", "HA_1(1)"}) {
    const CatalogEntry entry = get(name);
    const LatticePtr L = RootLattice::make(entry.gcm, entry.diagram.labels());
    std::vector<Int> c(static_cast<size_t>(L->rank()), 0);
    std::string bad;
    each_box_vector(L->rank(), 0, 8, c, [&](const std::vector<Int>& v) {
      if (!bad.empty()) return;
      const RootVector x{L, v};
      if (is_positive_real_root_norm(x) != is_positive_real_root_descent(x)) {
        bad = std::string(name) + ": tests disagree at (" + x.str() + ")";
        return;
      }
      ++tested;
    });
    if (!bad.empty()) return {false, bad};
  }
  return {true, std::to_string(tested) + " vectors of height <= 8 agree on both tests"};
}

std::pair<bool, std::string> check_reflection_invariance(const VerifyOptions& opt) {
  const LatticePtr& L = e10_lattice();
  std::mt19937 rng(opt.seed);
  const int n = L->rank();
  auto rnd_coord = [&rng]() { return static_cast<Int>(rng() % 11) - 5; };
  for (int t = 0; t < opt.random_triples; ++t) {
    std::vector<Int> xc(static_cast<size_t>(n)), yc(static_cast<size_t>(n));
    for (auto& v : xc) v = rnd_coord();
    for (auto& v : yc) v = rnd_coord();
    const int i = static_cast<int>(rng() % static_cast<unsigned>(n));
    const RootVector x{L, xc}, y{L, yc};
    if (pairing(simple_reflection(x, i), simple_reflection(y, i)) != pairing(x, y))
      return {false, "invariance failed at triple " + std::to_string(t) + ", i=" +
                         std::to_string(i) + ", x=(" + x.str() + "), y=(" + y.str() + ")"};
  }
  return {true, std::to_string(opt.random_triples) + " random triples, seed " +
                    std::to_string(opt.seed)};
}

std::pair<bool, std::string> check_null_roots(const VerifyOptions&) {
  int count = 0;
  for (const auto& entry : catalog_entries()) {
    if (classify(entry.gcm).kind != DiagramKind::Affine) continue;
    const LatticePtr L = RootLattice::make(entry.gcm, entry.diagram.labels());
    const RootVector d = null_root(L);
    for (int i = 0; i < L->rank(); ++i)
      if (pairing(d, simple_root(L, i)) != 0)
        return {false, entry.name + ": null root is not in the kernel"};
    Int g0 = 0;
    for (Int v : d.c) {
      if (v <= 0) return {false, entry.name + ": null root is not strictly positive"};
      g0 = std::gcd(g0, v);
    }
    if (g0 != 1) return {false, entry.name + ": null root is not primitive"};
    if (d.c[static_cast<size_t>(L->index_of_label("0"))] != 1)
      return {false, entry.name + ": coordinate at vertex 0 is not 1"};
    ++count;
  }
  if (count == 0) return {false, "no affine entries found"};
  return {true, std::to_string(count) + " affine entries have verified null roots"};
}

}  // namespace

Report verify_paper(const VerifyOptions& opt) {
  Report rep;
  std::map<int, std::vector<DynkinDiagram>> byRank;
  rep.checks.push_back(
      run_check("classification.catalog", [&] { return check_classification(opt); }));
  rep.checks.push_back(run_check("enumeration.counts", [&] { return check_counts(opt, byRank); }));
  rep.checks.push_back(run_check("enumeration.coverage", [&] { return check_coverage(byRank); }));
  rep.checks.push_back(run_check("embeddings.principal", [&] { return check_principal(opt); }));
  rep.checks.push_back(run_check("embeddings.all23", [&] { return check_all23(opt); }));
  rep.checks.push_back(run_check("embeddings.rank2", [&] { return check_rank2(opt); }));
  rep.checks.push_back(run_check("orthogonal.he7", [&] { return check_orth_he7(opt); }));
  rep.checks.push_back(run_check("orthogonal.he6", [&] { return check_orth_he6(opt); }));
  rep.checks.push_back(
      run_check("oracle.norm_vs_descent", [&] { return check_norm_vs_descent(opt); }));
  rep.checks.push_back(
      run_check("oracle.reflection_invariance", [&] { return check_reflection_invariance(opt); }));
  rep.checks.push_back(run_check("oracle.null_roots", [&] { return check_null_roots(opt); }));
  return rep;
}

std::string render_text(const Report& r, bool timings) {
  std::string out;
  int passed = 0;
  for (const auto& c : r.checks) {
    out += "check " + c.name + ": " + (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) out += " (" + c.detail + ")";
    if (timings) {
      std::ostringstream ms;
      ms.setf(std::ios::fixed);
      ms.precision(1);
      ms << c.wall_ms;
      out += " [" + ms.str() + " ms]";
    }
    out += "\n";
    if (c.pass) ++passed;
  }
  out += "result: " + std::string(r.all_pass() ? "PASS" : "FAIL") + " (" +
         std::to_string(passed) + "/" + std::to_string(r.checks.size()) + ")\n";
  return out;
}

std::string render_json(const Report& r, bool timings) {
  nlohmann::json j;
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    if (timings) e["wall_ms"] = c.wall_ms;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["pass"] = r.all_pass();
  return j.dump(2) + "\n";
}

}  // namespace kmroot
