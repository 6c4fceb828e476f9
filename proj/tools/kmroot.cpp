// kmroot — exact classification, enumeration, and embedding toolkit for
// symmetric generalized Cartan matrices and their Dynkin diagrams.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmroot/catalog.hpp"
#include "kmroot/embed.hpp"
#include "kmroot/io.hpp"
#include "kmroot/lattice.hpp"
#include "kmroot/orth.hpp"
#include "kmroot/render.hpp"
#include "kmroot/threads.hpp"
#include "kmroot/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using nlohmann::json;
using namespace kmroot;

std::string join(const std::vector<std::string>& parts, const std::string& sep = " ") {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string coords_line(const std::vector<Int>& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i]);
  }
  return out;
}

json coords_json(const std::vector<Int>& c) {
  json a = json::array();
  for (Int v : c) a.push_back(v);
  return a;
}

json matrix_json(const SquareMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_matrix(std::ostream& os, const SquareMat& m, const std::string& indent) {
  size_t width = 1;
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) width = std::max(width, std::to_string(m(i, j)).size());
  for (int i = 0; i < m.n(); ++i) {
    os << indent;
    for (int j = 0; j < m.n(); ++j) {
      const std::string cell = std::to_string(m(i, j));
      if (j) os << ' ';
      os << std::string(width - cell.size(), ' ') << cell;
    }
    os << '\n';
  }
}

LatticePtr lattice_of(const CatalogEntry& entry) {
  return RootLattice::make(entry.gcm, entry.diagram.labels());
}

// ---- subcommand bodies ------------------------------------------------------

int run_classify(const std::string& path, bool as_json) {
  const GcmFile f = read_gcm_file(path);
  const DiagramType t = classify(f.gcm);
  const bool connected = is_connected(f.gcm);
  const bool show_hyp = connected && t.kind == DiagramKind::Indefinite;
  if (as_json) {
    json out;
    out["rank"] = f.gcm.n();
    out["connected"] = connected;
    out["symmetric"] = f.gcm.simply_laced();
    out["type"] = to_string(t.kind);
    if (show_hyp) out["hyperbolic"] = t.hyperbolic;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "rank: " << f.gcm.n() << '\n';
    std::cout << "connected: " << (connected ? "yes" : "no") << '\n';
    std::cout << "symmetric: " << (f.gcm.simply_laced() ? "yes" : "no") << '\n';
    std::cout << "type: " << to_string(t.kind) << '\n';
    if (show_hyp) std::cout << "hyperbolic: " << (t.hyperbolic ? "yes" : "no") << '\n';
  }
  return 0;
}

int run_identify(const std::string& path, bool as_json) {
  const GcmFile f = read_gcm_file(path);
  const DynkinDiagram d = DynkinDiagram::of_gcm(f.gcm, f.labels);
  const std::optional<std::string> name = identify(d);
  if (as_json) {
    json out;
    out["name"] = name ? json(*name) : json(nullptr);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (name ? *name : std::string("unknown")) << '\n';
  }
  return name ? 0 : 1;
}

int run_enumerate(int rank, bool serial, const std::string& emit) {
  const std::vector<DynkinDiagram> list =
      serial ? enumerate_hyperbolic_serial(rank) : enumerate_hyperbolic_simply_laced(rank, true);
  if (emit == "json") {
    json out;
    out["rank"] = rank;
    out["count"] = list.size();
    json arr = json::array();
    for (const DynkinDiagram& d : list) {
      json item;
      const auto name = identify(d);
      item["name"] = name ? json(*name) : json(nullptr);
      item["entries"] = matrix_json(d.to_gcm().mat());
      arr.push_back(std::move(item));
    }
    out["diagrams"] = std::move(arr);
    std::cout << out.dump(2) << '\n';
  } else if (emit == "dot") {
    for (const DynkinDiagram& d : list)
      std::cout << render_dot(d, identify(d).value_or("diagram"));
  } else {
    std::cout << "rank " << rank << ": " << list.size() << " diagrams\n";
    for (const DynkinDiagram& d : list) {
      std::cout << '\n' << render_ascii(d, identify(d).value_or("diagram"));
    }
  }
  return 0;
}

int run_roots(const std::string& host, int height, bool serial, bool as_json) {
  const CatalogEntry entry = get(host);
  const LatticePtr L = lattice_of(entry);
  const std::vector<RootVector> roots = real_roots_up_to_height(L, height, !serial);
  if (as_json) {
    json out;
    out["host"] = entry.name;
    out["labels"] = entry.diagram.labels();
    out["height"] = height;
    out["count"] = roots.size();
    json arr = json::array();
    for (const RootVector& r : roots) {
      json item;
      item["height"] = kmroot::height(r);
      item["coords"] = coords_json(r.c);
      arr.push_back(std::move(item));
    }
    out["roots"] = std::move(arr);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "host: " << entry.name << '\n';
    std::cout << "labels: " << join(entry.diagram.labels()) << '\n';
    std::cout << "positive real roots of height <= " << height << ": " << roots.size() << '\n';
    for (const RootVector& r : roots)
      std::cout << "  " << kmroot::height(r) << ": " << r.str() << '\n';
  }
  return 0;
}

void print_embedding_text(const ProveResult& pr, bool trace) {
  const Embedding& e = pr.embedding;
  std::cout << "target: " << e.target.value_or("(unaligned)") << '\n';
  std::cout << "word: " << pr.word << '\n';
  std::cout << "host labels: " << join(e.host->labels()) << '\n';
  std::cout << "rows:\n";
  size_t lab_w = 1;
  for (const std::string& l : e.labels) lab_w = std::max(lab_w, l.size());
  for (int i = 0; i < e.size(); ++i) {
    const std::string& l = e.labels[static_cast<size_t>(i)];
    std::cout << "  " << std::string(lab_w - l.size(), ' ') << l << ": "
              << coords_line(e.roots[static_cast<size_t>(i)].c) << '\n';
  }
  std::cout << "gram:\n";
  print_matrix(std::cout, e.gram, "  ");
  std::cout << "validated: " << (e.validated ? "yes" : "no") << '\n';
  if (trace) {
    std::cout << "trace:\n";
    for (const std::string& line : pr.trace) std::cout << "  " << line << '\n';
  }
}

int run_embed(const std::string& target, bool trace, const std::string& emit) {
  const ProveResult pr = prove_main(target);
  if (emit == "dot") {
    std::cout << render_dot(pr.embedding.diagram(), pr.embedding.target.value_or(target));
  } else if (emit == "json") {
    const Embedding& e = pr.embedding;
    json out;
    out["target"] = e.target.value_or(target);
    out["word"] = pr.word;
    out["host_labels"] = e.host->labels();
    out["labels"] = e.labels;
    json rows = json::array();
    for (const RootVector& r : e.roots) rows.push_back(coords_json(r.c));
    out["rows"] = std::move(rows);
    out["gram"] = matrix_json(e.gram);
    out["validated"] = e.validated;
    if (trace) out["trace"] = pr.trace;
    std::cout << out.dump(2) << '\n';
  } else {
    print_embedding_text(pr, trace);
  }
  return 0;
}

int run_orthogonal(const std::string& target, Int bound, const std::string& extend,
                   bool as_json) {
  const ProveResult pr = prove_main(target);
  const Embedding& e = pr.embedding;
  const SublatticeBasis sub = orthogonal_sublattice(e);
  const std::vector<RootVector> roots = find_orthogonal_real_roots(e, bound);

  // Which direct-sum extensions to attempt: the requested one (hard failure
  // when impossible), or both informationally.
  std::vector<std::string> kinds;
  if (!extend.empty())
    kinds = {extend};
  else
    kinds = {"A1", "A2"};

  struct Attempt {
    std::string kind;
    bool ok = false;
    std::string note;
    std::optional<Embedding> result;
  };
  std::vector<Attempt> attempts;
  for (const std::string& k : kinds) {
    Attempt a;
    a.kind = k;
    try {
      a.result = extend_direct_sum(e, k, bound);
      a.ok = true;
      a.note = "rank " + std::to_string(a.result->size());
    } catch (const NoExtension& ex) {
      if (!extend.empty()) throw;  // explicit request: fail loudly
      a.note = ex.what();
    }
    attempts.push_back(std::move(a));
  }

  if (as_json) {
    json out;
    out["target"] = e.target.value_or(target);
    out["complement_rank"] = sub.basis.size();
    json basis = json::array();
    for (const auto& b : sub.basis) basis.push_back(coords_json(b));
    out["basis"] = std::move(basis);
    out["gram"] = matrix_json(sub.gram);
    json rr = json::array();
    for (const RootVector& r : roots) rr.push_back(coords_json(r.c));
    out["orthogonal_roots"] = std::move(rr);
    json exts = json::object();
    for (const Attempt& a : attempts) {
      json item;
      item["ok"] = a.ok;
      item["note"] = a.note;
      if (a.ok) item["gram"] = matrix_json(a.result->gram);
      exts[a.kind] = std::move(item);
    }
    out["extensions"] = std::move(exts);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "target: " << e.target.value_or(target) << '\n';
    std::cout << "complement rank: " << sub.basis.size() << '\n';
    if (!sub.basis.empty()) {
      std::cout << "basis (host coordinates):\n";
      for (const auto& b : sub.basis) std::cout << "  " << coords_line(b) << '\n';
      std::cout << "gram:\n";
      print_matrix(std::cout, sub.gram, "  ");
    }
    std::cout << "orthogonal positive real roots: " << roots.size() << '\n';
    for (const RootVector& r : roots) std::cout << "  " << r.str() << '\n';
    for (const Attempt& a : attempts) {
      std::cout << "extension " << a.kind << ": " << (a.ok ? "ok, " + a.note : "none (" + a.note + ")")
                << '\n';
      if (a.ok) print_matrix(std::cout, a.result->gram, "  ");
    }
  }
  return 0;
}

int run_verify(bool as_json, bool timings, unsigned seed, int triples, bool serial) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.random_triples = triples;
  opt.parallel = !serial;
  const Report r = verify_paper(opt);
  std::cout << (as_json ? render_json(r, timings) : render_text(r, timings));
  return r.all_pass() ? 0 : 1;
}

int run_render(const std::string& what, const std::string& format) {
  DynkinDiagram d;
  std::string title;
  if (const auto entry = try_get(what)) {
    d = entry->diagram;
    title = entry->name;
  } else {
    const GcmFile f = read_gcm_file(what);
    d = DynkinDiagram::of_gcm(f.gcm, f.labels);
    title = what;
  }
  std::cout << (format == "ascii" ? render_ascii(d, title) : render_dot(d, title));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  omp_set_num_threads(effective_threads());
#endif

  CLI::App app{"Exact toolkit for symmetric generalized Cartan matrices: classification,\n"
               "hyperbolic diagram enumeration, real roots, root-subdiagram embeddings\n"
               "into E10, and orthogonal-complement analysis."};
  app.require_subcommand(1);

  // classify
  std::string cl_file;
  bool cl_json = false;
  CLI::App* cl = app.add_subcommand("classify", "Classify a Cartan matrix file (finite/affine/indefinite)");
  cl->add_option("file", cl_file, "matrix file (JSON or plain text)")->required();
  cl->add_flag("--json", cl_json, "machine-readable output");

  // identify
  std::string id_file;
  bool id_json = false;
  CLI::App* id = app.add_subcommand("identify", "Match a diagram file against the built-in catalog");
  id->add_option("file", id_file, "matrix file (JSON or plain text)")->required();
  id->add_flag("--json", id_json, "machine-readable output");

  // enumerate
  int en_rank = 0;
  bool en_serial = false;
  std::string en_emit = "text";
  CLI::App* en = app.add_subcommand("enumerate", "List all simply laced hyperbolic diagrams of a rank");
  en->add_option("--rank", en_rank, "rank, 3..10")->required();
  en->add_flag("--serial", en_serial, "use the serial reference enumerator");
  en->add_option("--emit", en_emit, "output format")->check(CLI::IsMember({"text", "json", "dot"}));

  // roots
  std::string rt_host = "E10";
  int rt_height = 0;
  bool rt_serial = false, rt_json = false;
  CLI::App* rt = app.add_subcommand("roots", "Positive real roots of a catalog lattice up to a height");
  rt->add_option("--host", rt_host, "catalog name (default E10)");
  rt->add_option("--height", rt_height, "maximum height")->required();
  rt->add_flag("--serial", rt_serial, "use the serial scan kernel");
  rt->add_flag("--json", rt_json, "machine-readable output");

  // embed
  std::string em_target;
  bool em_trace = false;
  std::string em_emit = "text";
  CLI::App* em = app.add_subcommand("embed", "Construct and verify the root-subdiagram embedding into E10");
  em->add_option("--target", em_target, "catalog name or H2(a)")->required();
  em->add_flag("--trace", em_trace, "print one line per construction step");
  em->add_option("--emit", em_emit, "output format")->check(CLI::IsMember({"text", "json", "dot"}));

  // orthogonal
  std::string or_target, or_extend;
  Int or_bound = 10;
  bool or_json = false;
  CLI::App* orth = app.add_subcommand("orthogonal", "Orthogonal complement of an embedding inside E10");
  orth->add_option("--target", or_target, "catalog name or H2(a)")->required();
  orth->add_option("--bound", or_bound, "coefficient bound for indefinite complements");
  orth->add_option("--extend", or_extend, "require a direct-sum extension")
      ->check(CLI::IsMember({"A1", "A2"}));
  orth->add_flag("--json", or_json, "machine-readable output");

  // verify-paper
  bool vp_json = false, vp_timings = false, vp_serial = false;
  unsigned vp_seed = 20260816;
  int vp_triples = 10000;
  CLI::App* vp = app.add_subcommand("verify-paper", "Run every built-in reproducibility check");
  vp->add_flag("--json", vp_json, "machine-readable report");
  vp->add_flag("--timings", vp_timings, "include wall-clock timings");
  vp->add_flag("--serial", vp_serial, "run the serial enumeration path");
  vp->add_option("--seed", vp_seed, "seed for the random reflection checks");
  vp->add_option("--triples", vp_triples, "number of random reflection triples");

  // render
  std::string rd_what, rd_format = "dot";
  CLI::App* rd = app.add_subcommand("render", "Render a catalog entry or matrix file as a diagram");
  rd->add_option("name_or_file", rd_what, "catalog name, or a matrix file path")->required();
  rd->add_option("--format", rd_format, "output format")->check(CLI::IsMember({"dot", "ascii"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cl->parsed()) return run_classify(cl_file, cl_json);
    if (id->parsed()) return run_identify(id_file, id_json);
    if (en->parsed()) return run_enumerate(en_rank, en_serial, en_emit);
    if (rt->parsed()) return run_roots(rt_host, rt_height, rt_serial, rt_json);
    if (em->parsed()) return run_embed(em_target, em_trace, em_emit);
    if (orth->parsed()) return run_orthogonal(or_target, or_bound, or_extend, or_json);
    if (vp->parsed()) return run_verify(vp_json, vp_timings, vp_seed, vp_triples, vp_serial);
    if (rd->parsed()) return run_render(rd_what, rd_format);
  } catch (const NotRealRoot& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const NotPositive& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const PositivePairing& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const NotIsomorphicTo& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const NoExtension& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
