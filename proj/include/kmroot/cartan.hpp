#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kmroot/errors.hpp"
#include "kmroot/matrix.hpp"

namespace kmroot {

enum class DiagramKind { Finite, Affine, Indefinite };

struct DiagramType {
  DiagramKind kind = DiagramKind::Finite;
  bool hyperbolic = false;  // meaningful only when kind == Indefinite
  bool operator==(const DiagramType&) const = default;
};

std::string to_string(DiagramKind k);

// Generalized Cartan matrix: 2 on the diagonal, nonpositive off it,
// a(i,j) = 0 iff a(j,i) = 0.
class Gcm {
  SquareMat a_;
  bool symmetric_ = true;

  explicit Gcm(SquareMat m);

 public:
  // Throws BadDiagonal, PositiveOffDiagonal, AsymmetricZero.
  static Gcm validate(const SquareMat& m);

  int n() const { return a_.n(); }
  Int at(int i, int j) const { return a_(i, j); }
  const SquareMat& mat() const { return a_; }
  bool simply_laced() const { return symmetric_; }
  Gcm principal(const std::vector<int>& idx) const { return Gcm(a_.submatrix(idx)); }
  bool operator==(const Gcm&) const = default;
};

// Dynkin diagram of a symmetric GCM: multigraph with edge multiplicity |a(i,j)|.
class DynkinDiagram {
  int n_ = 0;
  SquareMat mult_;                   // symmetric, zero diagonal, entries >= 0
  std::vector<std::string> labels_;  // empty, or one label per vertex

 public:
  DynkinDiagram() = default;

  // Requires g symmetric (throws NonSymmetric).
  static DynkinDiagram of_gcm(const Gcm& g, std::vector<std::string> labels = {});
  static DynkinDiagram from_edges(int n, const std::vector<std::tuple<int, int, Int>>& edges,
                                  std::vector<std::string> labels = {});

  Gcm to_gcm() const;
  int n() const { return n_; }
  Int mult(int i, int j) const { return i == j ? 0 : mult_(i, j); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  std::string label(int i) const;          // falls back to the index as text
  int index_of_label(const std::string&) const;  // -1 when absent

  // Induced subdiagram on the given vertices, keeping labels.
  DynkinDiagram induced(const std::vector<int>& keep) const;

  bool operator==(const DynkinDiagram&) const = default;
};

// Components listed with vertices ascending, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const DynkinDiagram& d);
std::vector<std::vector<int>> connected_components(const DynkinDiagram& d,
                                                   const std::vector<int>& subset);
bool is_connected(const Gcm& g);

// Type by exhaustive principal minors (all nonempty vertex subsets):
// finite = all positive; affine = determinant zero, proper minors positive;
// indefinite otherwise. The hyperbolic flag is filled for connected
// indefinite matrices. Throws RankTooLarge when n > 12.
DiagramType classify(const Gcm& g);

// pre: g connected (NotConnected) and indefinite (NotIndefinite).
// True iff deleting any single vertex leaves only finite or affine components.
bool is_hyperbolic(const Gcm& g);

// Fast exact equivalent of classify(g).kind != Indefinite for symmetric g,
// via positive semidefiniteness. Cross-checked against classify in tests.
bool is_finite_or_affine(const Gcm& g);

// Label-independent complete invariant: lexicographically minimal adjacency
// encoding over all vertex orderings (two bytes per multiplicity).
using CanonicalForm = std::vector<unsigned char>;
CanonicalForm canonical_form(const DynkinDiagram& d);

// Witness permutation mapping vertices of a onto vertices of b, when one exists:
// b.mult(p[i], p[j]) == a.mult(i, j).
std::optional<std::vector<int>> are_isomorphic(const DynkinDiagram& a, const DynkinDiagram& b);

// Relabel vertices into canonical order; isomorphic diagrams map to the same
// representative. Labels are dropped.
DynkinDiagram canonical_relabel(const DynkinDiagram& d);

}  // namespace kmroot
