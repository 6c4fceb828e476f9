#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kmroot/cartan.hpp"

namespace kmroot {

class RootLattice;
using LatticePtr = std::shared_ptr<const RootLattice>;

// Root lattice of a symmetric GCM, with (alpha_i, alpha_j) = a(i,j).
class RootLattice {
  Gcm gcm_;
  std::vector<std::string> labels_;
  DiagramType type_;

  RootLattice(Gcm g, std::vector<std::string> labels, DiagramType t);

 public:
  // Throws NonSymmetric. Classification is computed once up front.
  static LatticePtr make(Gcm g, std::vector<std::string> labels = {});

  int rank() const { return gcm_.n(); }
  const Gcm& gcm() const { return gcm_; }
  const std::vector<std::string>& labels() const { return labels_; }
  DiagramType type() const { return type_; }
  DynkinDiagram diagram() const { return DynkinDiagram::of_gcm(gcm_, labels_); }
  // Throws BadVertex when the label is absent.
  int index_of_label(const std::string& label) const;
};

// Integer vector over the simple-root basis of a host lattice.
struct RootVector {
  LatticePtr host;
  std::vector<Int> c;

  std::string str() const;  // coordinates separated by spaces
};

RootVector root_vector(LatticePtr host, std::vector<Int> coords);
RootVector simple_root(const LatticePtr& host, int i);
bool same_host(const RootVector& x, const RootVector& y);

Int height(const RootVector& x);
Int pairing(const RootVector& x, const RootVector& y);  // HostMismatch
Int norm(const RootVector& x);

RootVector operator+(const RootVector& x, const RootVector& y);
RootVector operator-(const RootVector& x, const RootVector& y);
RootVector operator*(Int k, const RootVector& x);
bool operator==(const RootVector& x, const RootVector& y);

// r_i(x) = x - (x, alpha_i) alpha_i. Throws IndexOutOfRange.
RootVector simple_reflection(const RootVector& x, int i);
// Reflection in an arbitrary norm-2 vector. Throws NotNormTwo, HostMismatch.
RootVector reflect_by(const RootVector& x, const RootVector& beta);

// Primitive positive kernel vector of an affine host; coordinate 1 at the
// vertex labeled "0" when the host carries that label.
// Throws NotAffine, NormalizationFailed.
RootVector null_root(const LatticePtr& host);

// Rational vector over the simple-root basis.
struct WeightVector {
  LatticePtr host;
  std::vector<Rat> c;

  std::optional<RootVector> integral() const;
  std::string str() const;
};

// Dual basis to the simple roots: (Lambda_i, alpha_j) = delta_ij.
// Throws SingularMatrix when the form is degenerate.
std::vector<WeightVector> fundamental_weights(const LatticePtr& host);
Rat pairing(const WeightVector& x, const WeightVector& y);
WeightVector operator-(const WeightVector& x, const WeightVector& y);
WeightVector operator*(const Rat& k, const WeightVector& x);

// Norm test: valid on simply laced finite, affine, and hyperbolic hosts
// (TheoremHypothesisViolated otherwise). True iff (x,x) = 2 and x >= 0.
bool is_positive_real_root_norm(const RootVector& x);

// Reflection descent: apply r_i at the lowest i with (x, alpha_i) > 0; height
// strictly decreases; true iff a simple root is reached. Valid on any
// symmetric host. Throws NegativeCoordinates.
bool is_positive_real_root_descent(const RootVector& x);

// All positive real roots of height <= maxHeight, sorted by (height, coords).
// Norm-2 scan over the nonnegative height box; host must satisfy the norm
// test hypotheses.
std::vector<RootVector> real_roots_up_to_height(const LatticePtr& host, int maxHeight,
                                                bool parallel = true);

// Box-scan kernels behind real_roots_up_to_height: every nonnegative vector
// of coordinate sum <= maxHeight with norm 2, sorted. The serial version is
// the reference; the parallel one must match it exactly.
std::vector<std::vector<Int>> norm2_box_scan_serial(const Gcm& g, int maxHeight);
std::vector<std::vector<Int>> norm2_box_scan_parallel(const Gcm& g, int maxHeight);

}  // namespace kmroot
