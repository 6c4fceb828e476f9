#pragma once

#include <stdexcept>
#include <string>

namespace kmroot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- Cartan matrix / diagram errors ----------------------------------------

struct BadDiagonal : Error {
  int i;
  explicit BadDiagonal(int i_)
      : Error("diagonal entry at index " + std::to_string(i_) + " is not 2"), i(i_) {}
};

struct PositiveOffDiagonal : Error {
  int i, j;
  PositiveOffDiagonal(int i_, int j_)
      : Error("off-diagonal entry (" + std::to_string(i_) + "," + std::to_string(j_) +
              ") is positive"),
        i(i_), j(j_) {}
};

struct AsymmetricZero : Error {
  int i, j;
  AsymmetricZero(int i_, int j_)
      : Error("zero pattern broken at (" + std::to_string(i_) + "," + std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

struct RankTooLarge : Error {
  int n;
  explicit RankTooLarge(int n_)
      : Error("rank " + std::to_string(n_) + " exceeds the supported bound 12"), n(n_) {}
};

struct NotConnected : Error {
  NotConnected() : Error("diagram is not connected") {}
};

struct NotIndefinite : Error {
  NotIndefinite() : Error("matrix is not of indefinite type") {}
};

struct NonSymmetric : Error {
  NonSymmetric() : Error("matrix is not symmetric (not simply laced)") {}
};

struct BadMultiplicity : Error {
  explicit BadMultiplicity(const std::string& what) : Error(what) {}
};

// ---- catalog ----------------------------------------------------------------

struct UnknownName : Error {
  std::string name;
  explicit UnknownName(std::string n)
      : Error("no catalog entry named '" + n + "'"), name(std::move(n)) {}
};

struct RankOutOfRange : Error {
  int rank;
  explicit RankOutOfRange(int r)
      : Error("rank " + std::to_string(r) + " outside the enumerable range 3..10"), rank(r) {}
};

// ---- lattice ----------------------------------------------------------------

struct HostMismatch : Error {
  HostMismatch() : Error("vectors belong to different host lattices") {}
};

struct IndexOutOfRange : Error {
  int i;
  explicit IndexOutOfRange(int i_) : Error("index " + std::to_string(i_) + " out of range"), i(i_) {}
};

struct NotNormTwo : Error {
  NotNormTwo() : Error("reflection axis does not have norm 2") {}
};

struct NotAffine : Error {
  NotAffine() : Error("host is not of affine type") {}
};

struct NormalizationFailed : Error {
  explicit NormalizationFailed(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("bilinear form is singular; weights undefined") {}
};

struct TheoremHypothesisViolated : Error {
  TheoremHypothesisViolated()
      : Error("norm test only valid on simply laced finite, affine, or hyperbolic hosts") {}
};

struct NegativeCoordinates : Error {
  NegativeCoordinates() : Error("descent test requires nonnegative coordinates") {}
};

// ---- embed ------------------------------------------------------------------

struct NotRealRoot : Error {
  int i;
  explicit NotRealRoot(int i_)
      : Error("candidate root " + std::to_string(i_) + " is not a positive real root"), i(i_) {}
};

struct NotPositive : Error {
  int i;
  explicit NotPositive(int i_)
      : Error("candidate root " + std::to_string(i_) + " has a negative coordinate"), i(i_) {}
};

struct PositivePairing : Error {
  int i, j;
  PositivePairing(int i_, int j_)
      : Error("roots " + std::to_string(i_) + " and " + std::to_string(j_) +
              " pair positively; not a root subdiagram"),
        i(i_), j(j_) {}
};

struct BadVertex : Error {
  explicit BadVertex(const std::string& what) : Error(what) {}
};

struct NotAChain : Error {
  explicit NotAChain(const std::string& what) : Error(what) {}
};

struct BadParameter : Error {
  explicit BadParameter(const std::string& what) : Error(what) {}
};

struct UnknownTarget : Error {
  std::string name;
  explicit UnknownTarget(std::string n)
      : Error("no embedding recipe for target '" + n + "'"), name(std::move(n)) {}
};

struct NotIsomorphicTo : Error {
  std::string name;
  explicit NotIsomorphicTo(std::string n)
      : Error("embedding diagram is not isomorphic to '" + n + "'"), name(std::move(n)) {}
};

// ---- orth -------------------------------------------------------------------

struct NoExtension : Error {
  explicit NoExtension(const std::string& what) : Error(what) {}
};

// ---- io ---------------------------------------------------------------------

struct ParseError : Error {
  int line, col;
  ParseError(int line_, int col_, const std::string& what)
      : Error("parse error at line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ": " + what),
        line(line_), col(col_) {}
};

}  // namespace kmroot
