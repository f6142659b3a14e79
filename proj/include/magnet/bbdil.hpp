#pragma once

#include "magnet/graded.hpp"

#include <string>
#include <vector>

namespace magnet {

struct BBResult {
  GradedPresentation base;      // variables of degree in N*
  std::vector<Variable> fiber;  // variables of degree in N \ N*
  int fiber_rank = 0;
  /// Positive grading of the free part of the sharp quotient N / N*.
  GradingMorphism certificate;
  SharpQuotient sharp;
  /// h(deg x) for each variable of the input, in order.
  std::vector<int64_t> heights;
  int hilbert_bound = 0;
  /// Rank over the base of the degree-d part, d = 0..bound: counted
  /// monomials of A, and coefficients of the series of Sym(I/I^2).
  std::vector<long long> hilbert_ring;
  std::vector<long long> hilbert_sym;
  /// Both sides are connected for free presentations.
  bool components_bijective = true;

  bool hilbert_ok() const { return hilbert_ring == hilbert_sym; }
};

/// X^N -> X^{N*} for a free presentation whose degrees all lie in N.
BBResult bb_bundle(const GradedPresentation &p, const Submonoid &n, int hilbert_bound = 8);

/// Affine blowup of R[t][x_i] along t = 0 and the coordinates in `center`.
struct DilatationSetup {
  GradedPresentation ambient; // free, over R[t] with t of degree 0
  std::vector<std::string> center;
};

/// Replaces each centered x by x/t of the same degree, flagged as dilated.
GradedPresentation dilatation(const DilatationSetup &s);

struct DilatationReport {
  GradedPresentation blowup_then_attractor; // (Bl X)^N
  GradedPresentation attractor_then_blowup; // Bl_{Y^N}(X^N)
  std::vector<std::string> center_after;    // center cap surviving variables
  std::vector<std::string> differences;

  bool equal() const { return differences.empty(); }
};

DilatationReport dilatation_attractor_check(const DilatationSetup &s, const Magnet &n);

} // namespace magnet
