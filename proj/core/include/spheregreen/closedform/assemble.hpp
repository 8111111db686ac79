#pragma once

#include <string>

#include "spheregreen/closedform/expression.hpp"

namespace spheregreen::closedform {

enum class DerivationRoute {
  kNested,   // inner r-antiderivative, finite part at 0, outer R-antiderivative
  kKernel,  // L = 0 only: the r^{-1} K part through the half-integer formula
};

struct Derivation {
  int n = 0;
  int L = 0;
  DerivationRoute route = DerivationRoute::kNested;
  ClosedExpression G;
};

// Even n in 2..10 and integer L with -(n-2)/2 <= L <= 6.
bool n2family_supported(int n, int L);

// Throws UnsupportedError outside the supported range.
Derivation derive_green_n2family(int n, int L, DerivationRoute route = DerivationRoute::kNested);

struct AssembledValue {
  double value = 0.0;
  bool symbolic = false;
  std::string notice;  // set when the value comes from the integral backend
};

// Evaluates the (cached) derivation, or falls back to the double integral.
AssembledValue assemble_green_n2family(int n, int L, double t);

}  // namespace spheregreen::closedform
