#pragma once

// Randomized numeric checks of the generated antiderivatives: central
// differences against the integrand and differences of the antiderivative
// against adaptive quadrature.

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

struct AntiderivativeCheck {
  std::string family;
  int instances = 0;
  double worst_derivative = 0.0;  // relative to the integrand scale
  double worst_quadrature = 0.0;  // absolute
  std::vector<std::string> failures;

  bool passed(double derivative_tol, double quadrature_tol) const {
    return failures.empty() && worst_derivative <= derivative_tol && worst_quadrature <= quadrature_tol;
  }
};

// Each runs `instances` random parameter sets; per instance the derivative is
// checked at one random interior point and one random definite integral is
// compared with quadrature.
AntiderivativeCheck check_kernel_antiderivative(int instances, std::uint64_t seed);
AntiderivativeCheck check_integral_I(int instances, std::uint64_t seed);
AntiderivativeCheck check_integral_script_I(int instances, std::uint64_t seed);
AntiderivativeCheck check_log_integral(int instances, std::uint64_t seed);
// Every rule of antiderivative_monomial, drawn at random.
AntiderivativeCheck check_monomial_rules(int instances, std::uint64_t seed);

std::vector<AntiderivativeCheck> check_all_antiderivatives(int instances, std::uint64_t seed);

}  // namespace oracle
