#pragma once

#include "polyalg/npoly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace polyalg {

struct InconsistentSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A x = b over the fraction field of the coefficient ring (entries may
/// depend on N as well).
struct LinearSystem {
  std::vector<std::vector<NRatFn>> A;
  std::vector<NRatFn> b;
  /// Optional names for the unknowns; free unknowns of an underdetermined
  /// system become parameters with these names ("x1", "x2", ... by default).
  std::vector<std::string> unknowns;
};

struct LinearSolution {
  std::vector<NRatFn> x;
  std::size_t rank = 0;
  std::vector<std::string> free_variables;
  /// A x - b substituted back; all zero by construction, checked anyway.
  std::vector<NRatFn> residual;
  bool certified = false;
};

/// Fraction-free (Bareiss) elimination after clearing row denominators,
/// then back-substitution. Throws InconsistentSystem when no solution
/// exists and std::invalid_argument on inconsistent dimensions.
LinearSolution solve_linear(const LinearSystem &sys);

}  // namespace polyalg
