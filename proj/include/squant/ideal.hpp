#ifndef SQUANT_IDEAL_HPP
#define SQUANT_IDEAL_HPP

#include "squant/phase.hpp"

#include <optional>
#include <vector>

namespace squant {

struct IdealReduceResult {
  bool member = false;
  int degree_bound = 0;
  /// Witness coefficients A_a with e = sum_a A_a * gens_a (when member).
  std::vector<PhaseExpr> witness;
};

struct IdealOptions {
  /// <= 0 means the default deg(e) + 2.
  int degree_bound = 0;
};

/// Decides e = sum_a A_a gens_a with deg(A_a) <= bound by an exact linear
/// solve over the witness monomial coefficients. Generators must be
/// polynomial; denominators of e are cleared first (the central elements are
/// units on the constraint surface). Reports not-member when no witness
/// exists within the bound.
IdealReduceResult ideal_reduce(const Context& ctx, const PhaseExpr& e,
                               const std::vector<PhaseExpr>& gens,
                               IdealOptions opts = {});

/// Variant that also allows a remainder free of phase variables (a Laurent
/// polynomial in R): solves e - rem = sum A_a gens_a and returns rem when a
/// witness exists, nullopt when the bounded search is inconclusive. Used to
/// certify on-shell values of constraint-matrix determinants.
std::optional<PhaseExpr> reduce_to_constant(const Context& ctx,
                                            const PhaseExpr& e,
                                            const std::vector<PhaseExpr>& gens,
                                            IdealOptions opts = {});

}  // namespace squant

#endif
