#ifndef SQUANT_BRACKETS_HPP
#define SQUANT_BRACKETS_HPP

#include "squant/ideal.hpp"
#include "squant/phase.hpp"

#include <string>
#include <vector>

namespace squant {

/// Poisson bracket with the canonical symplectic structure on (x, p) and
/// (Q, P). Both arguments must be classical (no hbar).
PhaseExpr poisson(const Context& ctx, const PhaseExpr& a, const PhaseExpr& b);
/// The (x, p) and (Q, P) halves of the bracket, useful for graded solvers.
PhaseExpr poisson_xp(const Context& ctx, const PhaseExpr& a, const PhaseExpr& b);
PhaseExpr poisson_qp(const Context& ctx, const PhaseExpr& a, const PhaseExpr& b);

enum class Classification { SecondClass, FirstClass, Mixed, Undetermined };

std::string classification_str(Classification c);

/// An ordered constraint list with its bracket matrix and classification.
struct ConstraintSet {
  std::vector<PhaseExpr> phis;
  std::vector<std::vector<PhaseExpr>> delta;  // delta[a][b] = {phi_a, phi_b}
  Classification cls = Classification::Undetermined;
  PhaseExpr det;  // det of delta

  const std::vector<PhaseExpr>& generators() const { return phis; }
};

ConstraintSet make_constraint_set(const Context& ctx,
                                  std::vector<PhaseExpr> phis,
                                  IdealOptions opts = {});

/// The sphere pair {x^2 - R^2, (x,p)}.
ConstraintSet sphere_constraints(const Context& ctx, IdealOptions opts = {});

Classification classify(const Context& ctx, const ConstraintSet& cs,
                        IdealOptions opts = {});

/// Runs the consistency iteration phi -> {H, phi}: a bracket that neither
/// vanishes on the current surface nor couples to a primary through delta
/// becomes a new (normalized) constraint. Throws when max_rounds is hit.
ConstraintSet secondary_constraints(const Context& ctx, const PhaseExpr& H,
                                    const std::vector<PhaseExpr>& primary,
                                    IdealOptions opts = {}, int max_rounds = 8);

/// Constraint pair for a surface F(x) = 0: primary F, secondary {H, F}
/// normalized (H = p^2/2).
struct GeneralConstraint {
  PhaseExpr surface;
  ConstraintSet set;
};

GeneralConstraint general_constraint(const Context& ctx, const PhaseExpr& F,
                                     IdealOptions opts = {});

/// Dirac bracket {a, b} - {a, phi_c}[delta^-1]^{cd}{phi_d, b}. Requires a
/// second-class set whose determinant is a unit of the restricted
/// denominator ring; throws std::domain_error naming det otherwise.
PhaseExpr dirac(const Context& ctx, const PhaseExpr& a, const PhaseExpr& b,
                const ConstraintSet& cs);

struct EomResidual {
  PhaseExpr residual;  // {v, H}_D - {v, H}
  IdealReduceResult witness;
};

/// On-shell equivalence of the two time evolutions of an observable.
EomResidual eom_residual(const Context& ctx, const PhaseExpr& H,
                         const ConstraintSet& cs, const PhaseExpr& v,
                         IdealOptions opts = {});
EomResidual eom_residual(const Context& ctx, const PhaseExpr& H,
                         const ConstraintSet& cs, const PhaseVar& v,
                         IdealOptions opts = {});

}  // namespace squant

#endif
