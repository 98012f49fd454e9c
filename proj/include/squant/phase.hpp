#ifndef SQUANT_PHASE_HPP
#define SQUANT_PHASE_HPP

#include "squant/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace squant {

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

enum class VarKind : std::uint8_t { X = 0, P = 1, AuxQ = 2, AuxP = 3 };

/// One canonical phase-space variable: x_i, p_i, Q_a or P_a (1-based index).
struct PhaseVar {
  VarKind kind;
  int index;

  /// Total enumeration order x1..xN, p1..pN, Q1..QM, P1..PM.
  std::uint32_t code() const {
    return (static_cast<std::uint32_t>(kind) << 16) |
           static_cast<std::uint32_t>(index);
  }
  friend bool operator==(const PhaseVar& a, const PhaseVar& b) {
    return a.kind == b.kind && a.index == b.index;
  }
  friend bool operator<(const PhaseVar& a, const PhaseVar& b) {
    return a.code() < b.code();
  }
};

std::string var_name(const PhaseVar& v);
PhaseVar var_from_code(std::uint32_t code);

// ---------------------------------------------------------------------------
// Monomials and term keys
// ---------------------------------------------------------------------------

/// Exponent list sorted by variable code; exponents are >= 1.
using Monomial = std::vector<std::pair<std::uint32_t, int>>;

int monomial_degree(const Monomial& m);
int monomial_degree_of(const Monomial& m, std::uint32_t code);
Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// true if b divides a; quotient written to q when non-null.
bool monomial_divides(const Monomial& a, const Monomial& b, Monomial* q);

/// Graded-lexicographic order, x1 most significant. Returns <0, 0, >0.
int monomial_cmp(const Monomial& a, const Monomial& b);

/// Key of one numerator term: phase-variable monomial times R^r * hbar^h.
struct TermKey {
  Monomial mono;
  int r = 0;  // power of R, any integer (R is invertible)
  int h = 0;  // power of hbar, >= 0

  friend bool operator==(const TermKey& a, const TermKey& b) {
    return a.r == b.r && a.h == b.h && a.mono == b.mono;
  }
  friend bool operator<(const TermKey& a, const TermKey& b) {
    int c = monomial_cmp(a.mono, b.mono);
    if (c != 0) return c < 0;
    if (a.r != b.r) return a.r < b.r;
    return a.h < b.h;
  }
};

// ---------------------------------------------------------------------------
// Context and expressions
// ---------------------------------------------------------------------------

/// The two admissible invertible central elements of the denominator ring.
enum class CentralElement { SqX, SqXPlusP };

class PhaseExpr;

/// Fixes the variable ranges: N = D+1 coordinates x_i and momenta p_i plus
/// M auxiliary canonical pairs (Q_a, P_a).
class Context {
 public:
  Context(int sphere_dim, int aux_pairs = 1);

  int dim() const { return d_; }    // D
  int coords() const { return n_; } // N = D+1
  int aux() const { return m_; }    // M

  PhaseVar var(VarKind kind, int index) const;

  PhaseExpr zero() const;
  PhaseExpr one() const;
  PhaseExpr rational(const Rational& q) const;
  /// R^k * hbar^m as an expression.
  PhaseExpr param(int r_pow, int h_pow = 0) const;
  PhaseExpr x(int i) const;
  PhaseExpr p(int i) const;
  PhaseExpr Q(int a) const;
  PhaseExpr P(int a) const;
  PhaseExpr from_var(const PhaseVar& v) const;

  PhaseExpr sq_x() const;    // sum_i x_i^2
  PhaseExpr sq_p() const;    // sum_i p_i^2
  PhaseExpr dot_xp() const;  // sum_i x_i p_i

  /// The polynomial form of a central element (x^2 or x^2 + P_1).
  PhaseExpr central(CentralElement e) const;
  /// (x^2)^-k or (x^2+P)^-k.
  PhaseExpr inverse_central(CentralElement e, int k) const;

  friend bool operator==(const Context& a, const Context& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

 private:
  int d_;
  int n_;
  int m_;
};

/// Exact commutative phase-space expression: a polynomial numerator over
/// (x^2)^a * (x^2+P)^b with rational coefficients and parameters R, hbar.
/// Always kept in canonical form: terms ordered, zero coefficients absent,
/// numerator shares no central factor with the denominator.
class PhaseExpr {
 public:
  PhaseExpr() : n_(0), m_(0) {}
  PhaseExpr(int coords, int aux) : n_(coords), m_(aux) {}

  int coords() const { return n_; }
  int aux() const { return m_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const { return den_sqx_ == 0 && den_sqxp_ == 0; }
  /// True when no term carries a positive hbar power.
  bool is_classical() const;
  /// Single term with empty monomial and r = h = 0.
  std::optional<Rational> as_rational() const;

  const std::map<TermKey, Rational>& terms() const { return terms_; }
  int den_sqx() const { return den_sqx_; }
  int den_sqxp() const { return den_sqxp_; }

  /// Total degree of the numerator in the phase variables.
  int degree() const;

  PhaseExpr operator-() const;
  PhaseExpr& operator+=(const PhaseExpr& o);
  PhaseExpr& operator-=(const PhaseExpr& o);
  friend PhaseExpr operator+(PhaseExpr a, const PhaseExpr& b) { return a += b; }
  friend PhaseExpr operator-(PhaseExpr a, const PhaseExpr& b) { return a -= b; }
  friend PhaseExpr operator*(const PhaseExpr& a, const PhaseExpr& b);
  friend PhaseExpr operator*(const Rational& c, PhaseExpr e);
  friend bool operator==(const PhaseExpr& a, const PhaseExpr& b) {
    return a.terms_ == b.terms_ && a.den_sqx_ == b.den_sqx_ &&
           a.den_sqxp_ == b.den_sqxp_;
  }

  PhaseExpr pow(int k) const;  // k >= 0

  // Construction; inserts accumulate, canonicalization happens on demand.
  void add_term(const TermKey& key, const Rational& coef);
  void set_denominator(int pow_sqx, int pow_sqxp);
  /// Restores the canonical-form invariants (also called by the operators).
  void normalize();

  std::string str() const;

 private:
  friend class Context;
  int n_;
  int m_;
  std::map<TermKey, Rational> terms_;
  int den_sqx_ = 0;
  int den_sqxp_ = 0;
};

// ---------------------------------------------------------------------------
// Free operations
// ---------------------------------------------------------------------------

/// Formal partial derivative with the quotient rule on central denominators.
PhaseExpr partial(const PhaseExpr& e, const PhaseVar& v);

/// Formal inverse of a declared central element: checks that e equals x^2 or
/// x^2+P and returns e^-k. Throws std::domain_error otherwise.
PhaseExpr invert_central(const Context& ctx, const PhaseExpr& e, int k);

/// Rational * R^r * hbar^h * (x^2)^sqx * (x^2+P)^sqxp (powers may be negative).
struct CentralMonomial {
  Rational coef;
  int r = 0;
  int h = 0;
  int sqx = 0;
  int sqxp = 0;
};

/// Recognizes expressions that are a unit of the restricted denominator ring.
std::optional<CentralMonomial> as_central_monomial(const Context& ctx,
                                                   const PhaseExpr& e);

/// Builds cm^k as an expression (k may be negative; hbar powers must stay
/// non-negative, otherwise throws).
PhaseExpr central_monomial_pow(const Context& ctx, const CentralMonomial& cm,
                               int k);

/// Exact polynomial division: returns e / g when g divides e, else nullopt.
/// Both must be polynomial (no denominators).
std::optional<PhaseExpr> poly_divide_exact(const PhaseExpr& e,
                                           const PhaseExpr& g);

/// Substitutes an expression for a variable. Denominators are transformed
/// when the substituted central elements stay invertible; otherwise throws.
PhaseExpr substitute(const Context& ctx, const PhaseExpr& e, const PhaseVar& v,
                     const PhaseExpr& value);

/// Sets all auxiliary variables Q_a, P_a to zero (boundary of a conversion).
PhaseExpr at_aux_zero(const PhaseExpr& e);

/// Scaling weight: x, p and R count 1, P counts 2, Q counts 0. The constraint
/// ideals in scope are homogeneous under it, which keeps membership solves
/// block-diagonal.
int weighted_degree(const TermKey& key);
bool is_weighted_homogeneous(const PhaseExpr& e);

/// Divides out the rational content and fixes the sign so the leading term
/// (largest TermKey) is positive. Zero stays zero.
PhaseExpr normalize_constraint(const PhaseExpr& e);

/// Largest TermKey (throws on zero).
const TermKey& leading_key(const PhaseExpr& e);

}  // namespace squant

#endif
