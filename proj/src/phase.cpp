#include "squant/phase.hpp"

#include <algorithm>
#include <sstream>

namespace squant {

// ---------------------------------------------------------------------------
// Rational helpers
// ---------------------------------------------------------------------------

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

Rational rational_parse(const std::string& text) {
  auto bad = [&] {
    throw std::invalid_argument("invalid rational literal: '" + text + "'");
  };
  std::string s = text;
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rational(0);  // unreachable
}

std::string gauss_str(const GaussRat& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  if (c.im == 0) {
    os << rational_str(c.re);
  } else if (c.re == 0) {
    if (c.im == 1)
      os << "i";
    else if (c.im == -1)
      os << "-i";
    else
      os << rational_str(c.im) << "*i";
  } else {
    os << "(" << rational_str(c.re);
    if (c.im > 0)
      os << " + " << (c.im == 1 ? std::string("i") : rational_str(c.im) + "*i");
    else
      os << " - "
         << (c.im == -1 ? std::string("i") : rational_str(-c.im) + "*i");
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Variables and monomials
// ---------------------------------------------------------------------------

std::string var_name(const PhaseVar& v) {
  static const char* prefix[] = {"x", "p", "Q", "P"};
  return prefix[static_cast<int>(v.kind)] + std::to_string(v.index);
}

PhaseVar var_from_code(std::uint32_t code) {
  return PhaseVar{static_cast<VarKind>(code >> 16),
                  static_cast<int>(code & 0xffff)};
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

int monomial_degree_of(const Monomial& m, std::uint32_t code) {
  for (const auto& [v, e] : m)
    if (v == code) return e;
  return 0;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

bool monomial_divides(const Monomial& a, const Monomial& b, Monomial* q) {
  // does b divide a?
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : b) {
    while (i < a.size() && a[i].first < v) {
      out.push_back(a[i]);
      ++i;
    }
    if (i == a.size() || a[i].first != v || a[i].second < e) return false;
    if (a[i].second > e) out.emplace_back(v, a[i].second - e);
    ++i;
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  if (q) *q = std::move(out);
  return true;
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db ? -1 : 1;
  // Same total degree: lexicographic with x1 the most significant variable.
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      if (a[i].second != b[j].second)
        return a[i].second > b[j].second ? 1 : -1;
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      return 1;  // a has the earlier variable -> larger
    } else {
      return -1;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Context
// ---------------------------------------------------------------------------

Context::Context(int sphere_dim, int aux_pairs)
    : d_(sphere_dim), n_(sphere_dim + 1), m_(aux_pairs) {
  if (sphere_dim < 1) throw std::invalid_argument("dimension D must be >= 1");
  if (aux_pairs < 0) throw std::invalid_argument("auxiliary pair count < 0");
}

PhaseVar Context::var(VarKind kind, int index) const {
  int bound = (kind == VarKind::X || kind == VarKind::P) ? n_ : m_;
  if (index < 1 || index > bound)
    throw std::out_of_range("variable index " + std::to_string(index) +
                            " outside declared bounds");
  return PhaseVar{kind, index};
}

PhaseExpr Context::zero() const { return PhaseExpr(n_, m_); }

PhaseExpr Context::one() const { return rational(Rational(1)); }

PhaseExpr Context::rational(const Rational& q) const {
  PhaseExpr e(n_, m_);
  e.add_term(TermKey{}, q);
  e.normalize();
  return e;
}

PhaseExpr Context::param(int r_pow, int h_pow) const {
  if (h_pow < 0) throw std::invalid_argument("hbar power must be >= 0");
  PhaseExpr e(n_, m_);
  e.add_term(TermKey{{}, r_pow, h_pow}, Rational(1));
  e.normalize();
  return e;
}

PhaseExpr Context::from_var(const PhaseVar& v) const {
  var(v.kind, v.index);  // bounds check
  PhaseExpr e(n_, m_);
  e.add_term(TermKey{{{v.code(), 1}}, 0, 0}, Rational(1));
  e.normalize();
  return e;
}

PhaseExpr Context::x(int i) const { return from_var(var(VarKind::X, i)); }
PhaseExpr Context::p(int i) const { return from_var(var(VarKind::P, i)); }
PhaseExpr Context::Q(int a) const { return from_var(var(VarKind::AuxQ, a)); }
PhaseExpr Context::P(int a) const { return from_var(var(VarKind::AuxP, a)); }

PhaseExpr Context::sq_x() const {
  PhaseExpr e = zero();
  for (int i = 1; i <= n_; ++i)
    e.add_term(TermKey{{{var(VarKind::X, i).code(), 2}}, 0, 0}, Rational(1));
  e.normalize();
  return e;
}

PhaseExpr Context::sq_p() const {
  PhaseExpr e = zero();
  for (int i = 1; i <= n_; ++i)
    e.add_term(TermKey{{{var(VarKind::P, i).code(), 2}}, 0, 0}, Rational(1));
  e.normalize();
  return e;
}

PhaseExpr Context::dot_xp() const {
  PhaseExpr e = zero();
  for (int i = 1; i <= n_; ++i) {
    Monomial m{{var(VarKind::X, i).code(), 1}, {var(VarKind::P, i).code(), 1}};
    e.add_term(TermKey{m, 0, 0}, Rational(1));
  }
  e.normalize();
  return e;
}

PhaseExpr Context::central(CentralElement c) const {
  if (c == CentralElement::SqX) return sq_x();
  if (m_ < 1)
    throw std::domain_error(
        "central element sq(x)+P needs an auxiliary pair declared");
  return sq_x() + P(1);
}

PhaseExpr Context::inverse_central(CentralElement c, int k) const {
  if (k <= 0) throw std::invalid_argument("inverse power must be positive");
  if (c == CentralElement::SqXPlusP && m_ < 1)
    throw std::domain_error(
        "central element sq(x)+P needs an auxiliary pair declared");
  PhaseExpr e = one();
  if (c == CentralElement::SqX)
    e.set_denominator(k, 0);
  else
    e.set_denominator(0, k);
  e.normalize();
  return e;
}

// ---------------------------------------------------------------------------
// PhaseExpr canonical form
// ---------------------------------------------------------------------------

bool PhaseExpr::is_classical() const {
  for (const auto& [k, c] : terms_)
    if (k.h > 0) return false;
  return true;
}

std::optional<Rational> PhaseExpr::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (den_sqx_ != 0 || den_sqxp_ != 0) return std::nullopt;
  if (terms_.size() != 1) return std::nullopt;
  const auto& [k, c] = *terms_.begin();
  if (!k.mono.empty() || k.r != 0 || k.h != 0) return std::nullopt;
  return c;
}

int PhaseExpr::degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, monomial_degree(k.mono));
  return d;
}

void PhaseExpr::add_term(const TermKey& key, const Rational& coef) {
  if (key.h < 0) throw std::invalid_argument("hbar power must be >= 0");
  auto [it, inserted] = terms_.emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) terms_.erase(it);
  } else if (coef == 0) {
    terms_.erase(it);
  }
}

void PhaseExpr::set_denominator(int pow_sqx, int pow_sqxp) {
  if (pow_sqx < 0 || pow_sqxp < 0)
    throw std::invalid_argument("denominator powers must be >= 0");
  if (pow_sqxp > 0 && m_ < 1)
    throw std::domain_error(
        "denominator sq(x)+P needs an auxiliary pair declared");
  den_sqx_ = pow_sqx;
  den_sqxp_ = pow_sqxp;
}

namespace {

PhaseExpr central_poly(int n, int m, CentralElement c) {
  Context ctx(n - 1, m);
  return ctx.central(c);
}

}  // namespace

void PhaseExpr::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
  if (terms_.empty()) {
    den_sqx_ = 0;
    den_sqxp_ = 0;
    return;
  }
  // Cancel central factors shared by numerator and denominator.
  while (den_sqx_ > 0) {
    PhaseExpr num(n_, m_);
    num.terms_ = terms_;
    auto q = poly_divide_exact(num, central_poly(n_, m_, CentralElement::SqX));
    if (!q) break;
    terms_ = std::move(q->terms_);
    --den_sqx_;
  }
  while (den_sqxp_ > 0) {
    PhaseExpr num(n_, m_);
    num.terms_ = terms_;
    auto q =
        poly_divide_exact(num, central_poly(n_, m_, CentralElement::SqXPlusP));
    if (!q) break;
    terms_ = std::move(q->terms_);
    --den_sqxp_;
  }
}

PhaseExpr PhaseExpr::operator-() const {
  PhaseExpr out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

PhaseExpr& PhaseExpr::operator+=(const PhaseExpr& o) {
  if (terms_.empty() && den_sqx_ == 0 && den_sqxp_ == 0) {
    *this = o;
    return *this;
  }
  if (o.terms_.empty()) return *this;
  int tx = std::max(den_sqx_, o.den_sqx_);
  int txp = std::max(den_sqxp_, o.den_sqxp_);
  PhaseExpr lhs = *this;
  PhaseExpr rhs = o;
  auto scale = [&](PhaseExpr& e) {
    PhaseExpr mult(n_, m_);
    mult.add_term(TermKey{}, Rational(1));
    for (int k = e.den_sqx_; k < tx; ++k)
      mult = mult * central_poly(n_, m_, CentralElement::SqX);
    for (int k = e.den_sqxp_; k < txp; ++k)
      mult = mult * central_poly(n_, m_, CentralElement::SqXPlusP);
    PhaseExpr scaled(n_, m_);
    scaled.terms_ = e.terms_;
    scaled.den_sqx_ = 0;
    scaled.den_sqxp_ = 0;
    scaled = scaled * mult;
    e.terms_ = std::move(scaled.terms_);
  };
  scale(lhs);
  scale(rhs);
  for (const auto& [k, c] : rhs.terms_) lhs.add_term(k, c);
  lhs.den_sqx_ = tx;
  lhs.den_sqxp_ = txp;
  lhs.normalize();
  *this = std::move(lhs);
  return *this;
}

PhaseExpr& PhaseExpr::operator-=(const PhaseExpr& o) { return *this += -o; }

PhaseExpr operator*(const PhaseExpr& a, const PhaseExpr& b) {
  PhaseExpr out(std::max(a.n_, b.n_), std::max(a.m_, b.m_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      TermKey k{monomial_mul(ka.mono, kb.mono), ka.r + kb.r, ka.h + kb.h};
      out.add_term(k, ca * cb);
    }
  }
  out.den_sqx_ = a.den_sqx_ + b.den_sqx_;
  out.den_sqxp_ = a.den_sqxp_ + b.den_sqxp_;
  out.normalize();
  return out;
}

PhaseExpr operator*(const Rational& c, PhaseExpr e) {
  if (c == 0) return PhaseExpr(e.n_, e.m_);
  for (auto& [k, v] : e.terms_) v *= c;
  return e;
}

PhaseExpr PhaseExpr::pow(int k) const {
  if (k < 0) throw std::invalid_argument("pow exponent must be >= 0");
  PhaseExpr out(n_, m_);
  out.add_term(TermKey{}, Rational(1));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

// ---------------------------------------------------------------------------
// Division, derivatives, substitution
// ---------------------------------------------------------------------------

std::optional<PhaseExpr> poly_divide_exact(const PhaseExpr& e,
                                           const PhaseExpr& g) {
  if (!e.is_polynomial() || !g.is_polynomial())
    throw std::invalid_argument("poly_divide_exact needs polynomials");
  if (g.is_zero()) throw std::invalid_argument("division by zero");
  if (e.is_zero()) return e;
  const TermKey& glt = leading_key(g);
  const Rational& gc = g.terms().at(glt);
  PhaseExpr rem = e;
  PhaseExpr quot(e.coords(), e.aux());
  while (!rem.is_zero()) {
    const TermKey& rlt = leading_key(rem);
    Monomial q;
    if (!monomial_divides(rlt.mono, glt.mono, &q)) return std::nullopt;
    TermKey qk{std::move(q), rlt.r - glt.r, rlt.h - glt.h};
    if (qk.h < 0) return std::nullopt;
    Rational qc = rem.terms().at(rlt) / gc;
    PhaseExpr qterm(e.coords(), e.aux());
    qterm.add_term(qk, qc);
    quot += qterm;
    rem -= qterm * g;
  }
  return quot;
}

const TermKey& leading_key(const PhaseExpr& e) {
  if (e.is_zero()) throw std::domain_error("zero expression has no leading term");
  return e.terms().rbegin()->first;
}

PhaseExpr partial(const PhaseExpr& e, const PhaseVar& v) {
  const std::uint32_t code = v.code();
  Context ctx(e.coords() - 1, e.aux());
  // d/dv of the numerator.
  PhaseExpr dnum(e.coords(), e.aux());
  for (const auto& [k, c] : e.terms()) {
    for (std::size_t i = 0; i < k.mono.size(); ++i) {
      if (k.mono[i].first != code) continue;
      Monomial m = k.mono;
      int exp = m[i].second;
      if (exp == 1)
        m.erase(m.begin() + static_cast<long>(i));
      else
        m[i].second = exp - 1;
      dnum.add_term(TermKey{std::move(m), k.r, k.h}, c * exp);
    }
  }
  dnum.normalize();
  if (e.is_polynomial()) return dnum;

  // Quotient rule: d(n / u^a w^b) = dn/(u^a w^b) - n (a du/u^{a+1} w^b
  //                                              + b dw/(u^a w^{b+1})).
  PhaseExpr num(e.coords(), e.aux());
  for (const auto& [k, c] : e.terms()) num.add_term(k, c);
  num.normalize();

  PhaseExpr out = dnum;
  out.set_denominator(e.den_sqx(), e.den_sqxp());
  out.normalize();
  if (e.den_sqx() > 0) {
    PhaseExpr du = partial(ctx.central(CentralElement::SqX), v);
    if (!du.is_zero()) {
      PhaseExpr t = Rational(-e.den_sqx()) * (num * du);
      t.set_denominator(e.den_sqx() + 1, e.den_sqxp());
      t.normalize();
      out += t;
    }
  }
  if (e.den_sqxp() > 0) {
    PhaseExpr dw = partial(ctx.central(CentralElement::SqXPlusP), v);
    if (!dw.is_zero()) {
      PhaseExpr t = Rational(-e.den_sqxp()) * (num * dw);
      t.set_denominator(e.den_sqx(), e.den_sqxp() + 1);
      t.normalize();
      out += t;
    }
  }
  return out;
}

PhaseExpr invert_central(const Context& ctx, const PhaseExpr& e, int k) {
  if (k <= 0) throw std::invalid_argument("inverse power must be positive");
  if (e == ctx.central(CentralElement::SqX))
    return ctx.inverse_central(CentralElement::SqX, k);
  if (ctx.aux() >= 1 && e == ctx.central(CentralElement::SqXPlusP))
    return ctx.inverse_central(CentralElement::SqXPlusP, k);
  throw std::domain_error("not a declared central element: " + e.str());
}

std::optional<CentralMonomial> as_central_monomial(const Context& ctx,
                                                   const PhaseExpr& e) {
  if (e.is_zero()) return std::nullopt;
  CentralMonomial out;
  out.sqx = -e.den_sqx();
  out.sqxp = -e.den_sqxp();
  PhaseExpr num(e.coords(), e.aux());
  for (const auto& [k, c] : e.terms()) num.add_term(k, c);
  num.normalize();
  const PhaseExpr sqx = ctx.central(CentralElement::SqX);
  for (;;) {
    auto q = poly_divide_exact(num, sqx);
    if (!q) break;
    num = std::move(*q);
    ++out.sqx;
  }
  if (ctx.aux() >= 1) {
    const PhaseExpr sqxp = ctx.central(CentralElement::SqXPlusP);
    for (;;) {
      auto q = poly_divide_exact(num, sqxp);
      if (!q) break;
      num = std::move(*q);
      ++out.sqxp;
    }
  }
  if (num.terms().size() != 1) return std::nullopt;
  const auto& [k, c] = *num.terms().begin();
  if (!k.mono.empty()) return std::nullopt;
  out.coef = c;
  out.r = k.r;
  out.h = k.h;
  return out;
}

PhaseExpr central_monomial_pow(const Context& ctx, const CentralMonomial& cm,
                               int k) {
  if (cm.coef == 0) throw std::domain_error("cannot exponentiate zero");
  int h = cm.h * k;
  if (h < 0) throw std::domain_error("hbar power would become negative");
  PhaseExpr out = ctx.zero();
  Rational c(1);
  if (k >= 0)
    for (int i = 0; i < k; ++i) c *= cm.coef;
  else
    for (int i = 0; i < -k; ++i) c /= cm.coef;
  out.add_term(TermKey{{}, cm.r * k, h}, c);
  int sqx = cm.sqx * k;
  int sqxp = cm.sqxp * k;
  if (sqx > 0) out = out * ctx.central(CentralElement::SqX).pow(sqx);
  if (sqxp > 0) out = out * ctx.central(CentralElement::SqXPlusP).pow(sqxp);
  PhaseExpr den = ctx.one();
  den.set_denominator(sqx < 0 ? -sqx : 0, sqxp < 0 ? -sqxp : 0);
  den.normalize();
  out = out * den;
  return out;
}

PhaseExpr substitute(const Context& ctx, const PhaseExpr& e, const PhaseVar& v,
                     const PhaseExpr& value) {
  const std::uint32_t code = v.code();
  PhaseExpr out = ctx.zero();
  // Numerator: group by the power of v.
  std::map<int, PhaseExpr> by_power;
  for (const auto& [k, c] : e.terms()) {
    int exp = monomial_degree_of(k.mono, code);
    Monomial rest;
    for (const auto& [vc, ve] : k.mono)
      if (vc != code) rest.emplace_back(vc, ve);
    auto [it, _] = by_power.emplace(exp, ctx.zero());
    it->second.add_term(TermKey{std::move(rest), k.r, k.h}, c);
  }
  for (auto& [exp, part] : by_power) {
    part.normalize();
    out += part * value.pow(exp);
  }
  // Denominators.
  if (e.den_sqx() > 0) {
    PhaseExpr u = substitute(ctx, ctx.central(CentralElement::SqX), v, value);
    auto cm = as_central_monomial(ctx, u);
    if (!cm)
      throw std::domain_error(
          "substitution makes denominator sq(x) non-invertible");
    out = out * central_monomial_pow(ctx, *cm, -e.den_sqx());
  }
  if (e.den_sqxp() > 0) {
    PhaseExpr w =
        substitute(ctx, ctx.central(CentralElement::SqXPlusP), v, value);
    auto cm = as_central_monomial(ctx, w);
    if (!cm)
      throw std::domain_error(
          "substitution makes denominator sq(x)+P non-invertible");
    out = out * central_monomial_pow(ctx, *cm, -e.den_sqxp());
  }
  return out;
}

PhaseExpr at_aux_zero(const PhaseExpr& e) {
  PhaseExpr out(e.coords(), e.aux());
  for (const auto& [k, c] : e.terms()) {
    bool has_aux = false;
    for (const auto& [vc, ve] : k.mono) {
      VarKind kind = var_from_code(vc).kind;
      if (kind == VarKind::AuxQ || kind == VarKind::AuxP) {
        has_aux = true;
        break;
      }
    }
    if (!has_aux) out.add_term(k, c);
  }
  // (x^2 + P)^k becomes (x^2)^k at P = 0.
  out.set_denominator(e.den_sqx() + e.den_sqxp(), 0);
  out.normalize();
  return out;
}

int weighted_degree(const TermKey& key) {
  int d = key.r;
  for (const auto& [vc, ve] : key.mono) {
    switch (var_from_code(vc).kind) {
      case VarKind::X:
      case VarKind::P:
        d += ve;
        break;
      case VarKind::AuxP:
        d += 2 * ve;
        break;
      case VarKind::AuxQ:
        break;
    }
  }
  return d;
}

bool is_weighted_homogeneous(const PhaseExpr& e) {
  if (e.is_zero()) return true;
  int d = weighted_degree(e.terms().begin()->first);
  for (const auto& [k, c] : e.terms())
    if (weighted_degree(k) != d) return false;
  return true;
}

PhaseExpr normalize_constraint(const PhaseExpr& e) {
  if (e.is_zero()) return e;
  // gcd of numerators over lcm of denominators.
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [k, c] : e.terms()) {
    num_gcd = gcd(num_gcd, numerator(c));
    den_lcm = lcm(den_lcm, denominator(c));
  }
  Rational content(num_gcd, den_lcm);
  const Rational& lead = e.terms().rbegin()->second;
  if (lead < 0) content = -content;
  Rational inv = Rational(1) / content;
  return inv * e;
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

namespace {

void print_power(std::ostringstream& os, const std::string& base, int exp,
                 bool& first) {
  if (exp == 0) return;
  if (!first) os << "*";
  first = false;
  os << base;
  if (exp != 1) os << "^" << exp;
}

std::string term_str(const TermKey& k, const Rational& c, bool leading) {
  std::ostringstream os;
  Rational a = c < 0 ? Rational(-c) : c;
  if (!leading)
    os << (c < 0 ? " - " : " + ");
  else if (c < 0)
    os << "-";
  bool first = true;
  bool unit = (a == 1);
  if (!unit || (k.mono.empty() && k.r == 0 && k.h == 0)) {
    os << rational_str(a);
    first = false;
  }
  print_power(os, "R", k.r, first);
  print_power(os, "hbar", k.h, first);
  for (const auto& [vc, ve] : k.mono)
    print_power(os, var_name(var_from_code(vc)), ve, first);
  return os.str();
}

}  // namespace

std::string PhaseExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool parens = (den_sqx_ > 0 || den_sqxp_ > 0) && terms_.size() > 1;
  if (parens) os << "(";
  bool leading = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << term_str(it->first, it->second, leading);
    leading = false;
  }
  if (parens) os << ")";
  if (den_sqx_ > 0 || den_sqxp_ > 0) {
    os << "/";
    bool dparens = (den_sqx_ > 0 && den_sqxp_ > 0);
    if (dparens) os << "(";
    if (den_sqx_ > 0) {
      os << "sq(x)";
      if (den_sqx_ != 1) os << "^" << den_sqx_;
      if (den_sqxp_ > 0) os << "*";
    }
    if (den_sqxp_ > 0) {
      os << "(sq(x)+P1)";
      if (den_sqxp_ != 1) os << "^" << den_sqxp_;
    }
    if (dparens) os << ")";
  }
  return os.str();
}

}  // namespace squant
