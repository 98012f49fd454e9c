#include "squant/ideal.hpp"

#include "squant/linsolve.hpp"

#include <algorithm>
#include <set>

namespace squant {

namespace {

PhaseExpr clear_denominators(const Context& ctx, const PhaseExpr& e) {
  PhaseExpr out = ctx.zero();
  for (const auto& [k, c] : e.terms()) out.add_term(k, c);
  out.normalize();
  return out;
}

/// All monomials of total degree <= bound over the given variable codes.
void enumerate_monomials(const std::vector<std::uint32_t>& vars,
                         std::size_t next, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
  if (next == vars.size()) {
    out.push_back(cur);
    return;
  }
  enumerate_monomials(vars, next + 1, remaining, cur, out);
  for (int e = 1; e <= remaining; ++e) {
    cur.emplace_back(vars[next], e);
    enumerate_monomials(vars, next + 1, remaining - e, cur, out);
    cur.pop_back();
  }
}

std::vector<std::uint32_t> support_vars(const PhaseExpr& e,
                                        const std::vector<PhaseExpr>& gens) {
  std::set<std::uint32_t> vars;
  auto collect = [&](const PhaseExpr& f) {
    for (const auto& [k, c] : f.terms())
      for (const auto& [v, ex] : k.mono) vars.insert(v);
  };
  collect(e);
  for (const auto& g : gens) collect(g);
  return {vars.begin(), vars.end()};
}

struct Column {
  std::size_t gen;  // index into gens, or SIZE_MAX for a remainder column
  TermKey key;      // witness term (or the remainder term itself)
};

struct Assembled {
  LinearSystem system;
  std::vector<Column> columns;
};

/// Builds the membership system for e = sum_a A_a g_a (+ remainder columns
/// with empty monomials when allow_constant).
Assembled build_system(const Context& ctx, const PhaseExpr& e,
                       const std::vector<PhaseExpr>& gens, int bound,
                       bool allow_constant) {
  std::vector<Monomial> monos;
  {
    Monomial cur;
    std::vector<std::uint32_t> vars = support_vars(e, gens);
    enumerate_monomials(vars, 0, bound, cur, monos);
    std::sort(monos.begin(), monos.end(),
              [](const Monomial& a, const Monomial& b) {
                return monomial_cmp(a, b) < 0;
              });
  }

  bool homogeneous = is_weighted_homogeneous(e);
  std::set<int> gen_h;
  std::vector<int> gen_w(gens.size(), 0);
  for (std::size_t a = 0; a < gens.size(); ++a) {
    homogeneous = homogeneous && is_weighted_homogeneous(gens[a]);
    for (const auto& [k, c] : gens[a].terms()) gen_h.insert(k.h);
    if (!gens[a].is_zero()) gen_w[a] = weighted_degree(gens[a].terms().begin()->first);
  }
  homogeneous = homogeneous && gen_h.size() <= 1 &&
                (gen_h.empty() || *gen_h.begin() == 0);

  // Witness term keys per generator.
  std::vector<Column> columns;
  if (homogeneous) {
    // Weighted grading forces the R power of each witness term per
    // homogeneous component of e; components are independent.
    std::set<std::pair<int, int>> components;  // (weighted degree, hbar power)
    for (const auto& [k, c] : e.terms())
      components.insert({weighted_degree(k), k.h});
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (gens[a].is_zero()) continue;
      for (const auto& [d, h] : components) {
        for (const auto& m : monos) {
          int w_mono = weighted_degree(TermKey{m, 0, 0});
          int gamma = d - gen_w[a] - w_mono;
          columns.push_back({a, TermKey{m, gamma, h}});
        }
      }
    }
    if (allow_constant)
      for (const auto& [d, h] : components)
        columns.push_back({SIZE_MAX, TermKey{{}, d, h}});
  } else {
    int e_rmin = 0, e_rmax = 0, e_hmax = 0;
    for (const auto& [k, c] : e.terms()) {
      e_rmin = std::min(e_rmin, k.r);
      e_rmax = std::max(e_rmax, k.r);
      e_hmax = std::max(e_hmax, k.h);
    }
    int g_rmin = 0, g_rmax = 0;
    for (const auto& g : gens)
      for (const auto& [k, c] : g.terms()) {
        g_rmin = std::min(g_rmin, k.r);
        g_rmax = std::max(g_rmax, k.r);
      }
    for (std::size_t a = 0; a < gens.size(); ++a) {
      if (gens[a].is_zero()) continue;
      for (int h = 0; h <= e_hmax; ++h)
        for (int r = e_rmin - g_rmax - 2; r <= e_rmax - g_rmin + 2; ++r)
          for (const auto& m : monos) columns.push_back({a, TermKey{m, r, h}});
    }
    if (allow_constant)
      for (int h = 0; h <= e_hmax; ++h)
        for (int r = e_rmin - g_rmax - 2; r <= e_rmax - g_rmin + 2; ++r)
          columns.push_back({SIZE_MAX, TermKey{{}, r, h}});
  }

  // Equations: coefficient of every monomial of sum_a A_a g_a - e must
  // vanish. Rows are indexed by TermKey.
  std::map<TermKey, std::map<int, Rational>> rows;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Column& col = columns[j];
    if (col.gen == SIZE_MAX) {
      rows[col.key][static_cast<int>(j)] += 1;
      continue;
    }
    for (const auto& [k, c] : gens[col.gen].terms()) {
      TermKey prod{monomial_mul(col.key.mono, k.mono), col.key.r + k.r,
                   col.key.h + k.h};
      if (prod.h < 0) continue;
      rows[prod][static_cast<int>(j)] += c;
    }
  }
  for (const auto& [k, c] : e.terms()) rows[k];  // ensure the row exists

  LinearSystem system(static_cast<int>(columns.size()));
  for (auto& [key, coeffs] : rows) {
    auto it = e.terms().find(key);
    Rational rhs = it == e.terms().end() ? Rational(0) : it->second;
    system.add_equation(std::move(coeffs), rhs);
  }
  return {std::move(system), std::move(columns)};
}

}  // namespace

IdealReduceResult ideal_reduce(const Context& ctx, const PhaseExpr& e,
                               const std::vector<PhaseExpr>& gens,
                               IdealOptions opts) {
  for (const auto& g : gens)
    if (!g.is_polynomial())
      throw std::invalid_argument("ideal generators must be polynomial");
  PhaseExpr target = clear_denominators(ctx, e);
  IdealReduceResult res;
  res.degree_bound =
      opts.degree_bound > 0 ? opts.degree_bound : target.degree() + 2;
  res.witness.assign(gens.size(), ctx.zero());
  if (target.is_zero()) {
    res.member = true;
    return res;
  }
  if (gens.empty()) return res;

  Assembled sys = build_system(ctx, target, gens, res.degree_bound, false);
  auto sol = sys.system.solve();
  if (!sol) return res;
  res.member = true;
  for (std::size_t j = 0; j < sys.columns.size(); ++j) {
    if ((*sol)[j] == 0) continue;
    res.witness[sys.columns[j].gen].add_term(sys.columns[j].key, (*sol)[j]);
  }
  for (auto& w : res.witness) w.normalize();
  return res;
}

std::optional<PhaseExpr> reduce_to_constant(const Context& ctx,
                                            const PhaseExpr& e,
                                            const std::vector<PhaseExpr>& gens,
                                            IdealOptions opts) {
  for (const auto& g : gens)
    if (!g.is_polynomial())
      throw std::invalid_argument("ideal generators must be polynomial");
  PhaseExpr target = clear_denominators(ctx, e);
  if (target.is_zero()) return ctx.zero();
  int bound = opts.degree_bound > 0 ? opts.degree_bound : target.degree() + 2;
  if (gens.empty()) {
    auto cm = as_central_monomial(ctx, target);
    if (cm && cm->sqx == 0 && cm->sqxp == 0) return target;
    return std::nullopt;
  }
  Assembled sys = build_system(ctx, target, gens, bound, true);
  auto sol = sys.system.solve();
  if (!sol) return std::nullopt;
  PhaseExpr rem = ctx.zero();
  for (std::size_t j = 0; j < sys.columns.size(); ++j) {
    if (sys.columns[j].gen != SIZE_MAX || (*sol)[j] == 0) continue;
    rem.add_term(sys.columns[j].key, (*sol)[j]);
  }
  rem.normalize();
  return rem;
}

}  // namespace squant
