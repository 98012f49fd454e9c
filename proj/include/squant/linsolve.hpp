#ifndef SQUANT_LINSOLVE_HPP
#define SQUANT_LINSOLVE_HPP

#include "squant/rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace squant {

/// Exact sparse linear system A t = b over the rationals. Unknown columns are
/// added up front; equations are sparse rows. solve() returns one solution
/// with every free unknown set to zero (columns are pivoted in declaration
/// order, so earlier unknowns are preferred), or nullopt when inconsistent.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns) : cols_(unknowns) {}

  int unknowns() const { return cols_; }

  void add_equation(std::map<int, Rational> coeffs, Rational rhs);

  std::optional<std::vector<Rational>> solve() const;

 private:
  int cols_;
  std::vector<std::map<int, Rational>> rows_;
  std::vector<Rational> rhs_;
};

}  // namespace squant

#endif
