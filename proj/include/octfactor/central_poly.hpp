#pragma once

// The central polynomial ring Q[x] and its factorization machinery.

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "octfactor/rational.hpp"

namespace octfactor {

/// Dense univariate polynomial over Q. Coefficient k multiplies x^k; no
/// trailing zeros are stored, so the zero polynomial has no coefficients and
/// degree -1.
class CentralPoly {
 public:
  CentralPoly() = default;
  explicit CentralPoly(std::vector<Rational> coeffs);
  CentralPoly(std::initializer_list<Rational> coeffs);

  static CentralPoly constant(const Rational& c);
  static CentralPoly monomial(const Rational& c, std::size_t k);
  /// x^2 - t x + n
  static CentralPoly quadratic(const Rational& trace, const Rational& norm);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero past the degree).
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  CentralPoly derivative() const;
  CentralPoly monic() const;

  CentralPoly& operator+=(const CentralPoly& o);
  CentralPoly& operator-=(const CentralPoly& o);
  CentralPoly& operator*=(const CentralPoly& o);
  CentralPoly& operator*=(const Rational& c);

  friend CentralPoly operator+(CentralPoly a, const CentralPoly& b) { return a += b; }
  friend CentralPoly operator-(CentralPoly a, const CentralPoly& b) { return a -= b; }
  friend CentralPoly operator*(CentralPoly a, const CentralPoly& b) { return a *= b; }
  friend CentralPoly operator*(CentralPoly a, const Rational& c) { return a *= c; }
  friend CentralPoly operator*(const Rational& c, CentralPoly a) { return a *= c; }
  CentralPoly operator-() const;

  friend bool operator==(const CentralPoly&, const CentralPoly&) = default;

  /// "x^4 + x^2 + 1" style rendering, highest degree first.
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder with deg(rem) < deg(divisor). Throws
/// std::domain_error when the divisor is zero.
std::pair<CentralPoly, CentralPoly> divrem(const CentralPoly& p, const CentralPoly& q);

/// Monic greatest common divisor; gcd(0, 0) = 0.
CentralPoly gcd(const CentralPoly& p, const CentralPoly& q);

CentralPoly power(const CentralPoly& p, unsigned e);

/// Factor with its multiplicity.
struct PolyFactor {
  CentralPoly poly;
  int multiplicity = 1;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

/// p = unit * prod(factor.poly ^ factor.multiplicity) with monic factors.
struct Factorization {
  Rational unit;
  std::vector<PolyFactor> factors;

  CentralPoly expand() const;
};

/// Yun's algorithm. Factors are monic, square-free, pairwise coprime and
/// listed by increasing multiplicity. Throws std::domain_error on zero.
Factorization squarefree_decomposition(const CentralPoly& p);

struct IrreducibleOptions {
  int degree_cap = 16;
};

/// Complete factorization into monic irreducibles over Q. Factors are sorted
/// by (degree, coefficients). Throws DegreeCapExceeded when deg p exceeds the
/// cap and std::domain_error on zero.
Factorization factor_irreducible(const CentralPoly& p, const IrreducibleOptions& options = {});

}  // namespace octfactor
