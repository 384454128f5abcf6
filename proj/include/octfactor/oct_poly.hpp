#pragma once

// Left polynomials over a quaternion/octonion algebra: the indeterminate is
// central and coefficients are written to its left, f(x) = c_n x^n + ... + c_0.

#include <cstddef>
#include <vector>

#include "octfactor/algebra.hpp"
#include "octfactor/central_poly.hpp"

namespace octfactor {

class OctPoly {
 public:
  explicit OctPoly(AlgebraRef algebra);
  /// coeffs[k] multiplies x^k; every coefficient must live in `algebra`.
  OctPoly(AlgebraRef algebra, std::vector<Octonion> coeffs);

  static OctPoly constant(const Octonion& c);
  /// x - lambda
  static OctPoly linear_root(const Octonion& lambda);
  /// The central polynomial p embedded coefficientwise.
  static OctPoly from_central(const AlgebraRef& algebra, const CentralPoly& p);

  const AlgebraRef& algebra() const { return algebra_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Octonion>& coeffs() const { return coeffs_; }
  Octonion coeff(std::size_t k) const;
  const Octonion& leading() const;

  OctPoly operator-() const;
  OctPoly& operator+=(const OctPoly& o);
  OctPoly& operator-=(const OctPoly& o);
  friend OctPoly operator+(OctPoly a, const OctPoly& b) { return a += b; }
  friend OctPoly operator-(OctPoly a, const OctPoly& b) { return a -= b; }

  friend bool operator==(const OctPoly& a, const OctPoly& b);

 private:
  void trim();
  AlgebraRef algebra_;
  std::vector<Octonion> coeffs_;
};

/// c_n lam^n + ... + c_1 lam + c_0.
Octonion evaluate(const OctPoly& f, const Octonion& lam);

/// Left scalar multiple c*f, coefficientwise.
OctPoly poly_scale(const Octonion& c, const OctPoly& f);
/// f * p for central p (the F[x]-module action).
OctPoly central_mul(const OctPoly& f, const CentralPoly& p);

/// Convolution product. A[x] is not associative for octonions, so products of
/// three or more factors must be parenthesized by the caller.
OctPoly poly_mul(const OctPoly& f, const OctPoly& g);

OctPoly conj_poly(const OctPoly& f);

/// Companion polynomial from the coefficient formula:
/// b_k = sum_{i<j, i+j=k} Tr(conj(c_i) c_j), plus Norm(c_m) when k = 2m.
/// Throws std::domain_error for f = 0.
CentralPoly companion_via_coeffs(const OctPoly& f);

/// Companion polynomial as conj(f) * f. Throws NonCentralResult if a
/// coefficient of the product is not central, std::domain_error for f = 0.
CentralPoly companion_via_product(const OctPoly& f);

/// Leading constant c and roots lambda_n, ..., lambda_1 encoding
/// ((...(c(x - lambda_n))...)(x - lambda_2))(x - lambda_1).
struct FactorChain {
  Octonion leading;
  std::vector<Octonion> roots;  // lambda_n first, lambda_1 last
};

/// Re-expands a chain in its left-nested parenthesization.
OctPoly expand_chain(const FactorChain& chain);

}  // namespace octfactor
