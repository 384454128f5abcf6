#pragma once

// Exact arithmetic in a quaternion or octonion algebra over Q obtained by
// Cayley-Dickson doubling.
//
// Basis order: 1, i, j, ij, l, il, jl, (ij)l with i^2 = alpha, j^2 = beta,
// ij = -ji and l^2 = gamma. An element q + r*l (q, r quaternions) multiplies as
//   (q + r l)(s + t l) = (q s + gamma * conj(t) r) + (r conj(s) + t q) l.

#include <array>
#include <cstddef>
#include <memory>
#include <string_view>

#include "octfactor/rational.hpp"

namespace octfactor {

struct AlgebraParams {
  Rational alpha = -1;
  Rational beta = -1;
  Rational gamma = -1;  // Cayley-Dickson parameter, l^2
  int dim = 8;          // 4 (quaternions) or 8 (octonions)

  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

/// True when the norm form is positive definite (alpha, beta, gamma < 0), which
/// makes the algebra a division algebra.
bool norm_positive_definite(const AlgebraParams& params);

/// Validated, shareable handle to a set of structure constants.
using AlgebraRef = std::shared_ptr<const AlgebraParams>;

/// Throws std::invalid_argument unless alpha, beta, gamma are nonzero and dim is 4 or 8.
AlgebraRef make_algebra(const AlgebraParams& params = {});

inline constexpr std::size_t kOctonionDim = 8;
inline constexpr std::array<std::string_view, kOctonionDim> kBasisNames = {"1",  "i",  "j",  "ij",
                                                                           "l", "il", "jl", "ijl"};

class Octonion {
 public:
  using Coords = std::array<Rational, kOctonionDim>;

  explicit Octonion(AlgebraRef algebra);
  /// Throws std::invalid_argument if a dimension-4 algebra gets nonzero l-coordinates.
  Octonion(AlgebraRef algebra, Coords coords);

  static Octonion scalar(AlgebraRef algebra, const Rational& c);
  /// The k-th basis element in the order of kBasisNames.
  static Octonion basis(AlgebraRef algebra, std::size_t k);

  const AlgebraRef& algebra() const { return algebra_; }
  const AlgebraParams& params() const { return *algebra_; }
  const Coords& coords() const { return coords_; }
  const Rational& operator[](std::size_t k) const { return coords_[k]; }
  const Rational& real() const { return coords_[0]; }

  bool is_zero() const;
  /// Scalar multiple of 1.
  bool is_central() const;

  Octonion conj() const;
  Rational trace() const;
  Rational norm() const;
  /// conj(z) / Norm(z); throws ZeroDivisor when the norm vanishes.
  Octonion inverse() const;

  Octonion operator-() const;
  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& c);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator*(Octonion a, const Rational& c) { return a *= c; }
  friend Octonion operator*(const Rational& c, Octonion a) { return a *= c; }
  /// Nonassociative product; parenthesize explicitly.
  friend Octonion operator*(const Octonion& a, const Octonion& b);

  friend bool operator==(const Octonion& a, const Octonion& b);

 private:
  AlgebraRef algebra_;
  Coords coords_;
};

/// Throws AlgebraMismatch unless both operands live in the same algebra.
void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b);

/// z^k for k >= 0 (well defined: the algebra is power-associative).
Octonion power(const Octonion& z, unsigned k);

/// (u z) u^{-1}. Preserves trace and norm. Throws ZeroDivisor if u = 0.
Octonion inner_conjugate(const Octonion& u, const Octonion& z);

/// All products basis[a] * basis[b]; rows and columns beyond dim are unused
/// (zero) in the quaternion case.
using BasisTable = std::array<std::array<Octonion, kOctonionDim>, kOctonionDim>;
BasisTable basis_table(const AlgebraRef& algebra);

}  // namespace octfactor
