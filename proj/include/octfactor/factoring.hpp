#pragma once

// Factorization of left polynomials over octonion (and quaternion) division
// algebras into left-nested linear factors, driven by the companion
// polynomial conj(f) * f.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "octfactor/algebra.hpp"
#include "octfactor/central_poly.hpp"
#include "octfactor/oct_poly.hpp"

namespace octfactor {

/// The central quadratic x^2 - trace*x + norm with a multiplicity; one
/// conjugacy class of roots.
struct QuadraticClassFactor {
  Rational trace;
  Rational norm;
  int multiplicity = 1;

  CentralPoly quadratic() const { return CentralPoly::quadratic(trace, norm); }
  /// trace^2 - 4 norm
  Rational discriminant() const { return trace * trace - 4 * norm; }

  friend bool operator==(const QuadraticClassFactor&, const QuadraticClassFactor&) = default;
};

/// C_f = norm_leading * prod (x^2 - t_k x + n_k)^{m_k}.
struct CompanionDecomposition {
  Rational norm_leading;
  std::vector<QuadraticClassFactor> classes;  // sorted by (trace, norm)

  CentralPoly expand() const;
  int total_multiplicity() const;
};

/// Bounds for the search of an element with prescribed trace and norm.
struct WitnessBound {
  int max_denominator = 8;
  int max_numerator = 16;
};

struct FactorOptions;

/// Splits C over Q into the class quadratics. Throws NotDecomposable when an
/// irreducible factor has degree > 2, a linear factor has odd multiplicity,
/// the leading coefficient differs from norm_leading, or (positive definite
/// norm form only) an irreducible quadratic has positive discriminant.
CompanionDecomposition decompose_companion(const CentralPoly& companion, const Rational& norm_leading,
                                           const AlgebraParams& params, const FactorOptions& options);
CompanionDecomposition decompose_companion(const CentralPoly& companion, const Rational& norm_leading,
                                           const AlgebraParams& params);

/// g with f = g (x - lam), via d_k = c_n lam^{n-1-k} + ... + c_{k+1}.
/// Throws NotARoot unless f(lam) = 0.
OctPoly factor_out_root(const OctPoly& f, const Octonion& lam);

struct WedderburnResult {
  Octonion gamma;
  OctPoly h;
};

/// For distinct roots lam1, lam2 of f: gamma = (lam1 - lam2) lam2 (lam1 - lam2)^{-1}
/// and the degree n-1 polynomial h with h(gamma) = 0. Throws NotARoot,
/// EqualRoots, or ZeroDivisor (lam2 = 0 makes gamma non-invertible).
WedderburnResult wedderburn_transfer(const OctPoly& f, const Octonion& lam1, const Octonion& lam2);

/// f(lam) = A lam + B for every lam with the class's trace and norm.
struct ClassLinearization {
  Octonion a;
  Octonion b;
};
ClassLinearization linearize_in_class(const OctPoly& f, const QuadraticClassFactor& cls);

/// Candidate elements with the class's trace and norm, in deterministic
/// search order: smallest common denominator, then fewest nonzero
/// coordinates, then non-negative coordinates before sign variants.
std::vector<Octonion> class_witnesses(const QuadraticClassFactor& cls, const AlgebraRef& algebra,
                                      const WitnessBound& bound = {}, std::size_t limit = 16);

/// First entry of class_witnesses. Throws WitnessNotFound.
Octonion class_witness(const QuadraticClassFactor& cls, const AlgebraRef& algebra, const WitnessBound& bound = {});

/// A root of f in the class. Throws NoRootInClass when the linear equation has
/// no solution or its solution is not in the class.
Octonion solve_in_class(const OctPoly& f, const QuadraticClassFactor& cls, const WitnessBound& bound = {});

struct ClassKey {
  Rational trace;
  Rational norm;
  friend bool operator==(const ClassKey&, const ClassKey&) = default;
};

struct FactorOptions {
  /// Either a permutation of the distinct classes, or the full step sequence
  /// (one entry per multiplicity). Default: lexicographic by (trace, norm).
  std::optional<std::vector<ClassKey>> class_order;
  WitnessBound witness_bound;
  int degree_cap = 16;
  /// Cross-check the companion polynomial against the coefficient formula.
  bool check = false;
};

/// Left-nested factorization f = ((...(c(x - lam_n))...)(x - lam_2))(x - lam_1).
/// Throws NotDecomposable, NoRootInClass, WitnessNotFound, or
/// InternalVerificationFailure; std::invalid_argument for a bad class order.
FactorChain factor_fully(const OctPoly& f, const FactorOptions& options = {});

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;
  bool ok() const;
};

VerificationReport verify_factorization(const OctPoly& f, const FactorChain& chain,
                                        const FactorOptions& options = {});

}  // namespace octfactor
