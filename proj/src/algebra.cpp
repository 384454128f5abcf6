#include "octfactor/algebra.hpp"

#include <stdexcept>
#include <utility>

#include "octfactor/errors.hpp"

namespace octfactor {

namespace {

using Quat = std::array<Rational, 4>;

Quat qmul(const Quat& a, const Quat& b, const Rational& alpha, const Rational& beta) {
  const Rational ab = alpha * beta;
  return {a[0] * b[0] + alpha * a[1] * b[1] + beta * a[2] * b[2] - ab * a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] - beta * a[2] * b[3] + beta * a[3] * b[2],
          a[0] * b[2] + a[2] * b[0] + alpha * a[1] * b[3] - alpha * a[3] * b[1],
          a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1]};
}

Quat qconj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Rational qnorm(const Quat& a, const Rational& alpha, const Rational& beta) {
  return a[0] * a[0] - alpha * a[1] * a[1] - beta * a[2] * a[2] + alpha * beta * a[3] * a[3];
}

Quat lower(const Octonion::Coords& c) { return {c[0], c[1], c[2], c[3]}; }
Quat upper(const Octonion::Coords& c) { return {c[4], c[5], c[6], c[7]}; }

}  // namespace

bool norm_positive_definite(const AlgebraParams& p) {
  return sgn(p.alpha) < 0 && sgn(p.beta) < 0 && (p.dim == 4 || sgn(p.gamma) < 0);
}

AlgebraRef make_algebra(const AlgebraParams& params) {
  if (sgn(params.alpha) == 0 || sgn(params.beta) == 0 || sgn(params.gamma) == 0) {
    throw std::invalid_argument("algebra parameters alpha, beta, gamma must be nonzero");
  }
  if (params.dim != 4 && params.dim != 8) throw std::invalid_argument("algebra dimension must be 4 or 8");
  return std::make_shared<const AlgebraParams>(params);
}

void require_same_algebra(const AlgebraRef& a, const AlgebraRef& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw AlgebraMismatch("operands belong to different algebras");
}

Octonion::Octonion(AlgebraRef algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("null algebra");
}

Octonion::Octonion(AlgebraRef algebra, Coords coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw std::invalid_argument("null algebra");
  if (algebra_->dim == 4) {
    for (std::size_t k = 4; k < kOctonionDim; ++k) {
      if (sgn(coords_[k]) != 0) throw std::invalid_argument("quaternion algebra has no l-coordinates");
    }
  }
}

Octonion Octonion::scalar(AlgebraRef algebra, const Rational& c) {
  Octonion z(std::move(algebra));
  z.coords_[0] = c;
  return z;
}

Octonion Octonion::basis(AlgebraRef algebra, std::size_t k) {
  Coords c;
  c.at(k) = 1;
  return Octonion(std::move(algebra), std::move(c));
}

bool Octonion::is_zero() const {
  for (const auto& c : coords_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Octonion::is_central() const {
  for (std::size_t k = 1; k < kOctonionDim; ++k) {
    if (sgn(coords_[k]) != 0) return false;
  }
  return true;
}

Octonion Octonion::conj() const {
  Octonion r = *this;
  for (std::size_t k = 1; k < kOctonionDim; ++k) r.coords_[k] = -r.coords_[k];
  return r;
}

Rational Octonion::trace() const { return 2 * coords_[0]; }

Rational Octonion::norm() const {
  const auto& p = *algebra_;
  Rational n = qnorm(lower(coords_), p.alpha, p.beta);
  if (p.dim == 8) n -= p.gamma * qnorm(upper(coords_), p.alpha, p.beta);
  return n;
}

Octonion Octonion::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw ZeroDivisor("element has norm zero and no inverse");
  Octonion r = conj();
  r *= 1 / n;
  return r;
}

Octonion Octonion::operator-() const {
  Octonion r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  require_same_algebra(algebra_, o.algebra_);
  for (std::size_t k = 0; k < kOctonionDim; ++k) coords_[k] += o.coords_[k];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  require_same_algebra(algebra_, o.algebra_);
  for (std::size_t k = 0; k < kOctonionDim; ++k) coords_[k] -= o.coords_[k];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  require_same_algebra(a.algebra_, b.algebra_);
  const auto& p = *a.algebra_;
  Octonion out(a.algebra_);
  const Quat q = lower(a.coords_);
  const Quat s = lower(b.coords_);
  if (p.dim == 4) {
    Quat prod = qmul(q, s, p.alpha, p.beta);
    for (std::size_t k = 0; k < 4; ++k) out.coords_[k] = std::move(prod[k]);
    return out;
  }
  const Quat r = upper(a.coords_);
  const Quat t = upper(b.coords_);
  Quat lo = qmul(q, s, p.alpha, p.beta);
  const Quat tr = qmul(qconj(t), r, p.alpha, p.beta);
  const Quat rs = qmul(r, qconj(s), p.alpha, p.beta);
  const Quat tq = qmul(t, q, p.alpha, p.beta);
  for (std::size_t k = 0; k < 4; ++k) {
    out.coords_[k] = lo[k] + p.gamma * tr[k];
    out.coords_[k + 4] = rs[k] + tq[k];
  }
  return out;
}

bool operator==(const Octonion& a, const Octonion& b) {
  if (a.algebra_ != b.algebra_ && !(*a.algebra_ == *b.algebra_)) return false;
  return a.coords_ == b.coords_;
}

Octonion power(const Octonion& z, unsigned k) {
  Octonion r = Octonion::scalar(z.algebra(), 1);
  for (unsigned e = 0; e < k; ++e) r = r * z;
  return r;
}

Octonion inner_conjugate(const Octonion& u, const Octonion& z) {
  require_same_algebra(u.algebra(), z.algebra());
  return (u * z) * u.inverse();
}

BasisTable basis_table(const AlgebraRef& algebra) {
  auto zero = [&] {
    std::array<Octonion, kOctonionDim> row{Octonion(algebra), Octonion(algebra), Octonion(algebra),
                                           Octonion(algebra), Octonion(algebra), Octonion(algebra),
                                           Octonion(algebra), Octonion(algebra)};
    return row;
  };
  BasisTable table{zero(), zero(), zero(), zero(), zero(), zero(), zero(), zero()};
  const auto n = static_cast<std::size_t>(algebra->dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = Octonion::basis(algebra, a) * Octonion::basis(algebra, b);
    }
  }
  return table;
}

}  // namespace octfactor
