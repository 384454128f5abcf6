#include "octfactor/oct_poly.hpp"

#include <stdexcept>
#include <utility>

#include "octfactor/errors.hpp"

namespace octfactor {

OctPoly::OctPoly(AlgebraRef algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw std::invalid_argument("null algebra");
}

OctPoly::OctPoly(AlgebraRef algebra, std::vector<Octonion> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw std::invalid_argument("null algebra");
  for (const auto& c : coeffs_) require_same_algebra(algebra_, c.algebra());
  trim();
}

void OctPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OctPoly OctPoly::constant(const Octonion& c) { return OctPoly(c.algebra(), {c}); }

OctPoly OctPoly::linear_root(const Octonion& lambda) {
  return OctPoly(lambda.algebra(), {-lambda, Octonion::scalar(lambda.algebra(), 1)});
}

OctPoly OctPoly::from_central(const AlgebraRef& algebra, const CentralPoly& p) {
  std::vector<Octonion> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c.push_back(Octonion::scalar(algebra, r));
  return OctPoly(algebra, std::move(c));
}

Octonion OctPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Octonion(algebra_); }

const Octonion& OctPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

OctPoly OctPoly::operator-() const {
  OctPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OctPoly& OctPoly::operator+=(const OctPoly& o) {
  require_same_algebra(algebra_, o.algebra_);
  while (coeffs_.size() < o.coeffs_.size()) coeffs_.emplace_back(algebra_);
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

OctPoly& OctPoly::operator-=(const OctPoly& o) { return *this += -o; }

bool operator==(const OctPoly& a, const OctPoly& b) {
  if (a.algebra_ != b.algebra_ && !(*a.algebra_ == *b.algebra_)) return false;
  return a.coeffs_ == b.coeffs_;
}

Octonion evaluate(const OctPoly& f, const Octonion& lam) {
  require_same_algebra(f.algebra(), lam.algebra());
  Octonion acc(f.algebra());
  Octonion pw = Octonion::scalar(f.algebra(), 1);
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (k > 0) pw = pw * lam;
    acc += f.coeffs()[k] * pw;
  }
  return acc;
}

OctPoly poly_scale(const Octonion& c, const OctPoly& f) {
  require_same_algebra(c.algebra(), f.algebra());
  std::vector<Octonion> r;
  r.reserve(f.coeffs().size());
  for (const auto& x : f.coeffs()) r.push_back(c * x);
  return OctPoly(f.algebra(), std::move(r));
}

OctPoly central_mul(const OctPoly& f, const CentralPoly& p) {
  if (f.is_zero() || p.is_zero()) return OctPoly(f.algebra());
  std::vector<Octonion> r(f.coeffs().size() + p.coeffs().size() - 1, Octonion(f.algebra()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) r[i + j] += f.coeffs()[i] * p.coeffs()[j];
  }
  return OctPoly(f.algebra(), std::move(r));
}

OctPoly poly_mul(const OctPoly& f, const OctPoly& g) {
  require_same_algebra(f.algebra(), g.algebra());
  if (f.is_zero() || g.is_zero()) return OctPoly(f.algebra());
  std::vector<Octonion> r(f.coeffs().size() + g.coeffs().size() - 1, Octonion(f.algebra()));
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) r[i + j] += f.coeffs()[i] * g.coeffs()[j];
  }
  return OctPoly(f.algebra(), std::move(r));
}

OctPoly conj_poly(const OctPoly& f) {
  std::vector<Octonion> r;
  r.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) r.push_back(c.conj());
  return OctPoly(f.algebra(), std::move(r));
}

CentralPoly companion_via_coeffs(const OctPoly& f) {
  if (f.is_zero()) throw std::domain_error("companion polynomial of the zero polynomial");
  const auto& c = f.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<Rational> b(2 * n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    b[2 * i] += c[i].norm();
    for (std::size_t j = i + 1; j <= n; ++j) b[i + j] += (c[i].conj() * c[j]).trace();
  }
  return CentralPoly(std::move(b));
}

CentralPoly companion_via_product(const OctPoly& f) {
  if (f.is_zero()) throw std::domain_error("companion polynomial of the zero polynomial");
  OctPoly prod = poly_mul(conj_poly(f), f);
  std::vector<Rational> b;
  b.reserve(prod.coeffs().size());
  for (std::size_t k = 0; k < prod.coeffs().size(); ++k) {
    const Octonion& z = prod.coeffs()[k];
    if (!z.is_central()) {
      throw NonCentralResult("conj(f)*f has a non-central coefficient at x^" + std::to_string(k));
    }
    b.push_back(z.real());
  }
  return CentralPoly(std::move(b));
}

OctPoly expand_chain(const FactorChain& chain) {
  OctPoly acc = OctPoly::constant(chain.leading);
  for (const auto& lam : chain.roots) acc = poly_mul(acc, OctPoly::linear_root(lam));
  return acc;
}

}  // namespace octfactor
