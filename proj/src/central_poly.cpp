#include "octfactor/central_poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "octfactor/errors.hpp"

namespace octfactor {

CentralPoly::CentralPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CentralPoly::CentralPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

CentralPoly CentralPoly::constant(const Rational& c) { return CentralPoly({c}); }

CentralPoly CentralPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return CentralPoly(std::move(v));
}

CentralPoly CentralPoly::quadratic(const Rational& trace, const Rational& norm) {
  return CentralPoly({norm, -trace, Rational(1)});
}

void CentralPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational CentralPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& CentralPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational CentralPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CentralPoly CentralPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return CentralPoly(std::move(d));
}

CentralPoly CentralPoly::monic() const {
  if (is_zero()) return {};
  Rational lc = leading();
  CentralPoly r = *this;
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

CentralPoly& CentralPoly::operator+=(const CentralPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

CentralPoly& CentralPoly::operator-=(const CentralPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

CentralPoly& CentralPoly::operator*=(const CentralPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

CentralPoly& CentralPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

CentralPoly CentralPoly::operator-() const {
  CentralPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string CentralPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += octfactor::to_string(mag);
      continue;
    }
    if (mag != 1) out += octfactor::to_string(mag) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<CentralPoly, CentralPoly> divrem(const CentralPoly& p, const CentralPoly& q) {
  if (q.is_zero()) throw std::domain_error("polynomial division by zero");
  if (p.degree() < q.degree()) return {CentralPoly{}, p};
  std::vector<Rational> rem = p.coeffs();
  std::vector<Rational> quot(p.degree() - q.degree() + 1);
  const auto& qc = q.coeffs();
  const Rational& lc = q.leading();
  for (int k = p.degree() - q.degree(); k >= 0; --k) {
    Rational c = rem[k + q.degree()] / lc;
    quot[k] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= q.degree(); ++j) rem[k + j] -= c * qc[j];
  }
  rem.resize(q.degree());
  return {CentralPoly(std::move(quot)), CentralPoly(std::move(rem))};
}

CentralPoly gcd(const CentralPoly& p, const CentralPoly& q) {
  CentralPoly a = p;
  CentralPoly b = q;
  while (!b.is_zero()) {
    CentralPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

CentralPoly power(const CentralPoly& p, unsigned e) {
  CentralPoly r = CentralPoly::constant(1);
  for (unsigned k = 0; k < e; ++k) r *= p;
  return r;
}

CentralPoly Factorization::expand() const {
  CentralPoly r = CentralPoly::constant(unit);
  for (const auto& f : factors) r *= power(f.poly, static_cast<unsigned>(f.multiplicity));
  return r;
}

Factorization squarefree_decomposition(const CentralPoly& p) {
  if (p.is_zero()) throw std::domain_error("square-free decomposition of the zero polynomial");
  Factorization out{p.leading(), {}};
  if (p.degree() == 0) return out;
  CentralPoly f = p.monic();
  CentralPoly fp = f.derivative();
  CentralPoly b = gcd(f, fp);
  CentralPoly c = divrem(f, b).first;
  CentralPoly d = divrem(fp, b).first - c.derivative();
  for (int i = 1; c.degree() > 0; ++i) {
    CentralPoly a = gcd(c, d);
    if (a.degree() > 0) out.factors.push_back({a, i});
    c = divrem(c, a).first;
    d = divrem(d, a).first - c.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Factorization over Z of square-free primitive polynomials (Kronecker).

namespace {

using IntPoly = std::vector<Integer>;  // coefficient k multiplies x^k

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer eval(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Clears denominators and content; the result has positive leading coefficient.
IntPoly primitive_part(const CentralPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r;
  r.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) r.push_back(c.get_num() * (l / c.get_den()));
  Integer g = 0;
  for (const auto& c : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(r.back()) < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

CentralPoly to_central(const IntPoly& p) {
  std::vector<Rational> v(p.begin(), p.end());
  return CentralPoly(std::move(v));
}

/// Exact division over Z; false if g does not divide p.
bool divide_exact(const IntPoly& p, const IntPoly& g, IntPoly& quot) {
  if (degree(p) < degree(g)) return false;
  IntPoly rem = p;
  quot.assign(p.size() - g.size() + 1, Integer(0));
  const Integer& lc = g.back();
  Integer q, r;
  for (int k = degree(p) - degree(g); k >= 0; --k) {
    const Integer& top = rem[k + degree(g)];
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return false;
    quot[k] = q;
    if (q == 0) continue;
    for (int j = 0; j <= degree(g); ++j) rem[k + j] -= q * g[j];
  }
  for (int k = 0; k < degree(g); ++k) {
    if (rem[k] != 0) return false;
  }
  return true;
}

// Integer factorization, needed only to enumerate divisors of small values.

void pollard_split(const Integer& n, std::map<Integer, int>& primes);

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void pollard_split(const Integer& n, std::map<Integer, int>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    ++primes[n];
    return;
  }
  Integer d = pollard_rho(n);
  pollard_split(d, primes);
  pollard_split(n / d, primes);
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::map<Integer, int> primes;
  for (unsigned long p = 2; p < 1000 && n > 1; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      ++primes[Integer(p)];
      n /= p;
    }
  }
  pollard_split(n, primes);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : primes) {
    std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

struct Node {
  Integer x;
  Integer value;
};

/// Searches for a factor of p of exact degree d with positive leading
/// coefficient. A hit of minimal degree is irreducible.
bool kronecker_factor(const IntPoly& p, int d, IntPoly& factor) {
  // Pick the d integer nodes where |p| is smallest; p has no integer roots here.
  std::vector<Node> nodes;
  const long span = std::max<long>(8, 2 * d + 4);
  for (long x = -span; x <= span; ++x) nodes.push_back({Integer(x), eval(p, Integer(x))});
  std::stable_sort(nodes.begin(), nodes.end(),
                   [](const Node& a, const Node& b) { return abs(a.value) < abs(b.value); });
  std::vector<Node> chosen(nodes.begin(), nodes.begin() + d);
  std::vector<Node> extra(nodes.begin() + d, nodes.begin() + std::min<std::size_t>(nodes.size(), d + 6));

  // Lagrange basis over the chosen nodes, and w(x) = prod (x - x_i).
  std::vector<std::vector<Rational>> basis(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> b{Rational(1)};
    Rational denom = 1;
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      std::vector<Rational> nb(b.size() + 1);
      for (std::size_t k = 0; k < b.size(); ++k) {
        nb[k + 1] += b[k];
        nb[k] -= b[k] * chosen[j].x;
      }
      b = std::move(nb);
      denom *= Rational(chosen[i].x - chosen[j].x);
    }
    for (auto& c : b) c /= denom;
    b.resize(d + 1);
    basis[i] = std::move(b);
  }
  std::vector<Integer> w{1};
  for (int i = 0; i < d; ++i) {
    std::vector<Integer> nw(w.size() + 1);
    for (std::size_t k = 0; k < w.size(); ++k) {
      nw[k + 1] += w[k];
      nw[k] -= w[k] * chosen[i].x;
    }
    w = std::move(nw);
  }

  std::vector<std::vector<Integer>> value_choices(d);
  for (int i = 0; i < d; ++i) {
    for (const auto& dv : positive_divisors(chosen[i].value)) {
      value_choices[i].push_back(dv);
      value_choices[i].push_back(-dv);
    }
  }
  const std::vector<Integer> leads = positive_divisors(p.back());

  std::vector<std::size_t> idx(d, 0);
  std::vector<Rational> cand(d + 1);
  IntPoly g(d + 1);
  IntPoly quot;
  for (const auto& lead : leads) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int k = 0; k <= d; ++k) cand[k] = Rational(lead * w[k]);
      for (int i = 0; i < d; ++i) {
        const Integer& v = value_choices[i][idx[i]];
        for (int k = 0; k < d; ++k) cand[k] += basis[i][k] * v;
      }
      bool ok = true;
      for (int k = 0; k <= d && ok; ++k) {
        if (cand[k].get_den() != 1) ok = false;
        else g[k] = cand[k].get_num();
      }
      if (ok) {
        for (const auto& e : extra) {
          Integer gv = eval(g, e.x);
          if (gv == 0 || mpz_divisible_p(e.value.get_mpz_t(), gv.get_mpz_t()) == 0) {
            ok = false;
            break;
          }
        }
      }
      if (ok && divide_exact(p, g, quot)) {
        factor = g;
        return true;
      }
      int i = 0;
      while (i < d && ++idx[i] == value_choices[i].size()) idx[i++] = 0;
      if (i == d) break;
    }
  }
  return false;
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// square-free primitive integer polynomial.
std::vector<IntPoly> factor_squarefree(IntPoly p) {
  std::vector<IntPoly> out;
  // Integer roots first; they would make Kronecker nodes vanish.
  for (long x = -64; x <= 64 && degree(p) > 0; ++x) {
    if (eval(p, Integer(x)) == 0) {
      IntPoly lin{Integer(-x), Integer(1)};
      IntPoly q;
      divide_exact(p, lin, q);
      out.push_back(lin);
      p = std::move(q);
    }
  }
  int d = 1;
  while (degree(p) > 0) {
    if (2 * d > degree(p)) {
      out.push_back(p);
      break;
    }
    IntPoly g;
    if (kronecker_factor(p, d, g)) {
      IntPoly q;
      divide_exact(p, g, q);
      out.push_back(g);
      p = std::move(q);
    } else {
      ++d;
    }
  }
  return out;
}

bool factor_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
  const auto& ca = a.poly.coeffs();
  const auto& cb = b.poly.coeffs();
  for (std::size_t k = 0; k < ca.size(); ++k) {
    if (ca[k] != cb[k]) return ca[k] < cb[k];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

Factorization factor_irreducible(const CentralPoly& p, const IrreducibleOptions& options) {
  if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
  if (p.degree() > options.degree_cap) {
    throw DegreeCapExceeded("cannot factor a polynomial of degree " + std::to_string(p.degree()) +
                            " over Q: degree cap is " + std::to_string(options.degree_cap));
  }
  Factorization sqf = squarefree_decomposition(p);
  Factorization out{sqf.unit, {}};
  for (const auto& part : sqf.factors) {
    for (const auto& g : factor_squarefree(primitive_part(part.poly))) {
      out.factors.push_back({to_central(g).monic(), part.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), factor_less);
  return out;
}

}  // namespace octfactor
