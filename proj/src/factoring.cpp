#include "octfactor/factoring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "octfactor/errors.hpp"
#include "octfactor/text.hpp"

namespace octfactor {

namespace {

bool class_less(const QuadraticClassFactor& a, const QuadraticClassFactor& b) {
  if (a.trace != b.trace) return a.trace < b.trace;
  return a.norm < b.norm;
}

std::string class_name(const Rational& t, const Rational& n) {
  return "(trace " + to_string(t) + ", norm " + to_string(n) + ")";
}

// Norm of the k-th basis element; the norm form is diagonal in this basis.
Rational basis_norm(const AlgebraParams& p, std::size_t k) {
  switch (k) {
    case 0: return 1;
    case 1: return -p.alpha;
    case 2: return -p.beta;
    case 3: return p.alpha * p.beta;
    case 4: return -p.gamma;
    case 5: return p.alpha * p.gamma;
    case 6: return p.beta * p.gamma;
    default: return -p.alpha * p.beta * p.gamma;
  }
}

}  // namespace

CentralPoly CompanionDecomposition::expand() const {
  CentralPoly r = CentralPoly::constant(norm_leading);
  for (const auto& c : classes) r *= power(c.quadratic(), static_cast<unsigned>(c.multiplicity));
  return r;
}

int CompanionDecomposition::total_multiplicity() const {
  int total = 0;
  for (const auto& c : classes) total += c.multiplicity;
  return total;
}

CompanionDecomposition decompose_companion(const CentralPoly& companion, const Rational& norm_leading,
                                           const AlgebraParams& params, const FactorOptions& options) {
  if (companion.is_zero()) throw std::domain_error("cannot decompose the zero companion polynomial");
  if (companion.degree() % 2 != 0) {
    throw NotDecomposable("companion polynomial has odd degree " + std::to_string(companion.degree()));
  }
  if (companion.leading() != norm_leading) {
    throw NotDecomposable("companion leading coefficient " + to_string(companion.leading()) +
                          " differs from the norm of the leading coefficient " + to_string(norm_leading));
  }
  Factorization fac = factor_irreducible(companion, IrreducibleOptions{options.degree_cap});
  CompanionDecomposition out{norm_leading, {}};
  const bool definite = norm_positive_definite(params);
  for (const auto& f : fac.factors) {
    const auto& c = f.poly.coeffs();
    if (f.poly.degree() == 1) {
      Rational root = -c[0];
      if (f.multiplicity % 2 != 0) {
        throw NotDecomposable("companion has the linear factor " + f.poly.to_string() + " with odd multiplicity " +
                              std::to_string(f.multiplicity));
      }
      out.classes.push_back({2 * root, root * root, f.multiplicity / 2});
    } else if (f.poly.degree() == 2) {
      QuadraticClassFactor cls{-c[1], c[0], f.multiplicity};
      if (definite && sgn(cls.discriminant()) > 0) {
        throw NotDecomposable("class " + class_name(cls.trace, cls.norm) +
                              " has positive discriminant and no representative in this algebra");
      }
      out.classes.push_back(cls);
    } else {
      throw NotDecomposable("companion has the irreducible factor " + f.poly.to_string() + " of degree " +
                            std::to_string(f.poly.degree()));
    }
  }
  std::sort(out.classes.begin(), out.classes.end(), class_less);
  return out;
}

CompanionDecomposition decompose_companion(const CentralPoly& companion, const Rational& norm_leading,
                                           const AlgebraParams& params) {
  return decompose_companion(companion, norm_leading, params, FactorOptions{});
}

OctPoly factor_out_root(const OctPoly& f, const Octonion& lam) {
  if (!evaluate(f, lam).is_zero()) throw NotARoot("element is not a root of the polynomial");
  const auto& c = f.coeffs();
  if (c.empty()) return f;
  const int n = f.degree();
  std::vector<Octonion> powers{Octonion::scalar(f.algebra(), 1)};
  for (int k = 1; k < n; ++k) powers.push_back(powers.back() * lam);
  std::vector<Octonion> d(n, Octonion(f.algebra()));
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j <= n; ++j) d[k] += c[j] * powers[j - 1 - k];
  }
  return OctPoly(f.algebra(), std::move(d));
}

WedderburnResult wedderburn_transfer(const OctPoly& f, const Octonion& lam1, const Octonion& lam2) {
  if (!evaluate(f, lam1).is_zero()) throw NotARoot("first element is not a root of the polynomial");
  if (!evaluate(f, lam2).is_zero()) throw NotARoot("second element is not a root of the polynomial");
  if (lam1 == lam2) throw EqualRoots("Wedderburn transfer needs two distinct roots");
  const Octonion diff = lam1 - lam2;
  const Octonion diff_inv = diff.inverse();
  Octonion gamma = (diff * lam2) * diff_inv;

  const auto& c = f.coeffs();
  const int n = f.degree();
  std::vector<Octonion> scaled;  // (lam1 - lam2)^{-1} c_j
  scaled.reserve(c.size());
  for (const auto& cj : c) scaled.push_back(diff_inv * cj);
  std::vector<Octonion> lam1_pow{Octonion::scalar(f.algebra(), 1)};
  for (int k = 1; k < n; ++k) lam1_pow.push_back(lam1_pow.back() * lam1);

  std::vector<Octonion> d;
  d.reserve(n);
  Octonion gamma_pow = Octonion::scalar(f.algebra(), 1);
  Octonion gamma_inv_pow = gamma_pow;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      gamma_pow = gamma_pow * gamma;
      gamma_inv_pow = gamma_inv_pow * gamma.inverse();
    }
    Octonion inner(f.algebra());
    for (int j = k + 1; j <= n; ++j) inner += (gamma_inv_pow * scaled[j]) * lam1_pow[j - 1 - k];
    d.push_back(gamma_pow * inner);
  }
  return {std::move(gamma), OctPoly(f.algebra(), std::move(d))};
}

ClassLinearization linearize_in_class(const OctPoly& f, const QuadraticClassFactor& cls) {
  // lam^k = p_k lam + q_k for every lam with lam^2 = t lam - n.
  Rational p = 0;
  Rational q = 1;
  ClassLinearization out{Octonion(f.algebra()), Octonion(f.algebra())};
  for (const auto& ck : f.coeffs()) {
    out.a += ck * p;
    out.b += ck * q;
    Rational next_p = cls.trace * p + q;
    q = -cls.norm * p;
    p = std::move(next_p);
  }
  return out;
}

std::vector<Octonion> class_witnesses(const QuadraticClassFactor& cls, const AlgebraRef& algebra,
                                      const WitnessBound& bound, std::size_t limit) {
  const AlgebraParams& params = *algebra;
  const Rational half_trace = cls.trace / 2;
  const Rational pure_norm = cls.norm - half_trace * half_trace;
  if (sgn(pure_norm) == 0) return {Octonion::scalar(algebra, half_trace)};
  if (limit == 0) return {};

  const std::size_t npure = static_cast<std::size_t>(params.dim) - 1;
  std::vector<Rational> weight(npure);
  bool definite = true;
  for (std::size_t k = 0; k < npure; ++k) {
    weight[k] = basis_norm(params, k + 1);
    if (sgn(weight[k]) <= 0) definite = false;
  }
  const int max_num = bound.max_numerator;
  const std::size_t max_support = std::min<std::size_t>(npure, 4);

  for (int den = 1; den <= bound.max_denominator; ++den) {
    const Rational target = pure_norm * den * den;
    // Non-negative integer vectors X with sum weight_k X_k^2 = target.
    std::vector<std::vector<int>> found;
    std::vector<std::size_t> support;
    std::vector<int> values;

    auto record = [&](std::size_t last, int x_last) {
      std::vector<int> x(npure, 0);
      for (std::size_t s = 0; s + 1 < support.size(); ++s) x[support[s]] = values[s];
      x[last] = x_last;
      found.push_back(std::move(x));
    };
    // Enumerates all but the last support coordinate; the last one is solved for.
    auto search_values = [&](auto& self, std::size_t pos, const Rational& rem) -> void {
      if (found.size() >= limit) return;
      if (pos + 1 == support.size()) {
        const std::size_t last = support[pos];
        Rational sq = rem / weight[last];
        Rational root;
        if (sgn(sq) > 0 && is_integer(sq) && rational_sqrt(sq, root) && root <= max_num) {
          record(last, static_cast<int>(root.get_num().get_si()));
        }
        return;
      }
      for (int x = 1; x <= max_num; ++x) {
        Rational next = rem - weight[support[pos]] * x * x;
        if (definite && sgn(next) <= 0) break;
        values[pos] = x;
        self(self, pos + 1, next);
        if (found.size() >= limit) return;
      }
    };
    auto search_supports = [&](auto& self, std::size_t first, std::size_t size) -> void {
      if (found.size() >= limit) return;
      if (support.size() == size) {
        values.assign(size, 0);
        search_values(search_values, 0, target);
        return;
      }
      for (std::size_t k = first; k < npure; ++k) {
        support.push_back(k);
        self(self, k + 1, size);
        support.pop_back();
      }
    };
    for (std::size_t size = 1; size <= max_support && found.size() < limit; ++size) {
      search_supports(search_supports, 0, size);
    }
    if (found.empty()) continue;

    std::vector<Octonion> out;
    auto emit = [&](const std::vector<int>& x, unsigned signs) {
      Octonion::Coords coords;
      coords[0] = half_trace;
      unsigned bit = 0;
      for (std::size_t k = 0; k < npure; ++k) {
        if (x[k] == 0) continue;
        int v = (signs >> bit++) & 1U ? -x[k] : x[k];
        coords[k + 1] = Rational(v, den);
        coords[k + 1].canonicalize();
      }
      out.emplace_back(algebra, std::move(coords));
    };
    for (const auto& x : found) emit(x, 0);
    for (const auto& x : found) {
      const auto nz = static_cast<unsigned>(std::count_if(x.begin(), x.end(), [](int v) { return v != 0; }));
      for (unsigned signs = 1; signs < (1U << nz) && out.size() < limit; ++signs) emit(x, signs);
    }
    if (out.size() > limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(limit), out.end());
    return out;
  }
  return {};
}

Octonion class_witness(const QuadraticClassFactor& cls, const AlgebraRef& algebra, const WitnessBound& bound) {
  auto w = class_witnesses(cls, algebra, bound, 1);
  if (w.empty()) {
    throw WitnessNotFound("no element of " + class_name(cls.trace, cls.norm) + " with denominator <= " +
                          std::to_string(bound.max_denominator) + " and numerators <= " +
                          std::to_string(bound.max_numerator));
  }
  return w.front();
}

namespace {

bool in_class(const Octonion& lam, const QuadraticClassFactor& cls) {
  return lam.trace() == cls.trace && lam.norm() == cls.norm;
}

// Root of f in the class when the linear equation A lam + B = 0 determines it.
std::optional<Octonion> solve_determined(const OctPoly& f, const QuadraticClassFactor& cls,
                                         const ClassLinearization& lin) {
  if (lin.a.is_zero()) {
    if (!lin.b.is_zero()) {
      throw NoRootInClass("no root in " + class_name(cls.trace, cls.norm) + ": equation reduces to 0 = B with B != 0");
    }
    return std::nullopt;
  }
  Octonion lam = -(lin.a.inverse() * lin.b);
  if (!in_class(lam, cls) || !evaluate(f, lam).is_zero()) {
    throw NoRootInClass("the solution of the linear equation is not a root in " + class_name(cls.trace, cls.norm));
  }
  return lam;
}

}  // namespace

Octonion solve_in_class(const OctPoly& f, const QuadraticClassFactor& cls, const WitnessBound& bound) {
  if (f.is_zero()) throw std::domain_error("root of the zero polynomial");
  if (auto lam = solve_determined(f, cls, linearize_in_class(f, cls))) return *lam;
  // Every element of the class is a root.
  return class_witness(cls, f.algebra(), bound);
}

namespace {

std::vector<QuadraticClassFactor> step_sequence(const CompanionDecomposition& dec,
                                                const std::optional<std::vector<ClassKey>>& order) {
  std::vector<QuadraticClassFactor> steps;
  auto unit = [](const QuadraticClassFactor& c) { return QuadraticClassFactor{c.trace, c.norm, 1}; };
  if (!order) {
    for (const auto& c : dec.classes) {
      for (int m = 0; m < c.multiplicity; ++m) steps.push_back(unit(c));
    }
    return steps;
  }
  auto find = [&](const ClassKey& key) {
    return std::find_if(dec.classes.begin(), dec.classes.end(),
                        [&](const QuadraticClassFactor& c) { return c.trace == key.trace && c.norm == key.norm; });
  };
  std::map<std::size_t, int> used;
  for (const auto& key : *order) {
    auto it = find(key);
    if (it == dec.classes.end()) {
      throw std::invalid_argument("class order names " + class_name(key.trace, key.norm) +
                                  ", which is not a class of the companion polynomial");
    }
    ++used[static_cast<std::size_t>(it - dec.classes.begin())];
  }
  bool permutation = used.size() == dec.classes.size() && order->size() == dec.classes.size();
  bool full = used.size() == dec.classes.size();
  for (const auto& [idx, count] : used) full = full && count == dec.classes[idx].multiplicity;
  if (permutation) {
    for (const auto& key : *order) {
      const auto& c = *find(key);
      for (int m = 0; m < c.multiplicity; ++m) steps.push_back(unit(c));
    }
  } else if (full) {
    for (const auto& key : *order) steps.push_back(unit(*find(key)));
  } else {
    throw std::invalid_argument("class order must list each class once or every multiplicity exactly");
  }
  return steps;
}

// When the whole class consists of roots, prefer a witness whose quotient has a
// determined root in the next class.
Octonion choose_degenerate_root(const OctPoly& f, const QuadraticClassFactor& cls,
                                const QuadraticClassFactor* next, const WitnessBound& bound) {
  auto candidates = class_witnesses(cls, f.algebra(), bound);
  if (candidates.empty()) return class_witness(cls, f.algebra(), bound);
  if (next == nullptr) return candidates.front();
  for (const auto& lam : candidates) {
    OctPoly g = factor_out_root(f, lam);
    if (!linearize_in_class(g, *next).a.is_zero()) return lam;
  }
  return candidates.front();
}

}  // namespace

FactorChain factor_fully(const OctPoly& f, const FactorOptions& options) {
  if (f.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
  if (f.degree() > 0 && f.leading().norm() == 0) {
    throw ZeroDivisor("leading coefficient " + format_octonion(f.leading()) + " has zero norm");
  }
  CentralPoly companion = companion_via_product(f);
  if (options.check && companion != companion_via_coeffs(f)) {
    throw InternalVerificationFailure("companion polynomial formulas disagree");
  }
  const Rational lead_norm = f.leading().norm();
  CompanionDecomposition dec = decompose_companion(companion, lead_norm, f.algebra() ? *f.algebra() : AlgebraParams{},
                                                   options);
  if (dec.total_multiplicity() != f.degree()) {
    throw InternalVerificationFailure("class multiplicities do not add up to the degree");
  }
  const auto steps = step_sequence(dec, options.class_order);

  std::vector<Octonion> roots;  // lambda_1 first
  OctPoly cur = f;
  for (std::size_t s = 0; cur.degree() > 1; ++s) {
    const auto& cls = steps[s];
    Octonion lam = [&] {
      if (auto determined = solve_determined(cur, cls, linearize_in_class(cur, cls))) return *determined;
      const QuadraticClassFactor* next = s + 1 < steps.size() && cur.degree() > 2 ? &steps[s + 1] : nullptr;
      return choose_degenerate_root(cur, cls, next, options.witness_bound);
    }();
    cur = factor_out_root(cur, lam);
    roots.push_back(std::move(lam));
  }
  FactorChain chain{cur.leading(), {}};
  if (cur.degree() == 1) roots.push_back(-(cur.coeffs()[1].inverse() * cur.coeffs()[0]));
  chain.roots.assign(roots.rbegin(), roots.rend());
  if (!(expand_chain(chain) == f)) {
    throw InternalVerificationFailure("re-expanded factorization differs from the input");
  }
  return chain;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

VerificationReport verify_factorization(const OctPoly& f, const FactorChain& chain, const FactorOptions& options) {
  VerificationReport report;
  const bool expands = expand_chain(chain) == f;
  report.checks.push_back({"re-expansion", expands,
                           expands ? "left-nested product equals the input" : "left-nested product differs from the input"});
  if (f.is_zero()) {
    report.checks.push_back({"companion", false, "zero polynomial has no companion"});
    return report;
  }
  CentralPoly companion = companion_via_product(f);
  const bool lead_ok = chain.leading.norm() == companion.leading();
  report.checks.push_back({"leading-norm", lead_ok,
                           "Norm(leading) = " + to_string(chain.leading.norm()) +
                               ", companion leading coefficient = " + to_string(companion.leading())});
  try {
    CompanionDecomposition dec = decompose_companion(companion, f.leading().norm(), *f.algebra(), options);
    std::map<std::pair<Rational, Rational>, int> expected;
    std::map<std::pair<Rational, Rational>, int> actual;
    for (const auto& c : dec.classes) expected[{c.trace, c.norm}] += c.multiplicity;
    for (const auto& lam : chain.roots) ++actual[{lam.trace(), lam.norm()}];
    const bool match = expected == actual;
    report.checks.push_back({"class-multiplicities", match,
                             match ? "root classes match the companion decomposition"
                                   : "root (trace, norm) multiset differs from the companion classes"});
  } catch (const Error& e) {
    report.checks.push_back({"class-multiplicities", false, e.what()});
  }
  return report;
}

}  // namespace octfactor
