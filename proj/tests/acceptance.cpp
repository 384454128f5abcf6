// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "octfactor/cli.hpp"
#include "octfactor/errors.hpp"
#include "octfactor/factoring.hpp"
#include "octfactor/text.hpp"
#include "oracles.hpp"

using namespace octfactor;

namespace {

// Collects failed sub-checks of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    if (ok()) return std::to_string(total_) + " checks";
    std::string s = std::to_string(failed_) + "/" + std::to_string(total_) + " checks failed:";
    for (const auto& f : failures_) s += " [" + f + "]";
    return s;
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

template <class E, class F>
bool throws(F&& f) {
  try {
    f();
  } catch (const E&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

int cli_code(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  return cli::run(args, in, out, err);
}

// (trace, norm) of every root, as a sorted list.
std::vector<std::pair<Rational, Rational>> root_classes(const std::vector<Octonion>& roots) {
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& r : roots) out.emplace_back(r.trace(), r.norm());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Rational, Rational>> companion_classes(const OctPoly& f) {
  CompanionDecomposition dec = decompose_companion(companion_via_product(f), f.leading().norm(), *f.algebra());
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& c : dec.classes) {
    for (int k = 0; k < c.multiplicity; ++k) out.emplace_back(c.trace, c.norm);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random chain whose roots sometimes repeat a class (inner conjugates or
// central elements) so that the degenerate witness path is exercised too.
FactorChain random_chain(oracle::Random& rnd, const AlgebraRef& alg, int degree) {
  FactorChain chain{rnd.nonzero_octonion(alg, 2, 1), {}};
  for (int k = 0; k < degree; ++k) {
    const int kind = rnd.integer(0, 9);
    if (kind == 0) {
      chain.roots.push_back(Octonion::scalar(alg, rnd.rational(2, 1)));
    } else if (kind <= 2 && !chain.roots.empty() && !chain.roots.back().is_central()) {
      chain.roots.push_back(inner_conjugate(rnd.nonzero_octonion(alg, 1, 1), chain.roots.back()));
    } else {
      chain.roots.push_back(rnd.octonion(alg, 2, 2));
    }
  }
  return chain;
}

// ---------------------------------------------------------------------------

Checker criterion1() {
  Checker c;
  AlgebraRef alg = make_algebra();
  OctPoly f = parse_poly("l*x^3 + il*x^2 + l*x + il", alg);
  CentralPoly companion = companion_via_product(f);
  c.expect(companion.to_string() == "x^6 + 3*x^4 + 3*x^2 + 1", "companion x^6 + 3x^4 + 3x^2 + 1");
  c.expect(companion == power(CentralPoly::quadratic(0, 1), 3), "companion = (x^2 + 1)^3");
  CompanionDecomposition dec = decompose_companion(companion, f.leading().norm(), *alg);
  c.expect(dec.classes.size() == 1 && dec.classes[0].trace == 0 && dec.classes[0].norm == 1 &&
               dec.classes[0].multiplicity == 3,
           "classes (0, 1) x 3");
  FactorChain chain = factor_fully(f);
  c.expect(expand_chain(chain) == f, "re-expansion equals input");
  FactorChain expected{parse_octonion("l", alg),
                    {parse_octonion("-i", alg), parse_octonion("-j", alg), parse_octonion("j", alg)}};
  std::string got = format_octonion(chain.leading) + ";";
  for (std::size_t k = 0; k < chain.roots.size(); ++k) got += (k ? ", " : " ") + format_octonion(chain.roots[k]);
  c.expect(chain.leading == expected.leading && chain.roots == expected.roots,
           "default chain equals (l; -i, -j, j), got (" + got + ")");
  return c;
}

Checker criterion2() {
  Checker c;
  AlgebraRef alg = make_algebra();
  auto O = [&](const char* s) { return parse_octonion(s, alg); };
  OctPoly f = parse_poly("i*x^2 + j*x + l", alg);
  Octonion l1 = O("1/2 + 1/2 ij + 1/2 il + 1/2 jl");
  Octonion l2 = O("-1/2 + 1/2 ij - 1/2 il + 1/2 jl");
  c.expect(evaluate(f, l1).is_zero() && evaluate(f, l2).is_zero(), "printed roots are roots");
  auto [gamma, h] = wedderburn_transfer(f, l1, l2);
  c.expect(gamma == O("-1/2 - 1/2 ij - 1/2 il + 1/2 jl"), "gamma");
  c.expect(h == parse_poly("(1/2 i - 1/2 l)*x + (-1/2 j - 1/2 l) + (1/2 j + 1/2 ijl)", alg), "h");
  c.expect(evaluate(h, gamma).is_zero(), "h(gamma) = 0");
  OctPoly g = factor_out_root(f, l1);
  c.expect(g == parse_poly("i*x + 1/2 i + 1/2 j - 1/2 l - 1/2 ijl", alg), "g");
  c.expect(!evaluate(g, gamma).is_zero(), "g(gamma) != 0");
  return c;
}

Checker criterion3() {
  Checker c;
  AlgebraRef alg = make_algebra();
  oracle::Random rnd(20231);
  const Octonion one = Octonion::scalar(alg, 1);
  for (int t = 0; t < 1000; ++t) {
    Octonion x = rnd.octonion(alg, 10, 4), y = rnd.octonion(alg, 10, 4), z = rnd.octonion(alg, 10, 4);
    c.expect((x * y).conj() == y.conj() * x.conj(), "conj(xy) = conj(y) conj(x)");
    c.expect(x * x - x * x.trace() + Octonion::scalar(alg, x.norm()) == Octonion::scalar(alg, 0),
             "x^2 - Tr(x) x + N(x) = 0");
    c.expect((x * y).norm() == x.norm() * y.norm(), "N(xy) = N(x) N(y)");
    c.expect(x * y == oracle::mul(x, y), "product agrees with recursive doubling");
    c.expect((x * (y * x)) * z == x * (y * (x * z)), "left Moufang");
    c.expect(((z * x) * y) * x == z * (x * (y * x)), "right Moufang");
    c.expect((x * y) * (z * x) == (x * (y * z)) * x, "middle Moufang");
    c.expect((x * x) * y == x * (x * y), "left alternative");
    c.expect((y * x) * x == y * (x * x), "right alternative");
    c.expect((x * y) * x == x * (y * x), "flexible");
    if (!x.is_zero()) {
      Octonion xi = x.inverse();
      c.expect(xi * x == one && x * xi == one, "x^-1 x = 1");
      c.expect(xi * (x * y) == y, "x^-1 (x y) = y");
      c.expect((y * x) * xi == y, "(y x) x^-1 = y");
    }
  }
  return c;
}

Checker criterion4() {
  Checker c;
  AlgebraRef alg = make_algebra();
  oracle::Random rnd(4242);
  for (int t = 0; t < 250; ++t) {
    const int n = rnd.integer(0, 5);
    std::vector<Octonion> coeffs;
    for (int k = 0; k < n; ++k) coeffs.push_back(rnd.octonion(alg, 5, 3));
    coeffs.push_back(rnd.nonzero_octonion(alg, 5, 3));
    OctPoly f(alg, coeffs);
    CentralPoly a = companion_via_coeffs(f), b = companion_via_product(f);
    c.expect(a == b, "companion_via_coeffs = companion_via_product");
    c.expect(b.degree() == 2 * n, "deg C_f = 2 deg f");
    c.expect(b.leading() == f.leading().norm(), "leading coefficient = Norm(c_n)");
  }
  return c;
}

Checker criterion5() {
  Checker c;
  AlgebraRef alg = make_algebra();
  oracle::Random rnd(555);
  for (int t = 0; t < 120; ++t) {
    FactorChain original = random_chain(rnd, alg, rnd.integer(1, 4));
    OctPoly f = expand_chain(original);
    try {
      FactorChain chain = factor_fully(f);
      c.expect(expand_chain(chain) == f, "re-expansion of " + format_poly(f));
      c.expect(root_classes(chain.roots) == companion_classes(f), "root classes of " + format_poly(f));
      c.expect(root_classes(chain.roots) == root_classes(original.roots), "classes of the generating chain");
    } catch (const std::exception& e) {
      c.expect(false, format_poly(f) + ": " + e.what());
    }
  }
  return c;
}

Checker criterion6() {
  Checker c;
  AlgebraRef alg = make_algebra();
  oracle::Random rnd(6006);
  for (int t = 0; t < 250; ++t) {
    const int n = rnd.integer(0, 3);
    std::vector<Octonion> coeffs;
    for (int k = 0; k < n; ++k) coeffs.push_back(rnd.octonion(alg, 4, 3));
    coeffs.push_back(rnd.nonzero_octonion(alg, 4, 3));
    OctPoly g(alg, coeffs);
    Octonion lam = rnd.octonion(alg, 4, 3);
    OctPoly f = poly_mul(g, OctPoly::linear_root(lam));
    c.expect(factor_out_root(f, lam) == g, "factor_out_root recovers g");
    c.expect(companion_via_product(f) ==
                 companion_via_product(g) * CentralPoly::quadratic(lam.trace(), lam.norm()),
             "C_f = C_g (x^2 - Tr x + N)");
  }
  return c;
}

Checker criterion7() {
  Checker c;
  AlgebraRef alg = make_algebra();
  OctPoly f = parse_poly("x^2 + 1", alg);
  ClassLinearization lin = linearize_in_class(f, QuadraticClassFactor{0, 1, 1});
  c.expect(lin.a.is_zero() && lin.b.is_zero(), "x^2 + 1 has A = B = 0 in class (0, 1)");
  try {
    FactorChain chain = factor_fully(f);
    c.expect(expand_chain(chain) == f, "x^2 + 1 re-expands");
  } catch (const std::exception& e) {
    c.expect(false, std::string("x^2 + 1: ") + e.what());
  }
  // Split parameters: companion of i x + 1 is 1 - x^2, simple linear factors.
  AlgebraRef split = make_algebra({1, -1, -1, 8});
  c.expect(throws<NotDecomposable>([&] { factor_fully(parse_poly("i*x + 1", split)); }),
           "odd-multiplicity linear factor -> NotDecomposable");
  c.expect(cli_code({"--alpha", "1", "factor", "i*x + 1"}) == 3, "odd-multiplicity linear factor -> exit 3");
  // Companion x^4 + 2 is irreducible over Q.
  OctPoly quartic = parse_poly("x^2 + i + j", alg);
  c.expect(companion_via_product(quartic) == CentralPoly({2, 0, 0, 0, 1}), "companion of x^2 + i + j is x^4 + 2");
  c.expect(throws<NotDecomposable>([&] { factor_fully(quartic); }), "irreducible quartic -> NotDecomposable");
  c.expect(cli_code({"factor", "x^2 + i + j"}) == 3, "irreducible quartic -> exit 3");
  c.expect(throws<ZeroDivisor>([&] { Octonion::scalar(alg, 0).inverse(); }), "inverse of 0 -> ZeroDivisor");
  return c;
}

Checker criterion8() {
  Checker c;
  AlgebraRef alg = make_algebra({-1, -1, -1, 4});
  oracle::Quaternions q{alg->alpha, alg->beta};
  oracle::Random rnd(8080);
  for (int t = 0; t < 120; ++t) {
    FactorChain original = random_chain(rnd, alg, rnd.integer(1, 3));
    OctPoly f = expand_chain(original);
    FactorChain chain{original.leading, {}};
    try {
      chain = factor_fully(f);
    } catch (const std::exception& e) {
      c.expect(false, format_poly(f) + ": " + e.what());
      continue;
    }
    // Independent associative factorization along the same class sequence.
    std::vector<oracle::QClass> steps;
    for (auto it = chain.roots.rbegin(); it != chain.roots.rend(); ++it) steps.push_back({it->trace(), it->norm()});
    oracle::QPoly qf;
    for (const auto& coeff : f.coeffs()) qf.push_back(oracle::to_vec(coeff));
    std::vector<oracle::Vec> qroots;
    oracle::Vec qlead;
    if (!oracle::qfactor(q, qf, steps, qroots, qlead)) {
      c.expect(false, "associative factorization of " + format_poly(f));
      continue;
    }
    oracle::QPoly re{qlead};
    for (auto it = qroots.rbegin(); it != qroots.rend(); ++it) {
      oracle::Vec neg = *it;
      for (auto& x : neg) x = -x;
      re = oracle::qpoly_mul(q, re, {neg, {1, 0, 0, 0}});
    }
    c.expect(re == qf, "associative re-expansion of " + format_poly(f));
    c.expect(expand_chain(chain) == f, "re-expansion of " + format_poly(f));
    std::vector<Octonion> oroots;
    for (const auto& r : qroots) oroots.push_back(oracle::from_vec(alg, r));
    c.expect(root_classes(oroots) == root_classes(chain.roots), "class multisets agree for " + format_poly(f));
    c.expect(root_classes(chain.roots) == companion_classes(f), "classes match companion for " + format_poly(f));
  }
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = untimed
  std::function<Checker()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked cubic end-to-end", 1, criterion1},
      {2, "worked quadratic Wedderburn transfer", 1, criterion2},
      {3, "octonion identity suite", 10, criterion3},
      {4, "companion equivalence", 0, criterion4},
      {5, "round-trip factorization", 30, criterion5},
      {6, "factor-out identity", 0, criterion6},
      {7, "degenerate and error paths", 0, criterion7},
      {8, "quaternion cross-check", 0, criterion8},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Checker result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0) {
      result.expect(seconds < cr.limit_seconds, "runtime " + std::to_string(seconds) + " s exceeds limit");
    }
    if (!result.ok()) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (result.ok() ? "PASS" : "FAIL") << " criterion " << cr.id << " (" << cr.name << "): "
         << result.summary() << ", " << seconds << " s";
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
