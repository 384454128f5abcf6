#include "octfactor/text.hpp"

#include <array>
#include <cctype>
#include <map>
#include <optional>

#include "octfactor/errors.hpp"

namespace octfactor {

namespace {

class Parser {
 public:
  Parser(std::string_view src, AlgebraRef algebra, bool allow_x)
      : src_(src), algebra_(std::move(algebra)), allow_x_(allow_x) {}

  std::map<unsigned, Octonion> parse_sum(bool nested) {
    std::map<unsigned, Octonion> terms;
    bool first = true;
    while (true) {
      skip_ws();
      Rational sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      auto [power, value] = parse_term();
      value *= sign;
      auto it = terms.find(power);
      if (it == terms.end()) terms.emplace(power, std::move(value));
      else it->second += value;
      skip_ws();
      if (at_end() || (nested && peek() == ')')) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
    }
    return terms;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::optional<Rational> parse_rational_literal() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) return std::nullopt;
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
      std::size_t dstart = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      std::string num(src_.substr(start, save - start));
      std::string den(src_.substr(dstart, pos_ - dstart));
      try {
        return parse_rational(num + "/" + den);
      } catch (const std::invalid_argument&) {
        fail("zero denominator");
      }
    }
    pos_ = save;
    return parse_rational(src_.substr(start, save - start));
  }

  // Longest match among the basis names; '1' is only a basis symbol after '*'.
  std::optional<std::size_t> parse_basis(bool allow_one) {
    skip_ws();
    if (allow_one && peek() == '1') {
      ++pos_;
      return 0;
    }
    static constexpr std::array<std::pair<std::string_view, std::size_t>, 7> names = {
        {{"ijl", 7}, {"ij", 3}, {"il", 5}, {"jl", 6}, {"i", 1}, {"j", 2}, {"l", 4}}};
    for (const auto& [name, idx] : names) {
      if (src_.substr(pos_, name.size()) == name) {
        if (idx >= 4 && algebra_->dim == 4) fail("basis symbol '" + std::string(name) + "' needs an octonion algebra");
        pos_ += name.size();
        return idx;
      }
    }
    if (std::isalpha(static_cast<unsigned char>(peek())) && peek() != 'x') {
      fail("unknown basis symbol '" + std::string(1, peek()) + "'");
    }
    return std::nullopt;
  }

  bool eat(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::pair<unsigned, Octonion> parse_term() {
    skip_ws();
    const std::size_t start = pos_;
    Octonion value = Octonion::scalar(algebra_, 1);
    bool have_factor = false;
    bool starred = false;
    if (auto r = parse_rational_literal()) {
      value = Octonion::scalar(algebra_, *r);
      have_factor = true;
      starred = eat('*');
    }
    if (auto b = parse_basis(starred)) {
      value = value * Octonion::basis(algebra_, *b);
      have_factor = true;
      starred = eat('*');
    } else if (allow_x_ && peek() == '(') {
      ++pos_;
      Parser inner(src_, algebra_, false);
      inner.pos_ = pos_;
      auto sum = inner.parse_sum(true);
      pos_ = inner.pos_;
      if (!eat(')')) fail("expected ')'");
      Octonion group = sum.empty() ? Octonion(algebra_) : sum.begin()->second;
      value = value * group;
      have_factor = true;
      starred = eat('*');
    }
    unsigned power = 0;
    skip_ws();
    if (peek() == 'x') {
      if (!allow_x_) fail("indeterminate not allowed in an octonion");
      ++pos_;
      power = 1;
      if (eat('^')) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        std::size_t estart = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ - estart > 4) fail("exponent too large");
        power = static_cast<unsigned>(std::stoul(std::string(src_.substr(estart, pos_ - estart))));
      }
      have_factor = true;
    } else if (starred) {
      fail("expected a factor after '*'");
    }
    if (!have_factor) {
      pos_ = start;
      fail(at_end() ? "unexpected end of input" : "expected a term");
    }
    return {power, std::move(value)};
  }

  std::string_view src_;
  AlgebraRef algebra_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

// Signed terms of an octonion; empty for zero.
std::vector<std::pair<bool, std::string>> octonion_terms(const Octonion& z) {
  std::vector<std::pair<bool, std::string>> out;
  for (std::size_t k = 0; k < kOctonionDim; ++k) {
    const Rational& c = z[k];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    std::string s;
    if (k == 0) s = to_string(mag);
    else if (mag == 1) s = std::string(kBasisNames[k]);
    else s = to_string(mag) + "*" + std::string(kBasisNames[k]);
    out.emplace_back(sgn(c) < 0, std::move(s));
  }
  return out;
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms) {
  std::string out;
  for (const auto& [neg, s] : terms) {
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    out += s;
  }
  return out;
}

}  // namespace

Octonion parse_octonion(std::string_view src, const AlgebraRef& algebra) {
  Parser p(src, algebra, false);
  auto terms = p.parse_sum(false);
  p.expect_end();
  return terms.empty() ? Octonion(algebra) : terms.begin()->second;
}

OctPoly parse_poly(std::string_view src, const AlgebraRef& algebra) {
  Parser p(src, algebra, true);
  auto terms = p.parse_sum(false);
  p.expect_end();
  std::vector<Octonion> coeffs;
  for (auto& [power, value] : terms) {
    while (coeffs.size() <= power) coeffs.emplace_back(algebra);
    coeffs[power] += value;
  }
  return OctPoly(algebra, std::move(coeffs));
}

std::string format_octonion(const Octonion& z) {
  auto terms = octonion_terms(z);
  return terms.empty() ? "0" : join_terms(terms);
}

std::string format_poly(const OctPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<bool, std::string>> out;
  for (int k = f.degree(); k >= 0; --k) {
    const Octonion& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    std::string xpart = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    auto terms = octonion_terms(c);
    if (k == 0) {
      for (auto& t : terms) out.push_back(std::move(t));
      continue;
    }
    if (terms.size() == 1) {
      auto [neg, s] = terms.front();
      if (s == "1") out.emplace_back(neg, xpart);
      else out.emplace_back(neg, s + "*" + xpart);
    } else {
      out.emplace_back(false, "(" + join_terms(terms) + ")*" + xpart);
    }
  }
  return join_terms(out);
}

}  // namespace octfactor
