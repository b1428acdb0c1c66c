/*
   Copyright 2026 The sdist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "sdist/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sdist {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

// "p" or "p/q", optional sign on p only, decimal digits.
bool valid_rational_text(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (!valid_rational_text(text))
    throw std::invalid_argument("not a rational (want \"p/q\" or \"p\"): '" + text + "'");
  Rational q(text, 10);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

int sign_of(const Rational& q) { return sgn(q); }

Integer binomial(long n, long k) {
  if (k < 0) return Integer(0);
  Integer result;
  Integer nz(n);
  mpz_bin_ui(result.get_mpz_t(), nz.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1, Rational(0));
  v.back() = c;
  return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::leading() const {
  if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = -coeffs_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator*(const Rational& c) const {
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] * c;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator/(const Rational& c) const {
  if (c == 0) throw std::invalid_argument("polynomial division by zero scalar");
  std::vector<Rational> r(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] = coeffs_[i] / c;
  return UniPoly(std::move(r));
}

Rational UniPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UniPoly poly_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i - 1] == sorted[i])
      throw std::invalid_argument("duplicate root: " + to_string(sorted[i]));
  UniPoly p = UniPoly::constant(Rational(1));
  for (const Rational& r : roots)
    p = p * UniPoly(std::vector<Rational>{-r, Rational(1)});
  return p;
}

Rational poly_eval(const UniPoly& p, const Rational& t) { return p.eval(t); }

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    bool first = out.empty();
    if (!first) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    Rational a = abs(c);
    if (i == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

struct PolyParser {
  const std::string& s;
  std::size_t pos = 0;

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_digit() const {
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }

  std::string read_uint() {
    std::string d;
    while (at_digit()) d += s[pos++];
    if (d.empty()) fail("expected digits");
    return d;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad polynomial '" + s + "' at offset " +
                                std::to_string(pos) + ": " + why);
  }

  // coefficient := uint ('/' uint)?
  Rational read_coefficient() {
    std::string num = read_uint();
    skip_ws();
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      skip_ws();
      std::string den = read_uint();
      return parse_rational(num + "/" + den);
    }
    return parse_rational(num);
  }

  UniPoly parse() {
    UniPoly acc;
    skip_ws();
    if (pos == s.size()) fail("empty input");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos == s.size()) break;
      int sign = 1;
      if (s[pos] == '+' || s[pos] == '-') {
        sign = s[pos] == '-' ? -1 : 1;
        ++pos;
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      skip_ws();
      Rational coeff(1);
      bool have_coeff = false;
      if (at_digit()) {
        coeff = read_coefficient();
        have_coeff = true;
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
          ++pos;
          skip_ws();
        }
      }
      int power = 0;
      if (pos < s.size() && s[pos] == 't') {
        ++pos;
        power = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip_ws();
          power = std::stoi(read_uint());
        }
      } else if (!have_coeff) {
        fail("expected a coefficient or 't'");
      }
      if (sign < 0) coeff = -coeff;
      acc = acc + UniPoly::monomial(power, coeff);
      first = false;
    }
    return acc;
  }
};

}  // namespace

UniPoly parse_poly(const std::string& text) { return PolyParser(text).parse(); }

}  // namespace sdist
