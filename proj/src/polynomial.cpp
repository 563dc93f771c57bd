#include "spencerlab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "spencerlab/errors.hpp"

namespace spencerlab {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.exponents[index] = power;
  return m;
}

int Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] > other.exponents[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += other.exponents[i];
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out = *this;
  for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] -= other.exponents[i];
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out.exponents[i] = std::max(a[i], b[i]);
  return out;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

WeightedRing::WeightedRing(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw InputError("ring: variable and weight lists differ in length");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(), [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }))
      throw InputError("ring: invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("ring: duplicate variable name '" + n + "'");
    if (weights_[i] <= 0) throw InputError("ring: weight of '" + n + "' must be a positive integer");
  }
}

int WeightedRing::min_weight() const {
  return weights_.empty() ? 0 : *std::min_element(weights_.begin(), weights_.end());
}

int WeightedRing::max_weight() const {
  return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

int WeightedRing::weight_sum() const { return std::accumulate(weights_.begin(), weights_.end(), 0); }

std::optional<std::size_t> WeightedRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

int WeightedRing::weighted_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights_[i];
  return d;
}

const std::vector<Monomial>& WeightedRing::monomials_of_weight(int d) const {
  std::lock_guard lock(cache_mutex_);
  auto it = monomial_cache_.find(d);
  if (it != monomial_cache_.end()) return it->second;

  std::vector<Monomial> out;
  if (d >= 0) {
    Monomial current(nvars());
    std::function<void(std::size_t, int)> fill = [&](std::size_t var, int remaining) {
      if (var == nvars()) {
        if (remaining == 0) out.push_back(current);
        return;
      }
      for (int e = remaining / weights_[var]; e >= 0; --e) {
        current.exponents[var] = e;
        fill(var + 1, remaining - e * weights_[var]);
      }
      current.exponents[var] = 0;
    };
    fill(0, d);
  }
  return monomial_cache_.emplace(d, std::move(out)).first->second;
}

std::string WeightedRing::monomial_to_string(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights) {
  return std::make_shared<const WeightedRing>(std::move(names), std::move(weights));
}

Polynomial::Polynomial(RingPtr ring, const Rational& constant) : ring_(std::move(ring)) {
  if (sgn(constant) != 0) terms_.emplace(Monomial(ring_->nvars()), constant);
}

Polynomial::Polynomial(RingPtr ring, const Monomial& m, const Rational& coeff) : ring_(std::move(ring)) {
  if (m.size() != ring_->nvars()) throw InputError("monomial length does not match the ring");
  if (sgn(coeff) != 0) terms_.emplace(m, coeff);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const auto n = ring->nvars();
  if (index >= n) throw InputError("variable index out of range");
  return Polynomial(std::move(ring), Monomial::variable(n, index));
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ && other.ring_ && ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw InputError("polynomials belong to different rings");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  if (!ring_) ring_ = other.ring_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  if (!ring_) ring_ = other.ring_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(other);
  Polynomial out(ring_ ? ring_ : other.ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial out(ring_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, a] : terms_) out.terms_.emplace(m, a * c);
  return out;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw InputError("negative exponent");
  Polynomial result(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial out(ring_);
  if (sgn(c) == 0) return out;
  for (const auto& [t, a] : terms_) out.terms_.emplace(t * m, a * c);
  return out;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::canonical_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
    const int da = ring_->weighted_degree(a.first);
    const int db = ring_->weighted_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : canonical_terms()) {
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    const bool unit = magnitude == 1;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (unit) {
      out += ring_->monomial_to_string(m);
    } else {
      out += magnitude.get_str() + '*' + ring_->monomial_to_string(m);
    }
  }
  return out;
}

std::optional<int> weighted_degree(const Polynomial& p) {
  if (p.is_zero()) throw InputError("weighted degree of the zero polynomial is undefined");
  const auto& ring = *p.ring();
  std::optional<int> degree;
  for (const auto& [m, c] : p.terms()) {
    const int d = ring.weighted_degree(m);
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

bool is_weighted_homogeneous(const Polynomial& p) { return p.is_zero() || weighted_degree(p).has_value(); }

Polynomial partial_derivative(const Polynomial& p, std::size_t var_index) {
  if (!p.ring() || var_index >= p.ring()->nvars()) throw InputError("partial derivative: variable index out of range");
  Polynomial out(p.ring());
  for (const auto& [m, c] : p.terms()) {
    if (m[var_index] == 0) continue;
    Monomial dm = m;
    dm[var_index] -= 1;
    out.add_term(dm, c * m[var_index]);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("polynomial syntax error: " + what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (true) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        Integer divisor = integer_literal();
        if (sgn(divisor) == 0) {
          pos_ = at;
          fail("division by zero");
        }
        acc = acc * Rational(Integer(1), divisor);
      } else {
        return acc;
      }
    }
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      Integer e = integer_literal();
      if (!e.fits_sint_p() || e > 10000) fail("exponent too large");
      return base.pow(static_cast<int>(e.get_si()));
    }
    return base;
  }

  Integer integer_literal() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer literal");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial(ring_, Rational(integer_literal()));
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      auto index = ring_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      return Polynomial::variable(ring_, *index);
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  if (!ring) throw InputError("parse_polynomial: no ring given");
  return Parser(text, ring).parse();
}

}  // namespace spencerlab
