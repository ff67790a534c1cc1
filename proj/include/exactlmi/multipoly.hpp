#pragma once

// Sparse multivariate polynomials over an exact coefficient ring.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "monomial.hpp"

namespace exactlmi {

template <class C>
class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    C coeff;
  };

  MultiPoly() = default;
  explicit MultiPoly(MonomialOrder order) : order_(order) {}

  static MultiPoly constant(MonomialOrder order, const C& c) {
    MultiPoly p(order);
    if (c != 0) p.terms_.push_back({Monomial(), c});
    return p;
  }

  static MultiPoly variable(MonomialOrder order, std::size_t i) {
    if (i >= order.nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(order);
    p.terms_.push_back({Monomial::variable(i), C(1)});
    return p;
  }

  static MultiPoly monomial(MonomialOrder order, const Monomial& m, const C& c = C(1)) {
    MultiPoly p(order);
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static MultiPoly from_terms(MonomialOrder order, std::vector<Term> terms) {
    MultiPoly p(order);
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return order.compare(a.mono, b.mono) > 0;
    });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const C& lc() const { return terms_.front().coeff; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
  }

  C constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return C(0);
  }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return C(0);
  }

  MultiPoly with_order(MonomialOrder order) const {
    return from_terms(order, std::vector<Term>(terms_.begin(), terms_.end()));
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.order_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].coeff, a.terms_[0].mono);
    if (b.size() == 1) return a.mul_term(b.terms_[0].coeff, b.terms_[0].mono);
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) acc[s.mono * t.mono] += s.coeff * t.coeff;
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms.push_back({m, std::move(c)});
    return from_terms(a.order_, std::move(terms));
  }

  friend MultiPoly operator*(const MultiPoly& a, const C& c) { return a.scaled(c); }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }

  MultiPoly scaled(const C& c) const {
    if (c == 0) return MultiPoly(order_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }

  MultiPoly mul_term(const C& c, const Monomial& m) const {
    if (c == 0) return MultiPoly(order_);
    MultiPoly r(order_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;  // monomial multiplication preserves any admissible order
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly result = constant(order_, C(1)), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e) base *= base;
    }
    return result;
  }

  MultiPoly derivative(std::size_t var) const {
    std::vector<Term> terms;
    for (const auto& t : terms_) {
      unsigned e = t.mono[var];
      if (e == 0) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      terms.push_back({m, t.coeff * C(e)});
    }
    return from_terms(order_, std::move(terms));
  }

  /// Evaluates with values in any ring R that accepts C scalars.
  template <class R>
  R evaluate(const std::vector<R>& values, const R& one) const {
    R acc = one - one;
    std::vector<std::vector<R>> powers(nvars());
    for (const auto& t : terms_) {
      R term = one * t.coeff;
      for (std::size_t i = 0; i < nvars(); ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one);
        while (pw.size() <= e) pw.push_back(pw.back() * values[i]);
        term = term * pw[e];
      }
      acc = acc + term;
    }
    return acc;
  }

  C evaluate(const std::vector<C>& values) const {
    if (values.size() != nvars()) throw std::invalid_argument("evaluation arity mismatch");
    return evaluate<C>(values, C(1));
  }

  /// Replaces variable i by images[i] (all images share the target order).
  MultiPoly substitute(const std::vector<MultiPoly>& images, MonomialOrder target) const {
    if (images.size() != nvars()) throw std::invalid_argument("substitution arity mismatch");
    return evaluate<MultiPoly>(images, constant(target, C(1)));
  }

  bool operator==(const MultiPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff) return false;
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Variables that occur with nonzero exponent.
  std::vector<bool> support() const {
    std::vector<bool> used(nvars(), false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars(); ++i)
        if (t.mono[i]) used[i] = true;
    return used;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
      C c = t.coeff;
      bool neg = c < 0;
      if (neg) c = -c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars(); ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        if (!mono.empty()) mono += "*";
        mono += i < names.size() ? names[i] : "v" + std::to_string(i + 1);
        if (e > 1) mono += "^" + std::to_string(e);
      }
      if (mono.empty()) {
        out += exactlmi::to_string(c);
      } else if (c == 1) {
        out += mono;
      } else {
        out += exactlmi::to_string(c) + "*" + mono;
      }
    }
    return out;
  }

  // In-place f := a*f - c*m*g, used by reduction loops. Drops cancelled terms.
  void scale_sub_mul(const C& a, const C& c, const Monomial& m, const MultiPoly& g) {
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back({terms_[i].mono, terms_[i].coeff * a});
        ++i;
        continue;
      }
      Monomial gm = g.terms_[j].mono * m;
      int cmp = i == terms_.size() ? -1 : order_.compare(terms_[i].mono, gm);
      if (cmp > 0) {
        out.push_back({terms_[i].mono, terms_[i].coeff * a});
        ++i;
      } else if (cmp < 0) {
        out.push_back({gm, -(g.terms_[j].coeff * c)});
        ++j;
      } else {
        C v = terms_[i].coeff * a - g.terms_[j].coeff * c;
        if (v != 0) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    terms_ = std::move(out);
  }

  std::vector<Term>& mutable_terms() { return terms_; }

 private:
  static void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.order_ == b.order_)) throw std::invalid_argument("polynomials live in different rings");
  }

  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    check_compatible(a, b);
    MultiPoly r(a.order_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int cmp = i == a.size() ? -1 : j == b.size() ? 1 : a.order_.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        Term t = b.terms_[j++];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
      } else {
        C v = subtract ? C(a.terms_[i].coeff - b.terms_[j].coeff) : C(a.terms_[i].coeff + b.terms_[j].coeff);
        if (v != 0) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
  MonomialOrder order_;
};

using MultiPolyQ = MultiPoly<Rational>;
using MultiPolyZ = MultiPoly<Integer>;

/// Clears denominators and removes content; the leading coefficient ends up positive.
inline MultiPolyZ primitive_integer(const MultiPolyQ& p) {
  MultiPolyZ r(p.order());
  if (p.is_zero()) return r;
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, t.coeff.get_den());
  Integer content = 0;
  std::vector<MultiPolyZ::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer v = t.coeff.get_num() * divexact(den, t.coeff.get_den());
    content = gcd_int(content, v);
    terms.push_back({t.mono, v});
  }
  if (p.lc() < 0) content = -content;
  for (auto& t : terms) t.coeff = divexact(t.coeff, content);
  r.mutable_terms() = std::move(terms);
  return r;
}

inline MultiPolyZ make_primitive(MultiPolyZ p) {
  if (p.is_zero()) return p;
  Integer content = 0;
  for (const auto& t : p.terms()) {
    content = gcd_int(content, t.coeff);
    if (content == 1) break;
  }
  if (p.lc() < 0) content = -content;
  if (content != 1)
    for (auto& t : p.mutable_terms()) t.coeff = divexact(t.coeff, content);
  return p;
}

inline MultiPolyQ to_rational(const MultiPolyZ& p) {
  MultiPolyQ r(p.order());
  auto& terms = r.mutable_terms();
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, Rational(t.coeff)});
  return r;
}

inline MultiPolyQ make_monic(const MultiPolyQ& p) {
  if (p.is_zero()) return p;
  return p.scaled(Rational(1) / p.lc());
}

/// Recursive-descent parser for polynomial expressions over named variables:
/// sums of products of rational literals, variables, parenthesised groups,
/// with integer powers (`^` or `**`).
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& names, MonomialOrder order)
      : text_(text), names_(names), order_(order) {}

  MultiPolyQ parse() {
    MultiPolyQ p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

  std::size_t position() const { return pos_; }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPolyQ expr() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    MultiPolyQ acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPolyQ term() {
    MultiPolyQ acc = power();
    for (;;) {
      skip_ws();
      if (pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') break;
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        MultiPolyQ d = power();
        if (!d.is_constant() || d.is_zero()) fail("division by non-constant or zero");
        acc = acc.scaled(Rational(1) / d.constant_term());
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPolyQ power() {
    MultiPolyQ base = atom();
    skip_ws();
    bool caret = eat('^');
    if (!caret && pos_ + 1 < text_.size() && text_[pos_] == '*' && text_[pos_ + 1] == '*') {
      pos_ += 2;
      caret = true;
    }
    if (caret) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPolyQ atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPolyQ e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      return MultiPolyQ::constant(order_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return MultiPolyQ::variable(order_, static_cast<std::size_t>(it - names_.begin()));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

inline MultiPolyQ parse_poly(std::string_view text, const std::vector<std::string>& names) {
  return PolyParser(text, names, MonomialOrder::degrevlex(names.size())).parse();
}

inline MultiPolyQ parse_poly(std::string_view text, const std::vector<std::string>& names,
                             MonomialOrder order) {
  return PolyParser(text, names, order).parse();
}

}  // namespace exactlmi
