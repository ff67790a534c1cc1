#pragma once

// Buchberger's algorithm over Q with the Gebauer-Moeller pair criteria and the
// sugar selection strategy. Reduction runs on primitive integer polynomials.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "multipoly.hpp"

namespace exactlmi {

struct GroebnerBasis {
  std::vector<MultiPolyQ> generators;  // reduced, monic, ascending leading monomials
  MonomialOrder order;

  bool is_unit() const { return generators.size() == 1 && generators[0].is_constant(); }
  bool empty() const { return generators.empty(); }
  std::size_t size() const { return generators.size(); }
};

namespace detail {

// Divides out the common content of the finished part and the remainder.
inline void shrink_content(std::vector<MultiPolyZ::Term>& done, MultiPolyZ& f) {
  Integer g = 0;
  for (const auto& t : done) {
    g = gcd_int(g, t.coeff);
    if (g == 1) return;
  }
  for (const auto& t : f.terms()) {
    g = gcd_int(g, t.coeff);
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& t : done) t.coeff = divexact(t.coeff, g);
  for (auto& t : f.mutable_terms()) t.coeff = divexact(t.coeff, g);
}

// Full fraction-free reduction: terms are reduced while some reducer's leading
// monomial divides them. The result is primitive with positive lc.
template <class FindReducer>
MultiPolyZ reduce_by(MultiPolyZ f, MonomialOrder order, FindReducer&& find) {
  std::vector<MultiPolyZ::Term> done;
  std::size_t steps = 0;
  while (!f.is_zero()) {
    const auto& lead = f.leading();
    const MultiPolyZ* red = find(lead.mono);
    if (!red) {
      done.push_back(lead);
      f.mutable_terms().erase(f.mutable_terms().begin());
      continue;
    }
    Integer g = gcd_int(red->lc(), lead.coeff);
    Integer a = divexact(red->lc(), g);
    Integer c = divexact(lead.coeff, g);
    Monomial q = red->lm().quotient_of(lead.mono);
    if (a != 1)
      for (auto& t : done) t.coeff *= a;
    f.scale_sub_mul(a, c, q, *red);
    if (++steps % 16 == 0) shrink_content(done, f);
  }
  MultiPolyZ r(order);
  r.mutable_terms() = std::move(done);
  return make_primitive(std::move(r));
}

struct GbPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
 public:
  explicit Buchberger(MonomialOrder order) : order_(order) {}

  void add(MultiPolyZ f, unsigned sugar) {
    f = reduce_full(std::move(f));
    if (f.is_zero()) return;
    insert(std::move(f), sugar);
  }

  bool unit_found() const { return unit_; }

  void run() {
    while (!pairs_.empty() && !unit_) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const GbPair& a, const GbPair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return order_.compare(a.lcm, b.lcm) < 0;
      });
      GbPair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      MultiPolyZ s = reduce_full(spoly(p));
      if (!s.is_zero()) insert(std::move(s), p.sugar);
    }
  }

  std::vector<MultiPolyZ> active() const {
    std::vector<MultiPolyZ> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back(basis_[i]);
    return out;
  }

  MultiPolyZ reduce_full(MultiPolyZ f) const {
    return reduce_by(std::move(f), order_, [&](const Monomial& m) { return find_reducer(m); });
  }

 private:
  const MultiPolyZ* find_reducer(const Monomial& m) const {
    const MultiPolyZ* best = nullptr;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i] || !basis_[i].lm().divides(m)) continue;
      if (!best || basis_[i].size() < best->size()) best = &basis_[i];
    }
    return best;
  }

  MultiPolyZ spoly(const GbPair& p) const {
    const MultiPolyZ& f = basis_[p.i];
    const MultiPolyZ& g = basis_[p.j];
    Integer d = gcd_int(f.lc(), g.lc());
    Integer a = divexact(g.lc(), d), c = divexact(f.lc(), d);
    MultiPolyZ s = f.mul_term(a, f.lm().quotient_of(p.lcm));
    s.scale_sub_mul(Integer(1), c, g.lm().quotient_of(p.lcm), g);
    return s;
  }

  void insert(MultiPolyZ h, unsigned sugar) {
    if (h.is_constant()) unit_ = true;
    const std::size_t hi = basis_.size();
    const Monomial hm = h.lm();

    std::vector<GbPair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      Monomial l = basis_[g].lm().lcm(hm);
      unsigned sg = std::max(sugar_[g] + l.degree() - basis_[g].lm().degree(), sugar + l.degree() - hm.degree());
      c.push_back({g, hi, l, sg});
    }
    // Chain criterion among the new pairs.
    std::vector<GbPair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const GbPair& p = c[k];
      bool keep = basis_[p.i].lm().coprime(hm);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q)
          if (c[q].lcm.divides(p.lcm)) keep = false;
        for (const auto& q : d)
          if (keep && q.lcm.divides(p.lcm)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    // Product criterion.
    std::vector<GbPair> fresh;
    for (const auto& p : d)
      if (!basis_[p.i].lm().coprime(hm)) fresh.push_back(p);
    // Chain criterion on the old pairs.
    std::vector<GbPair> kept;
    kept.reserve(pairs_.size() + fresh.size());
    for (const auto& p : pairs_) {
      bool drop = hm.divides(p.lcm) && !(basis_[p.i].lm().lcm(hm) == p.lcm) &&
                  !(basis_[p.j].lm().lcm(hm) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (auto& p : fresh) kept.push_back(p);
    pairs_ = std::move(kept);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && hm.divides(basis_[g].lm())) active_[g] = false;
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
  }

  MonomialOrder order_;
  std::vector<MultiPolyZ> basis_;
  std::vector<unsigned> sugar_;
  std::vector<bool> active_;
  std::vector<GbPair> pairs_;
  bool unit_ = false;
};

}  // namespace detail

/// Reduced Groebner basis of <F> under `order`. <0> gives an empty basis, <1> gives {1}.
inline GroebnerBasis groebner_basis(const std::vector<MultiPolyQ>& F, MonomialOrder order) {
  GroebnerBasis out;
  out.order = order;
  const auto unit = [&] {
    out.generators = {MultiPolyQ::constant(order, 1)};
    return out;
  };
  std::vector<MultiPolyZ> input;
  for (const auto& f : F) {
    if (f.is_zero()) continue;
    input.push_back(primitive_integer(f.order() == order ? f : f.with_order(order)));
    if (input.back().is_constant()) return unit();
  }
  std::sort(input.begin(), input.end(), [&](const MultiPolyZ& a, const MultiPolyZ& b) {
    return order.compare(a.lm(), b.lm()) < 0;
  });
  detail::Buchberger bb(order);
  for (auto& f : input) {
    unsigned s = f.total_degree();
    bb.add(std::move(f), s);
    if (bb.unit_found()) return unit();
  }
  bb.run();
  if (bb.unit_found()) return unit();

  std::vector<MultiPolyZ> g = bb.active();
  std::sort(g.begin(), g.end(), [&](const MultiPolyZ& a, const MultiPolyZ& b) {
    return order.compare(a.lm(), b.lm()) < 0;
  });
  std::vector<MultiPolyZ> minimal;
  for (const auto& p : g) {
    bool redundant = false;
    for (const auto& q : minimal)
      if (q.lm().divides(p.lm())) redundant = true;
    if (!redundant) minimal.push_back(p);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    // Leading terms of a minimal basis are irreducible, so only tails change.
    minimal[i] = detail::reduce_by(minimal[i], order, [&](const Monomial& m) -> const MultiPolyZ* {
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i && minimal[j].lm().divides(m)) return &minimal[j];
      return nullptr;
    });
  }
  for (const auto& p : minimal) out.generators.push_back(make_monic(to_rational(p)));
  return out;
}

/// Remainder of f on division by G over Q (full reduction).
inline MultiPolyQ normal_form(const MultiPolyQ& f, const GroebnerBasis& G) {
  MultiPolyQ work = f.order() == G.order ? f : f.with_order(G.order);
  std::vector<MultiPolyQ::Term> done;
  while (!work.is_zero()) {
    const auto lead = work.leading();
    const MultiPolyQ* red = nullptr;
    for (const auto& g : G.generators)
      if (g.lm().divides(lead.mono)) {
        red = &g;
        break;
      }
    if (!red) {
      done.push_back(lead);
      work.mutable_terms().erase(work.mutable_terms().begin());
      continue;
    }
    work.scale_sub_mul(Rational(1), lead.coeff / red->lc(), red->lm().quotient_of(lead.mono), *red);
  }
  MultiPolyQ r(G.order);
  r.mutable_terms() = std::move(done);
  return r;
}

inline MultiPolyQ s_polynomial(const MultiPolyQ& f, const MultiPolyQ& g) {
  Monomial l = f.lm().lcm(g.lm());
  return f.mul_term(Rational(1) / f.lc(), f.lm().quotient_of(l)) -
         g.mul_term(Rational(1) / g.lc(), g.lm().quotient_of(l));
}

/// Buchberger's criterion checked directly: every S-polynomial of a pair and
/// every source polynomial reduces to zero.
inline bool verify_groebner_basis(const GroebnerBasis& G, const std::vector<MultiPolyQ>& source) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!normal_form(s_polynomial(G.generators[i], G.generators[j]), G).is_zero()) return false;
  for (const auto& f : source)
    if (!normal_form(f, G).is_zero()) return false;
  return true;
}

/// Krull dimension of the ideal: the largest set of variables containing the
/// support of no leading monomial. -1 for the unit ideal.
inline int krull_dimension(const GroebnerBasis& G) {
  if (G.is_unit()) return -1;
  const std::size_t n = G.order.nvars;
  std::vector<std::uint64_t> supports;
  for (const auto& g : G.generators) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.lm()[i]) s |= std::uint64_t(1) << i;
    supports.push_back(s);
  }
  int best = 0;
  // Depth-first search over independent sets with pruning.
  std::vector<std::pair<std::uint64_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [set, next] = stack.back();
    stack.pop_back();
    best = std::max(best, __builtin_popcountll(set));
    if (static_cast<std::size_t>(best) >= static_cast<std::size_t>(__builtin_popcountll(set)) + (n - next)) continue;
    for (std::size_t v = next; v < n; ++v) {
      std::uint64_t cand = set | (std::uint64_t(1) << v);
      bool ok = true;
      for (auto s : supports)
        if ((s & ~cand) == 0) {
          ok = false;
          break;
        }
      if (ok) stack.push_back({cand, v + 1});
    }
  }
  return best;
}

struct ZeroDimInfo {
  bool zero_dimensional = false;
  std::optional<std::size_t> solution_bound;  // standard monomial count
};

/// Monomials outside the leading-term ideal; requires a zero-dimensional basis.
inline std::vector<Monomial> standard_monomials(const GroebnerBasis& G, std::size_t cap = 100000) {
  std::vector<Monomial> out;
  if (G.is_unit()) return out;
  const std::size_t n = G.order.nvars;
  auto standard = [&](const Monomial& m) {
    for (const auto& g : G.generators)
      if (g.lm().divides(m)) return false;
    return true;
  };
  std::vector<Monomial> frontier{Monomial()};
  std::unordered_set<Monomial, MonomialHash> seen{Monomial()};
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    if (!standard(m)) continue;
    out.push_back(m);
    if (out.size() > cap) throw std::runtime_error("quotient algebra too large");
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m * Monomial::variable(i);
      if (seen.insert(next).second) frontier.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return G.order.compare(a, b) < 0; });
  return out;
}

inline ZeroDimInfo is_zero_dimensional(const GroebnerBasis& G) {
  ZeroDimInfo info;
  if (G.is_unit()) {
    info.zero_dimensional = true;
    info.solution_bound = 0;
    return info;
  }
  const std::size_t n = G.order.nvars;
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = false;
    for (const auto& g : G.generators) {
      const Monomial& m = g.lm();
      if (m[i] > 0 && m.degree() == m[i]) pure = true;
    }
    if (!pure) return info;
  }
  info.zero_dimensional = true;
  info.solution_bound = standard_monomials(G).size();
  return info;
}

/// Elements of an elimination basis free of the eliminated (tail) block.
inline GroebnerBasis elimination_part(const GroebnerBasis& G, std::size_t keep_vars) {
  GroebnerBasis out;
  out.order = MonomialOrder::degrevlex(keep_vars);
  for (const auto& g : G.generators) {
    bool free_of_tail = true;
    for (const auto& t : g.terms())
      if (t.mono.block_degree(keep_vars, kMaxVars) != 0) {
        free_of_tail = false;
        break;
      }
    if (!free_of_tail) continue;
    std::vector<MultiPolyQ::Term> terms(g.terms().begin(), g.terms().end());
    out.generators.push_back(MultiPolyQ::from_terms(out.order, std::move(terms)));
  }
  return out;
}

}  // namespace exactlmi
