#include "spencerlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

#include "spencerlab/errors.hpp"

namespace spencerlab {

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::Lex) return a > b;
  const int da = ring_->weighted_degree(a);
  const int db = ring_->weighted_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::size_t default_pair_budget() {
  if (const char* env = std::getenv("SPENCERLAB_BUDGET")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SPENCERLAB_BUDGET must be a positive integer, got '") + env + "'");
  }
  return 100000;
}

LeadingTerm leading_term(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) throw InputError("leading term of the zero polynomial");
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it)
    if (order.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

namespace {

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
  return p * (Rational(1) / leading_term(p, order).coefficient);
}

// Full reduction of p by the polynomials in basis (leading terms precomputed).
Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis, const std::vector<LeadingTerm>& leads,
                  const MonomialOrder& order) {
  Polynomial remainder(p.ring());
  while (!p.is_zero()) {
    LeadingTerm lt = leading_term(p, order);
    bool divided = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!leads[k].monomial.divides(lt.monomial)) continue;
      p -= basis[k].times_monomial(lt.monomial / leads[k].monomial, lt.coefficient / leads[k].coefficient);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lt.monomial, lt.coefficient);
      p.add_term(lt.monomial, -lt.coefficient);
    }
  }
  return remainder;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

GroebnerBasis::GroebnerBasis(std::vector<Polynomial> generators, MonomialOrder order)
    : generators_(std::move(generators)), order_(std::move(order)) {
  for (const auto& g : generators_) leading_.push_back(leading_term(g, order_).monomial);
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(leading_.begin(), leading_.end(), [](const Monomial& m) { return m.is_one(); });
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, std::size_t pair_budget) {
  std::vector<Polynomial> basis;
  std::vector<LeadingTerm> leads;
  for (const auto& g : ideal.generators()) {
    Polynomial r = reduce(g, basis, leads, order);
    if (r.is_zero()) continue;
    r = monic(r, order);
    leads.push_back(leading_term(r, order));
    basis.push_back(std::move(r));
  }

  // Normal selection: smallest lcm first (weighted degree, then lex), ties by (i, j).
  const auto& ring = *ideal.ring();
  auto pair_less = [&ring](const Pair& a, const Pair& b) {
    const int da = ring.weighted_degree(a.lcm);
    const int db = ring.weighted_degree(b.lcm);
    if (da != db) return da < db;
    if (a.lcm != b.lcm) return a.lcm < b.lcm;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> pairs(pair_less);
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pairs.insert(Pair{i, j, lcm(leads[i].monomial, leads[j].monomial)});
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  std::size_t examined = 0;
  while (!pairs.empty()) {
    Pair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    if (++examined > pair_budget)
      throw BudgetExceeded("Groebner pair budget of " + std::to_string(pair_budget) + " exhausted");
    if (coprime(leads[pair.i].monomial, leads[pair.j].monomial)) continue;

    const Polynomial s = basis[pair.i].times_monomial(pair.lcm / leads[pair.i].monomial) -
                         basis[pair.j].times_monomial(pair.lcm / leads[pair.j].monomial);
    Polynomial r = reduce(s, basis, leads, order);
    if (r.is_zero()) continue;
    r = monic(r, order);
    leads.push_back(leading_term(r, order));
    basis.push_back(std::move(r));
    add_pairs_for(basis.size() - 1);
  }

  // Minimalize, then inter-reduce.
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < basis.size() && !redundant; ++l) {
      if (l == k || !leads[l].monomial.divides(leads[k].monomial)) continue;
      redundant = leads[l].monomial != leads[k].monomial || l < k;
    }
    if (!redundant) keep.push_back(k);
  }
  std::vector<Polynomial> minimal;
  std::vector<LeadingTerm> minimal_leads;
  for (auto k : keep) {
    minimal.push_back(basis[k]);
    minimal_leads.push_back(leads[k]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    std::vector<LeadingTerm> other_leads;
    for (std::size_t l = 0; l < minimal.size(); ++l) {
      if (l == k) continue;
      others.push_back(minimal[l]);
      other_leads.push_back(minimal_leads[l]);
    }
    Polynomial tail = minimal[k];
    tail.add_term(minimal_leads[k].monomial, -minimal_leads[k].coefficient);
    Polynomial r = reduce(tail, others, other_leads, order);
    r.add_term(minimal_leads[k].monomial, 1);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&order](const Polynomial& a, const Polynomial& b) {
    return order.greater(leading_term(a, order).monomial, leading_term(b, order).monomial);
  });
  return GroebnerBasis(std::move(reduced), order);
}

GroebnerBasis buchberger(const Ideal& ideal) { return buchberger(ideal, MonomialOrder(ideal.ring())); }

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  std::vector<LeadingTerm> leads;
  for (const auto& g : gb.generators()) leads.push_back(leading_term(g, gb.order()));
  return reduce(p, gb.generators(), leads, gb.order());
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

QuotientDimension quotient_dimension(const GroebnerBasis& gb) {
  const auto& ring = *gb.order().ring();
  const std::size_t n = ring.nvars();
  QuotientDimension out;

  // Finite iff every variable has a pure power among the leading monomials.
  std::vector<int> bound(n, -1);
  for (const auto& m : gb.leading_monomials()) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) {
        ++support;
        var = i;
      }
    if (support == 0) {
      out.dimension = 0;
      return out;
    }
    if (support == 1 && (bound[var] < 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return out;

  Monomial current(n);
  std::function<void(std::size_t)> walk = [&](std::size_t var) {
    if (var == n) {
      for (const auto& lm : gb.leading_monomials())
        if (lm.divides(current)) return;
      out.basis.push_back(current);
      return;
    }
    for (int e = 0; e < bound[var]; ++e) {
      current[var] = e;
      walk(var + 1);
    }
    current[var] = 0;
  };
  walk(0);
  std::sort(out.basis.begin(), out.basis.end(), [&ring](const Monomial& a, const Monomial& b) {
    const int da = ring.weighted_degree(a);
    const int db = ring.weighted_degree(b);
    if (da != db) return da < db;
    return a > b;
  });
  out.dimension = out.basis.size();
  return out;
}

QuotientDimension quotient_dimension(const Ideal& ideal, OrderKind kind) {
  return quotient_dimension(buchberger(ideal, MonomialOrder(ideal.ring(), kind)));
}

}  // namespace spencerlab
