// Standard-monomial combinatorics for the Veronese toric presentation.
// T_r = K[z_m : m a degree-r monomial] maps onto the Veronese subalgebra by
// z_m -> m; under the sorting term order the standard monomials of T_r are
// "standard chains" [m_1, ..., m_k] (listed descending revlex) with
// max_index(m_t) <= min_index(m_{t+1}), and membership in the initial ideal
// of the preimage of J is decided by the plain product m_1 * ... * m_k.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "verolef/monomial.hpp"
#include "verolef/monomial_ideal.hpp"

namespace verolef {

using Chain = std::vector<Monomial>;

inline Monomial chain_product(const Chain& chain, int n) {
  Monomial p = Monomial::unit(n);
  for (const Monomial& m : chain) p = p * m;
  return p;
}

// A chain is standard when its entries all have the same positive degree, are
// weakly decreasing in revlex, and satisfy max_index(m_t) <= min_index(m_{t+1})
// for consecutive entries. The empty chain is standard. Mixed degrees or unit
// entries are malformed input and throw.
inline bool is_standard(const Chain& chain) {
  if (chain.empty()) return true;
  const int deg = chain.front().degree();
  for (const Monomial& m : chain) {
    if (m.degree() == 0)
      throw std::invalid_argument("is_standard: unit entry in chain");
    if (m.degree() != deg)
      throw std::invalid_argument("is_standard: mixed degrees in chain");
    if (m.vars() != chain.front().vars())
      throw std::invalid_argument("is_standard: mixed ambient rings");
  }
  for (std::size_t t = 0; t + 1 < chain.size(); ++t) {
    if (revlex_less(chain[t], chain[t + 1])) return false;
    if (chain[t].max_index() > chain[t + 1].min_index()) return false;
  }
  return true;
}

// The standard chain with the same product as a single degree-(k*r) monomial:
// sort all variable indices ascending and cut into degree-r blocks.
inline Chain standard_chain_of(const Monomial& p, int r) {
  if (r < 1) throw std::invalid_argument("standard_chain_of: need r >= 1");
  if (p.degree() % r != 0)
    throw std::invalid_argument("standard_chain_of: degree not a multiple of r");
  std::vector<int> idx;
  idx.reserve(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.vars(); ++i)
    idx.insert(idx.end(), static_cast<std::size_t>(p.exponent(i)), i);
  Chain out;
  for (std::size_t at = 0; at < idx.size(); at += static_cast<std::size_t>(r)) {
    std::vector<int> e(static_cast<std::size_t>(p.vars()), 0);
    for (std::size_t t = at; t < at + static_cast<std::size_t>(r); ++t)
      ++e[static_cast<std::size_t>(idx[t] - 1)];
    out.emplace_back(std::move(e));
  }
  return out;
}

// Sorting normal form of a multiset of degree-r monomials: the unique
// standard chain with the same product. Postconditions (standardness and
// product preservation) are asserted.
inline Chain sort_normal_form(const Chain& monomials) {
  if (monomials.empty())
    throw std::invalid_argument("sort_normal_form: empty input");
  const int r = monomials.front().degree();
  if (r < 1) throw std::invalid_argument("sort_normal_form: unit entries");
  for (const Monomial& m : monomials)
    if (m.degree() != r)
      throw std::invalid_argument("sort_normal_form: mixed degrees");
  const int n = monomials.front().vars();
  const Monomial p = chain_product(monomials, n);
  Chain out = standard_chain_of(p, r);
  if (!is_standard(out) || chain_product(out, n) != p)
    throw std::logic_error("sort_normal_form: postcondition failed");
  return out;
}

// True iff the chain represents a standard monomial of T_r / in(preimage of
// J): it is standard and its product avoids J.
inline bool standard_membership(const Chain& chain, const MonomialIdeal& J) {
  if (!is_standard(chain)) return false;
  return !J.contains(chain_product(chain, J.vars()));
}

// Graded revlex on T_r induced on chains: longer chains have higher degree;
// equal length compares factor lists from the *smallest* (last) entry, the
// first difference deciding by revlex on the factors.
inline Ordering chain_compare(const Chain& a, const Chain& b) {
  if (a.size() != b.size())
    return a.size() > b.size() ? Ordering::greater : Ordering::less;
  for (std::size_t t = a.size(); t-- > 0;) {
    const Ordering o = revlex_compare(a[t], b[t]);
    if (o != Ordering::equal) return o;
  }
  return Ordering::equal;
}

struct ChainRevlexGreater {
  bool operator()(const Chain& a, const Chain& b) const {
    return chain_compare(a, b) == Ordering::greater;
  }
};

// All standard chains of length k over every degree-r monomial in n
// variables (repetition allowed), sorted descending.
inline std::vector<Chain> standard_chains(int n, int r, int k) {
  if (n < 1 || r < 1 || k < 0)
    throw std::invalid_argument("standard_chains: bad arguments");
  const std::vector<Monomial> verts = monomials_of_degree(n, r);
  std::vector<Chain> out;
  Chain current;
  const auto extend = [&](const auto& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t v = from; v < verts.size(); ++v) {
      if (!current.empty() &&
          current.back().max_index() > verts[v].min_index())
        continue;
      current.push_back(verts[v]);
      self(self, v);  // same vertex may repeat
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), ChainRevlexGreater{});
  return out;
}

// Standard chains of length k whose product avoids J (the degree-k standard
// basis of T_r modulo the initial ideal), sorted descending. Prefix products
// divide the full product, so pruning on the running product is exact.
inline std::vector<Chain> standard_chains_mod(const MonomialIdeal& J, int r, int k) {
  if (r < 1 || k < 0)
    throw std::invalid_argument("standard_chains_mod: bad arguments");
  const int n = J.vars();
  if (J.contains(Monomial::unit(n))) return {};
  if (k == 0) return {Chain{}};
  const std::vector<Monomial> verts = graded_basis(J, r);
  std::vector<Chain> out;
  Chain current;
  Monomial product = Monomial::unit(n);
  const auto extend = [&](const auto& self, std::size_t from) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t v = from; v < verts.size(); ++v) {
      if (!current.empty() &&
          current.back().max_index() > verts[v].min_index())
        continue;
      const Monomial next = product * verts[v];
      if (J.contains(next)) continue;
      current.push_back(verts[v]);
      const Monomial saved = product;
      product = next;
      self(self, v);
      product = saved;
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end(), ChainRevlexGreater{});
  return out;
}

}  // namespace verolef
