// Simplicial complexes on monomial-labelled vertices, and the two complexes
// attached to a Veronese quotient: Delta (faces = squarefree standard chains
// avoiding J; its f-polynomial realizes h^<r> in the flag range) and Gamma
// (faces = non-pivot standard chains for multiplication by w; its f-polynomial
// realizes g^<r> for r >= deg h).
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "verolef/int_polynomial.hpp"
#include "verolef/lefschetz.hpp"
#include "verolef/standard_chains.hpp"
#include "verolef/veronese.hpp"

namespace verolef {

class SimplicialComplex {
 public:
  // Faces are strictly increasing vertex-id lists; the empty face is always
  // present. Subset closure is the builders' responsibility (see
  // verify_closed), not enforced here.
  SimplicialComplex(std::vector<Monomial> vertices,
                    std::set<std::vector<int>> faces)
      : vertices_(std::move(vertices)), faces_(std::move(faces)) {
    faces_.insert(std::vector<int>{});
    for (const auto& f : faces_) {
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (f[t] < 0 || f[t] >= static_cast<int>(vertices_.size()))
          throw std::invalid_argument("SimplicialComplex: vertex id out of range");
        if (t + 1 < f.size() && f[t] >= f[t + 1])
          throw std::invalid_argument("SimplicialComplex: face ids not increasing");
      }
    }
  }

  const std::vector<Monomial>& vertices() const { return vertices_; }
  const std::set<std::vector<int>>& faces() const { return faces_; }

  bool contains(const std::vector<int>& face) const { return faces_.count(face) > 0; }

  // Every face with one element removed is again a face.
  bool verify_closed() const {
    for (const auto& f : faces_) {
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        std::vector<int> s;
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != skip) s.push_back(f[t]);
        if (!faces_.count(s)) return false;
      }
    }
    return true;
  }

  std::vector<std::vector<int>> facets() const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_) {
      bool maximal = true;
      for (const auto& g : faces_) {
        if (g.size() <= f.size()) continue;
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(f);
    }
    return out;
  }

 private:
  std::vector<Monomial> vertices_;
  std::set<std::vector<int>> faces_;
};

// Coefficient of t^i = number of faces of cardinality i (f_{-1} ... f_{dim}
// shifted so the empty face contributes the constant term 1).
inline IntPolynomial f_polynomial(const SimplicialComplex& C) {
  std::size_t top = 0;
  for (const auto& f : C.faces()) top = std::max(top, f.size());
  std::vector<Integer> c(top + 1, Integer{0});
  for (const auto& f : C.faces()) ++c[f.size()];
  return IntPolynomial(std::move(c));
}

// Flag = every clique of the 1-skeleton is a face. Enumerates cliques
// depth-first over increasing ids, stopping at the first non-face clique.
inline bool is_flag(const SimplicialComplex& C) {
  const int nv = static_cast<int>(C.vertices().size());
  for (int v = 0; v < nv; ++v)
    if (!C.contains({v})) return false;
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(nv),
                                     std::vector<bool>(static_cast<std::size_t>(nv), false));
  for (const auto& f : C.faces())
    if (f.size() == 2) {
      adj[static_cast<std::size_t>(f[0])][static_cast<std::size_t>(f[1])] = true;
      adj[static_cast<std::size_t>(f[1])][static_cast<std::size_t>(f[0])] = true;
    }
  std::vector<int> clique;
  bool flag = true;
  const auto extend = [&](const auto& self, int from) -> void {
    if (!flag) return;
    for (int v = from; v < nv && flag; ++v) {
      bool joined = true;
      for (int u : clique)
        if (!adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
          joined = false;
          break;
        }
      if (!joined) continue;
      clique.push_back(v);
      if (clique.size() >= 3 && !C.contains(clique)) flag = false;
      if (flag) self(self, v + 1);
      clique.pop_back();
    }
  };
  extend(extend, 0);
  return flag;
}

// Delta: vertices are the degree-r monomials outside J; faces are the sets of
// distinct vertices whose descending ordering is a standard chain with
// product outside J. Always a simplicial complex; f(Delta) = h^<r> whenever
// r >= (deg h + 1)/2 (below that bound non-squarefree standard monomials can
// survive and the squarefree face count may fall short — see
// standard_chain_polynomial for the all-r count).
inline SimplicialComplex build_delta(const VeroneseQuotient& V) {
  const auto verts = V.basis(1);
  const MonomialIdeal& J = V.powered_ideal();
  const int n = V.vars();
  std::set<std::vector<int>> faces;
  faces.insert(std::vector<int>{});
  std::vector<int> ids;
  Monomial product = Monomial::unit(n);
  const auto extend = [&](const auto& self, std::size_t from) -> void {
    for (std::size_t v = from; v < verts->size(); ++v) {
      const Monomial& cand = (*verts)[v];
      if (!ids.empty() &&
          (*verts)[static_cast<std::size_t>(ids.back())].max_index() > cand.min_index())
        continue;
      const Monomial next = product * cand;
      if (J.contains(next)) continue;
      ids.push_back(static_cast<int>(v));
      faces.insert(ids);
      const Monomial saved = product;
      product = next;
      self(self, v + 1);  // distinct vertices only
      product = saved;
      ids.pop_back();
    }
  };
  extend(extend, 0);
  SimplicialComplex C(std::vector<Monomial>(*verts), std::move(faces));
  if (!C.verify_closed())
    throw std::logic_error("build_delta: face family not subset-closed");
  return C;
}

// Hilbert function of T_r modulo the initial ideal: coefficient k = number of
// length-k standard chains with product outside J, multisets included. By the
// normal-form bijection this equals h^<r> for every r.
inline IntPolynomial standard_chain_polynomial(const VeroneseQuotient& V) {
  const int cap = V.transformed_h().degree();
  std::vector<Integer> c;
  for (int k = 0; k <= cap; ++k)
    c.emplace_back(static_cast<long>(
        standard_chains_mod(V.powered_ideal(), V.veronese_r(), k).size()));
  if (!standard_chains_mod(V.powered_ideal(), V.veronese_r(), cap + 1).empty())
    throw std::logic_error("standard_chain_polynomial: chains beyond the degree bound");
  return IntPolynomial(std::move(c));
}

// Gamma: for each k <= floor(socle/2), rows are the degree-(k-1) standard
// basis, columns the degree-k standard basis in descending chain order;
// row j expands w * (product of row chain) in sorting normal form. Faces of
// cardinality k are the non-pivot squarefree columns. Requires r >= deg h.
inline SimplicialComplex build_gamma(const VeroneseQuotient& V) {
  const int r = V.veronese_r();
  if (r < V.base_h().degree())
    throw std::invalid_argument("build_gamma: requires r >= deg h");
  const MonomialIdeal& J = V.powered_ideal();
  const int n = V.vars();
  const Form w = power_linear_form(V);
  const int socle = socle_degree(V);

  std::vector<Monomial> vertices;
  std::map<std::vector<int>, int> vertex_id;  // exponent vector -> id
  std::set<std::vector<int>> faces;
  faces.insert(std::vector<int>{});

  for (int k = 1; 2 * k <= socle; ++k) {
    const std::vector<Chain> cols = standard_chains_mod(J, r, k);
    const std::vector<Chain> rows = standard_chains_mod(J, r, k - 1);
    RationalMatrix M(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
      const Monomial pb = chain_product(rows[static_cast<std::size_t>(row)], n);
      for (const auto& [m, c] : w) {
        const Monomial p = pb * m;
        if (J.contains(p)) continue;
        const Chain ch = standard_chain_of(p, r);
        const auto it =
            std::lower_bound(cols.begin(), cols.end(), ch, ChainRevlexGreater{});
        if (it == cols.end() || *it != ch)
          throw std::logic_error("build_gamma: normal form not in standard basis");
        M.at(row, static_cast<int>(it - cols.begin())) += Rational(c);
      }
    }
    std::vector<int> order(cols.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    const std::vector<int> pivots = M.row_reduce_pivots(order);
    std::set<int> pivot_set(pivots.begin(), pivots.end());

    for (int col = 0; col < static_cast<int>(cols.size()); ++col) {
      if (pivot_set.count(col)) continue;
      const Chain& ch = cols[static_cast<std::size_t>(col)];
      bool squarefree = true;
      for (std::size_t t = 0; t + 1 < ch.size(); ++t)
        if (ch[t] == ch[t + 1]) squarefree = false;
      if (!squarefree) continue;
      std::vector<int> face;
      if (k == 1) {
        const int id = static_cast<int>(vertices.size());
        vertex_id.emplace(ch.front().exponents(), id);
        vertices.push_back(ch.front());
        face.push_back(id);
      } else {
        for (const Monomial& m : ch) {
          const auto it = vertex_id.find(m.exponents());
          if (it == vertex_id.end())
            throw std::logic_error("build_gamma: face entry is not a vertex");
          face.push_back(it->second);
        }
        std::sort(face.begin(), face.end());
      }
      faces.insert(std::move(face));
    }
  }

  SimplicialComplex C(std::move(vertices), std::move(faces));
  if (!C.verify_closed())
    throw std::logic_error("build_gamma: face family not subset-closed");
  return C;
}

}  // namespace verolef
