// The Veronese construction on graded quotients of stable monomial ideals.
// A = S/I is Cohen-Macaulay of dimension d; the r-th Veronese of the Artinian
// reduction A_Theta^<r> is modeled inside S as S/J with
// J = I + (x_{n-d+1}^r, ..., x_n^r), graded piece i <-> S-degree i*r.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verolef/int_polynomial.hpp"
#include "verolef/monomial_ideal.hpp"
#include "verolef/rational_matrix.hpp"

namespace verolef {

// h^<r>_i = sum_k h_k * c_{d,r}(i*r - k) where c_{d,r} are the coefficients
// of (1 + t + ... + t^{r-1})^d. Requires h_0 = 1 and nonnegative coefficients.
inline IntPolynomial veronese_h_transform(const IntPolynomial& h, int d, int r) {
  if (d < 0 || r < 1)
    throw std::invalid_argument("veronese_h_transform: need d >= 0, r >= 1");
  if (h.is_zero() || h[0] != 1)
    throw std::invalid_argument("veronese_h_transform: h must have constant term 1");
  for (const Integer& c : h.coefficients())
    if (c < 0)
      throw std::invalid_argument("veronese_h_transform: negative coefficient");
  const IntPolynomial c = ci_hilbert(d, r);
  const int top = (d * (r - 1) + h.degree()) / r;
  std::vector<Integer> out(static_cast<std::size_t>(top) + 1, Integer{0});
  for (int i = 0; i <= top; ++i)
    for (int k = 0; k <= h.degree(); ++k) out[static_cast<std::size_t>(i)] += h[k] * c[i * r - k];
  IntPolynomial result(std::move(out));
  if (result.degree() != top)
    throw std::logic_error("veronese_h_transform: degree formula violated");
  return result;
}

// deg h^<r> = floor((d(r-1) + deg h) / r).
inline int veronese_degree(int deg_h, int d, int r) {
  if (deg_h < 0 || d < 0 || r < 1)
    throw std::invalid_argument("veronese_degree: bad arguments");
  return (d * (r - 1) + deg_h) / r;
}

// Homogeneous integer combination of monomials (e.g. a power of a linear
// form); an empty list is the zero form.
using Form = std::vector<std::pair<Monomial, Integer>>;

// Common degree of the terms; throws on mixed degrees or the zero form.
inline int form_degree(const Form& w) {
  if (w.empty()) throw std::invalid_argument("form_degree: zero form");
  const int deg = w.front().first.degree();
  for (const auto& [m, c] : w)
    if (m.degree() != deg)
      throw std::invalid_argument("form_degree: not homogeneous");
  return deg;
}

class VeroneseQuotient {
 public:
  // Validates that I is CM stable; computes d = dim(S/I), the powered ideal
  // J, and the h-polynomial of S/I.
  VeroneseQuotient(MonomialIdeal I, int r)
      : I_(std::move(I)), r_(r), d_(0), J_(MonomialIdeal::zero(I_.vars())) {
    if (r < 1) throw std::invalid_argument("VeroneseQuotient: need r >= 1");
    if (!is_cm_stable(I_))
      throw std::invalid_argument("VeroneseQuotient: ideal is not CM stable");
    d_ = ideal_dimension(I_);
    std::vector<Monomial> powers;
    for (int i = I_.vars() - d_ + 1; i <= I_.vars(); ++i) {
      std::vector<int> e(static_cast<std::size_t>(I_.vars()), 0);
      e[static_cast<std::size_t>(i - 1)] = r_;
      powers.emplace_back(std::move(e));
    }
    J_ = I_ + MonomialIdeal(I_.vars(), std::move(powers));
    h_ = h_polynomial_stable(I_);
    hr_ = veronese_h_transform(h_, d_, r_);
  }

  int vars() const { return I_.vars(); }
  int dimension() const { return d_; }
  int veronese_r() const { return r_; }
  const MonomialIdeal& ideal() const { return I_; }
  const MonomialIdeal& powered_ideal() const { return J_; }
  const IntPolynomial& base_h() const { return h_; }
  const IntPolynomial& transformed_h() const { return hr_; }

  // K-basis of graded piece i (S-monomials of degree i*r outside J), sorted
  // descending revlex. Lazy, cached, safe under concurrent calls.
  std::shared_ptr<const std::vector<Monomial>> basis(int i) const {
    if (i < 0) throw std::invalid_argument("VeroneseQuotient::basis: need i >= 0");
    {
      std::lock_guard<std::mutex> lock(cache_mutex_);
      auto it = basis_cache_.find(i);
      if (it != basis_cache_.end()) return it->second;
    }
    auto computed = std::make_shared<const std::vector<Monomial>>(
        graded_basis(J_, i * r_));
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto [it, inserted] = basis_cache_.emplace(i, std::move(computed));
    return it->second;
  }

  long graded_dim(int i) const { return static_cast<long>(basis(i)->size()); }

 private:
  MonomialIdeal I_;
  int r_;
  int d_;
  MonomialIdeal J_;
  IntPolynomial h_;
  IntPolynomial hr_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const std::vector<Monomial>>> basis_cache_;
};

// (theta_1 + ... + theta_d)^r for the l.s.o.p. theta_t = x_{n-d+t}, expanded
// by multinomials; the zero form when d = 0. Terms sorted descending revlex.
inline Form power_linear_form(const VeroneseQuotient& V) {
  const int d = V.dimension(), n = V.vars(), r = V.veronese_r();
  if (d == 0) return {};
  Integer r_fact;
  mpz_fac_ui(r_fact.get_mpz_t(), static_cast<unsigned long>(r));
  Form w;
  enumerate_exponents(d, r, [&](const std::vector<int>& e) {
    std::vector<int> full(static_cast<std::size_t>(n), 0);
    Integer coeff = r_fact;
    for (int t = 0; t < d; ++t) {
      full[static_cast<std::size_t>(n - d + t)] = e[static_cast<std::size_t>(t)];
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e[static_cast<std::size_t>(t)]));
      coeff /= f;
    }
    w.emplace_back(Monomial(std::move(full)), std::move(coeff));
  });
  std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) {
    return revlex_greater(a.first, b.first);
  });
  return w;
}

// Matrix of multiplication by w from graded piece i to piece i + k, where w is
// homogeneous of degree k*r (k >= 1), over the bases from basis(). The zero
// form gives the zero map into piece i + 1.
inline RationalMatrix multiplication_matrix(const VeroneseQuotient& V, const Form& w,
                                            int i) {
  if (i < 0) throw std::invalid_argument("multiplication_matrix: need i >= 0");
  int k = 1;
  if (!w.empty()) {
    const int deg = form_degree(w);
    if (deg % V.veronese_r() != 0 || deg == 0)
      throw std::invalid_argument(
          "multiplication_matrix: form degree must be a positive multiple of r");
    k = deg / V.veronese_r();
    for (const auto& [m, c] : w)
      if (m.vars() != V.vars())
        throw std::invalid_argument("multiplication_matrix: form in wrong ring");
  }
  const auto source = V.basis(i);
  const auto target = V.basis(i + k);
  RationalMatrix M(static_cast<int>(target->size()), static_cast<int>(source->size()));
  for (int col = 0; col < static_cast<int>(source->size()); ++col) {
    const Monomial& b = (*source)[static_cast<std::size_t>(col)];
    for (const auto& [m, c] : w) {
      const Monomial p = b * m;
      if (V.powered_ideal().contains(p)) continue;
      const auto it = std::lower_bound(target->begin(), target->end(), p, RevlexGreater{});
      if (it == target->end() || *it != p)
        throw std::logic_error("multiplication_matrix: image monomial not in basis");
      M.at(static_cast<int>(it - target->begin()), col) += Rational(c);
    }
  }
  return M;
}

}  // namespace verolef
