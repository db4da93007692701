// Monomials in a fixed polynomial ring K[x_1..x_n] with the graded reverse
// lexicographic order. Variable indices are 1-based in the API.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace verolef {

class Monomial {
 public:
  // The unit monomial 1 in n variables.
  explicit Monomial(int n) : exp_(check_vars(n), 0) {}

  explicit Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    check_vars(static_cast<int>(exp_.size()));
    for (int e : exp_)
      if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
  }

  static Monomial unit(int n) { return Monomial(n); }

  // x_i in n variables, 1 <= i <= n.
  static Monomial variable(int n, int i) {
    Monomial m(n);
    m.exp_[check_index(i, n) - 1] = 1;
    return m;
  }

  int vars() const { return static_cast<int>(exp_.size()); }

  int exponent(int i) const { return exp_[check_index(i, vars()) - 1]; }

  const std::vector<int>& exponents() const { return exp_; }

  int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

  bool is_unit() const {
    return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e == 0; });
  }

  // Largest / smallest index of a variable dividing the monomial.
  int max_index() const {
    for (int i = vars(); i >= 1; --i)
      if (exp_[i - 1] > 0) return i;
    throw std::domain_error("max_index: unit monomial has no support");
  }

  int min_index() const {
    for (int i = 1; i <= vars(); ++i)
      if (exp_[i - 1] > 0) return i;
    throw std::domain_error("min_index: unit monomial has no support");
  }

  Monomial operator*(const Monomial& o) const {
    check_same_ring(o);
    std::vector<int> e(exp_);
    for (int i = 0; i < vars(); ++i) e[i] += o.exp_[i];
    return Monomial(std::move(e));
  }

  bool divides(const Monomial& o) const {
    check_same_ring(o);
    for (int i = 0; i < vars(); ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  // this / o; requires o | this.
  Monomial operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw std::domain_error("Monomial: inexact division");
    std::vector<int> e(exp_);
    for (int i = 0; i < vars(); ++i) e[i] -= o.exp_[i];
    return Monomial(std::move(e));
  }

  // m * x_i / x_{max(m)} — the exchange move defining stability. Requires
  // a non-unit monomial and 1 <= i < max_index().
  Monomial exchange_down(int i) const {
    const int top = max_index();
    if (i < 1 || i >= top)
      throw std::invalid_argument("exchange_down: need 1 <= i < max_index");
    std::vector<int> e(exp_);
    --e[top - 1];
    ++e[i - 1];
    return Monomial(std::move(e));
  }

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

  // "x1^2*x3", "1" for the unit.
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= vars(); ++i) {
      const int e = exp_[i - 1];
      if (e == 0) continue;
      if (!first) os << "*";
      first = false;
      os << "x" << i;
      if (e > 1) os << "^" << e;
    }
    if (first) return "1";
    return os.str();
  }

 private:
  static int check_vars(int n) {
    if (n < 1) throw std::invalid_argument("Monomial: need at least one variable");
    return n;
  }
  static int check_index(int i, int n) {
    if (i < 1 || i > n) throw std::out_of_range("Monomial: variable index out of range");
    return i;
  }
  void check_same_ring(const Monomial& o) const {
    if (vars() != o.vars())
      throw std::invalid_argument("Monomial: mixed ambient rings");
  }

  std::vector<int> exp_;
};

enum class Ordering { less, equal, greater };

// Graded reverse lexicographic comparison: higher total degree wins; on equal
// degree m > m' iff the last nonzero entry of exp(m) - exp(m') is negative.
inline Ordering revlex_compare(const Monomial& a, const Monomial& b) {
  if (a.vars() != b.vars())
    throw std::invalid_argument("revlex_compare: mixed ambient rings");
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? Ordering::greater : Ordering::less;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  for (int i = a.vars() - 1; i >= 0; --i) {
    const int d = ea[i] - eb[i];
    if (d != 0) return d < 0 ? Ordering::greater : Ordering::less;
  }
  return Ordering::equal;
}

inline bool revlex_greater(const Monomial& a, const Monomial& b) {
  return revlex_compare(a, b) == Ordering::greater;
}

inline bool revlex_less(const Monomial& a, const Monomial& b) {
  return revlex_compare(a, b) == Ordering::less;
}

// Strict comparator for sorting into descending revlex order.
struct RevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return revlex_greater(a, b);
  }
};

// Visit the exponent vector of every monomial of total degree k in n
// variables. The buffer passed to the visitor is reused between calls.
template <class F>
void enumerate_exponents(int n, int k, F&& visit) {
  if (n < 1) throw std::invalid_argument("enumerate_exponents: need n >= 1");
  if (k < 0) return;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  const std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n - 1) {
      e[static_cast<std::size_t>(pos)] = remaining;
      visit(const_cast<const std::vector<int>&>(e));
      e[static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, k);
}

inline std::vector<Monomial> monomials_of_degree(int n, int k) {
  std::vector<Monomial> out;
  enumerate_exponents(n, k, [&](const std::vector<int>& e) { out.emplace_back(e); });
  std::sort(out.begin(), out.end(), RevlexGreater{});
  return out;
}

}  // namespace verolef
