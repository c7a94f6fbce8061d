#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cartan_weyl.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace demazure {

/// Weyl dimension formula prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
inline std::int64_t weyl_dimension(const CartanType& t, const Weight& lambda) {
  Rational d(1);
  Weight lr = lambda;
  for (auto& x : lr) x += 1;
  for (const auto& a : positive_roots(t))
    d *= Rational(weight_root_product(t, lr, a), weight_root_product(t, rho(t), a));
  if (!d.is_integer()) throw std::logic_error("Weyl dimension is not an integer");
  return d.num();
}

/// prod_{alpha > 0} (lambda, alpha) / (rho, alpha).
inline Rational weyl_volume(const CartanType& t, const Weight& lambda) {
  Rational d(1);
  for (const auto& a : positive_roots(t))
    d *= Rational(weight_root_product(t, lambda, a), weight_root_product(t, rho(t), a));
  return d;
}

using Character = std::map<Weight, std::int64_t>;

/// Isobaric Demazure operator pi_i on a formal character.
inline Character demazure_operator(const CartanType& t, const Character& ch, int i) {
  Character out;
  Weight a = simple_root_weight(t, i);
  auto shift = [&](const Weight& mu, std::int64_t k) {
    Weight r = mu;
    for (int j = 0; j < t.rank; ++j) r[j] += k * a[j];
    return r;
  };
  for (const auto& [mu, c] : ch) {
    std::int64_t m = mu[i - 1];
    if (m >= 0) {
      for (std::int64_t k = 0; k <= m; ++k) out[shift(mu, -k)] += c;
    } else if (m <= -2) {
      for (std::int64_t k = 1; k <= -m - 1; ++k) out[shift(mu, k)] -= c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// ch B_w(lambda) = pi_{a_1} ... pi_{a_l} e^lambda for a reduced word of w.
inline Character demazure_character(const WeylElement& w, const Weight& lambda) {
  Character ch{{lambda, 1}};
  Word a = reduced_word(w);
  for (auto it = a.rbegin(); it != a.rend(); ++it) ch = demazure_operator(w.type(), ch, *it);
  return ch;
}

inline std::int64_t character_dimension(const Character& ch) {
  std::int64_t s = 0;
  for (const auto& [mu, c] : ch) s += c;
  return s;
}

/// Polynomial in the fundamental weights omega_1..omega_n with rational coefficients.
class Poly {
public:
  using Exp = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}

  static Poly constant(int nvars, Rational c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Exp(nvars, 0)] = c;
    return p;
  }
  static Poly linear(const std::vector<Rational>& coef) {
    Poly p(static_cast<int>(coef.size()));
    for (std::size_t k = 0; k < coef.size(); ++k) {
      if (coef[k].is_zero()) continue;
      Exp e(coef.size(), 0);
      e[k] = 1;
      p.terms_[e] = coef[k];
    }
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Exp, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational constant_term() const {
    auto it = terms_.find(Exp(n_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto& v = terms_[e];
    v += c;
    if (v.is_zero()) terms_.erase(e);
  }

  friend Poly operator+(Poly a, const Poly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(std::max(a.n_, b.n_));
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exp e(r.n_, 0);
        for (int k = 0; k < r.n_; ++k) e[k] = ea[k] + eb[k];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend Poly operator*(const Rational& s, Poly a) {
    if (s.is_zero()) return Poly(a.n_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Substitute x_i -> l (a linear form), other variables fixed.
  Poly substitute(int i, const Poly& l) const {
    Poly r(n_);
    std::vector<Poly> powers{Poly::constant(n_, Rational(1))};
    for (const auto& [e, c] : terms_) {
      while (static_cast<int>(powers.size()) <= e[i]) powers.push_back(powers.back() * l);
      Exp rest = e;
      rest[i] = 0;
      Poly mono(n_);
      mono.terms_[rest] = c;
      r = r + mono * powers[e[i]];
    }
    return r;
  }

  /// Exact division by a linear form l whose x_i coefficient is nonzero.
  Poly divide_linear(const Poly& l, int i) const {
    Exp ei(n_, 0);
    ei[i] = 1;
    Rational li = l.terms_.at(ei);
    Poly rem = *this, quot(n_);
    while (true) {
      // pick a term with the largest power of x_i
      const Exp* best = nullptr;
      for (const auto& [e, c] : rem.terms_)
        if (e[i] > 0 && (!best || e[i] > (*best)[i])) best = &e;
      if (!best) break;
      Exp q = *best;
      q[i] -= 1;
      Rational qc = rem.terms_.at(*best) / li;
      Poly qp(n_);
      qp.terms_[q] = qc;
      quot = quot + qp;
      rem = rem - qp * l;
    }
    if (!rem.is_zero()) throw std::logic_error("polynomial is not divisible by the linear form");
    return quot;
  }

private:
  int n_ = 0;
  std::map<Exp, Rational> terms_;
};

/// Borel-presentation oracle: P_{w0} = prod alpha / |W| and
/// P_w = d_{w^{-1} w0} P_{w0} with d_i = (id - s_i) / alpha_i.
class BGGOracle {
public:
  explicit BGGOracle(CartanType t) : t_(t) {
    const int n = t.rank;
    auto c = cartan_matrix(t);
    for (int i = 1; i <= n; ++i) {
      std::vector<Rational> a(n), s(n);
      for (int j = 0; j < n; ++j) a[j] = c[j][i - 1];
      alpha_.push_back(Poly::linear(a));
      for (int j = 0; j < n; ++j) s[j] = (j == i - 1 ? Rational(1) : Rational(0)) - a[j];
      reflect_.push_back(Poly::linear(s));
    }
    elements_ = weyl_group_elements(t);
    Poly top = Poly::constant(n, Rational(1));
    for (const auto& r : positive_roots(t)) {
      std::vector<Rational> lin(n);
      for (int j = 0; j < n; ++j) {
        Rational v;
        for (int k = 0; k < n; ++k) v += Rational(c[j][k] * r[k]);
        lin[j] = v;
      }
      top = top * Poly::linear(lin);
    }
    top = Rational(1, static_cast<std::int64_t>(elements_.size())) * top;
    WeylElement w0 = longest_element(t);
    schubert_[w0] = top;
    for (auto it = elements_.rbegin(); it != elements_.rend(); ++it) {
      const auto& w = *it;
      if (!schubert_.count(w)) throw std::logic_error("BGG recursion order");
      for (int i = 1; i <= n; ++i) {
        if (!is_right_descent(w, i)) continue;
        WeylElement u = w * WeylElement::simple_reflection(t, i);
        if (!schubert_.count(u)) schubert_[u] = divided_difference(schubert_.at(w), i);
      }
    }
  }

  const CartanType& type() const { return t_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const Poly& schubert_polynomial(const WeylElement& w) const { return schubert_.at(w); }

  Poly apply_reflection(const Poly& f, int i) const { return f.substitute(i - 1, reflect_[i - 1]); }

  Poly divided_difference(const Poly& f, int i) const {
    Poly d = f - apply_reflection(f, i);
    return d.divide_linear(alpha_[i - 1], i - 1);
  }

  /// Integration: d_{w0} applied to the degree-N part.
  Rational integrate(const Poly& f) const {
    const int N = t_.num_positive_roots();
    Rational s;
    for (const auto& [e, c] : f.terms()) {
      int deg = 0;
      for (int x : e) deg += x;
      if (deg != N) continue;
      s += c * integrate_monomial(e);
    }
    return s;
  }

  /// Structure constants c_{u,v}^w with [X^u][X^v] = sum_w c_{u,v}^w [X^w].
  std::map<WeylElement, Rational> structure_constants(const WeylElement& u, const WeylElement& v) const {
    const int N = t_.num_positive_roots();
    int d = length(u) + length(v);
    std::map<WeylElement, Rational> out;
    if (d > N) return out;
    std::vector<WeylElement> targets, duals;
    for (const auto& w : elements_) {
      int l = length(w);
      if (l == d) targets.push_back(w);
      if (l == N - d) duals.push_back(w);
    }
    Poly prod = schubert_.at(u) * schubert_.at(v);
    // Solve sum_w c_w <P_w, P_w'> = <P_u P_v, P_w'> over the perfect pairing.
    std::vector<RatVec> gram(duals.size(), RatVec(targets.size()));
    RatVec rhs(duals.size());
    for (std::size_t r = 0; r < duals.size(); ++r) {
      const Poly& pd = schubert_.at(duals[r]);
      for (std::size_t c = 0; c < targets.size(); ++c) gram[r][c] = integrate(schubert_.at(targets[c]) * pd);
      rhs[r] = integrate(prod * pd);
    }
    if (rank_of(gram) != static_cast<int>(targets.size())) throw std::logic_error("degenerate pairing");
    auto sol = solve_linear(gram, rhs, static_cast<int>(targets.size()));
    if (!sol) throw std::logic_error("product is not in the span of Schubert classes");
    for (std::size_t c = 0; c < targets.size(); ++c)
      if (!(*sol)[c].is_zero()) out[targets[c]] = (*sol)[c];
    return out;
  }

  /// deg(X_w, L_lambda) = integral of [X_w] c_1(L_lambda)^{l(w)}.
  Rational schubert_degree(const WeylElement& w, const Weight& lambda) const {
    std::vector<Rational> lin(t_.rank);
    for (int j = 0; j < t_.rank; ++j) lin[j] = Rational(lambda[j]);
    Poly l = Poly::linear(lin), p = Poly::constant(t_.rank, Rational(1));
    for (int k = 0; k < length(w); ++k) p = p * l;
    return integrate(schubert_.at(longest_element(t_) * w) * p);
  }

private:
  Rational integrate_monomial(const Poly::Exp& e) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = monomial_integrals_.find(e);
      if (it != monomial_integrals_.end()) return it->second;
    }
    Poly p(t_.rank);
    p.add_term(e, Rational(1));
    Word w0 = reduced_word(longest_element(t_));
    for (auto it = w0.rbegin(); it != w0.rend(); ++it) p = divided_difference(p, *it);
    Rational r = p.constant_term();
    std::lock_guard<std::mutex> lock(mu_);
    monomial_integrals_[e] = r;
    return r;
  }

  CartanType t_;
  std::vector<Poly> alpha_, reflect_;
  std::vector<WeylElement> elements_;
  std::map<WeylElement, Poly> schubert_;
  mutable std::map<Poly::Exp, Rational> monomial_integrals_;
  mutable std::mutex mu_;
};

}  // namespace demazure
