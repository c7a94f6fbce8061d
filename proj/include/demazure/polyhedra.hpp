#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "cartan_weyl.hpp"
#include "polytope.hpp"

namespace demazure {

/// Every polytope family below lists 2N halfspaces: indices 0..N-1 are the
/// facets F_1..F_N (lambda-bounds for string polytopes, dual Kogan faces for
/// GT / SGT), indices N..2N-1 are F^v_1..F^v_N (string cone facets, Kogan
/// faces).
enum class FacetFamily { Dual, Kogan };

inline int facet_index(int N, FacetFamily fam, int k) { return fam == FacetFamily::Dual ? k - 1 : N + k - 1; }

inline std::vector<int> facet_indices(int N, FacetFamily fam, const std::vector<int>& ks) {
  std::vector<int> out;
  for (int k : ks) out.push_back(facet_index(N, fam, k));
  return out;
}

namespace detail {

/// Affine expression in the coordinates: sum coef[k] x_k + constant.
struct Affine {
  std::map<int, std::int64_t> coef;
  std::int64_t constant = 0;
  std::string name;

  static Affine var(int idx, std::string name) {
    Affine a;
    a.coef[idx] = 1;
    a.name = std::move(name);
    return a;
  }
  static Affine constant_of(std::int64_t c, std::string name) {
    Affine a;
    a.constant = c;
    a.name = std::move(name);
    return a;
  }
};

/// Halfspace for hi + shift >= lo, labelled by the equation "lhs = rhs".
inline Halfspace geq(int N, const Affine& hi, const Affine& lo, std::int64_t shift, const std::string& label) {
  Halfspace h;
  h.normal.assign(N, 0);
  for (auto [k, c] : lo.coef) h.normal[k] += c;
  for (auto [k, c] : hi.coef) h.normal[k] -= c;
  h.offset = hi.constant + shift - lo.constant;
  h.label = label;
  return h;
}

inline std::string sym(char letter, int k, int l) {
  return std::string(1, letter) + "_" + std::to_string(k) + "^(" + std::to_string(l) + ")";
}

}  // namespace detail

/// String cone facets F^v_1..F^v_N for the canonical word (i_A or i_C).
/// Each block of the word carries a decreasing chain c_1 >= c_2 >= ... >= 0.
inline std::vector<Halfspace> string_cone(const CartanType& t) {
  const int n = t.rank, N = t.num_positive_roots();
  std::vector<Halfspace> out;
  auto ge = [&](int hi, int lo, std::string label) {
    Halfspace h;
    h.normal.assign(N, 0);
    h.normal[hi] -= 1;
    if (lo >= 0) h.normal[lo] += 1;
    h.offset = 0;
    h.label = std::move(label);
    out.push_back(std::move(h));
  };
  auto name = [&](int idx) { return "a_" + std::to_string(idx + 1); };
  if (t.family == Family::A) {
    for (int g = 1; g <= n; ++g) {
      int s = g * (g - 1) / 2;
      for (int tt = 1; tt <= g; ++tt) {
        int hi = s + g - tt;        // c_{g-t+1}
        int lo = tt == 1 ? -1 : s + g - tt + 1;  // c_{g-t+2}, or 0
        ge(hi, lo, name(hi) + " = " + (lo < 0 ? "0" : name(lo)));
      }
    }
  } else {
    for (int g = 1; g <= n; ++g) {
      int s = (g - 1) * (g - 1);
      for (int tt = 1; tt <= 2 * g - 1; ++tt) {
        int hi = s + tt - 1;
        int lo = tt == 2 * g - 1 ? -1 : s + tt;
        ge(hi, lo, name(hi) + " = " + (lo < 0 ? "0" : name(lo)));
      }
    }
  }
  return out;
}

/// Linear equation a_k = <lambda, h_i> + sum coef_j a_j describing a lambda-bound facet.
struct LambdaBound {
  int position = 0;              // k, 1-based
  int letter = 0;                // i = i_k
  std::map<int, int> coef;       // j (1-based) -> coefficient
};

/// The facets a_k <= <lambda, h_{i_k}> - sum_{j > k} c_{i_k, i_j} a_j for any word.
inline std::vector<LambdaBound> lambda_bounds(const CartanType& t, const Word& w) {
  auto c = cartan_matrix(t);
  std::vector<LambdaBound> out;
  for (int k = 0; k < static_cast<int>(w.size()); ++k) {
    LambdaBound b;
    b.position = k + 1;
    b.letter = w[k];
    for (int j = k + 1; j < static_cast<int>(w.size()); ++j) {
      int v = -c[w[k] - 1][w[j] - 1];
      if (v != 0) b.coef[j + 1] = v;
    }
    out.push_back(std::move(b));
  }
  return out;
}

inline std::string equation_string(const LambdaBound& b) {
  std::string s = "a_" + std::to_string(b.position) + " = <lambda,h_" + std::to_string(b.letter) + ">";
  for (auto [j, v] : b.coef) {
    s += v > 0 ? " + " : " - ";
    if (std::abs(v) != 1) s += std::to_string(std::abs(v));
    s += "a_" + std::to_string(j);
  }
  return s;
}

inline Halfspace lambda_bound_halfspace(const LambdaBound& b, int N, const Weight& lambda) {
  Halfspace h;
  h.normal.assign(N, 0);
  h.normal[b.position - 1] = 1;
  for (auto [j, v] : b.coef) h.normal[j - 1] -= v;
  h.offset = lambda[b.letter - 1];
  h.label = equation_string(b);
  return h;
}

/// Delta_i(lambda) for the canonical word: lambda-bounds then cone facets.
inline PolytopePtr string_polytope(const CartanType& t, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != t.rank) throw std::invalid_argument("weight has wrong rank");
  const int N = t.num_positive_roots();
  std::vector<Halfspace> hs;
  for (const auto& b : lambda_bounds(t, canonical_word(t))) hs.push_back(lambda_bound_halfspace(b, N, lambda));
  for (auto& h : string_cone(t)) hs.push_back(std::move(h));
  return std::make_shared<Polytope>(N, std::move(hs));
}

/// Deformation parameters. Type A: eps = (eps_2, ..., eps_n), eps_1 = 0.
/// Type C: eps = (eps_2, ..., eps_n) and eps_prime = (eps'_1, ..., eps'_n) with eps'_1 = 0.
struct Deformation {
  std::vector<std::int64_t> eps;
  std::vector<std::int64_t> eps_prime;

  bool zero() const {
    for (auto e : eps)
      if (e) return false;
    for (auto e : eps_prime)
      if (e) return false;
    return true;
  }
};

inline Deformation default_deformation(const CartanType& t) {
  Deformation d;
  const int n = t.rank;
  if (t.family == Family::A) {
    for (int i = 2; i <= n; ++i) d.eps.push_back(i - 1);
  } else {
    for (int i = 2; i <= n; ++i) d.eps.push_back(2 * i - 3);
    for (int i = 1; i <= n; ++i) d.eps_prime.push_back(2 * (i - 1));
  }
  return d;
}

inline void validate_deformation(const CartanType& t, const Deformation& d, bool strict) {
  const int n = t.rank;
  if (static_cast<int>(d.eps.size()) != n - 1) throw std::invalid_argument("deformation needs n-1 entries eps_2..eps_n");
  auto bad = [&](std::int64_t a, std::int64_t b) { return strict ? !(a < b) : !(a <= b); };
  if (t.family == Family::A) {
    std::int64_t prev = 0;
    for (auto e : d.eps) {
      if (bad(prev, e)) throw std::invalid_argument("deformation parameters must increase from eps_1 = 0");
      prev = e;
    }
    return;
  }
  if (static_cast<int>(d.eps_prime.size()) != n) throw std::invalid_argument("deformation needs eps'_1..eps'_n");
  if (d.eps_prime[0] != 0) throw std::invalid_argument("eps'_1 must be 0");
  std::int64_t prev = 0;
  for (int i = 2; i <= n; ++i) {
    if (bad(prev, d.eps[i - 2]) || bad(d.eps[i - 2], d.eps_prime[i - 1]))
      throw std::invalid_argument("deformation parameters must follow 0 = eps'_1 < eps_2 < eps'_2 < ... < eps'_n");
    prev = d.eps_prime[i - 1];
  }
}

inline std::int64_t max_deformation(const Deformation& d) {
  std::int64_t m = 0;
  for (auto e : d.eps) m = std::max(m, e);
  for (auto e : d.eps_prime) m = std::max(m, e);
  return m;
}

/// Gelfand-Tsetlin polytope of type A_n (deformed when d is nonzero).
/// Coordinates follow the block order (a_1^(1), a_1^(2), a_2^(1), a_1^(3), ...).
inline PolytopePtr gt_polytope(int n, const Weight& lambda, const Deformation& d = {}) {
  using detail::Affine;
  using detail::sym;
  const int N = n * (n + 1) / 2;
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("weight has wrong rank");
  auto eps = [&](int i) -> std::int64_t {  // eps_i, 1-based
    if (d.eps.empty() || i == 1) return 0;
    return d.eps.at(i - 2);
  };
  auto a = [&](int k, int l) -> Affine {
    if (l == 0) {
      std::int64_t s = 0;
      for (int m = k; m <= n; ++m) s += lambda[m - 1];
      return Affine::constant_of(k > n ? 0 : s, sym('a', k, l));
    }
    int g = k + l - 1;
    return Affine::var(g * (g - 1) / 2 + k - 1, sym('a', k, l));
  };
  std::vector<Halfspace> hs;
  for (int g = 1; g <= n; ++g) {
    int l = n - g + 1;
    for (int m = g; m >= 1; --m) {
      auto hi = a(m, l), lo = a(m + 1, l - 1);
      hs.push_back(detail::geq(N, hi, lo, 0, lo.name + " = " + hi.name));
    }
  }
  for (int g = 1; g <= n; ++g) {
    int l = n - g;
    for (int m = 1; m <= g; ++m) {
      auto hi = a(m, l), lo = a(m, l + 1);
      hs.push_back(detail::geq(N, hi, lo, eps(l + 1), hi.name + " = " + lo.name));
    }
  }
  return std::make_shared<Polytope>(N, std::move(hs));
}

/// Symplectic Gelfand-Tsetlin polytope of type C_n (deformed when d is nonzero).
/// Coordinates follow the block order (a_1^(1), b_1^(2), a_2^(1), a_1^(2), ...).
inline PolytopePtr sgt_polytope(int n, const Weight& lambda, const Deformation& d = {}) {
  using detail::Affine;
  using detail::sym;
  const int N = n * n;
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("weight has wrong rank");
  auto eps = [&](int i) -> std::int64_t { return d.eps.empty() || i == 1 ? 0 : d.eps.at(i - 2); };
  auto epsp = [&](int i) -> std::int64_t { return d.eps_prime.empty() ? 0 : d.eps_prime.at(i - 1); };
  auto b = [&](int k, int l) -> Affine {
    if (l == 1) {
      std::int64_t s = 0;
      for (int m = 1; m <= n - k + 1; ++m) s += lambda[m - 1];
      return Affine::constant_of(k > n ? 0 : s, sym('b', k, l));
    }
    if (l > n || k >= n - l + 2) return Affine::constant_of(0, sym('b', k, l));
    int g = k + l - 1;
    return Affine::var((g - 1) * (g - 1) + k - 1, sym('b', k, l));
  };
  auto a = [&](int k, int l) -> Affine {
    int g = k + l - 1;
    return Affine::var((g - 1) * (g - 1) + 2 * g - k - 1, sym('a', k, l));
  };
  std::vector<Halfspace> hs;
  for (int l = n; l >= 1; --l) {
    for (int j = 1; j <= n - l + 1; ++j) {
      auto hi = a(j, l), lo = b(j, l + 1);
      std::int64_t shift = j <= n - l ? eps(l + 1) : 0;
      std::string label = l == n ? sym('b', 2, n) + " = " + hi.name : hi.name + " = " + lo.name;
      hs.push_back(detail::geq(N, hi, lo, shift, label));
    }
    for (int m = n - l + 1; m >= 2; --m) {
      auto hi = a(m - 1, l), lo = b(m, l);
      hs.push_back(detail::geq(N, hi, lo, 0, lo.name + " = " + hi.name));
    }
  }
  for (int l = n; l >= 1; --l) {
    for (int k = 2; k <= n - l + 1; ++k) {
      auto hi = b(k - 1, l + 1), lo = a(k, l);
      hs.push_back(detail::geq(N, hi, lo, 0, lo.name + " = " + hi.name));
    }
    for (int k = n - l + 1; k >= 1; --k) {
      auto hi = b(k, l), lo = a(k, l);
      hs.push_back(detail::geq(N, hi, lo, epsp(l), hi.name + " = " + lo.name));
    }
  }
  return std::make_shared<Polytope>(N, std::move(hs));
}

/// GT (type A) or SGT (type C) polytope, deformed when d is nonzero.
inline PolytopePtr gt_family_polytope(const CartanType& t, const Weight& lambda, const Deformation& d = {}) {
  return t.family == Family::A ? gt_polytope(t.rank, lambda, d) : sgt_polytope(t.rank, lambda, d);
}

/// Scale lambda so every coefficient is at least N * max(eps); keeps the
/// deformed polytope simple.
inline Weight auto_scaled_weight(const CartanType& t, const Deformation& d, const Weight& lambda) {
  std::int64_t need = static_cast<std::int64_t>(t.num_positive_roots()) * std::max<std::int64_t>(1, max_deformation(d));
  std::int64_t mn = INT64_MAX;
  for (auto x : lambda) mn = std::min(mn, x);
  if (mn <= 0) throw std::invalid_argument("deformed polytopes need a regular dominant weight");
  std::int64_t factor = (need + mn - 1) / mn;
  Weight out = lambda;
  for (auto& x : out) x *= std::max<std::int64_t>(1, factor);
  return out;
}

}  // namespace demazure
