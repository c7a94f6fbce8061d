#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace demazure {

enum class Family { A, C };

/// Cartan type of rank n. Type C uses the labeling in which node 1 is the
/// long simple root and the double bond joins nodes 1 and 2.
struct CartanType {
  Family family = Family::A;
  int rank = 1;

  int num_positive_roots() const { return family == Family::A ? rank * (rank + 1) / 2 : rank * rank; }
  std::string name() const { return (family == Family::A ? "A" : "C") + std::to_string(rank); }

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline CartanType make_type(char family, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (family == 'A' || family == 'a') return {Family::A, rank};
  if (family == 'C' || family == 'c') {
    if (rank < 2) throw std::invalid_argument("type C requires rank >= 2");
    return {Family::C, rank};
  }
  throw std::invalid_argument(std::string("unsupported Cartan family ") + family);
}

using Word = std::vector<int>;             // letters are 1-based node labels
using Weight = std::vector<std::int64_t>;  // coordinates in the fundamental weight basis
using RootCoords = std::vector<int>;       // coordinates in the simple root basis

/// c[i][j] = <alpha_j, h_i>, 0-based indices.
inline std::vector<std::vector<int>> cartan_matrix(const CartanType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  if (t.family == Family::C) c[1][0] = -2;
  return c;
}

/// Symmetrizer d_i = (alpha_i, alpha_i) / 2 with short roots of length 2.
inline std::vector<int> root_lengths(const CartanType& t) {
  std::vector<int> d(t.rank, 1);
  if (t.family == Family::C) d[0] = 2;
  return d;
}

inline Weight simple_root_weight(const CartanType& t, int i) {
  auto c = cartan_matrix(t);
  Weight w(t.rank);
  for (int k = 0; k < t.rank; ++k) w[k] = c[k][i - 1];
  return w;
}

inline Weight root_to_weight(const CartanType& t, const RootCoords& m) {
  auto c = cartan_matrix(t);
  Weight w(t.rank, 0);
  for (int k = 0; k < t.rank; ++k)
    for (int j = 0; j < t.rank; ++j) w[k] += static_cast<std::int64_t>(c[k][j]) * m[j];
  return w;
}

inline Weight rho(const CartanType& t) { return Weight(t.rank, 1); }

inline Weight fundamental_weight(const CartanType& t, int i) {
  Weight w(t.rank, 0);
  w[i - 1] = 1;
  return w;
}

inline std::vector<RootCoords> positive_roots(const CartanType& t) {
  auto c = cartan_matrix(t);
  const int n = t.rank;
  std::set<RootCoords> seen;
  std::vector<RootCoords> todo;
  for (int i = 0; i < n; ++i) {
    RootCoords r(n, 0);
    r[i] = 1;
    seen.insert(r);
    todo.push_back(r);
  }
  while (!todo.empty()) {
    RootCoords r = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      int pair = 0;
      for (int j = 0; j < n; ++j) pair += c[i][j] * r[j];
      RootCoords s = r;
      s[i] -= pair;
      bool positive = std::all_of(s.begin(), s.end(), [](int x) { return x >= 0; });
      if (positive && !seen.count(s)) {
        seen.insert(s);
        todo.push_back(s);
      }
    }
  }
  std::vector<RootCoords> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const RootCoords& a, const RootCoords& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  return out;
}

/// (lambda, alpha) for a weight lambda and a root alpha.
inline std::int64_t weight_root_product(const CartanType& t, const Weight& lambda, const RootCoords& alpha) {
  auto d = root_lengths(t);
  std::int64_t s = 0;
  for (int j = 0; j < t.rank; ++j) s += static_cast<std::int64_t>(alpha[j]) * d[j] * lambda[j];
  return s;
}

/// Express a weight in the simple root basis (rational coefficients).
inline std::vector<Rational> weight_to_root_basis(const CartanType& t, const Weight& mu) {
  auto c = cartan_matrix(t);
  const int n = t.rank;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = c[i][j];
    m[i][n] = mu[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (m[piv][col].is_zero()) ++piv;
    std::swap(m[piv], m[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col] / m[col][col];
      for (int k = col; k <= n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::vector<Rational> out(n);
  for (int i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

/// W-invariant form on weights, normalized so short roots have length 2.
inline Rational weight_inner_product(const CartanType& t, const Weight& lambda, const Weight& mu) {
  auto r = weight_to_root_basis(t, mu);
  auto d = root_lengths(t);
  Rational s;
  for (int j = 0; j < t.rank; ++j) s += r[j] * Rational(d[j] * lambda[j]);
  return s;
}

inline Weight reflect_weight(const CartanType& t, const Weight& lambda, int i) {
  Weight out = lambda;
  Weight a = simple_root_weight(t, i);
  for (int k = 0; k < t.rank; ++k) out[k] -= lambda[i - 1] * a[k];
  return out;
}

/// Element of the Weyl group as a (signed) permutation of the basis e_1, e_2, ...
/// Type A_n acts on e_1..e_{n+1} with alpha_i = e_i - e_{i+1}. Type C_n acts on
/// e_1..e_n with alpha_1 = 2 e_1 and alpha_i = e_i - e_{i-1} for i >= 2.
/// perm[k] = +-(m+1) means w(e_{k+1}) = +-e_{m+1}.
class WeylElement {
public:
  WeylElement() = default;
  explicit WeylElement(CartanType t) : type_(t) {
    int size = t.family == Family::A ? t.rank + 1 : t.rank;
    perm_.resize(size);
    for (int k = 0; k < size; ++k) perm_[k] = k + 1;
  }
  WeylElement(CartanType t, std::vector<int> perm) : type_(t), perm_(std::move(perm)) {
    int size = t.family == Family::A ? t.rank + 1 : t.rank;
    if (static_cast<int>(perm_.size()) != size) throw std::invalid_argument("permutation has wrong size");
    std::vector<bool> hit(size, false);
    for (int v : perm_) {
      int a = std::abs(v);
      if (a < 1 || a > size || hit[a - 1] || (t.family == Family::A && v < 0))
        throw std::invalid_argument("not a (signed) permutation");
      hit[a - 1] = true;
    }
  }

  static WeylElement simple_reflection(CartanType t, int i) {
    if (i < 1 || i > t.rank) throw std::invalid_argument("simple reflection index out of range");
    WeylElement w(t);
    if (t.family == Family::A) {
      std::swap(w.perm_[i - 1], w.perm_[i]);
    } else if (i == 1) {
      w.perm_[0] = -1;
    } else {
      std::swap(w.perm_[i - 2], w.perm_[i - 1]);
    }
    return w;
  }

  /// s_{a_1} s_{a_2} ... s_{a_k}
  static WeylElement from_word(CartanType t, const Word& word) {
    WeylElement w(t);
    for (int a : word) w = w * simple_reflection(t, a);
    return w;
  }

  const CartanType& type() const { return type_; }
  const std::vector<int>& perm() const { return perm_; }
  int size() const { return static_cast<int>(perm_.size()); }

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    WeylElement r(u.type_);
    for (int k = 0; k < v.size(); ++k) {
      int a = v.perm_[k];
      int img = u.perm_[std::abs(a) - 1];
      r.perm_[k] = a < 0 ? -img : img;
    }
    return r;
  }

  WeylElement inverse() const {
    WeylElement r(type_);
    for (int k = 0; k < size(); ++k) {
      int a = perm_[k];
      r.perm_[std::abs(a) - 1] = a < 0 ? -(k + 1) : k + 1;
    }
    return r;
  }

  std::vector<int> act(const std::vector<int>& v) const {
    std::vector<int> out(v.size(), 0);
    for (int k = 0; k < size(); ++k) {
      int a = perm_[k];
      out[std::abs(a) - 1] += a < 0 ? -v[k] : v[k];
    }
    return out;
  }

  bool is_identity() const {
    for (int k = 0; k < size(); ++k)
      if (perm_[k] != k + 1) return false;
    return true;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm_ < b.perm_; }

private:
  CartanType type_;
  std::vector<int> perm_;
};

inline std::vector<int> simple_root_vector(const CartanType& t, int i) {
  int size = t.family == Family::A ? t.rank + 1 : t.rank;
  std::vector<int> v(size, 0);
  if (t.family == Family::A) {
    v[i - 1] = 1;
    v[i] = -1;
  } else if (i == 1) {
    v[0] = 2;
  } else {
    v[i - 1] = 1;
    v[i - 2] = -1;
  }
  return v;
}

/// Sign of a root written in the e-basis.
inline bool root_vector_positive(const CartanType& t, const std::vector<int>& v) {
  if (t.family == Family::A) {
    for (int x : v)
      if (x != 0) return x > 0;
  } else {
    for (auto it = v.rbegin(); it != v.rend(); ++it)
      if (*it != 0) return *it > 0;
  }
  throw std::logic_error("zero vector is not a root");
}

inline std::vector<int> root_vector(const CartanType& t, const RootCoords& m) {
  std::vector<int> v(t.family == Family::A ? t.rank + 1 : t.rank, 0);
  for (int i = 1; i <= t.rank; ++i) {
    auto a = simple_root_vector(t, i);
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += m[i - 1] * a[k];
  }
  return v;
}

inline RootCoords root_coords_from_vector(const CartanType& t, const std::vector<int>& v) {
  const int n = t.rank;
  RootCoords m(n, 0);
  if (t.family == Family::A) {
    int s = 0;
    for (int i = 0; i < n; ++i) {
      s += v[i];
      m[i] = s;
    }
  } else {
    m[n - 1] = v[n - 1];
    for (int k = n - 2; k >= 1; --k) m[k] = v[k] + m[k + 1];
    int twice = v[0] + (n >= 2 ? m[1] : 0);
    if (twice % 2 != 0) throw std::invalid_argument("vector is not in the root lattice");
    m[0] = twice / 2;
  }
  return m;
}

inline int length(const WeylElement& w) {
  const auto& p = w.perm();
  const int m = w.size();
  int len = 0;
  if (w.type().family == Family::A) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (p[i] > p[j]) ++len;
    return len;
  }
  // positive roots e_j - e_i, e_i + e_j (i < j) and 2 e_i; a root is positive
  // when its last nonzero coordinate is.
  auto neg_sum = [&](int i, int si, int j, int sj) {
    // sign of the coefficient at the larger index of si*e_{|p_i|} + sj*e_{|p_j|}
    int a = std::abs(p[i]), b = std::abs(p[j]);
    int ci = si * (p[i] < 0 ? -1 : 1), cj = sj * (p[j] < 0 ? -1 : 1);
    return a > b ? ci < 0 : cj < 0;
  };
  for (int i = 0; i < m; ++i) {
    if (p[i] < 0) ++len;
    for (int j = i + 1; j < m; ++j) {
      if (neg_sum(i, -1, j, 1)) ++len;
      if (neg_sum(i, 1, j, 1)) ++len;
    }
  }
  return len;
}

/// True when l(s_i w) < l(w).
inline bool is_left_descent(const WeylElement& w, int i) {
  return !root_vector_positive(w.type(), w.inverse().act(simple_root_vector(w.type(), i)));
}

/// True when l(w s_i) < l(w).
inline bool is_right_descent(const WeylElement& w, int i) {
  return !root_vector_positive(w.type(), w.act(simple_root_vector(w.type(), i)));
}

/// A reduced word (a_1, ..., a_l) with w = s_{a_1} ... s_{a_l}; greedy in the
/// smallest left descent.
inline Word reduced_word(const WeylElement& w) {
  Word out;
  WeylElement x = w;
  while (!x.is_identity()) {
    for (int i = 1; i <= x.type().rank; ++i) {
      if (is_left_descent(x, i)) {
        out.push_back(i);
        x = WeylElement::simple_reflection(x.type(), i) * x;
        break;
      }
    }
  }
  return out;
}

inline bool is_reduced_word(const CartanType& t, const Word& word) {
  WeylElement x(t);
  for (int a : word) {
    if (is_right_descent(x, a)) return false;
    x = x * WeylElement::simple_reflection(t, a);
  }
  return true;
}

inline std::vector<Word> all_reduced_words(const WeylElement& w) {
  std::map<WeylElement, std::vector<Word>> memo;
  std::function<const std::vector<Word>&(const WeylElement&)> rec = [&](const WeylElement& x) -> const std::vector<Word>& {
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    std::vector<Word> words;
    if (x.is_identity()) {
      words.push_back({});
    } else {
      for (int i = 1; i <= x.type().rank; ++i) {
        if (!is_left_descent(x, i)) continue;
        for (const Word& tail : rec(WeylElement::simple_reflection(x.type(), i) * x)) {
          Word wd{i};
          wd.insert(wd.end(), tail.begin(), tail.end());
          words.push_back(std::move(wd));
        }
      }
    }
    return memo.emplace(x, std::move(words)).first->second;
  };
  std::vector<Word> out = rec(w);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<WeylElement> weyl_group_elements(const CartanType& t) {
  std::set<WeylElement> seen{WeylElement(t)};
  std::vector<WeylElement> order{WeylElement(t)};
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int i = 1; i <= t.rank; ++i) {
      WeylElement y = order[head] * WeylElement::simple_reflection(t, i);
      if (seen.insert(y).second) order.push_back(y);
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const WeylElement& a, const WeylElement& b) {
    return length(a) < length(b);
  });
  return order;
}

inline WeylElement longest_element(const CartanType& t) {
  if (t.family == Family::C) {
    std::vector<int> p(t.rank);
    for (int k = 0; k < t.rank; ++k) p[k] = -(k + 1);
    return WeylElement(t, p);
  }
  std::vector<int> p(t.rank + 1);
  for (int k = 0; k <= t.rank; ++k) p[k] = t.rank + 1 - k;
  return WeylElement(t, p);
}

/// The involution i -> i* with -w0(alpha_i) = alpha_{i*}.
inline int star(const CartanType& t, int i) {
  auto w0 = longest_element(t);
  auto v = w0.act(simple_root_vector(t, i));
  for (int& x : v) x = -x;
  auto m = root_coords_from_vector(t, v);
  for (int j = 0; j < t.rank; ++j)
    if (m[j] == 1) return j + 1;
  throw std::logic_error("star involution failed");
}

inline Weight act_on_weight(const WeylElement& w, const Weight& lambda) {
  Word word = reduced_word(w);
  Weight out = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = reflect_weight(w.type(), out, *it);
  return out;
}

/// Lower Bruhat interval [e, w], computed as the set of subword products of a
/// reduced word of w.
inline std::set<WeylElement> bruhat_lower_interval(const WeylElement& w) {
  std::set<WeylElement> cur{WeylElement(w.type())};
  for (int a : reduced_word(w)) {
    auto s = WeylElement::simple_reflection(w.type(), a);
    std::set<WeylElement> next = cur;
    for (const auto& x : cur) next.insert(x * s);
    cur = std::move(next);
  }
  return cur;
}

inline bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  return bruhat_lower_interval(w).count(v) > 0;
}

/// All increasing position tuples (1-based) k with (word_{k_1}, ..., word_{k_l})
/// a reduced word for w, in lexicographic order.
inline std::vector<std::vector<int>> compatible_subsets(const CartanType& t, const Word& word, const WeylElement& w) {
  const int target = length(w);
  const int len = static_cast<int>(word.size());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, const WeylElement&)> rec = [&](int start, const WeylElement& x) {
    int depth = static_cast<int>(cur.size());
    if (depth == target) {
      if (x == w) out.push_back(cur);
      return;
    }
    for (int p = start; p < len && len - p >= target - depth; ++p) {
      int a = word[p];
      if (is_right_descent(x, a)) continue;
      WeylElement y = x * WeylElement::simple_reflection(t, a);
      // y must remain a prefix of w: l(y^{-1} w) = l(w) - l(y)
      if (length(y.inverse() * w) != target - depth - 1) continue;
      cur.push_back(p + 1);
      rec(p + 1, y);
      cur.pop_back();
    }
  };
  rec(0, WeylElement(t));
  return out;
}

/// Canonical reduced words of w0.
inline Word i_A(int n) {
  Word w;
  for (int k = 1; k <= n; ++k)
    for (int j = k; j >= 1; --j) w.push_back(j);
  return w;
}

inline Word i_C(int n) {
  Word w;
  for (int k = 1; k <= n; ++k) {
    for (int j = k; j >= 1; --j) w.push_back(j);
    for (int j = 2; j <= k; ++j) w.push_back(j);
  }
  return w;
}

inline Word canonical_word(const CartanType& t) { return t.family == Family::A ? i_A(t.rank) : i_C(t.rank); }

inline std::string word_string(const Word& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s;
}

}  // namespace demazure
