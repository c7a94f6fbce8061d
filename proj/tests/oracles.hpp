#pragma once

// Brute-force reference computations used by the tests. They avoid the
// library's Weyl group, polytope and crystal code paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Signed permutation of {±1, ..., ±n} as the images of e_1..e_n.
using Signed = std::vector<int>;

/// Right multiplication by s_i in one-line notation. Type A (S_{n+1} on n+1 letters): s_i swaps i, i+1.
/// Type C: s_1 negates e_1, s_i swaps e_{i-1}, e_i.
inline Signed apply_letter(char family, Signed p, int i) {
  if (family == 'A') {
    std::swap(p[i - 1], p[i]);
  } else if (i == 1) {
    p[0] = -p[0];
  } else {
    std::swap(p[i - 2], p[i - 1]);
  }
  return p;
}

inline Signed identity(char family, int n) {
  Signed p(family == 'A' ? n + 1 : n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

/// Product s_{a_1} ... s_{a_k} as a one-line list of positions.
inline Signed word_product(char family, int n, const std::vector<int>& word) {
  Signed p = identity(family, n);
  for (int a : word) p = apply_letter(family, p, a);
  return p;
}

/// Number of inversions (type A) or of positive roots made negative (type C).
inline int length(char family, const Signed& p) {
  const int m = static_cast<int>(p.size());
  int l = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (family == 'A') {
        l += p[i] > p[j] ? 1 : 0;
      } else {
        l += p[i] > p[j] ? 1 : 0;   // e_j - e_i
        l += -p[i] > p[j] ? 1 : 0;  // e_j + e_i
      }
    }
  if (family == 'C')
    for (int i = 0; i < m; ++i) l += p[i] < 0 ? 1 : 0;
  return l;
}

inline bool is_reduced(char family, int n, const std::vector<int>& word) {
  return length(family, word_product(family, n, word)) == static_cast<int>(word.size());
}

/// Tableau criterion for the Bruhat order on S_{n+1}.
inline bool bruhat_leq_A(const Signed& u, const Signed& w) {
  const int m = static_cast<int>(u.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> a(u.begin(), u.begin() + k), b(w.begin(), w.begin() + k);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int i = 0; i < k; ++i)
      if (a[i] > b[i]) return false;
  }
  return true;
}

/// Weyl dimension formula in the e-coordinates. Type A: lambda = sum c_i omega_i
/// gives the partition mu_j = c_j + ... + c_n. Type C: omega_i = e_i + ... + e_n.
/// prod_{alpha > 0} (lambda + shift * rho, alpha) / (rho, alpha) as a reduced
/// fraction, in e-coordinates. shift = 1 gives the Weyl dimension formula,
/// shift = 0 the normalized volume of the string polytope.
inline std::pair<std::int64_t, std::int64_t> weyl_product(char family, const std::vector<std::int64_t>& c, int shift) {
  const int n = static_cast<int>(c.size());
  std::vector<std::int64_t> mu(family == 'A' ? n + 1 : n, 0), rho(mu.size());
  if (family == 'A') {
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) mu[j] += c[k];
    for (int j = 0; j <= n; ++j) rho[j] = n - j;
  } else {
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= j; ++i) mu[j] += c[i];
    for (int j = 0; j < n; ++j) rho[j] = j + 1;
  }
  __int128 num = 1, den = 1;
  auto factor = [&](std::int64_t a, std::int64_t b) {
    num *= a;
    den *= b;
  };
  const int m = static_cast<int>(mu.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (family == 'A') {
        factor(mu[i] - mu[j] + shift * (rho[i] - rho[j]), rho[i] - rho[j]);
      } else {
        factor(mu[j] - mu[i] + shift * (rho[j] - rho[i]), rho[j] - rho[i]);
        factor(mu[j] + mu[i] + shift * (rho[j] + rho[i]), rho[j] + rho[i]);
      }
    }
  if (family == 'C')
    for (int i = 0; i < m; ++i) factor(mu[i] + shift * rho[i], rho[i]);
  __int128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  if (a == 0) return {0, 1};
  return {static_cast<std::int64_t>(num / a), static_cast<std::int64_t>(den / a)};
}

inline std::int64_t weyl_dimension(char family, const std::vector<std::int64_t>& c) {
  auto [num, den] = weyl_product(family, c, 1);
  return num / den;
}

}  // namespace oracle

namespace oracle {

/// Monk's rule in S_{n+1}: the permutations w t_{ab} with a <= r < b and
/// length one more than w, as one-line lists.
inline std::set<Signed> monk(const Signed& w, int r) {
  std::set<Signed> out;
  const int m = static_cast<int>(w.size());
  for (int a = 1; a <= r; ++a)
    for (int b = r + 1; b <= m; ++b) {
      Signed v = w;
      std::swap(v[a - 1], v[b - 1]);
      if (length('A', v) == length('A', w) + 1) out.insert(v);
    }
  return out;
}

}  // namespace oracle
