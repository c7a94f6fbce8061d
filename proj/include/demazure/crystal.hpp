#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "cartan_weyl.hpp"

namespace demazure {

using Coords = std::vector<std::int64_t>;
using CoordSet = std::set<Coords>;

/// Thrown when the word is too short for an operator on Z^infinity.
struct InsufficientWord : std::domain_error {
  using std::domain_error::domain_error;
};

/// Kashiwara's realization of B(infinity) on Z^N attached to a word j, and of
/// B(lambda) as the component of B(infinity) (x) T_lambda (x) C through the
/// zero vector. Elements are stored in these realization coordinates; the
/// string parametrization with respect to the same word is obtained with
/// `string_datum`.
class StringCrystal {
public:
  StringCrystal(CartanType t, Word word) : type_(t), word_(std::move(word)), c_(cartan_matrix(t)) {
    for (int a : word_)
      if (a < 1 || a > t.rank) throw std::invalid_argument("word letter out of range");
  }

  const CartanType& type() const { return type_; }
  const Word& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }

  /// sigma_k(a) = a_k + sum_{l > k} <alpha_{j_l}, h_{j_k}> a_l, k is 1-based.
  std::int64_t sigma(const Coords& a, int k) const {
    std::int64_t s = a[k - 1];
    int jk = word_[k - 1] - 1;
    for (int l = k; l < size(); ++l) s += c_[jk][word_[l] - 1] * a[l];
    return s;
  }

  /// sigma^(i) = max over positions carrying letter i, with the implicit
  /// positions beyond the word contributing 0.
  std::int64_t sigma_max(const Coords& a, int i) const {
    std::int64_t m = 0;
    for (int k = 1; k <= size(); ++k)
      if (word_[k - 1] == i) m = std::max(m, sigma(a, k));
    return m;
  }

  std::int64_t epsilon(const Coords& a, int i) const { return sigma_max(a, i); }

  /// <wt(b), h_i> for wt(b) = -sum a_k alpha_{j_k} in B(infinity).
  std::int64_t weight_pairing(const Coords& a, int i) const {
    std::int64_t s = 0;
    for (int k = 0; k < size(); ++k) s -= c_[i - 1][word_[k] - 1] * a[k];
    return s;
  }

  Weight weight(const Coords& a, const Weight& lambda) const {
    Weight w = lambda;
    for (int i = 1; i <= type_.rank; ++i) w[i - 1] += weight_pairing(a, i);
    return w;
  }

  std::int64_t phi_infinity(const Coords& a, int i) const { return epsilon(a, i) + weight_pairing(a, i); }

  std::int64_t phi(const Coords& a, int i, const Weight& lambda) const {
    return epsilon(a, i) + lambda[i - 1] + weight_pairing(a, i);
  }

  std::optional<Coords> f_infinity(const Coords& a, int i) const {
    std::int64_t m = sigma_max(a, i);
    for (int k = 1; k <= size(); ++k) {
      if (word_[k - 1] == i && sigma(a, k) == m) {
        Coords b = a;
        ++b[k - 1];
        return b;
      }
    }
    throw InsufficientWord("f_" + std::to_string(i) + " acts beyond the end of the word");
  }

  std::optional<Coords> e_infinity(const Coords& a, int i) const {
    std::int64_t m = sigma_max(a, i);
    if (m <= 0) return std::nullopt;
    for (int k = size(); k >= 1; --k) {
      if (word_[k - 1] == i && sigma(a, k) == m) {
        Coords b = a;
        --b[k - 1];
        return b;
      }
    }
    throw std::logic_error("sigma maximum not attained");
  }

  std::optional<Coords> f(const Coords& a, int i, const Weight& lambda) const {
    if (phi(a, i, lambda) <= 0) return std::nullopt;
    return f_infinity(a, i);
  }

  std::optional<Coords> e(const Coords& a, int i) const { return e_infinity(a, i); }

  Coords highest() const { return Coords(size(), 0); }

  /// String parametrization with respect to the crystal's own word:
  /// a_1 = eps_{j_1}(b), then apply e_{j_1}^{a_1}, and so on.
  Coords string_datum(const Coords& b) const {
    Coords out(size(), 0);
    Coords x = b;
    for (int k = 0; k < size(); ++k) {
      int i = word_[k];
      while (auto y = e(x, i)) {
        x = std::move(*y);
        ++out[k];
      }
    }
    if (x != highest()) throw InsufficientWord("string parametrization did not reach the highest element");
    return out;
  }

  /// All of B(lambda), as realization coordinates.
  CoordSet generate(const Weight& lambda) const {
    check_weight(lambda);
    CoordSet seen{highest()};
    std::deque<Coords> todo{highest()};
    while (!todo.empty()) {
      Coords x = todo.front();
      todo.pop_front();
      for (int i = 1; i <= type_.rank; ++i)
        if (auto y = f(x, i, lambda))
          if (seen.insert(*y).second) todo.push_back(*y);
    }
    return seen;
  }

  CoordSet f_closure(const CoordSet& s, int i, const Weight& lambda) const {
    CoordSet out = s;
    for (const auto& x0 : s) {
      Coords x = x0;
      while (auto y = f(x, i, lambda)) {
        x = *y;
        out.insert(x);
      }
    }
    return out;
  }

  CoordSet e_closure(const CoordSet& s, int i) const {
    CoordSet out = s;
    for (const auto& x0 : s) {
      Coords x = x0;
      while (auto y = e(x, i)) {
        x = *y;
        out.insert(x);
      }
    }
    return out;
  }

  /// B_w(lambda) = union of f_{a_1}^* ... f_{a_l}^* b_lambda for any reduced
  /// word (a_1, ..., a_l) of w.
  CoordSet demazure(const WeylElement& w, const Weight& lambda, std::optional<Word> wd = std::nullopt) const {
    check_weight(lambda);
    Word a = wd ? *wd : reduced_word(w);
    CoordSet s{highest()};
    for (auto it = a.rbegin(); it != a.rend(); ++it) s = f_closure(s, *it, lambda);
    return s;
  }

  Coords lowest(const Weight& lambda) const { return lowest_in(generate(lambda), lambda); }

  Coords lowest_in(const CoordSet& all, const Weight& lambda) const {
    std::optional<Coords> low;
    for (const auto& x : all) {
      bool is_low = true;
      for (int i = 1; i <= type_.rank && is_low; ++i) is_low = !f(x, i, lambda).has_value();
      if (is_low) {
        if (low) throw std::logic_error("B(lambda) has two lowest elements");
        low = x;
      }
    }
    if (!low) throw std::logic_error("B(lambda) has no lowest element");
    return *low;
  }

  /// B^w(lambda), grown from the lowest element by e-closures along a reduced
  /// word of w0 w^{-1}.
  CoordSet opposite_demazure(const WeylElement& w, const Weight& lambda) const {
    return opposite_demazure_from(lowest(lambda), w);
  }

  CoordSet opposite_demazure_from(const Coords& low, const WeylElement& w) const {
    WeylElement u = longest_element(type_) * w.inverse();
    CoordSet s{low};
    for (int b : reduced_word(u)) s = e_closure(s, b);
    return s;
  }

  CoordSet to_string_data(const CoordSet& s) const {
    CoordSet out;
    for (const auto& x : s) out.insert(string_datum(x));
    return out;
  }

  /// Omega_{i,lambda}: t'_k = <lambda, h_{i_k}> - t_k - sum_{j > k} c_{i_k, i_j} t_j.
  Coords lusztig_transform(const Coords& t, const Weight& lambda) const {
    Coords out(size());
    for (int k = 0; k < size(); ++k) {
      std::int64_t v = lambda[word_[k] - 1] - t[k];
      for (int j = k + 1; j < size(); ++j) v -= c_[word_[k] - 1][word_[j] - 1] * t[j];
      out[k] = v;
    }
    return out;
  }

private:
  void check_weight(const Weight& lambda) const {
    if (static_cast<int>(lambda.size()) != type_.rank) throw std::invalid_argument("weight has wrong rank");
    for (auto x : lambda)
      if (x < 0) throw std::invalid_argument("weight must be dominant");
  }

  CartanType type_;
  Word word_;
  std::vector<std::vector<int>> c_;
};

inline CoordSet set_intersection(const CoordSet& a, const CoordSet& b) {
  CoordSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// Phi_i images of B(lambda), B_w(lambda), B^w(lambda) and their intersection,
/// computed with one crystal generation.
struct DemazureData {
  CoordSet all;  // realization coordinates of B(lambda)
  Coords low;
};

inline DemazureData prepare(const StringCrystal& cr, const Weight& lambda) {
  DemazureData d;
  d.all = cr.generate(lambda);
  d.low = cr.lowest_in(d.all, lambda);
  return d;
}

}  // namespace demazure
