#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cartan_weyl.hpp"

namespace demazure {

using Box = std::pair<int, int>;  // (row, column), 1-based

/// Box arrangements of the staircase Y_n (type A) or the skew shape SY_n
/// (type C). `first` orders the boxes for k_D (and, in type C, also for
/// k'_D); `second` is the type A arrangement used for k'_D.
class PipeShape {
public:
  explicit PipeShape(CartanType t) : type_(t), n_(t.rank) {
    word_ = canonical_word(t);
    if (t.family == Family::A) {
      for (int r = n_; r >= 1; --r) {
        for (int c = 1; c <= n_ - r + 1; ++c) first_.push_back({r, c});
        for (int c = n_ - r + 1; c >= 1; --c) second_.push_back({r, c});
      }
    } else {
      for (int r = n_; r >= 1; --r)
        for (int c = 2 * n_ - r; c >= r; --c) first_.push_back({r, c});
      second_ = first_;
    }
    if (first_.size() > 64) throw std::invalid_argument("rank too large for pipe dreams");
    for (int k = 0; k < size(); ++k) index_[first_[k]] = k;
  }

  const CartanType& type() const { return type_; }
  int rank() const { return n_; }
  int size() const { return static_cast<int>(first_.size()); }
  const Word& word() const { return word_; }
  const std::vector<Box>& first() const { return first_; }
  const std::vector<Box>& second() const { return second_; }

  bool in_shape(int r, int c) const { return index_.count({r, c}) > 0; }
  int index(int r, int c) const {
    auto it = index_.find({r, c});
    if (it == index_.end()) throw std::out_of_range("box outside the shape");
    return it->second;
  }

private:
  CartanType type_;
  int n_;
  Word word_;
  std::vector<Box> first_, second_;
  std::map<Box, int> index_;
};

using ShapePtr = std::shared_ptr<const PipeShape>;

inline ShapePtr make_shape(CartanType t) { return std::make_shared<PipeShape>(t); }

/// A subset of Y_n or SY_n, stored as a bitmask over the first arrangement.
class PipeDream {
public:
  PipeDream() = default;
  explicit PipeDream(ShapePtr s, std::uint64_t mask = 0) : shape_(std::move(s)), mask_(mask) {}

  static PipeDream full(ShapePtr s) {
    std::uint64_t m = s->size() == 64 ? ~0ULL : ((1ULL << s->size()) - 1);
    return PipeDream(std::move(s), m);
  }

  static PipeDream from_boxes(ShapePtr s, const std::vector<Box>& boxes) {
    PipeDream d(s);
    for (auto [r, c] : boxes) d.insert(r, c);
    return d;
  }

  const ShapePtr& shape() const { return shape_; }
  std::uint64_t mask() const { return mask_; }

  bool contains(int r, int c) const {
    if (!shape_->in_shape(r, c)) return false;
    return (mask_ >> shape_->index(r, c)) & 1ULL;
  }
  void insert(int r, int c) { mask_ |= 1ULL << shape_->index(r, c); }
  void erase(int r, int c) { mask_ &= ~(1ULL << shape_->index(r, c)); }

  int count() const { return __builtin_popcountll(mask_); }

  std::vector<Box> boxes() const {
    std::vector<Box> out;
    for (int k = 0; k < shape_->size(); ++k)
      if ((mask_ >> k) & 1ULL) out.push_back(shape_->first()[k]);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Positions (1-based, first arrangement) of the boxes in D.
  std::vector<int> k_D() const {
    std::vector<int> out;
    for (int k = 0; k < shape_->size(); ++k)
      if ((mask_ >> k) & 1ULL) out.push_back(k + 1);
    return out;
  }

  /// Positions (1-based) of the boxes outside D, in the second arrangement for
  /// type A and the single arrangement for type C.
  std::vector<int> k_prime_D() const {
    std::vector<int> out;
    const auto& arr = shape_->second();
    for (int k = 0; k < shape_->size(); ++k)
      if (!contains(arr[k].first, arr[k].second)) out.push_back(k + 1);
    return out;
  }

  /// Letters of the canonical word at k_D.
  Word face_word() const {
    Word w;
    for (int k : k_D()) w.push_back(shape_->word()[k - 1]);
    return w;
  }

  bool is_reduced() const { return is_reduced_word(shape_->type(), face_word()); }

  /// s_{i_{k_1}} ... s_{i_{k_m}} over k_D.
  WeylElement face_element() const { return WeylElement::from_word(shape_->type(), face_word()); }

  std::string render() const {
    std::string s;
    const int n = shape_->rank();
    const bool a = shape_->type().family == Family::A;
    for (int r = 1; r <= n; ++r) {
      int cmax = a ? n - r + 1 : 2 * n - r;
      for (int c = 1; c <= cmax; ++c) {
        if (!shape_->in_shape(r, c))
          s += ' ';
        else
          s += contains(r, c) ? '+' : '.';
      }
      s += '\n';
    }
    return s;
  }

  friend bool operator==(const PipeDream& a, const PipeDream& b) { return a.mask_ == b.mask_; }
  friend bool operator<(const PipeDream& a, const PipeDream& b) { return a.mask_ < b.mask_; }

private:
  ShapePtr shape_;
  std::uint64_t mask_ = 0;
};

using PipeDreamSet = std::set<PipeDream>;

/// Ladder move L_{i,j}; nullopt when it is not defined at (i, j).
inline std::optional<PipeDream> ladder_move(const PipeDream& d, int i, int j) {
  const auto& shape = *d.shape();
  if (!d.contains(i, j) || d.contains(i, j + 1)) return std::nullopt;
  if (shape.type().family == Family::A) {
    for (int k = 1; k < i; ++k) {
      bool a = d.contains(i - k, j), b = d.contains(i - k, j + 1);
      if (a && b) continue;
      if (a || b) return std::nullopt;
      PipeDream out = d;
      out.erase(i, j);
      out.insert(i - k, j + 1);
      return out;
    }
    return std::nullopt;
  }
  const int n = shape.rank();
  const auto& arr = shape.first();
  int k = shape.index(i, j);
  for (int r = k + 1; r < shape.size(); ++r) {
    auto [p, q] = arr[r];
    if (q != j && q != 2 * n - j) continue;
    bool a = d.contains(p, q), b = d.contains(p, q + 1);
    if (a && b) continue;
    if (a || b) return std::nullopt;
    if (!shape.in_shape(p, q + 1)) return std::nullopt;
    PipeDream out = d;
    out.erase(i, j);
    out.insert(p, q + 1);
    return out;
  }
  return std::nullopt;
}

/// Closure of a set under ladder moves whose column lies in `columns`
/// (all columns when empty).
inline PipeDreamSet ladder_closure(const PipeDreamSet& start, const std::set<int>& columns = {}) {
  PipeDreamSet seen = start;
  std::deque<PipeDream> todo(start.begin(), start.end());
  while (!todo.empty()) {
    PipeDream d = todo.front();
    todo.pop_front();
    for (auto [r, c] : d.boxes()) {
      if (!columns.empty() && !columns.count(c)) continue;
      if (auto e = ladder_move(d, r, c))
        if (seen.insert(*e).second) todo.push_back(*e);
    }
  }
  return seen;
}

/// D(w): the diagram whose k'_D is the lexicographically smallest element of R(i, w).
inline PipeDream bottom_pipe_dream(const ShapePtr& shape, const WeylElement& w) {
  auto r = compatible_subsets(shape->type(), shape->word(), w);
  if (r.empty()) throw std::logic_error("no compatible subset");
  PipeDream d = PipeDream::full(shape);
  const auto& arr = shape->second();
  for (int k : r.front()) d.erase(arr[k - 1].first, arr[k - 1].second);
  return d;
}

/// L(D(w)).
inline PipeDreamSet ladder_set(const ShapePtr& shape, const WeylElement& w) {
  return ladder_closure({bottom_pipe_dream(shape, w)});
}

/// Type A transposed mitosis at column j.
inline PipeDreamSet mitosis_top(const PipeDream& d, int j) {
  const int n = d.shape()->rank();
  int start = n - j + 2;
  for (int i = 1; i <= n - j + 1; ++i)
    if (!d.contains(i, j)) {
      start = i;
      break;
    }
  PipeDreamSet out;
  std::vector<int> free_rows;  // rows p < start with (p, j+1) outside D
  for (int p = 1; p < start; ++p)
    if (!d.contains(p, j + 1)) free_rows.push_back(p);
  for (std::size_t t = 0; t < free_rows.size(); ++t) {
    PipeDream e = d;
    e.erase(free_rows[0], j);
    for (std::size_t s = 1; s <= t; ++s) {
      auto m = ladder_move(e, free_rows[s], j);
      if (!m) throw std::logic_error("mitosis ladder move undefined");
      e = *m;
    }
    out.insert(e);
  }
  return out;
}

inline PipeDreamSet mitosis_top(const PipeDreamSet& s, int j) {
  PipeDreamSet out;
  for (const auto& d : s) {
    auto m = mitosis_top(d, j);
    out.insert(m.begin(), m.end());
  }
  return out;
}

/// The operator M_i: returns nullopt when it does not apply to D.
inline std::optional<PipeDreamSet> mitosis_operator(const PipeDream& d, int i) {
  const auto& shape = *d.shape();
  const int n = shape.rank();
  if (shape.type().family == Family::A) {
    int j = i;
    int start = n - j + 2;
    for (int r = 1; r <= n - j + 1; ++r)
      if (!d.contains(r, j)) {
        start = r;
        break;
      }
    for (int p = 1; p < start; ++p) {
      if (!d.contains(p, j + 1)) {
        PipeDream e = d;
        e.erase(p, j);
        return ladder_closure({e}, {j});
      }
    }
    return std::nullopt;
  }
  std::set<int> cols{n - i + 1, n + i - 1};
  const auto& arr = shape.first();
  int r0 = -1;
  for (int r = shape.size() - 1; r >= 0; --r) {
    auto [p, q] = arr[r];
    if (cols.count(q) && !d.contains(p, q + 1)) {
      r0 = r;
      break;
    }
  }
  if (r0 < 0) return std::nullopt;
  for (int r = r0; r < shape.size(); ++r) {
    auto [p, q] = arr[r];
    if (!cols.count(q)) continue;
    if (!d.contains(p, q)) return std::nullopt;
    if (r > r0 && !d.contains(p, q + 1)) return std::nullopt;
  }
  PipeDream e = d;
  e.erase(arr[r0].first, arr[r0].second);
  return ladder_closure({e}, cols);
}

inline PipeDreamSet mitosis_operator(const PipeDreamSet& s, int i) {
  PipeDreamSet out;
  for (const auto& d : s) {
    auto m = mitosis_operator(d, i);
    if (!m) throw std::logic_error("M_" + std::to_string(i) + " does not apply");
    out.insert(m->begin(), m->end());
  }
  return out;
}

/// M(w) = M_{i_{k_l}} ... M_{i_{k_1}}(full shape) with k'_{D(w)} = (k_1, ..., k_l).
inline PipeDreamSet mitosis_set(const ShapePtr& shape, const WeylElement& w) {
  PipeDream dw = bottom_pipe_dream(shape, w);
  PipeDreamSet s{PipeDream::full(shape)};
  for (int k : dw.k_prime_D()) s = mitosis_operator(s, shape->word()[k - 1]);
  return s;
}

/// Chain of transposed mitosis operators along a word, starting at Y_n.
inline PipeDreamSet mitosis_chain(const ShapePtr& shape, const Word& word) {
  PipeDreamSet s{PipeDream::full(shape)};
  for (int j : word) s = mitosis_top(s, j);
  return s;
}

}  // namespace demazure
