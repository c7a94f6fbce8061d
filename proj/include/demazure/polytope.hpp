#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace demazure {

using IntVec = std::vector<std::int64_t>;
using RatVec = std::vector<Rational>;

/// normal . x <= offset
struct Halfspace {
  IntVec normal;
  std::int64_t offset = 0;
  std::string label;
};

struct Vertex {
  RatVec point;
  std::vector<int> tight;  // indices of halfspaces attained with equality
};

class Polytope;
using PolytopePtr = std::shared_ptr<const Polytope>;

/// Polytope given by integral halfspaces. Vertices are computed lazily and
/// cached; the object is safe to share between threads.
class Polytope {
public:
  Polytope(int dim, std::vector<Halfspace> hs) : dim_(dim), hs_(std::move(hs)) {
    for (const auto& h : hs_)
      if (static_cast<int>(h.normal.size()) != dim_) throw std::invalid_argument("halfspace dimension mismatch");
  }

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(hs_.size()); }
  const std::vector<Halfspace>& halfspaces() const { return hs_; }
  const Halfspace& halfspace(int i) const { return hs_.at(i); }

  Polytope dilate(std::int64_t t) const {
    auto hs = hs_;
    for (auto& h : hs) h.offset *= t;
    return Polytope(dim_, std::move(hs));
  }

  Rational evaluate(int i, const RatVec& x) const {
    Rational s;
    for (int k = 0; k < dim_; ++k)
      if (hs_[i].normal[k] != 0) s += Rational(hs_[i].normal[k]) * x[k];
    return s;
  }

  bool contains(const IntVec& x) const {
    for (const auto& h : hs_) {
      std::int64_t s = 0;
      for (int k = 0; k < dim_; ++k) s += h.normal[k] * x[k];
      if (s > h.offset) return false;
    }
    return true;
  }

  bool is_tight(int i, const IntVec& x) const {
    std::int64_t s = 0;
    for (int k = 0; k < dim_; ++k) s += hs_[i].normal[k] * x[k];
    return s == hs_[i].offset;
  }

  const std::vector<Vertex>& vertices() const {
    std::call_once(*once_, [this] { vertices_ = enumerate_vertices(); });
    return vertices_;
  }

private:
  std::vector<Vertex> enumerate_vertices() const {
    const int n = dim_;
    const int m = size();
    std::set<RatVec> seen;
    std::vector<Vertex> out;
    if (n == 0) {
      for (const auto& h : hs_)
        if (h.offset < 0) return out;
      Vertex v;
      for (int i = 0; i < m; ++i)
        if (hs_[i].offset == 0) v.tight.push_back(i);
      out.push_back(v);
      return out;
    }
    struct Row {
      RatVec coef;  // size n + 1, last entry is the right-hand side
      int pivot;
    };
    std::vector<Row> rows;
    std::function<void(int)> rec = [&](int start) {
      int depth = static_cast<int>(rows.size());
      if (depth == n) {
        RatVec x(n);
        for (int r = n - 1; r >= 0; --r) {
          Rational v = rows[r].coef[n];
          for (int q = r + 1; q < n; ++q) {
            int c = rows[q].pivot;
            if (!rows[r].coef[c].is_zero()) v -= rows[r].coef[c] * x[c];
          }
          x[rows[r].pivot] = v / rows[r].coef[rows[r].pivot];
        }
        if (seen.count(x)) return;
        Vertex vx;
        for (int i = 0; i < m; ++i) {
          auto val = evaluate(i, x);
          if (val > Rational(hs_[i].offset)) return;
          if (val == Rational(hs_[i].offset)) vx.tight.push_back(i);
        }
        seen.insert(x);
        vx.point = std::move(x);
        out.push_back(std::move(vx));
        return;
      }
      for (int i = start; i < m && m - i >= n - depth; ++i) {
        Row r;
        r.coef.resize(n + 1);
        for (int k = 0; k < n; ++k) r.coef[k] = hs_[i].normal[k];
        r.coef[n] = hs_[i].offset;
        for (const auto& p : rows) {
          if (r.coef[p.pivot].is_zero()) continue;
          Rational f = r.coef[p.pivot] / p.coef[p.pivot];
          for (int k = 0; k <= n; ++k)
            if (!p.coef[k].is_zero()) r.coef[k] -= f * p.coef[k];
        }
        r.pivot = -1;
        for (int k = 0; k < n; ++k)
          if (!r.coef[k].is_zero()) {
            r.pivot = k;
            break;
          }
        if (r.pivot < 0) continue;
        rows.push_back(std::move(r));
        rec(i + 1);
        rows.pop_back();
      }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Vertex& a, const Vertex& b) { return a.point < b.point; });
    return out;
  }

  int dim_;
  std::vector<Halfspace> hs_;
  mutable std::vector<Vertex> vertices_;
  std::unique_ptr<std::once_flag> once_ = std::make_unique<std::once_flag>();
};

/// Rank of a set of rational vectors.
inline int rank_of(std::vector<RatVec> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (!rows[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c].is_zero()) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (int k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Solve A x = b for a square nonsingular or underdetermined full-row-rank
/// system; free variables are set to zero. Returns nullopt when inconsistent.
inline std::optional<RatVec> solve_linear(std::vector<RatVec> a, RatVec b, int cols) {
  const int rows = static_cast<int>(a.size());
  for (int r = 0; r < rows; ++r) a[r].push_back(b[r]);
  std::vector<int> pivcol;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[rank][c];
      for (int k = c; k <= cols; ++k) a[r][k] -= f * a[rank][k];
    }
    pivcol.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (!a[r][cols].is_zero()) return std::nullopt;
  RatVec x(cols);
  for (int r = 0; r < rank; ++r) x[pivcol[r]] = a[r][cols] / a[r][pivcol[r]];
  return x;
}

inline Rational determinant(std::vector<RatVec> a) {
  const int n = static_cast<int>(a.size());
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// A face of a polytope, described by the set of halfspaces forced to
/// equality. An infeasible tight set gives the empty face.
struct Face {
  PolytopePtr parent;
  std::vector<int> tight;

  std::vector<const Vertex*> vertices() const {
    std::vector<const Vertex*> out;
    for (const auto& v : parent->vertices())
      if (std::includes(v.tight.begin(), v.tight.end(), tight.begin(), tight.end())) out.push_back(&v);
    return out;
  }

  bool empty() const { return vertices().empty(); }

  /// Dimension, or nullopt for the empty face.
  std::optional<int> dim() const {
    auto vs = vertices();
    if (vs.empty()) return std::nullopt;
    std::vector<RatVec> diffs;
    for (std::size_t k = 1; k < vs.size(); ++k) {
      RatVec d(parent->dim());
      for (int c = 0; c < parent->dim(); ++c) d[c] = vs[k]->point[c] - vs[0]->point[c];
      diffs.push_back(std::move(d));
    }
    return rank_of(std::move(diffs));
  }

  /// All halfspaces tight on the whole face.
  std::vector<int> closure() const {
    auto vs = vertices();
    if (vs.empty()) return tight;
    std::vector<int> out = vs[0]->tight;
    for (const auto* v : vs) {
      std::vector<int> tmp;
      std::set_intersection(out.begin(), out.end(), v->tight.begin(), v->tight.end(), std::back_inserter(tmp));
      out.swap(tmp);
    }
    return out;
  }
};

inline Face make_face(PolytopePtr p, std::vector<int> tight) {
  std::sort(tight.begin(), tight.end());
  tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
  for (int i : tight)
    if (i < 0 || i >= p->size()) throw std::out_of_range("face index out of range");
  return Face{std::move(p), std::move(tight)};
}

inline Face intersect(const Face& f, const Face& g) {
  if (f.parent != g.parent) throw std::invalid_argument("faces of different polytopes");
  std::vector<int> t = f.tight;
  t.insert(t.end(), g.tight.begin(), g.tight.end());
  return make_face(f.parent, std::move(t));
}

/// Full-dimensional check plus: every vertex lies on exactly dim facets.
/// Redundant halfspaces (not defining facets) are ignored.
inline std::vector<int> facet_indices(const PolytopePtr& p) {
  std::vector<int> out;
  for (int i = 0; i < p->size(); ++i) {
    auto d = make_face(p, {i}).dim();
    if (d && *d == p->dim() - 1) out.push_back(i);
  }
  return out;
}

inline bool is_simple(const PolytopePtr& p) {
  auto d = make_face(p, {}).dim();
  if (!d || *d != p->dim()) return false;
  auto facets = facet_indices(p);
  std::set<int> fs(facets.begin(), facets.end());
  for (const auto& v : p->vertices()) {
    int c = 0;
    for (int i : v.tight) c += fs.count(i) ? 1 : 0;
    if (c != p->dim()) return false;
  }
  return true;
}

/// codim(F cap G) = codim F + codim G and F cap G nonempty.
inline bool transversal(const Face& f, const Face& g) {
  auto df = f.dim(), dg = g.dim(), dh = intersect(f, g).dim();
  if (!df || !dg || !dh) return false;
  int n = f.parent->dim();
  return (n - *dh) == (n - *df) + (n - *dg);
}

/// Enumerate lattice points of the face {x in t*P : halfspaces in `equal` tight}.
/// Coordinates are fixed in the order x_{N-1}, ..., x_0; every halfspace is
/// applied as soon as its remaining variable is the one being fixed, with a
/// bounding box from the face vertices as a fallback.
inline void for_each_lattice_point(const Polytope& p, const std::vector<int>& equal, std::int64_t t,
                                   const std::function<void(const IntVec&)>& fn) {
  const int n = p.dim();
  std::vector<const Vertex*> vs;
  for (const auto& v : p.vertices())
    if (std::includes(v.tight.begin(), v.tight.end(), equal.begin(), equal.end())) vs.push_back(&v);
  if (vs.empty()) return;
  IntVec lo(n), hi(n);
  for (int k = 0; k < n; ++k) {
    Rational mn = vs[0]->point[k], mx = vs[0]->point[k];
    for (const auto* v : vs) {
      mn = std::min(mn, v->point[k]);
      mx = std::max(mx, v->point[k]);
    }
    lo[k] = (mn * Rational(t)).ceil();
    hi[k] = (mx * Rational(t)).floor();
    if (lo[k] > hi[k]) return;
  }
  struct Con {
    IntVec a;
    std::int64_t b;
    int lead;
  };
  std::vector<Con> cons;
  auto add = [&](const IntVec& a, std::int64_t b) {
    int lead = -1;
    for (int k = 0; k < n; ++k)
      if (a[k] != 0) {
        lead = k;
        break;
      }
    if (lead < 0) {
      if (b < 0) cons.push_back({a, b, -2});
      return;
    }
    cons.push_back({a, b, lead});
  };
  std::set<int> eq(equal.begin(), equal.end());
  for (int i = 0; i < p.size(); ++i) {
    const auto& h = p.halfspace(i);
    add(h.normal, h.offset * t);
    if (eq.count(i)) {
      IntVec neg = h.normal;
      for (auto& x : neg) x = -x;
      add(neg, -h.offset * t);
    }
  }
  for (const auto& c : cons)
    if (c.lead == -2) return;
  std::vector<std::vector<int>> at_level(n);
  for (int r = 0; r < static_cast<int>(cons.size()); ++r) at_level[cons[r].lead].push_back(r);
  std::vector<std::vector<int>> touches(n);
  for (int r = 0; r < static_cast<int>(cons.size()); ++r)
    for (int k = 0; k < n; ++k)
      if (cons[r].a[k] != 0 && k != cons[r].lead) touches[k].push_back(r);
  IntVec x(n, 0);
  IntVec partial(cons.size(), 0);
  auto floordiv = [](std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  };
  auto ceildiv = [&](std::int64_t a, std::int64_t b) { return -floordiv(-a, b); };
  std::function<void(int)> rec = [&](int k) {
    if (k < 0) {
      fn(x);
      return;
    }
    std::int64_t l = lo[k], h = hi[k];
    for (int r : at_level[k]) {
      std::int64_t rhs = cons[r].b - partial[r];
      std::int64_t a = cons[r].a[k];
      if (a > 0)
        h = std::min(h, floordiv(rhs, a));
      else
        l = std::max(l, ceildiv(rhs, a));
    }
    for (std::int64_t v = l; v <= h; ++v) {
      x[k] = v;
      for (int r : touches[k]) partial[r] += cons[r].a[k] * v;
      rec(k - 1);
      for (int r : touches[k]) partial[r] -= cons[r].a[k] * v;
    }
  };
  rec(n - 1);
}

inline std::vector<IntVec> lattice_points(const Face& f, std::int64_t t = 1) {
  std::vector<IntVec> out;
  for_each_lattice_point(*f.parent, f.tight, t, [&](const IntVec& x) { out.push_back(x); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IntVec> lattice_points(const PolytopePtr& p, std::int64_t t = 1) {
  return lattice_points(make_face(p, {}), t);
}

inline std::int64_t count_lattice_points(const Face& f, std::int64_t t = 1) {
  std::int64_t c = 0;
  for_each_lattice_point(*f.parent, f.tight, t, [&](const IntVec&) { ++c; });
  return c;
}

struct EhrhartVolume {
  int dim = 0;
  Rational volume;                     // leading coefficient of the Ehrhart polynomial
  std::vector<std::int64_t> counts;    // L(1), ..., L(dim + 1)
  std::int64_t held_out = 0;           // L(dim + 2), counted directly
};

/// Normalized volume of a lattice face with respect to its own affine lattice,
/// read off from the Ehrhart polynomial. Throws for non-lattice or empty faces
/// and when the interpolated polynomial misses the held-out dilation.
inline EhrhartVolume ehrhart_volume(const Face& f) {
  auto d = f.dim();
  if (!d) throw std::invalid_argument("volume of an empty face");
  for (const auto* v : f.vertices())
    for (const auto& c : v->point)
      if (!c.is_integer()) throw std::invalid_argument("face is not a lattice polytope");
  EhrhartVolume r;
  r.dim = *d;
  for (int t = 1; t <= *d + 1; ++t) r.counts.push_back(count_lattice_points(f, t));
  // Newton forward differences from t = 1
  std::vector<Rational> diff(r.counts.begin(), r.counts.end());
  std::vector<Rational> lead;
  for (int k = 0; k <= *d; ++k) {
    lead.push_back(diff[0]);
    for (std::size_t j = 0; j + 1 < diff.size(); ++j) diff[j] = diff[j + 1] - diff[j];
    diff.pop_back();
  }
  Rational fact(1);
  for (int k = 2; k <= *d; ++k) fact *= Rational(k);
  r.volume = lead[*d] / fact;
  // evaluate Newton series at t = d + 2
  std::int64_t s = *d + 1;  // t - 1
  Rational pred, binom(1);
  for (int k = 0; k <= *d; ++k) {
    pred += lead[k] * binom;
    binom = binom * Rational(s - k) / Rational(k + 1);
  }
  r.held_out = count_lattice_points(f, *d + 2);
  if (!(pred == Rational(r.held_out))) throw std::runtime_error("Ehrhart interpolation failed the held-out check");
  return r;
}

/// Degrees of products of facet classes in the polytope ring of a simple
/// polytope whose halfspaces are all facets. A monomial is a multiset of
/// halfspace indices of total size dim(P).
class IntersectionRing {
public:
  explicit IntersectionRing(PolytopePtr p) : p_(std::move(p)) {
    const int n = p_->dim();
    for (const auto& h : p_->halfspaces()) {
      std::int64_t g = 0;
      for (auto c : h.normal) g = std::gcd(g, c < 0 ? -c : c);
      RatVec u(n);
      for (int k = 0; k < n; ++k) u[k] = Rational(h.normal[k] / (g == 0 ? 1 : g));
      normals_.push_back(std::move(u));
    }
  }

  const PolytopePtr& polytope() const { return p_; }

  bool meets(const std::vector<int>& support) const {
    for (const auto& v : p_->vertices())
      if (std::includes(v.tight.begin(), v.tight.end(), support.begin(), support.end())) return true;
    return false;
  }

  Rational degree(std::vector<int> monomial) {
    std::sort(monomial.begin(), monomial.end());
    if (static_cast<int>(monomial.size()) != p_->dim()) throw std::invalid_argument("monomial is not of top degree");
    std::lock_guard<std::mutex> lock(mu_);
    return degree_locked(monomial);
  }

private:
  Rational degree_locked(const std::vector<int>& mono) {
    auto it = memo_.find(mono);
    if (it != memo_.end()) return it->second;
    std::vector<int> support = mono;
    support.erase(std::unique(support.begin(), support.end()), support.end());
    Rational result;
    if (!meets(support)) {
      result = Rational(0);
    } else if (support.size() == mono.size()) {
      std::vector<RatVec> m;
      for (int i : support) m.push_back(normals_[i]);
      Rational det = determinant(m);
      result = Rational(1) / (det.sign() < 0 ? -det : det);
    } else {
      int rep = -1;
      for (std::size_t k = 0; k + 1 < mono.size(); ++k)
        if (mono[k] == mono[k + 1]) {
          rep = mono[k];
          break;
        }
      std::vector<RatVec> a;
      RatVec b;
      for (int i : support) {
        a.push_back(normals_[i]);
        b.push_back(Rational(i == rep ? 1 : 0));
      }
      auto m = solve_linear(a, b, p_->dim());
      if (!m) throw std::runtime_error("facet normals at a face are dependent");
      std::vector<int> rest = mono;
      rest.erase(std::find(rest.begin(), rest.end(), rep));
      for (int i = 0; i < p_->size(); ++i) {
        if (std::binary_search(support.begin(), support.end(), i)) continue;
        Rational c;
        for (int k = 0; k < p_->dim(); ++k) c += (*m)[k] * normals_[i][k];
        if (c.is_zero()) continue;
        std::vector<int> next = rest;
        next.insert(std::upper_bound(next.begin(), next.end(), i), i);
        result -= c * degree_locked(next);
      }
    }
    memo_.emplace(mono, result);
    return result;
  }

  PolytopePtr p_;
  std::vector<RatVec> normals_;
  std::map<std::vector<int>, Rational> memo_;
  std::mutex mu_;
};

}  // namespace demazure
