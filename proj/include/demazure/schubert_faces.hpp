#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan_weyl.hpp"
#include "crystal.hpp"
#include "oracle.hpp"
#include "pipedreams.hpp"
#include "polyhedra.hpp"
#include "polytope.hpp"

namespace demazure {

/// Raised when a computed face decomposition disagrees with its oracle.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A face given by equations from both facet families, as 1-based positions.
struct FaceTerm {
  std::vector<int> dual;   // F_k family
  std::vector<int> kogan;  // F^v_k family

  std::vector<int> tight(int N) const {
    std::vector<int> t = facet_indices(N, FacetFamily::Dual, dual);
    auto k = facet_indices(N, FacetFamily::Kogan, kogan);
    t.insert(t.end(), k.begin(), k.end());
    std::sort(t.begin(), t.end());
    return t;
  }

  friend auto operator<=>(const FaceTerm&, const FaceTerm&) = default;
};

inline std::string face_term_string(const FaceTerm& f) {
  auto tuple = [](const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  };
  std::string s;
  if (!f.dual.empty() || f.kogan.empty()) s += "F_" + tuple(f.dual);
  if (!f.kogan.empty()) s += (s.empty() ? "" : " cap ") + std::string("Fv_") + tuple(f.kogan);
  return s;
}

using FaceSum = std::map<FaceTerm, std::int64_t>;

/// k_D for every D in M(w).
inline std::vector<std::vector<int>> kogan_index(const ShapePtr& shape, const WeylElement& w) {
  std::vector<std::vector<int>> out;
  for (const auto& d : mitosis_set(shape, w)) out.push_back(d.k_D());
  std::sort(out.begin(), out.end());
  return out;
}

enum class Side { Schubert, Opposite };

struct LatticeUnion {
  std::vector<FaceTerm> faces;
  std::vector<FaceTerm> dropped;  // faces without lattice points
  CoordSet points;
};

/// String-polytope side of the face decompositions for one (type, word, lambda).
/// For the canonical words the lattice points come from the polytope; for any
/// other reduced word of w0 the cone is not available, so Delta_i(lambda) cap Z^N
/// is taken from the crystal and only lambda-bound faces are supported.
class StringFaces {
public:
  StringFaces(CartanType t, Weight lambda, std::optional<Word> word = std::nullopt)
      : type_(t),
        lambda_(std::move(lambda)),
        word_(word ? *word : canonical_word(t)),
        certified_(word_ == canonical_word(t)),
        crystal_(t, word_) {
    if (static_cast<int>(word_.size()) != t.num_positive_roots() || !is_reduced_word(t, word_))
      throw std::invalid_argument("word is not a reduced word of w0");
    data_ = prepare(crystal_, lambda_);
    const int N = t.num_positive_roots();
    if (certified_) {
      polytope_ = string_polytope(t, lambda_);
      shape_ = make_shape(t);
      for (const auto& x : lattice_points(polytope_)) {
        std::uint64_t m = 0;
        for (int i = 0; i < polytope_->size(); ++i)
          if (polytope_->is_tight(i, x)) m |= 1ULL << i;
        points_.push_back({x, m});
      }
    } else {
      auto bounds = lambda_bounds(t, word_);
      for (const auto& x : crystal_.to_string_data(data_.all)) {
        std::uint64_t m = 0;
        for (int k = 0; k < N; ++k) {
          auto h = lambda_bound_halfspace(bounds[k], N, lambda_);
          std::int64_t s = 0;
          for (int j = 0; j < N; ++j) s += h.normal[j] * x[j];
          if (s == h.offset) m |= 1ULL << k;
        }
        points_.push_back({x, m});
      }
    }
  }

  const CartanType& type() const { return type_; }
  const Word& word() const { return word_; }
  const Weight& lambda() const { return lambda_; }
  bool certified() const { return certified_; }
  const StringCrystal& crystal() const { return crystal_; }
  const PolytopePtr& polytope() const { return polytope_; }
  std::size_t num_points() const { return points_.size(); }

  CoordSet face_points(const FaceTerm& f) const {
    const int N = type_.num_positive_roots();
    std::uint64_t need = 0;
    for (int i : f.tight(N)) need |= 1ULL << i;
    if (!certified_ && !f.kogan.empty()) throw std::invalid_argument("cone faces need a canonical word");
    CoordSet out;
    for (const auto& [x, m] : points_)
      if ((m & need) == need) out.insert(x);
    return out;
  }

  LatticeUnion union_of(const std::vector<FaceTerm>& faces) const {
    LatticeUnion u;
    u.faces = faces;
    for (const auto& f : faces) {
      auto pts = face_points(f);
      if (pts.empty()) u.dropped.push_back(f);
      u.points.insert(pts.begin(), pts.end());
    }
    return u;
  }

  std::vector<FaceTerm> opposite_faces(const WeylElement& w) const {
    std::vector<FaceTerm> out;
    for (auto& k : compatible_subsets(type_, word_, w)) out.push_back({k, {}});
    return out;
  }

  std::vector<FaceTerm> demazure_faces(const WeylElement& w) const {
    if (!certified_) throw std::invalid_argument("Demazure faces need a canonical word");
    std::vector<FaceTerm> out;
    for (auto& k : kogan_index(shape_, w)) out.push_back({{}, k});
    return out;
  }

  std::vector<FaceTerm> richardson_faces(const WeylElement& v, const WeylElement& w) const {
    std::vector<FaceTerm> out;
    auto dem = demazure_faces(w);
    for (const auto& o : opposite_faces(v))
      for (const auto& d : dem) out.push_back({o.dual, d.kogan});
    return out;
  }

  LatticeUnion opposite_union(const WeylElement& w) const { return union_of(opposite_faces(w)); }
  LatticeUnion demazure_union(const WeylElement& w) const { return union_of(demazure_faces(w)); }
  LatticeUnion richardson_union(const WeylElement& v, const WeylElement& w) const {
    return union_of(richardson_faces(v, w));
  }

  CoordSet crystal_all() const { return crystal_.to_string_data(data_.all); }
  CoordSet crystal_demazure(const WeylElement& w) const {
    return crystal_.to_string_data(crystal_.demazure(w, lambda_));
  }
  CoordSet crystal_opposite(const WeylElement& w) const {
    return crystal_.to_string_data(crystal_.opposite_demazure_from(data_.low, w));
  }
  CoordSet crystal_richardson(const WeylElement& v, const WeylElement& w) const {
    return crystal_.to_string_data(
        set_intersection(crystal_.demazure(w, lambda_), crystal_.opposite_demazure_from(data_.low, v)));
  }

  /// Sum of normalized volumes of the faces of dimension d in the union.
  Rational union_volume(const std::vector<FaceTerm>& faces, int d) const {
    if (!certified_) throw std::invalid_argument("volumes need a canonical word");
    Rational v;
    const int N = type_.num_positive_roots();
    for (const auto& f : faces) {
      Face face = make_face(polytope_, f.tight(N));
      auto fd = face.dim();
      if (!fd || *fd < d) continue;
      if (*fd > d) throw std::logic_error("face has larger dimension than expected");
      v += ehrhart_volume(face).volume;
    }
    return v;
  }

  std::vector<FaceTerm> faces(Side side, const WeylElement& w) const {
    return side == Side::Schubert ? demazure_faces(w) : opposite_faces(w);
  }

  /// dim H^0 of the line bundle on X_w or X^w, as a lattice-union cardinality.
  std::int64_t h0_dimension(Side side, const WeylElement& w) const {
    return static_cast<std::int64_t>(union_of(faces(side, w)).points.size());
  }

  /// Vol(X_w, L_lambda) or Vol(X^w, L_lambda) as a sum of face volumes.
  Rational volume(Side side, const WeylElement& w) const {
    int d = side == Side::Schubert ? length(w) : type_.num_positive_roots() - length(w);
    return union_volume(faces(side, w), d);
  }

private:
  struct Point {
    Coords x;
    std::uint64_t tight;
  };

  CartanType type_;
  Weight lambda_;
  Word word_;
  bool certified_;
  StringCrystal crystal_;
  DemazureData data_;
  PolytopePtr polytope_;
  ShapePtr shape_;
  std::vector<Point> points_;
};

struct PairingResult {
  std::int64_t value = 0;
  std::vector<FaceTerm> unresolved;  // non-transversal pairs with nonempty intersection
  bool resolved() const { return unresolved.empty(); }
};

struct ProductResult {
  WeylElement v, w;
  FaceSum mixed;                     // the mixed-family sum of the product formula
  std::vector<FaceTerm> mixed_dropped;
  std::vector<FaceTerm> mixed_non_transversal;
  FaceSum dual_product;              // [X^v] [X^w] with both factors in the dual family
  std::vector<FaceTerm> dual_overlaps;  // pairs sharing a facet (self-intersections)
  std::vector<FaceTerm> dual_dropped;
  std::map<WeylElement, std::int64_t> expansion;
  std::map<WeylElement, Rational> face_degrees;  // c_u read off from the mixed sum
  std::string method;                // dual_cover, face_degree or unidentified
  bool certified = false;
  bool oracle_checked = false;
};

/// Schubert classes as face sums in the deformed GT / SGT polytope, together
/// with the evaluation of top-degree products in its polytope ring.
class SchubertCalculus {
public:
  explicit SchubertCalculus(CartanType t, std::optional<Deformation> d = std::nullopt,
                            std::optional<Weight> lambda = std::nullopt)
      : type_(t), eps_(d ? *d : default_deformation(t)) {
    validate_deformation(t, eps_, true);
    lambda_ = auto_scaled_weight(t, eps_, lambda ? *lambda : rho(t));
    polytope_ = gt_family_polytope(t, lambda_, eps_);
    if (!is_simple(polytope_)) throw std::runtime_error("deformed polytope is not simple");
    if (static_cast<int>(facet_indices(polytope_).size()) != polytope_->size())
      throw std::runtime_error("deformed polytope has redundant inequalities");
    ring_ = std::make_unique<IntersectionRing>(polytope_);
    shape_ = make_shape(t);
    word_ = canonical_word(t);
  }

  const CartanType& type() const { return type_; }
  const Weight& lambda() const { return lambda_; }
  const Deformation& deformation() const { return eps_; }
  const PolytopePtr& polytope() const { return polytope_; }
  int N() const { return type_.num_positive_roots(); }

  Face face(const FaceTerm& f) const { return make_face(polytope_, f.tight(N())); }

  /// [X^w] in the dual family (R(i, w)) or the Kogan family (M(w0 w)).
  FaceSum opposite_class(const WeylElement& w, FacetFamily fam) const {
    FaceSum s;
    if (fam == FacetFamily::Dual) {
      for (auto& k : compatible_subsets(type_, word_, w)) s[{k, {}}] += 1;
    } else {
      for (auto& k : kogan_index(shape_, longest_element(type_) * w)) s[{{}, k}] += 1;
    }
    return drop_empty(s);
  }

  /// [X_w] = [X^{w0 w}] in the Kogan family.
  FaceSum variety_class(const WeylElement& w) const {
    return opposite_class(longest_element(type_) * w, FacetFamily::Kogan);
  }

  /// Integral of [X^u][X^v] by counting vertices of transversal intersections
  /// of dual terms of [X^u] with Kogan terms of [X^v].
  PairingResult degree_pairing(const WeylElement& u, const WeylElement& v) const {
    if (length(u) + length(v) != N()) throw std::invalid_argument("pairing needs complementary lengths");
    PairingResult r;
    auto fu = opposite_class(u, FacetFamily::Dual);
    auto fv = opposite_class(v, FacetFamily::Kogan);
    for (const auto& [a, ca] : fu)
      for (const auto& [b, cb] : fv) {
        FaceTerm t{a.dual, b.kogan};
        Face both = face(t);
        auto vs = both.vertices();
        if (vs.empty()) continue;
        if (!transversal(face(a), face(b))) {
          r.unresolved.push_back(t);
          continue;
        }
        r.value += ca * cb * static_cast<std::int64_t>(vs.size());
      }
    return r;
  }

  /// Degree of a product of face sums of total codimension N.
  Rational degree(const std::vector<const FaceSum*>& factors) const {
    Rational total;
    std::vector<int> mono;
    std::function<void(std::size_t, Rational)> rec = [&](std::size_t k, Rational coef) {
      if (k == factors.size()) {
        if (static_cast<int>(mono.size()) != N()) throw std::invalid_argument("product is not of top degree");
        total += coef * ring_->degree(mono);
        return;
      }
      for (const auto& [f, c] : *factors[k]) {
        auto t = f.tight(N());
        mono.insert(mono.end(), t.begin(), t.end());
        rec(k + 1, coef * Rational(c));
        mono.resize(mono.size() - t.size());
      }
    };
    rec(0, Rational(1));
    return total;
  }

  ProductResult product(const WeylElement& v, const WeylElement& w, const BGGOracle* oracle = nullptr) const {
    ProductResult r;
    r.v = v;
    r.w = w;
    const WeylElement w0 = longest_element(type_);
    auto xv = opposite_class(v, FacetFamily::Dual);
    auto xw_dual = opposite_class(w, FacetFamily::Dual);
    auto xw_kogan = opposite_class(w, FacetFamily::Kogan);

    for (const auto& [a, ca] : xv)
      for (const auto& [b, cb] : xw_kogan) {
        FaceTerm t{a.dual, b.kogan};
        if (face(t).empty()) {
          r.mixed_dropped.push_back(t);
          continue;
        }
        if (!transversal(face(a), face(b))) r.mixed_non_transversal.push_back(t);
        r.mixed[t] += ca * cb;
      }

    for (const auto& [a, ca] : xv)
      for (const auto& [b, cb] : xw_dual) {
        std::vector<int> common;
        std::set_intersection(a.dual.begin(), a.dual.end(), b.dual.begin(), b.dual.end(), std::back_inserter(common));
        std::vector<int> u = a.dual;
        u.insert(u.end(), b.dual.begin(), b.dual.end());
        std::sort(u.begin(), u.end());
        FaceTerm t{u, {}};
        if (!common.empty()) {
          r.dual_overlaps.push_back(t);
          continue;
        }
        if (face(t).empty()) {
          r.dual_dropped.push_back(t);
          continue;
        }
        r.dual_product[t] += ca * cb;
      }

    const int target = length(v) + length(w);
    std::vector<WeylElement> candidates;
    if (target <= N())
      for (const auto& u : weyl_group_elements(type_))
        if (length(u) == target && bruhat_leq(v, u) && bruhat_leq(w, u)) candidates.push_back(u);

    if (r.dual_overlaps.empty()) {
      if (auto cover = dual_cover(r.dual_product)) {
        r.expansion = *cover;
        r.method = "dual_cover";
        r.certified = true;
      }
    }

    for (const auto& u : candidates) {
      auto dual_of_complement = opposite_class(w0 * u, FacetFamily::Dual);
      r.face_degrees[u] = degree({&r.mixed, &dual_of_complement});
    }
    if (r.method.empty()) {
      bool integral = true;
      for (const auto& [u, c] : r.face_degrees) integral = integral && c.is_integer() && c.sign() >= 0;
      if (integral) {
        for (const auto& [u, c] : r.face_degrees)
          if (!c.is_zero()) r.expansion[u] = c.num();
        r.method = "face_degree";
      } else {
        r.method = "unidentified";
      }
    }
    if (r.method == "dual_cover") {
      for (const auto& [u, c] : r.face_degrees) {
        auto it = r.expansion.find(u);
        std::int64_t e = it == r.expansion.end() ? 0 : it->second;
        if (!(c == Rational(e))) throw TheoremViolation("dual cover and face degrees disagree");
      }
    }

    if (oracle && r.method != "unidentified") {
      auto bgg = oracle->structure_constants(v, w);
      std::map<WeylElement, std::int64_t> expect;
      for (const auto& [u, c] : bgg) {
        if (!c.is_integer()) throw std::logic_error("non-integral structure constant");
        expect[u] = c.num();
      }
      if (expect != r.expansion) throw TheoremViolation("product expansion disagrees with the BGG oracle");
      r.oracle_checked = true;
      if (r.method == "face_degree") r.certified = true;
    }
    return r;
  }

private:
  FaceSum drop_empty(const FaceSum& s) const {
    FaceSum out;
    for (const auto& [f, c] : s)
      if (!face(f).empty()) out[f] += c;
    return out;
  }

  /// Solve product = sum_u c_u (dual face sum of u). Every dual face with tight
  /// set k belongs to at most one u (the product of the letters at k when that
  /// word is reduced), so the cover is read off term by term and then checked.
  std::optional<std::map<WeylElement, std::int64_t>> dual_cover(const FaceSum& prod) const {
    std::map<WeylElement, std::int64_t> coef;
    std::map<WeylElement, FaceSum> grouped;
    for (const auto& [f, c] : prod) {
      Word letters;
      for (int k : f.dual) letters.push_back(word_[k - 1]);
      if (!is_reduced_word(type_, letters)) return std::nullopt;
      grouped[WeylElement::from_word(type_, letters)][f] += c;
    }
    for (const auto& [u, terms] : grouped) {
      FaceSum canon = opposite_class(u, FacetFamily::Dual);
      std::int64_t c = terms.begin()->second;
      if (c <= 0) return std::nullopt;
      FaceSum scaled;
      for (const auto& [f, m] : canon) scaled[f] = m * c;
      if (scaled != terms) return std::nullopt;
      coef[u] = c;
    }
    return coef;
  }

  CartanType type_;
  Deformation eps_;
  Weight lambda_;
  PolytopePtr polytope_;
  std::unique_ptr<IntersectionRing> ring_;
  ShapePtr shape_;
  Word word_;
};

}  // namespace demazure
