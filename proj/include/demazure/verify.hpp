#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "cartan_weyl.hpp"
#include "crystal.hpp"
#include "oracle.hpp"
#include "schubert_faces.hpp"

namespace demazure {

struct VerifyCell {
  std::string theorem;
  std::string type;
  int rank = 0;
  Weight lambda;
  Word w;
  std::optional<Word> v;  // second element for pairings, products and Richardson cells
  bool pass = true;
  std::int64_t faces = 0;
  std::int64_t lattice_points = 0;
  std::vector<std::string> dropped;  // faces without lattice points
  std::vector<std::string> mismatches;
};

struct VerifyReport {
  std::string theorem;
  std::vector<VerifyCell> cells;
  bool timed_out = false;

  bool pass() const {
    for (const auto& c : cells)
      if (!c.pass) return false;
    return true;
  }
  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.pass ? 1 : 0;
    return n;
  }
};

struct VerifyOptions {
  std::vector<CartanType> types;
  int lambda_max = 2;
  int samples = 20;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::optional<double> timeout_seconds;
  bool richardson = true;
};

/// All weights with coefficients in 0..max, in lexicographic order.
inline std::vector<Weight> weight_box(int rank, int max) {
  std::vector<Weight> out;
  Weight w(rank, 0);
  while (true) {
    out.push_back(w);
    int k = rank - 1;
    while (k >= 0 && w[k] == max) w[k--] = 0;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

namespace detail {

using CellGroup = std::function<std::vector<VerifyCell>()>;

inline std::string coords_string(const Coords& c) {
  std::string s = "(";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? "," : "") + std::to_string(c[k]);
  return s + ")";
}

/// Records a few elements of the symmetric difference.
inline void compare_sets(const CoordSet& faces, const CoordSet& crystal, VerifyCell& cell) {
  if (faces == crystal) return;
  cell.pass = false;
  int shown = 0;
  for (const auto& x : faces)
    if (!crystal.count(x) && shown++ < 5) cell.mismatches.push_back("extra " + coords_string(x));
  for (const auto& x : crystal)
    if (!faces.count(x) && shown++ < 10) cell.mismatches.push_back("missing " + coords_string(x));
}

inline VerifyCell make_cell(const std::string& theorem, const CartanType& t, const Weight& lambda,
                            const WeylElement& w) {
  VerifyCell c;
  c.theorem = theorem;
  c.type = t.family == Family::A ? "A" : "C";
  c.rank = t.rank;
  c.lambda = lambda;
  c.w = reduced_word(w);
  return c;
}

inline void record_union(const LatticeUnion& u, VerifyCell& c) {
  c.faces = static_cast<std::int64_t>(u.faces.size());
  c.lattice_points = static_cast<std::int64_t>(u.points.size());
  for (const auto& f : u.dropped) c.dropped.push_back(face_term_string(f));
}

/// Runs the groups on `jobs` threads and concatenates their cells in group
/// order. Groups not started before the deadline are skipped.
inline VerifyReport run_groups(std::string theorem, const std::vector<CellGroup>& groups, const VerifyOptions& opt) {
  using clock = std::chrono::steady_clock;
  std::optional<clock::time_point> deadline;
  if (opt.timeout_seconds)
    deadline = clock::now() + std::chrono::duration_cast<clock::duration>(std::chrono::duration<double>(*opt.timeout_seconds));
  std::vector<std::optional<std::vector<VerifyCell>>> out(groups.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> expired{false};
  auto worker = [&] {
    while (true) {
      std::size_t k = next++;
      if (k >= groups.size()) return;
      if (deadline && clock::now() > *deadline) {
        expired = true;
        continue;
      }
      try {
        out[k] = groups[k]();
      } catch (const std::exception& e) {
        VerifyCell c;
        c.theorem = theorem;
        c.pass = false;
        c.mismatches.push_back(std::string("exception: ") + e.what());
        out[k] = std::vector<VerifyCell>{c};
      }
    }
  };
  const int n = std::max(1, opt.jobs);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  VerifyReport r;
  r.theorem = std::move(theorem);
  r.timed_out = expired;
  for (auto& g : out)
    if (g)
      for (auto& c : *g) r.cells.push_back(std::move(c));
  return r;
}

}  // namespace detail

/// Opposite Demazure crystals against the R(i, w) face unions, one cell per
/// (type, lambda, w), plus Richardson cells at rank 2.
inline VerifyReport verify_theorem1(const VerifyOptions& opt) {
  std::vector<detail::CellGroup> groups;
  for (const auto& t : opt.types)
    for (const auto& lambda : weight_box(t.rank, opt.lambda_max))
      groups.push_back([t, lambda, rich = opt.richardson] {
        StringFaces sf(t, lambda);
        std::vector<VerifyCell> cells;
        for (const auto& w : weyl_group_elements(t)) {
          auto c = detail::make_cell("theorem1", t, lambda, w);
          auto u = sf.opposite_union(w);
          detail::record_union(u, c);
          detail::compare_sets(u.points, sf.crystal_opposite(w), c);
          cells.push_back(std::move(c));
        }
        if (rich && t.rank == 2) {
          for (const auto& w : weyl_group_elements(t))
            for (const auto& v : bruhat_lower_interval(w)) {
              auto c = detail::make_cell("richardson", t, lambda, w);
              c.v = reduced_word(v);
              auto u = sf.richardson_union(v, w);
              detail::record_union(u, c);
              detail::compare_sets(u.points, sf.crystal_richardson(v, w), c);
              cells.push_back(std::move(c));
            }
        }
        return cells;
      });
  return detail::run_groups("theorem1", groups, opt);
}

/// Demazure crystals against the M(w) face unions and the Demazure character
/// dimension. The suite is named theorem2 for type A and theorem3 for type C.
inline VerifyReport verify_demazure(const std::string& theorem, const VerifyOptions& opt) {
  std::vector<detail::CellGroup> groups;
  for (const auto& t : opt.types)
    for (const auto& lambda : weight_box(t.rank, opt.lambda_max))
      groups.push_back([t, lambda, theorem] {
        StringFaces sf(t, lambda);
        std::vector<VerifyCell> cells;
        for (const auto& w : weyl_group_elements(t)) {
          auto c = detail::make_cell(theorem, t, lambda, w);
          auto u = sf.demazure_union(w);
          detail::record_union(u, c);
          auto crystal = sf.crystal_demazure(w);
          detail::compare_sets(u.points, crystal, c);
          auto dim = character_dimension(demazure_character(w, lambda));
          if (dim != static_cast<std::int64_t>(crystal.size())) {
            c.pass = false;
            c.mismatches.push_back("character dimension " + std::to_string(dim) + " vs crystal " +
                                   std::to_string(crystal.size()));
          }
          cells.push_back(std::move(c));
        }
        return cells;
      });
  return detail::run_groups(theorem, groups, opt);
}

/// degree_pairing(u, v) against the Kronecker delta of v = w0 u.
inline VerifyReport verify_duality(const VerifyOptions& opt) {
  std::vector<detail::CellGroup> groups;
  for (const auto& t : opt.types)
    groups.push_back([t] {
      SchubertCalculus sc(t);
      std::vector<VerifyCell> cells;
      const int N = t.num_positive_roots();
      const WeylElement w0 = longest_element(t);
      for (const auto& u : weyl_group_elements(t))
        for (const auto& v : weyl_group_elements(t)) {
          if (length(u) + length(v) != N) continue;
          auto c = detail::make_cell("duality", t, sc.lambda(), u);
          c.v = reduced_word(v);
          auto p = sc.degree_pairing(u, v);
          c.faces = static_cast<std::int64_t>(sc.opposite_class(u, FacetFamily::Dual).size() *
                                              sc.opposite_class(v, FacetFamily::Kogan).size());
          if (!p.resolved()) {
            c.pass = false;
            for (const auto& f : p.unresolved) c.mismatches.push_back("pairing unresolved at " + face_term_string(f));
          } else {
            std::int64_t expect = v == w0 * u ? 1 : 0;
            c.lattice_points = p.value;
            if (p.value != expect) {
              c.pass = false;
              c.mismatches.push_back("pairing " + std::to_string(p.value) + ", expected " + std::to_string(expect));
            }
          }
          cells.push_back(std::move(c));
        }
      return cells;
    });
  return detail::run_groups("duality", groups, opt);
}

/// product(u, v) against the BGG structure constants for every ordered pair.
inline VerifyReport verify_products(const VerifyOptions& opt) {
  std::vector<detail::CellGroup> groups;
  for (const auto& t : opt.types)
    groups.push_back([t] {
      SchubertCalculus sc(t);
      BGGOracle bgg(t);
      std::vector<VerifyCell> cells;
      for (const auto& u : weyl_group_elements(t))
        for (const auto& v : weyl_group_elements(t)) {
          auto c = detail::make_cell("products", t, sc.lambda(), u);
          c.v = reduced_word(v);
          try {
            auto r = sc.product(u, v, &bgg);
            c.faces = static_cast<std::int64_t>(r.mixed.size());
            for (const auto& f : r.mixed_dropped) c.dropped.push_back(face_term_string(f));
            if (!r.oracle_checked) {
              c.pass = false;
              c.mismatches.push_back("expansion " + r.method);
            }
          } catch (const TheoremViolation& e) {
            c.pass = false;
            c.mismatches.push_back(e.what());
          }
          cells.push_back(std::move(c));
        }
      return cells;
    });
  return detail::run_groups("products", groups, opt);
}

/// A random reduced word of w built by peeling random left descents.
inline Word random_reduced_word(WeylElement w, std::mt19937_64& rng) {
  const CartanType t = w.type();
  Word out;
  while (!w.is_identity()) {
    std::vector<int> desc;
    for (int i = 1; i <= t.rank; ++i)
      if (is_left_descent(w, i)) desc.push_back(i);
    int i = desc[std::uniform_int_distribution<std::size_t>(0, desc.size() - 1)(rng)];
    out.push_back(i);
    w = WeylElement::simple_reflection(t, i) * w;
  }
  return out;
}

/// Randomized checks of the crystal axioms, the string property and
/// independence of the reduced word, at ranks beyond the exhaustive matrix.
/// Each sample draws a type, a weight with at most two nonzero coefficients
/// in {1, 2} and a random reduced word of w0.
inline VerifyReport verify_axioms(const VerifyOptions& opt) {
  std::vector<CartanType> pool = opt.types;
  if (pool.empty())
    pool = {make_type('A', 2), make_type('A', 3), make_type('A', 4), make_type('A', 5),
            make_type('C', 2), make_type('C', 3), make_type('C', 4)};
  struct Sample {
    CartanType t;
    Weight lambda;
    Word word;
    WeylElement w;
    Word w_word1, w_word2;
  };
  std::mt19937_64 rng(opt.seed);
  std::vector<Sample> samples;
  for (int s = 0; s < opt.samples; ++s) {
    CartanType t = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    Weight lambda(t.rank, 0);
    int nz = std::uniform_int_distribution<int>(1, 2)(rng);
    for (int k = 0; k < nz; ++k)
      lambda[std::uniform_int_distribution<int>(0, t.rank - 1)(rng)] = std::uniform_int_distribution<int>(1, 2)(rng);
    Word word = random_reduced_word(longest_element(t), rng);
    const auto& el = weyl_group_elements(t);
    WeylElement w = el[std::uniform_int_distribution<std::size_t>(0, el.size() - 1)(rng)];
    samples.push_back({t, lambda, word, w, random_reduced_word(w, rng), random_reduced_word(w, rng)});
  }
  std::vector<detail::CellGroup> groups;
  for (const auto& s : samples)
    groups.push_back([s] {
      auto c = detail::make_cell("axioms", s.t, s.lambda, s.w);
      auto fail = [&](const std::string& m) {
        c.pass = false;
        if (c.mismatches.size() < 10) c.mismatches.push_back(m);
      };
      StringCrystal cr(s.t, s.word);
      auto all = cr.generate(s.lambda);
      c.lattice_points = static_cast<std::int64_t>(all.size());
      if (static_cast<std::int64_t>(all.size()) != weyl_dimension(s.t, s.lambda)) fail("|B(lambda)| differs from the Weyl dimension");
      for (const auto& b : all)
        for (int i = 1; i <= s.t.rank; ++i) {
          std::int64_t eps = cr.epsilon(b, i), phi = cr.phi(b, i, s.lambda);
          if (phi - eps != cr.weight(b, s.lambda)[i - 1]) fail("phi - eps differs from the weight pairing");
          if (eps < 0 || phi < 0) fail("negative eps or phi");
          if (auto f = cr.f(b, i, s.lambda)) {
            if (!all.count(*f)) fail("f leaves B(lambda)");
            auto back = cr.e(*f, i);
            if (!back || *back != b) fail("e f b != b");
            if (cr.epsilon(*f, i) != eps + 1 || cr.phi(*f, i, s.lambda) != phi - 1) fail("f does not shift eps/phi");
          }
        }
      auto strings = cr.to_string_data(all);
      if (strings.size() != all.size()) fail("string parametrization is not injective");
      if (s.word == canonical_word(s.t)) {
        auto p = string_polytope(s.t, s.lambda);
        for (const auto& x : strings)
          if (!p->contains(x)) fail("string datum outside the string polytope");
      }
      // word independence of the Demazure crystal
      auto d0 = cr.demazure(s.w, s.lambda, s.w_word1);
      if (d0 != cr.demazure(s.w, s.lambda, s.w_word2)) fail("Demazure crystal depends on the reduced word");
      if (static_cast<std::int64_t>(d0.size()) != character_dimension(demazure_character(s.w, s.lambda)))
        fail("Demazure crystal size differs from the character dimension");
      return std::vector<VerifyCell>{c};
    });
  return detail::run_groups("axioms", groups, opt);
}

}  // namespace demazure
