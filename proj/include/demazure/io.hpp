#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan_weyl.hpp"
#include "crystal.hpp"
#include "pipedreams.hpp"
#include "polytope.hpp"
#include "schubert_faces.hpp"
#include "verify.hpp"

namespace demazure {

using json = nlohmann::ordered_json;

/// Parses "1,2,3" (empty string or "e" gives the empty list).
inline std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (s.empty() || s == "e") return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer list: " + s);
    }
    if (pos != item.size()) throw std::invalid_argument("not an integer list: " + s);
    out.push_back(v);
  }
  return out;
}

inline Word parse_word(const CartanType& t, const std::string& s) {
  Word w;
  for (auto v : parse_int_list(s)) {
    if (v < 1 || v > t.rank) throw std::invalid_argument("letter " + std::to_string(v) + " is not in 1.." + std::to_string(t.rank));
    w.push_back(static_cast<int>(v));
  }
  return w;
}

inline Weight parse_weight(const CartanType& t, const std::string& s) {
  Weight w = parse_int_list(s);
  if (static_cast<int>(w.size()) != t.rank) throw std::invalid_argument("lambda needs " + std::to_string(t.rank) + " coefficients");
  for (auto x : w)
    if (x < 0) throw std::invalid_argument("lambda must be dominant");
  return w;
}

/// Type A: "e2,...,en". Type C: "e2,...,en/e'1,...,e'n".
inline Deformation parse_deformation(const CartanType& t, const std::string& s) {
  Deformation d;
  auto slash = s.find('/');
  d.eps = parse_int_list(s.substr(0, slash));
  if (slash != std::string::npos) d.eps_prime = parse_int_list(s.substr(slash + 1));
  validate_deformation(t, d, true);
  return d;
}

inline json to_json(const Polytope& p) {
  json ineq = json::array(), labels = json::array();
  for (const auto& h : p.halfspaces()) {
    ineq.push_back(json::array({h.normal, h.offset}));
    labels.push_back(h.label);
  }
  return json{{"ambient_dim", p.dim()}, {"inequalities", ineq}, {"labels", labels}};
}

inline json to_json(const FaceTerm& f) {
  json j{{"dual", f.dual}, {"kogan", f.kogan}};
  j["name"] = face_term_string(f);
  return j;
}

inline json to_json(const FaceSum& s) {
  json a = json::array();
  for (const auto& [f, c] : s) {
    json j = to_json(f);
    j["coefficient"] = c;
    a.push_back(j);
  }
  return a;
}

inline json to_json(const PipeDream& d, bool pretty) {
  json boxes = json::array();
  for (auto [r, c] : d.boxes()) boxes.push_back(json::array({r, c}));
  json j{{"boxes", boxes}, {"k_D", d.k_D()}, {"k_prime_D", d.k_prime_D()}, {"reduced", d.is_reduced()}};
  if (pretty) j["diagram"] = d.render();
  return j;
}

inline json to_json(const PipeDreamSet& s, bool pretty) {
  json a = json::array();
  for (const auto& d : s) a.push_back(to_json(d, pretty));
  return a;
}

inline json to_json(const VerifyCell& c) {
  json j{{"theorem", c.theorem}, {"type", c.type}, {"rank", c.rank}, {"lambda", c.lambda}, {"w", c.w}};
  if (c.v) j["v"] = *c.v;
  j["status"] = c.pass ? "pass" : "fail";
  j["faces"] = c.faces;
  j["lattice_points"] = c.lattice_points;
  j["dropped_faces"] = c.dropped;
  j["mismatches"] = c.mismatches;
  return j;
}

inline json to_json(const VerifyReport& r) {
  json cells = json::array();
  for (const auto& c : r.cells) cells.push_back(to_json(c));
  std::string status = r.timed_out ? "timeout" : (r.pass() ? "pass" : "fail");
  return json{{"theorem", r.theorem}, {"status", status},    {"cells_total", r.cells.size()},
              {"cells_passed", r.passed()}, {"timed_out", r.timed_out}, {"cells", cells}};
}

/// "1,2" for s_1 s_2 and "e" for the identity.
inline std::string element_key(const WeylElement& u) {
  Word w = reduced_word(u);
  return w.empty() ? "e" : word_string(w);
}

inline json expansion_json(const std::map<WeylElement, std::int64_t>& e) {
  json j = json::object();
  for (const auto& [u, c] : e) j[element_key(u)] = c;
  return j;
}

inline json to_json(const ProductResult& r) {
  auto faces = [](const FaceSum& s) {
    json a = json::array();
    for (const auto& [f, c] : s)
      for (std::int64_t k = 0; k < c; ++k) a.push_back(f.dual);
    return a;
  };
  auto names = [](const std::vector<FaceTerm>& v) {
    json a = json::array();
    for (const auto& f : v) a.push_back(face_term_string(f));
    return a;
  };
  json degrees = json::object();
  for (const auto& [u, c] : r.face_degrees) degrees[element_key(u)] = c.str();
  return json{{"v", reduced_word(r.v)},
              {"w", reduced_word(r.w)},
              {"faces", faces(r.dual_product)},
              {"mixed_faces", to_json(r.mixed)},
              {"expansion", expansion_json(r.expansion)},
              {"certified", r.certified},
              {"method", r.method},
              {"oracle_checked", r.oracle_checked},
              {"face_degrees", degrees},
              {"dual_overlaps", names(r.dual_overlaps)},
              {"dropped_faces", names(r.mixed_dropped)},
              {"non_transversal", names(r.mixed_non_transversal)}};
}

/// CSV for a table of integer vectors with a header row x1..xN.
inline std::string coords_csv(const std::vector<Coords>& rows, int n) {
  std::string s;
  for (int k = 1; k <= n; ++k) s += (k > 1 ? "," : "") + std::string("x") + std::to_string(k);
  s += '\n';
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
    s += '\n';
  }
  return s;
}

}  // namespace demazure
