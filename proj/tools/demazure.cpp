#include <cstdlib>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "demazure/io.hpp"
#include "demazure/oracle.hpp"
#include "demazure/pipedreams.hpp"
#include "demazure/schubert_faces.hpp"
#include "demazure/verify.hpp"

using namespace demazure;

namespace {

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kBudget = 3 };

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  std::string type;
  int rank = 0;
  std::string word;
  std::string lambda;
  std::string w = "e";
  std::string v = "e";
  std::string epsilon;
  std::string kind = "all";
  std::string side = "both";
  std::string format = "json";
  std::string theorem;
  bool pretty = false;
  bool volume = false;
  int jobs = 1;
  int lambda_max = 2;
  int samples = 20;
  std::uint64_t seed = 1;
  double timeout = 0;
};

void add_common(CLI::App* cmd, Config& cfg, bool type_required = true) {
  auto* t = cmd->add_option("--type", cfg.type, "Cartan type")->check(CLI::IsMember({"A", "C"}));
  auto* r = cmd->add_option("--rank", cfg.rank, "rank n")->check(CLI::Range(1, 8));
  if (type_required) {
    t->required();
    r->required();
  }
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_flag("--pretty", cfg.pretty, "include ASCII diagrams");
  cmd->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
}

CartanType type_of(const Config& cfg) {
  if (cfg.type.empty() || cfg.rank < 1) throw BadInput("--type and --rank are required");
  return make_type(cfg.type[0], cfg.rank);
}

Word word_of(const CartanType& t, const Config& cfg) {
  if (cfg.word.empty() || cfg.word == "canonical" || cfg.word == "iA" || cfg.word == "iC") {
    if ((cfg.word == "iA" && t.family != Family::A) || (cfg.word == "iC" && t.family != Family::C))
      throw BadInput("word selector does not match the type");
    return canonical_word(t);
  }
  Word w = parse_word(t, cfg.word);
  if (static_cast<int>(w.size()) != t.num_positive_roots() || !is_reduced_word(t, w))
    throw BadInput("--word must be a reduced word of w0");
  return w;
}

Weight lambda_of(const CartanType& t, const Config& cfg) {
  if (cfg.lambda.empty()) return rho(t);
  return parse_weight(t, cfg.lambda);
}

WeylElement element_of(const CartanType& t, const std::string& s) { return WeylElement::from_word(t, parse_word(t, s)); }

json header(const CartanType& t) { return json{{"type", std::string(1, t.family == Family::A ? 'A' : 'C')}, {"rank", t.rank}}; }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<Coords> sorted(const CoordSet& s) { return {s.begin(), s.end()}; }

int cmd_crystal(const Config& cfg) {
  auto t = type_of(cfg);
  Word word = word_of(t, cfg);
  Weight lambda = lambda_of(t, cfg);
  StringFaces sf(t, lambda, word);
  WeylElement w = element_of(t, cfg.w), v = element_of(t, cfg.v);
  CoordSet s;
  if (cfg.kind == "all")
    s = sf.crystal_all();
  else if (cfg.kind == "demazure")
    s = sf.crystal_demazure(w);
  else if (cfg.kind == "opposite")
    s = sf.crystal_opposite(w);
  else if (!bruhat_leq(v, w))
    throw BadInput("richardson needs v <= w");
  else
    s = sf.crystal_richardson(v, w);
  if (cfg.format == "csv") {
    std::cout << coords_csv(sorted(s), t.num_positive_roots());
    return kOk;
  }
  json j = header(t);
  j["word"] = word;
  j["lambda"] = lambda;
  j["kind"] = cfg.kind;
  j["w"] = reduced_word(w);
  if (cfg.kind == "richardson") j["v"] = reduced_word(v);
  j["count"] = s.size();
  j["elements"] = sorted(s);
  emit(j);
  return kOk;
}

json union_json(const StringFaces& sf, const LatticeUnion& u, const std::vector<std::string>& labels,
                bool schubert) {
  json faces = json::array();
  const int N = sf.type().num_positive_roots();
  for (const auto& f : u.faces) {
    json e = json::array();
    for (int i : f.tight(N)) e.push_back(labels[i]);
    faces.push_back(json{{schubert ? "k_D" : "k", schubert ? f.kogan : f.dual}, {"equations", e}});
  }
  json dropped = json::array();
  for (const auto& f : u.dropped) dropped.push_back(face_term_string(f));
  return json{{"faces", faces}, {"lattice_points", u.points.size()}, {"dropped_faces", dropped}};
}

int cmd_faces(const Config& cfg) {
  auto t = type_of(cfg);
  if (cfg.format != "json") throw BadInput("faces only supports --format json");
  Word word = word_of(t, cfg);
  Weight lambda = lambda_of(t, cfg);
  WeylElement w = element_of(t, cfg.w);
  StringFaces sf(t, lambda, word);
  const int N = t.num_positive_roots();
  std::vector<std::string> labels;
  for (const auto& b : lambda_bounds(t, word)) labels.push_back(equation_string(b));
  if (sf.certified())
    for (int i = N; i < 2 * N; ++i) labels.push_back(sf.polytope()->halfspace(i).label + " (cone)");

  json j = header(t);
  j["word"] = word;
  j["certified"] = sf.certified();
  j["lambda"] = lambda;
  j["w"] = reduced_word(w);
  if (cfg.side != "schubert") {
    json o = union_json(sf, sf.opposite_union(w), labels, false);
    if (cfg.volume) o["volume"] = sf.volume(Side::Opposite, w).str();
    j["opposite"] = o;
  }
  if (cfg.side != "opposite" && sf.certified()) {
    json s = union_json(sf, sf.demazure_union(w), labels, true);
    s["pipe_dreams"] = to_json(mitosis_set(make_shape(t), w), cfg.pretty);
    if (cfg.volume) s["volume"] = sf.volume(Side::Schubert, w).str();
    j["schubert"] = s;
  }
  emit(j);
  return kOk;
}

int cmd_pipedreams(const Config& cfg) {
  auto t = type_of(cfg);
  if (cfg.format != "json") throw BadInput("pipedreams only supports --format json");
  auto shape = make_shape(t);
  Word wd = parse_word(t, cfg.w);
  WeylElement w = WeylElement::from_word(t, wd);
  json j = header(t);
  j["w"] = reduced_word(w);
  j["bottom"] = to_json(bottom_pipe_dream(shape, w), cfg.pretty);
  j["ladder_closure"] = to_json(ladder_set(shape, w), cfg.pretty);
  j["mitosis"] = to_json(mitosis_set(shape, w), cfg.pretty);
  if (t.family == Family::A && !wd.empty()) {
    if (!is_reduced_word(t, wd)) throw BadInput("--w must be a reduced word for the mitosis chain");
    j["mitosis_chain"] = to_json(mitosis_chain(shape, wd), cfg.pretty);
  }
  emit(j);
  return kOk;
}

int cmd_product(const Config& cfg) {
  auto t = type_of(cfg);
  if (cfg.format != "json") throw BadInput("product only supports --format json");
  std::optional<Deformation> d;
  if (!cfg.epsilon.empty()) d = parse_deformation(t, cfg.epsilon);
  std::optional<Weight> lambda;
  if (!cfg.lambda.empty()) lambda = parse_weight(t, cfg.lambda);
  SchubertCalculus sc(t, d, lambda);
  BGGOracle bgg(t);
  auto r = sc.product(element_of(t, cfg.v), element_of(t, cfg.w), &bgg);
  json j = header(t);
  j["lambda"] = sc.lambda();
  json body = to_json(r);
  for (auto& [k, val] : body.items()) j[k] = val;
  emit(j);
  return kOk;
}

int cmd_verify(const Config& cfg) {
  if (cfg.format != "json") throw BadInput("verify only supports --format json");
  VerifyOptions opt;
  opt.lambda_max = cfg.lambda_max;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.jobs = cfg.jobs;
  if (cfg.timeout > 0) opt.timeout_seconds = cfg.timeout;
  const std::string& th = cfg.theorem;
  if (!cfg.type.empty() || cfg.rank > 0) {
    auto t = type_of(cfg);
    if ((th == "2" && t.family != Family::A) || (th == "3" && t.family != Family::C))
      throw BadInput("theorem " + th + " is stated for type " + (th == "2" ? "A" : "C"));
    opt.types = {t};
  } else if (th == "1") {
    opt.types = {make_type('A', 2), make_type('A', 3), make_type('C', 2)};
  } else if (th == "2") {
    opt.types = {make_type('A', 2), make_type('A', 3)};
  } else if (th == "3" || th == "duality" || th == "products") {
    opt.types = {make_type('C', 2)};
  }
  VerifyReport r;
  if (th == "1")
    r = verify_theorem1(opt);
  else if (th == "2" || th == "3")
    r = verify_demazure("theorem" + th, opt);
  else if (th == "duality")
    r = verify_duality(opt);
  else if (th == "products")
    r = verify_products(opt);
  else
    r = verify_axioms(opt);
  emit(to_json(r));
  if (r.timed_out) return kBudget;
  return r.pass() ? kOk : kViolation;
}

int cmd_volume(const Config& cfg) {
  auto t = type_of(cfg);
  if (cfg.format != "json") throw BadInput("volume only supports --format json");
  Weight lambda = lambda_of(t, cfg);
  StringFaces sf(t, lambda);
  json j = header(t);
  j["lambda"] = lambda;
  j["weyl_dimension"] = weyl_dimension(t, lambda);
  j["lattice_points"] = sf.num_points();
  j["weyl_volume"] = weyl_volume(t, lambda).str();
  const int N = t.num_positive_roots();
  auto whole = make_face(sf.polytope(), {});
  if (whole.dim() == N) {
    j["volume"] = ehrhart_volume(whole).volume.str();
  } else {
    j["volume"] = "0";
  }
  if (cfg.w != "e" || cfg.side != "both") {
    WeylElement w = element_of(t, cfg.w);
    BGGOracle bgg(t);
    json sides = json::object();
    for (Side side : {Side::Schubert, Side::Opposite}) {
      std::string name = side == Side::Schubert ? "schubert" : "opposite";
      if (cfg.side != "both" && cfg.side != name) continue;
      int d = side == Side::Schubert ? length(w) : N - length(w);
      WeylElement x = side == Side::Schubert ? w : longest_element(t) * w;
      Rational fact(1);
      for (int k = 2; k <= d; ++k) fact *= Rational(k);
      json s{{"dimension", d},
             {"h0_dimension", sf.h0_dimension(side, w)},
             {"volume", sf.volume(side, w).str()},
             {"degree_volume", (bgg.schubert_degree(x, lambda) / fact).str()}};
      if (side == Side::Schubert) s["character_dimension"] = character_dimension(demazure_character(w, lambda));
      sides[name] = s;
    }
    j["w"] = reduced_word(w);
    j["varieties"] = sides;
  }
  emit(j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Demazure crystals, string polytopes and Schubert calculus in types A and C"};
  app.require_subcommand(1);
  Config cfg;

  auto* crystal = app.add_subcommand("crystal", "enumerate B(lambda), B_w(lambda), B^w(lambda) or their intersection");
  add_common(crystal, cfg);
  crystal->add_option("--word", cfg.word, "reduced word of w0 (iA, iC or comma list)");
  crystal->add_option("--lambda", cfg.lambda, "fundamental coefficients");
  crystal->add_option("--w", cfg.w, "Weyl group element as letters");
  crystal->add_option("--v", cfg.v, "lower element for richardson");
  crystal->add_option("--kind", cfg.kind, "which set")->check(CLI::IsMember({"all", "demazure", "opposite", "richardson"}));

  auto* faces = app.add_subcommand("faces", "face decompositions of (opposite) Demazure crystals");
  add_common(faces, cfg);
  faces->add_option("--word", cfg.word, "reduced word of w0 (iA, iC or comma list)");
  faces->add_option("--lambda", cfg.lambda, "fundamental coefficients");
  faces->add_option("--w", cfg.w, "Weyl group element as letters");
  faces->add_option("--side", cfg.side, "which decomposition")->check(CLI::IsMember({"both", "schubert", "opposite"}));
  faces->add_flag("--volume", cfg.volume, "add face-union volumes");

  auto* pipes = app.add_subcommand("pipedreams", "D(w), its ladder closure and the mitosis set");
  add_common(pipes, cfg);
  pipes->add_option("--w", cfg.w, "Weyl group element as letters");

  auto* product = app.add_subcommand("product", "[X^v][X^w] as faces of the deformed GT/SGT polytope");
  add_common(product, cfg);
  product->add_option("--v", cfg.v, "first factor");
  product->add_option("--w", cfg.w, "second factor");
  product->add_option("--epsilon", cfg.epsilon, "deformation eps_2..eps_n[/eps'_1..eps'_n]");
  product->add_option("--lambda", cfg.lambda, "regular dominant weight (auto-scaled)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, cfg, false);
  verify->add_option("theorem", cfg.theorem, "suite")
      ->required()
      ->transform(CLI::Transformer({{"theorem1", "1"}, {"theorem2", "2"}, {"theorem3", "3"}}))
      ->check(CLI::IsMember({"1", "2", "3", "duality", "products", "axioms"}));
  verify->add_option("--lambda-max", cfg.lambda_max, "largest lambda coefficient")->check(CLI::Range(0, 4));
  verify->add_option("--samples", cfg.samples, "random samples for axioms")->check(CLI::NonNegativeNumber);
  verify->add_option("--timeout", cfg.timeout, "budget in seconds");

  auto* volume = app.add_subcommand("volume", "dimensions and volumes of string polytopes and their faces");
  add_common(volume, cfg);
  volume->add_option("--lambda", cfg.lambda, "fundamental coefficients");
  volume->add_option("--w", cfg.w, "Weyl group element as letters");
  volume->add_option("--side", cfg.side, "which variety")->check(CLI::IsMember({"both", "schubert", "opposite"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*crystal) return cmd_crystal(cfg);
    if (*faces) return cmd_faces(cfg);
    if (*pipes) return cmd_pipedreams(cfg);
    if (*product) return cmd_product(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*volume) return cmd_volume(cfg);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << '\n';
    return kViolation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  }
  return kBadInput;
}
