#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "earkit/building.hpp"
#include "earkit/complex.hpp"
#include "earkit/ears.hpp"
#include "earkit/errors.hpp"
#include "earkit/face_ring.hpp"
#include "earkit/flags.hpp"
#include "earkit/generators.hpp"
#include "earkit/homology.hpp"
#include "earkit/io.hpp"
#include "earkit/m_vectors.hpp"
#include "earkit/weak_order.hpp"

namespace earkit::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------- helpers

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

long long parse_integer(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::logic_error&) {
    throw InputError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw InputError("not an integer: '" + text + "'");
  return v;
}

std::vector<Count> parse_vector(const std::string& text) {
  std::vector<Count> out;
  for (std::string item : split(text, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw InputError("empty entry in vector '" + text + "'");
    out.push_back(parse_integer(item));
  }
  if (out.empty()) throw InputError("empty vector");
  return out;
}

// "" or "-" is the empty set; otherwise a comma-separated list of generators.
ColorSet parse_generator_set(const std::string& text) {
  if (text.empty() || text == "-" || text == "{}") return 0;
  std::string body = text;
  if (body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  std::vector<int> gens;
  for (Count v : parse_vector(body)) gens.push_back(static_cast<int>(v));
  return mask_of(gens);
}

json set_json(ColorSet mask) { return json(generators_of(mask)); }

json flag_json(const FlagVector& v) {
  json out = json::array();
  for (ColorSet a = 0; a < v.values().size(); ++a) {
    out.push_back({{"set", set_json(a)}, {"value", v[a]}});
  }
  return out;
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

json optional_face(const std::optional<Face>& f) { return f ? json(*f) : json(nullptr); }

json condition_json(const EarCondition& c) {
  json out = {{"ok", c.ok}};
  if (!c.ok) {
    out["ear"] = c.ear ? json(*c.ear) : json(nullptr);
    out["witness"] = optional_face(c.witness);
    out["detail"] = c.detail;
  }
  return out;
}

json comph_json(const ComphReport& c) {
  return {{"ok", c.ok},
          {"h_reversed", c.lhs},
          {"sum_of_ear_h", c.rhs},
          {"complementary_h", c.complementary},
          {"boundary_g_sum", c.boundary_g_sum},
          {"g_identity_ok", c.g_identity_ok}};
}

json ear_report_json(const EarReport& r) {
  return {{"m", r.m},
          {"condition1", condition_json(r.condition1)},
          {"condition2", condition_json(r.condition2)},
          {"condition3", condition_json(r.condition3)},
          {"polytopal", "unverified"},
          {"ok", r.ok()}};
}

json chari_json(const ChariReport& c) {
  json out = {{"g", c.g},
              {"g_m_vector", c.g_report.pass},
              {"symmetric_ok", c.symmetric_ok},
              {"ascent_ok", c.ascent_ok},
              {"pass", c.pass},
              {"literal_ascent_ok", c.literal_ascent_ok}};
  if (c.symmetric_fail) out["symmetric_fail_index"] = *c.symmetric_fail;
  if (c.ascent_fail) out["ascent_fail_index"] = *c.ascent_fail;
  if (c.literal_ascent_fail) out["literal_ascent_fail_index"] = *c.literal_ascent_fail;
  if (c.g_report.fail_index) out["g_fail_index"] = *c.g_report.fail_index;
  return out;
}

json m_report_json(const MVectorReport& r) {
  json out = {{"vector", r.input}, {"bounds", r.bounds}, {"pass", r.pass}};
  if (r.fail_index) {
    out["fail_index"] = *r.fail_index;
    out["reason"] = r.reason;
  }
  return out;
}

json complex_summary(const SimplicialComplex& c) {
  json out = {{"vertices", c.num_vertices()},
              {"facets", c.facets().size()},
              {"dim", c.dim()},
              {"pure", c.is_pure()}};
  if (!c.is_void()) {
    out["f"] = f_vector(c).values;
    out["h"] = h_vector(c).values;
  }
  return out;
}

// ---------------------------------------------------------------- context

struct Options {
  std::string field = "q";
  bool field_given = false;
  std::optional<std::uint64_t> seed;
  std::string json_path;
  std::optional<std::size_t> guard;
};

struct Run {
  json results = json::object();
  json inputs = json::array();
  std::string field_name;
  std::optional<std::uint64_t> seed;
  bool seed_drawn = false;

  SimplicialComplex load_complex(const std::string& path) {
    inputs.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    return read_facet_file(path);
  }
  Coloring load_coloring(const std::string& path, int colors = -1) {
    inputs.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    return read_coloring_file(path, colors);
  }
  std::vector<SimplicialComplex> load_ears(const std::string& path) {
    inputs.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    return read_ears_file(path);
  }
  std::uint64_t use_seed(const Options& opt) {
    if (!seed) {
      if (opt.seed) {
        seed = opt.seed;
      } else {
        std::random_device rd;
        seed = (static_cast<std::uint64_t>(rd()) << 32U) | rd();
        seed_drawn = true;
      }
    }
    return *seed;
  }
};

using Handler = std::function<int(Run&)>;

// ---------------------------------------------------------------- commands

struct GenArgs {
  std::string name;
  std::vector<std::string> params;
  std::string output;
  std::string coloring;
  std::string ears;
};

int cmd_gen(Run& run, const GenArgs& a) {
  std::vector<int> p;
  for (const auto& raw : a.params) {
    for (Count v : parse_vector(raw)) p.push_back(static_cast<int>(v));
  }
  auto need = [&](std::size_t k) {
    if (p.size() != k) throw InputError(a.name + " takes " + std::to_string(k) + " integer parameter(s)");
  };
  SimplicialComplex c;
  std::optional<Coloring> coloring;
  std::optional<std::vector<SimplicialComplex>> ears;
  if (a.name == "simplex-boundary") {
    need(1);
    c = simplex_boundary(p[0]);
  } else if (a.name == "cross-polytope") {
    need(1);
    c = cross_polytope_boundary(p[0]);
  } else if (a.name == "ps-sphere") {
    if (p.empty()) throw InputError("ps-sphere needs part sizes");
    c = ps_sphere(p);
    ears = std::vector<SimplicialComplex>{c};
  } else if (a.name == "uniform-matroid") {
    need(2);
    c = uniform_matroid_complex(p[0], p[1]);
    if (p[0] < p[1]) ears = uniform_matroid_ears(p[0], p[1]);
  } else if (a.name == "barycentric") {
    need(1);
    auto [complex, col] = barycentric_sd_simplex_boundary(p[0]);
    c = std::move(complex);
    coloring = std::move(col);
  } else {
    throw InputError("unknown generator '" + a.name +
                     "' (simplex-boundary, cross-polytope, ps-sphere, uniform-matroid, barycentric)");
  }
  write_facet_file(a.output, c);
  run.results["generator"] = a.name;
  run.results["params"] = p;
  run.results["output"] = a.output;
  run.results.update(complex_summary(c));
  if (!a.coloring.empty()) {
    if (!coloring) throw InputError(a.name + " has no canonical coloring");
    write_coloring_file(a.coloring, *coloring);
    run.results["coloring"] = a.coloring;
  }
  if (!a.ears.empty()) {
    if (!ears) throw InputError(a.name + " has no shipped ear decomposition");
    write_ears_file(a.ears, *ears);
    run.results["ears"] = a.ears;
    run.results["m"] = ears->size();
  }
  return kSuccess;
}

struct FileArgs {
  std::string path;
  std::string coloring;
  int q = 1;
  bool connectivity = false;
  int attempts = 5;
  std::string verify_field = "q";
};

int cmd_invariants(Run& run, const Options& opt, const FileArgs& a) {
  const Field field = Field::parse(opt.field);
  const SimplicialComplex c = run.load_complex(a.path);
  json& r = run.results;
  r.update(complex_summary(c));
  const BettiVector b = reduced_betti(c, field);
  r["betti"] = b.values;
  r["cm"] = is_cm(c, field).cm;
  try {
    r["cm_connectivity"] = cm_connectivity(c, field, opt.guard.value_or(kDefaultVertexGuard)).connectivity;
  } catch (const GuardRefusal& e) {
    r["cm_connectivity"] = {{"refused", e.what()}};
  }
  const HVector h = h_vector(c);
  r["g"] = g_vector(h);
  r["complementary_h"] = complementary_h(h);
  r["chari"] = chari_json(chari_check(h));
  if (c.is_pure()) {
    const auto failure = short_h_recursion_failure(c);
    r["short_h_recursion"] = failure ? json{{"ok", false}, {"m", failure->first}, {"i", failure->second}}
                                     : json{{"ok", true}};
  }
  if (!a.coloring.empty()) {
    const Coloring col = run.load_coloring(a.coloring);
    r["balanced"] = check_balanced(c, col);
    if (r["balanced"].get<bool>()) {
      r["flag_f"] = flag_json(flag_f(c, col));
      r["flag_h"] = flag_json(flag_h(c, col));
    }
  }
  return kSuccess;
}

int cmd_check_cm(Run& run, const Options& opt, const FileArgs& a) {
  const Field field = Field::parse(opt.field);
  const SimplicialComplex c = run.load_complex(a.path);
  json& r = run.results;
  const CmResult cm = is_cm(c, field);
  r["cm"] = cm.cm;
  if (!cm.cm) {
    r["witness_face"] = optional_face(cm.witness_face);
    r["witness_degree"] = cm.witness_degree;
  }
  bool ok = cm.cm;
  const std::size_t guard = opt.guard.value_or(kDefaultVertexGuard);
  if (a.q > 1) {
    const QcmResult q = is_qcm(c, a.q, field, guard);
    r["q"] = a.q;
    r["qcm"] = q.qcm;
    if (!q.qcm) {
      r["qcm_witness_set"] = q.witness_set ? json(*q.witness_set) : json(nullptr);
      r["qcm_reason"] = q.reason;
    }
    ok = ok && q.qcm;
  }
  if (a.connectivity) {
    const ConnectivityResult conn = cm_connectivity(c, field, guard);
    r["cm_connectivity"] = conn.connectivity;
    if (conn.first_failure.witness_set) r["next_failure_set"] = *conn.first_failure.witness_set;
  }
  return ok ? kSuccess : kVerifiedFailure;
}

int cmd_find_g(Run& run, const Options& opt, const FileArgs& a) {
  const Field field = opt.field_given ? Field::parse(opt.field) : Field::prime(kDefaultPrime);
  run.field_name = field.name();
  const SimplicialComplex c = run.load_complex(a.path);
  const std::uint64_t seed = run.use_seed(opt);
  const GElementSearch search = find_g_element(c, field, a.attempts, seed);
  json& r = run.results;
  r["h"] = h_vector(c).values;
  r["cm_warning"] = search.cm_warning;
  json attempts = json::array();
  for (const auto& at : search.attempts) {
    json j = {{"seed", at.seed}};
    if (!at.lsop_error.empty()) {
      j["lsop_error"] = at.lsop_error;
    } else {
      j["ranks"] = at.ranks;
      j["quotient_hilbert"] = at.quotient;
      if (at.short_index) j["short_index"] = *at.short_index;
    }
    attempts.push_back(j);
  }
  r["attempts"] = attempts;
  if (!search.certificate) {
    r["found"] = false;
    return kVerifiedFailure;
  }
  const GElementCertificate& cert = *search.certificate;
  const Field check = Field::parse(a.verify_field);
  const bool cross = verify_certificate(c, cert, check);
  r["found"] = true;
  r["certificate"] = {{"field", cert.field().name()},
                      {"seed", cert.seed},
                      {"omega", matrix_json(cert.omega)[0]},
                      {"theta", matrix_json(cert.theta)},
                      {"ranks", cert.ranks},
                      {"verified", cert.verified},
                      {"verified_over", check.name()},
                      {"cross_verified", cross}};
  return (cert.verified && cross) ? kSuccess : kVerifiedFailure;
}

struct MArgs {
  std::string vector;
  bool as_h = false;
  bool decompose = false;
  int count = -1;
};

int cmd_mcheck(Run& run, const Options& opt, const MArgs& a) {
  const std::vector<Count> v = parse_vector(a.vector);
  json& r = run.results;
  const std::uint64_t bound = opt.guard.value_or(kDefaultDecompositionBound);
  if (!a.as_h) {
    const MVectorReport rep = is_m_vector(v);
    r["m_vector"] = m_report_json(rep);
    bool ok = rep.pass;
    if (a.decompose) {
      if (a.count < 0) throw InputError("--decompose on a plain vector needs --count");
      const MDecomposition d = m_decomposition_search(v, a.count, bound);
      r["decomposition"] = {{"found", d.found}, {"parts", d.parts}, {"nodes", d.nodes}};
      ok = d.found;
    }
    return ok ? kSuccess : kVerifiedFailure;
  }
  const HVector h{v};
  const ChariReport chari = chari_check(h);
  r["h"] = v;
  r["chari"] = chari_json(chari);
  r["complementary_h"] = complementary_h(h);
  bool ok = chari.pass;
  if (a.decompose) {
    const std::vector<Count> hbar = complementary_h(h);
    const int count = a.count >= 0 ? a.count : static_cast<int>(v.back() - 1);
    const MDecomposition d = m_decomposition_search(hbar, count, bound);
    r["decomposition"] = {{"count", count}, {"found", d.found}, {"parts", d.parts}, {"nodes", d.nodes}};
    ok = ok && d.found;
  }
  return ok ? kSuccess : kVerifiedFailure;
}

struct DomArgs {
  int n = 3;
  int dihedral = 0;
  bool all = false;
  std::vector<std::string> pair;
  int problem = 0;
  int i = 0;
  bool strict = false;
};

int cmd_dominance(Run& run, const Options& opt, const DomArgs& a) {
  const int bound = static_cast<int>(opt.guard.value_or(kDefaultGroupBound));
  const CoxeterGroup group = a.dihedral > 0 ? CoxeterGroup::dihedral(a.dihedral) : CoxeterGroup::symmetric(a.n, bound);
  json& r = run.results;
  r["group"] = group.name();
  r["order"] = group.size();
  r["strict"] = a.strict;
  auto label = [&](std::size_t w) { return json(group.label(w)); };
  int modes = (a.all ? 1 : 0) + (a.pair.empty() ? 0 : 1) + (a.problem ? 1 : 0);
  if (modes != 1) throw InputError("choose exactly one of --all, --pair, --problem");
  if (!a.pair.empty()) {
    const ColorSet A = parse_generator_set(a.pair[0]);
    const ColorSet B = parse_generator_set(a.pair[1]);
    const Dominance d = dominates(group, A, B, a.strict);
    r["A"] = set_json(A);
    r["B"] = set_json(B);
    r["dominates"] = d.dominates;
    r["class_sizes"] = {d.class_a, d.class_b};
    json inj = json::array();
    for (const auto& [w, psi] : d.injection) inj.push_back({label(w), label(psi)});
    r["injection"] = inj;
    return kSuccess;
  }
  const ProblemReport rep = solve_problem(group, a.all ? 1 : a.problem, a.i, a.strict);
  r["problem"] = rep.kind;
  if (rep.kind != 1) r["i"] = rep.i;
  r["answer"] = rep.answer;
  if (!rep.detail.empty()) r["detail"] = rep.detail;
  json pairs = json::array();
  for (const auto& [x, y] : rep.pairs) pairs.push_back({set_json(x), set_json(y)});
  if (rep.kind <= 2) r["pairs"] = pairs;
  if (rep.kind >= 2) {
    r["left_size"] = rep.left_size;
    r["right_size"] = rep.right_size;
    r["matched"] = rep.matched;
  }
  if (rep.kind >= 3) {
    json map = json::array();
    for (const auto& [w, img] : rep.element_map) map.push_back({label(w), label(img)});
    r["map"] = map;
  }
  return kSuccess;
}

struct BuildingArgs {
  int n = 3;
  int q = 2;
  bool ears = false;
  std::size_t base = 0;
  std::string order = "lex";
  bool flagh = false;
  std::string export_prefix;
};

int cmd_building(Run& run, const Options& opt, const BuildingArgs& a) {
  const Building b = Building::build(a.n, a.q, opt.guard.value_or(kDefaultChamberGuard));
  json& r = run.results;
  r["n"] = a.n;
  r["q"] = a.q;
  r["vertices"] = b.complex().num_vertices();
  r["chambers"] = b.num_chambers();
  r["f"] = f_vector(b.complex()).values;
  r["h"] = h_vector(b.complex()).values;
  r["diameter"] = b.diameter();
  bool ok = true;
  if (a.flagh) {
    const FlagVector direct = flag_h_direct(b);
    const FlagVector formula = flag_h_formula(a.n, a.q);
    Count total = 0;
    for (Count v : direct.values()) total += v;
    const bool agree = direct == formula;
    // Every dominating pair must satisfy h_B <= h_A.
    const ProblemReport pairs = solve_problem(CoxeterGroup::symmetric(a.n), 1, 0);
    json violations = json::array();
    for (const auto& [A, B] : pairs.pairs) {
      if (direct[B] > direct[A]) violations.push_back({set_json(A), set_json(B)});
    }
    r["flag_h"] = {{"direct", flag_json(direct)},
                   {"formula", flag_json(formula)},
                   {"agree", agree},
                   {"total", total},
                   {"dominating_pairs", pairs.pairs.size()},
                   {"dominance_violations", violations}};
    ok = ok && agree && violations.empty();
  }
  BuildingEars ears;
  if (a.ears) {
    if (a.base >= b.num_chambers()) throw InputError("base chamber index out of range");
    const auto order = opposite_order(b, a.base, a.order);
    ears = ear_decomposition(b, a.base, order);
    json sizes = json::array();
    for (const auto& ch : ears.ear_chambers) sizes.push_back(ch.size());
    const ComphReport comph = comph_check(b.complex(), ears.ears);
    r["ears"] = {{"base", a.base},
                 {"base_chamber", b.chamber(a.base)},
                 {"order", a.order},
                 {"opposites", ears.order},
                 {"ear_facets", sizes},
                 {"report", ear_report_json(ears.report)},
                 {"comph", comph_json(comph)}};
    ok = ok && ears.report.ok() && comph.ok && comph.g_identity_ok;
  }
  if (!a.export_prefix.empty()) {
    write_facet_file(a.export_prefix + ".facets", b.complex());
    write_coloring_file(a.export_prefix + ".coloring", b.coloring());
    json files = {a.export_prefix + ".facets", a.export_prefix + ".coloring"};
    if (a.ears) {
      write_ears_file(a.export_prefix + ".ears", ears.ears);
      files.push_back(a.export_prefix + ".ears");
    }
    r["exported"] = files;
  }
  return ok ? kSuccess : kVerifiedFailure;
}

struct EarArgs {
  std::string complex;
  std::string ears;
};

int cmd_verify_ears(Run& run, const Options& opt, const EarArgs& a) {
  const Field field = Field::parse(opt.field);
  const SimplicialComplex c = run.load_complex(a.complex);
  const std::vector<SimplicialComplex> ears = run.load_ears(a.ears);
  json& r = run.results;
  const EarReport rep = verify_ears(c, ears, field);
  r["report"] = ear_report_json(rep);
  bool ok = rep.ok();
  if (ok) {
    const ComphReport comph = comph_check(c, ears, field);
    r["comph"] = comph_json(comph);
    r["chari"] = chari_json(chari_check(h_vector(c)));
    try {
      const TwoCmReport two = two_cm_consequence(c, field, opt.guard.value_or(kDefaultVertexGuard));
      r["cm_connectivity"] = two.connectivity;
      r["doubly_cm"] = two.ok;
      ok = ok && two.ok;
    } catch (const GuardRefusal& e) {
      r["cm_connectivity"] = {{"refused", e.what()}};
    }
    ok = ok && comph.ok && comph.g_identity_ok;
  }
  return ok ? kSuccess : kVerifiedFailure;
}

void print_summary(std::ostream& out, const json& results) {
  for (const auto& [key, value] : results.items()) {
    out << key << ": " << value.dump() << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"earkit: convex ear decompositions, face rings and buildings"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::string field_text;
  std::uint64_t seed_value = 0;
  std::size_t guard_value = 0;
  app.add_option("--field", field_text, "Coefficient field: q or gf:<p>");
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for randomized commands");
  app.add_option("--json", opt.json_path, "Write the run report to this path");
  auto* guard_opt = app.add_option("--guard", guard_value, "Size guard for the command");

  std::string command;
  Handler handler;

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a standard complex");
  g->add_option("name", gen.name)->required();
  g->add_option("params", gen.params);
  g->add_option("-o,--output", gen.output)->required();
  g->add_option("--coloring", gen.coloring, "Also write the coloring (barycentric)");
  g->add_option("--ears", gen.ears, "Also write an ear decomposition (uniform-matroid, ps-sphere)");

  FileArgs inv;
  auto* i = app.add_subcommand("invariants", "f, h, Betti numbers, CM data");
  i->add_option("complex", inv.path)->required();
  i->add_option("--coloring", inv.coloring);

  FileArgs cm;
  auto* c = app.add_subcommand("check-cm", "Reisner test, q-CM and CM-connectivity");
  c->add_option("complex", cm.path)->required();
  c->add_option("--q", cm.q, "Check q-CM");
  c->add_flag("--connectivity", cm.connectivity);

  FileArgs fg;
  auto* f = app.add_subcommand("find-g", "Search for an l.s.o.p. and g-element");
  f->add_option("complex", fg.path)->required();
  f->add_option("--attempts", fg.attempts);
  f->add_option("--verify-field", fg.verify_field, "Field for re-verification (default q)");

  MArgs mv;
  auto* m = app.add_subcommand("mcheck", "Macaulay test, Chari inequalities, decompositions");
  m->add_option("vector", mv.vector)->required();
  m->add_flag("--as-h", mv.as_h, "Treat the vector as an h-vector");
  m->add_flag("--decompose", mv.decompose, "Search an M-vector decomposition");
  m->add_option("--count", mv.count, "Number of M-vectors (default h_d - 1 with --as-h)");

  DomArgs dom;
  auto* d = app.add_subcommand("dominance", "Descent-class dominance and Problems 1-4");
  d->add_option("--n", dom.n);
  d->add_option("--dihedral", dom.dihedral, "Use I2(m) instead of S_n");
  d->add_flag("--all", dom.all);
  d->add_option("--pair", dom.pair, "A B (comma lists, '-' for the empty set)")->expected(2);
  d->add_option("--problem", dom.problem);
  d->add_option("--i", dom.i);
  d->add_flag("--strict", dom.strict, "Require w < psi(w)");

  BuildingArgs bld;
  auto* b = app.add_subcommand("building", "Type A building over GF(q)");
  b->add_option("--n", bld.n);
  b->add_option("--q", bld.q);
  b->add_flag("--ears", bld.ears);
  b->add_option("--base", bld.base);
  b->add_option("--order", bld.order, "lex or random:<seed>");
  b->add_flag("--flagh", bld.flagh);
  b->add_option("--export", bld.export_prefix, "Write <prefix>.facets/.coloring/.ears");

  EarArgs ea;
  auto* e = app.add_subcommand("verify-ears", "Verify an ear decomposition");
  e->add_option("--complex", ea.complex)->required();
  e->add_option("--ears", ea.ears)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }

  if (!field_text.empty()) {
    opt.field = field_text;
    opt.field_given = true;
  }
  if (*seed_opt) opt.seed = seed_value;
  if (*guard_opt) opt.guard = guard_value;

  Run run;
  if (*g) {
    command = "gen";
    handler = [&](Run& r) { return cmd_gen(r, gen); };
  } else if (*i) {
    command = "invariants";
    handler = [&](Run& r) { return cmd_invariants(r, opt, inv); };
  } else if (*c) {
    command = "check-cm";
    handler = [&](Run& r) { return cmd_check_cm(r, opt, cm); };
  } else if (*f) {
    command = "find-g";
    handler = [&](Run& r) { return cmd_find_g(r, opt, fg); };
  } else if (*m) {
    command = "mcheck";
    handler = [&](Run& r) { return cmd_mcheck(r, opt, mv); };
  } else if (*d) {
    command = "dominance";
    handler = [&](Run& r) { return cmd_dominance(r, opt, dom); };
  } else if (*b) {
    command = "building";
    handler = [&](Run& r) { return cmd_building(r, opt, bld); };
  } else {
    command = "verify-ears";
    handler = [&](Run& r) { return cmd_verify_ears(r, opt, ea); };
  }

  const auto start = std::chrono::steady_clock::now();
  int code = kSuccess;
  try {
    run.field_name = Field::parse(opt.field).name();
    code = handler(run);
  } catch (const GuardRefusal& ex) {
    run.results = {{"refused", ex.what()}, {"bound", ex.bound()}};
    code = kGuardRefusal;
  } catch (const InputError& ex) {
    run.results = {{"error", ex.what()}};
    code = kInputError;
  } catch (const VerificationError& ex) {
    run.results = {{"verification_failure", ex.what()}};
    code = kVerifiedFailure;
  } catch (const std::exception& ex) {
    run.results = {{"error", ex.what()}};
    code = kInputError;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report = {{"command", command},
                 {"inputs", run.inputs},
                 {"seed", run.seed ? json(*run.seed) : json(nullptr)},
                 {"field", run.field_name},
                 {"results", run.results},
                 {"timings", {{"total_ms", ms}}},
                 {"exit_code", code}};
  if (run.seed_drawn) err << "seed: " << *run.seed << "\n";
  if (code == kInputError || code == kGuardRefusal) {
    err << "error: " << run.results.begin().value().get<std::string>() << "\n";
  }
  print_summary(out, run.results);
  if (!opt.json_path.empty()) {
    std::ofstream file(opt.json_path);
    if (!file) {
      err << "error: cannot write " << opt.json_path << "\n";
      return kInputError;
    }
    file << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace earkit::cli
