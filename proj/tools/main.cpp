// Command-line front end for the starcluster library.
//
// Subcommands:
//   gen        emit a generated hypergraph (cycle / tightpath / random, plus
//              the `lk` link expansion applied on top of a base generator)
//   normalize  apply the normalization fixpoint and report what was removed
//   betti      exact reduced integral homology of the independence complex
//   cycles     induced Berge 3-cycle witnesses, ternary cycle search, packing
//   reduce     run the reduction pipeline and report the trace / verdict
//   graphify   replace size->=3 edges by gadgets until a graph remains
//   search     sample random ternary-free instances, check total Betti <= 1
//   verify     replay the closure/star identities behind the reduction
//
// Exit codes: 0 ok, 2 parse/usage error, 3 enumeration guard, 4 verification
// failure, 5 search or combination budget exhausted.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starcluster/cycles.hpp"
#include "starcluster/errors.hpp"
#include "starcluster/homology.hpp"
#include "starcluster/hypergraph.hpp"
#include "starcluster/io.hpp"
#include "starcluster/oracle.hpp"
#include "starcluster/reduction.hpp"

namespace sc = starcluster;
using nlohmann::json;

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kGuard = 3,
  kVerifyFailed = 4,
  kBudget = 5,
};

int log_level() {
  static const int level = [] {
    const char* raw = std::getenv("STARCLUSTER_LOG");
    if (raw == nullptr) return 0;
    const std::string value(raw);
    if (value.empty() || value == "off" || value == "none" || value == "0") return 0;
    if (value == "debug" || value == "2") return 2;
    return 1;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= 1) std::cerr << "starcluster: " << message << '\n';
}

void log_debug(const std::string& message) {
  if (log_level() >= 2) std::cerr << "starcluster: " << message << '\n';
}

// Options shared by every subcommand that consumes a hypergraph.
struct CommonOptions {
  std::string input;
  std::string gen;
  std::string format = "text";
  bool json_output = false;
  std::uint64_t seed = 1;
};

void add_input_options(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("-i,--input", opts->input,
                  "read the hypergraph from FILE ('-' for stdin)");
  cmd->add_option("-g,--gen", opts->gen,
                  "generate the input: cycle:N | tightpath:N,K | random:N,DENSITY,MIN,MAX");
  cmd->add_option("--format", opts->format, "file format: text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--json", opts->json_output, "emit JSON instead of plain text");
  cmd->add_option("--seed", opts->seed, "seed for randomized generators");
}

long parse_long(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used != token.size()) throw sc::ParseError("bad " + what + ": '" + token + "'");
    return value;
  } catch (const sc::ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw sc::ParseError("bad " + what + ": '" + token + "'");
  }
}

double parse_double(const std::string& token, const std::string& what) {
  try {
    std::size_t used = 0;
    const double value = std::stod(token, &used);
    if (used != token.size()) throw sc::ParseError("bad " + what + ": '" + token + "'");
    return value;
  } catch (const sc::ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw sc::ParseError("bad " + what + ": '" + token + "'");
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

// Generator specs: cycle:N, tightpath:N,K, random:N,DENSITY,MIN,MAX
// (random also accepts MIN-MAX as a single field).
sc::Hypergraph generate(const std::string& spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::vector<std::string> args;
  if (colon != std::string::npos) args = split(spec.substr(colon + 1), ',');

  if (name == "cycle") {
    if (args.size() != 1) throw sc::ParseError("cycle generator expects cycle:N");
    return sc::cycle_graph(static_cast<int>(parse_long(args[0], "cycle length")));
  }
  if (name == "tightpath") {
    if (args.size() != 2) throw sc::ParseError("tight path generator expects tightpath:N,K");
    return sc::tight_path(static_cast<int>(parse_long(args[0], "vertex count")),
                          static_cast<int>(parse_long(args[1], "edge size")));
  }
  if (name == "random") {
    if (args.size() != 3 && args.size() != 4)
      throw sc::ParseError("random generator expects random:N,DENSITY,MIN,MAX");
    const int n = static_cast<int>(parse_long(args[0], "vertex count"));
    const double density = parse_double(args[1], "density");
    int min_size = 0;
    int max_size = 0;
    if (args.size() == 4) {
      min_size = static_cast<int>(parse_long(args[2], "min edge size"));
      max_size = static_cast<int>(parse_long(args[3], "max edge size"));
    } else {
      const auto dash = args[2].find('-');
      if (dash == std::string::npos)
        throw sc::ParseError("random size range expects MIN,MAX or MIN-MAX");
      min_size = static_cast<int>(parse_long(args[2].substr(0, dash), "min edge size"));
      max_size = static_cast<int>(parse_long(args[2].substr(dash + 1), "max edge size"));
    }
    log_debug("random generator: n=" + std::to_string(n) + " density=" + args[1] +
              " sizes=" + std::to_string(min_size) + ".." + std::to_string(max_size) +
              " seed=" + std::to_string(seed));
    return sc::random_hypergraph(n, min_size, max_size, density, seed);
  }
  throw sc::ParseError("unknown generator '" + name +
                       "' (expected cycle:N, tightpath:N,K or random:N,DENSITY,MIN,MAX)");
}

sc::Hypergraph load_input(const CommonOptions& opts) {
  const bool has_input = !opts.input.empty();
  const bool has_gen = !opts.gen.empty();
  if (has_input && has_gen) throw sc::ParseError("--input and --gen are mutually exclusive");
  if (!has_input && !has_gen) throw sc::ParseError("one of --input or --gen is required");
  if (has_gen) return generate(opts.gen, opts.seed);
  if (opts.input == "-") {
    if (opts.format == "json") {
      json parsed;
      try {
        parsed = json::parse(std::cin);
      } catch (const json::exception& e) {
        throw sc::ParseError(std::string("bad JSON on stdin: ") + e.what());
      }
      return sc::hypergraph_from_json(parsed);
    }
    return sc::read_text(std::cin);
  }
  log_debug("reading " + opts.input + " (" + opts.format + ")");
  return sc::read_hypergraph_file(
      opts.input, opts.format == "json" ? sc::FileFormat::Json : sc::FileFormat::Text);
}

void emit_hypergraph(const sc::Hypergraph& h, bool as_json) {
  if (as_json) {
    std::cout << sc::hypergraph_to_json(h).dump(2) << '\n';
  } else {
    sc::write_text(std::cout, h);
  }
}

std::string render_edge(const sc::Edge& e) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out << ' ';
    out << e[i];
  }
  out << '}';
  return out.str();
}

std::string render_cycle(const sc::BergeCycle& c) {
  std::ostringstream out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    out << c.vertices[i] << " -" << render_edge(c.edges[i]) << "- ";
  }
  out << "(length " << c.length() << ")";
  return out.str();
}

std::string render_betti(const sc::HomologyProfile& profile) {
  const int top = profile.betti.empty() ? -1 : profile.betti.rbegin()->first;
  std::ostringstream out;
  out << "b[-1.." << top << "] = [";
  for (int d = -1; d <= top; ++d) {
    if (d > -1) out << ", ";
    out << profile.betti_at(d);
  }
  out << ']';
  return out.str();
}

std::string render_torsion(const sc::HomologyProfile& profile) {
  if (profile.torsion.empty()) return "torsion: none";
  std::ostringstream out;
  bool first = true;
  for (const auto& [dim, factors] : profile.torsion) {
    if (!first) out << "; ";
    first = false;
    out << "torsion[" << dim << "]:";
    for (const auto& f : factors) out << ' ' << f;
  }
  return out.str();
}

// ---------------------------------------------------------------- gen -----

struct GenOptions {
  CommonOptions common;
  std::string spec;
  // lk expansion
  int lk_k = 2;
  std::string lk_base;
  std::string lk_path;
};

int cmd_gen(const GenOptions& opts, bool lk_requested) {
  if (lk_requested) {
    if (opts.lk_base.empty()) throw sc::ParseError("gen lk requires --base");
    sc::Hypergraph base = generate(opts.lk_base, opts.common.seed);
    std::vector<sc::Vertex> path;
    if (!opts.lk_path.empty()) {
      for (const auto& tok : split(opts.lk_path, ','))
        path.push_back(static_cast<sc::Vertex>(parse_long(tok, "path vertex")));
    } else {
      // Default: the first 2k-2 vertices of the base in ascending order.
      const auto& vs = base.vertices();
      const std::size_t need = static_cast<std::size_t>(2 * opts.lk_k - 2);
      if (vs.size() < need)
        throw sc::ParseError("base has too few vertices for --k " + std::to_string(opts.lk_k));
      path.assign(vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(need));
    }
    sc::Hypergraph expanded = sc::lk_expand(base, path, opts.lk_k);
    emit_hypergraph(expanded, opts.common.json_output);
    return kOk;
  }
  if (opts.spec.empty()) throw sc::ParseError("gen requires a generator spec (or the lk subcommand)");
  emit_hypergraph(generate(opts.spec, opts.common.seed), opts.common.json_output);
  return kOk;
}

// ---------------------------------------------------------- normalize -----

int cmd_normalize(const CommonOptions& opts) {
  const sc::Hypergraph h = load_input(opts);
  const sc::NormalizationReport report = sc::normalize(h);
  if (opts.json_output) {
    json out;
    out["removed_superset_edges"] = json::array();
    for (const auto& e : report.removed_superset_edges) out["removed_superset_edges"].push_back(e);
    out["removed_singleton_vertices"] = report.removed_singleton_vertices;
    out["resulting"] = sc::hypergraph_to_json(report.resulting);
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "removed superset edges: " << report.removed_superset_edges.size() << '\n';
  for (const auto& e : report.removed_superset_edges) std::cout << "  " << render_edge(e) << '\n';
  std::cout << "removed vertices: " << report.removed_singleton_vertices.size() << '\n';
  if (!report.removed_singleton_vertices.empty()) {
    std::cout << " ";
    for (sc::Vertex v : report.removed_singleton_vertices) std::cout << ' ' << v;
    std::cout << '\n';
  }
  std::cout << "resulting:\n";
  sc::write_text(std::cout, report.resulting);
  return kOk;
}

// -------------------------------------------------------------- betti -----

int cmd_betti(const CommonOptions& opts, int max_vertices) {
  const sc::Hypergraph h = load_input(opts);
  log_info("computing homology on " + std::to_string(h.vertex_count()) + " vertices");
  const sc::HomologyProfile profile = sc::betti(h, max_vertices);
  if (opts.json_output) {
    std::cout << profile.to_json().dump(2) << '\n';
    return kOk;
  }
  std::cout << render_betti(profile) << '\n'
            << render_torsion(profile) << '\n'
            << "euler: " << profile.euler << '\n'
            << "total: " << profile.total() << '\n';
  return kOk;
}

// ------------------------------------------------------------- cycles -----

int cmd_cycles(const CommonOptions& opts, std::uint64_t budget) {
  const sc::Hypergraph h = load_input(opts);
  sc::SearchOptions search;
  search.node_budget = budget;

  json out;
  out["induced_3cycles"] = json::array();
  std::vector<std::pair<sc::Vertex, std::optional<sc::BergeCycle>>> witnesses;
  for (sc::Vertex v : h.vertices()) {
    auto w = sc::vertex_in_induced_3cycle(h, v);
    witnesses.emplace_back(v, w);
    json row;
    row["vertex"] = v;
    row["witness"] = w ? w->to_json() : json(nullptr);
    out["induced_3cycles"].push_back(row);
  }

  bool budget_hit = false;
  std::optional<sc::BergeCycle> ternary;
  int packing = 0;
  try {
    ternary = sc::has_ternary_berge_cycle(h, search);
    packing = sc::disjoint_ternary_packing(h, 1'000'000, search);
  } catch (const sc::SearchBudgetExceededError& e) {
    budget_hit = true;
    log_info(std::string("cycle search budget exhausted: ") + e.what());
  }

  out["ternary"] = ternary ? ternary->to_json() : json(nullptr);
  out["packing"] = budget_hit ? json(nullptr) : json(packing);
  out["status"] = budget_hit ? "unknown" : "ok";

  if (opts.json_output) {
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& [v, w] : witnesses) {
      std::cout << "vertex " << v << ": "
                << (w ? "induced 3-cycle " + render_cycle(*w) : std::string("no induced 3-cycle"))
                << '\n';
    }
    if (budget_hit) {
      std::cout << "ternary cycle: unknown (budget exhausted)\n";
    } else if (ternary) {
      std::cout << "ternary cycle: " << render_cycle(*ternary) << '\n'
                << "t(H) = " << packing << '\n';
    } else {
      std::cout << "ternary cycle: none\n"
                << "t(H) = 0\n";
    }
  }
  return budget_hit ? kBudget : kOk;
}

// ------------------------------------------------------------- reduce -----

void print_trace(const sc::ReductionTrace& trace) {
  int index = 0;
  for (const auto& step : trace.steps) {
    ++index;
    std::cout << "step " << index << ": ";
    switch (step.kind) {
      case sc::ReductionMove::Kind::Hv:
        std::cout << "Hv vertex " << *step.vertex;
        break;
      case sc::ReductionMove::Kind::He:
        std::cout << "He edge " << render_edge(*step.edge);
        break;
      case sc::ReductionMove::Kind::Normalize:
        std::cout << "normalize (-" << step.report->removed_superset_edges.size()
                  << " superset edges, -" << step.report->removed_singleton_vertices.size()
                  << " vertices)";
        break;
    }
    std::cout << " -> " << step.resulting_vertex_count << " vertices / "
              << step.resulting_edge_count << " edges\n";
  }
  std::cout << "suspensions: " << trace.suspensions << '\n';
}

// Expected homology of the input, reconstructed from a pipeline verdict:
// each recorded suspension shifts every reduced Betti number up one dimension.
sc::HomologyProfile shift_profile(const sc::HomologyProfile& base, int shift) {
  sc::HomologyProfile out;
  out.betti[-1] = 0;
  int top = base.betti.empty() ? -1 : base.betti.rbegin()->first;
  for (int d = -1; d <= top; ++d) {
    int target = d + shift;
    if (target >= -1) out.betti[target] = base.betti_at(d);
  }
  for (int d = -1 + shift; d <= top + shift; ++d) {
    if (out.betti.find(d) == out.betti.end()) out.betti[d] = 0;
  }
  for (const auto& [dim, factors] : base.torsion) out.torsion[dim + shift] = factors;
  out.euler = 0;
  for (const auto& [dim, value] : out.betti) {
    out.euler += (dim % 2 == 0 ? value : -value);
  }
  return out;
}

bool profiles_agree(const sc::HomologyProfile& a, const sc::HomologyProfile& b) {
  int top = -1;
  if (!a.betti.empty()) top = std::max(top, a.betti.rbegin()->first);
  if (!b.betti.empty()) top = std::max(top, b.betti.rbegin()->first);
  for (int d = -1; d <= top; ++d) {
    if (a.betti_at(d) != b.betti_at(d)) return false;
  }
  return a.torsion == b.torsion;
}

int cmd_reduce(const CommonOptions& opts, const std::string& strategy_name,
               std::uint64_t tuple_cap, bool verify, int max_vertices) {
  const sc::Hypergraph h = load_input(opts);
  const sc::Strategy strategy =
      strategy_name == "greedy" ? sc::Strategy::Greedy : sc::Strategy::Lex;
  sc::ReductionOptions options;
  options.tuple_cap = tuple_cap;

  sc::ReductionTrace trace;
  try {
    trace = sc::reduce_pipeline(h, strategy, options);
  } catch (const sc::PipelineBudgetError& e) {
    std::cerr << "error: reduction budget exhausted: " << e.what() << '\n';
    if (!opts.json_output) print_trace(e.partial_trace());
    return kBudget;
  }

  // Verdict-implied profile of the input complex, for --verify and display.
  std::optional<sc::HomologyProfile> fallback;
  if (trace.verdict.kind == sc::Verdict::Kind::Residual) {
    log_info("residual verdict; computing fallback homology on " +
             std::to_string(trace.verdict.remainder.vertex_count()) + " vertices");
    fallback = sc::betti(trace.verdict.remainder, max_vertices);
  }

  if (opts.json_output) {
    json out = trace.to_json();
    if (fallback) out["fallback_homology"] = fallback->to_json();
    if (verify) {
      const sc::HomologyProfile actual = sc::betti(h, max_vertices);
      sc::HomologyProfile expected;
      switch (trace.verdict.kind) {
        case sc::Verdict::Kind::Contractible:
          expected.betti[-1] = 0;
          break;
        case sc::Verdict::Kind::Sphere:
          expected.betti[-1] = 0;
          expected.betti[trace.verdict.dimension] = 1;
          break;
        case sc::Verdict::Kind::Residual:
          expected = shift_profile(*fallback, trace.suspensions);
          break;
      }
      const bool ok = profiles_agree(actual, expected);
      out["verified"] = ok;
      std::cout << out.dump(2) << '\n';
      if (!ok) {
        std::cerr << "error: verdict disagrees with direct homology\n"
                  << "  direct:  " << render_betti(actual) << '\n'
                  << "  verdict: " << render_betti(expected) << '\n';
        return kVerifyFailed;
      }
      return kOk;
    }
    std::cout << out.dump(2) << '\n';
    return kOk;
  }

  print_trace(trace);
  switch (trace.verdict.kind) {
    case sc::Verdict::Kind::Contractible:
      std::cout << "verdict: Contractible\n";
      break;
    case sc::Verdict::Kind::Sphere:
      std::cout << "verdict: Sphere(" << trace.verdict.dimension << ")\n";
      break;
    case sc::Verdict::Kind::Residual:
      std::cout << "verdict: Residual\n";
      sc::write_text(std::cout, trace.verdict.remainder);
      std::cout << "fallback homology: " << render_betti(*fallback) << "; "
                << render_torsion(*fallback) << '\n';
      break;
  }

  if (verify) {
    const sc::HomologyProfile actual = sc::betti(h, max_vertices);
    sc::HomologyProfile expected;
    switch (trace.verdict.kind) {
      case sc::Verdict::Kind::Contractible:
        expected.betti[-1] = 0;
        break;
      case sc::Verdict::Kind::Sphere:
        expected.betti[-1] = 0;
        expected.betti[trace.verdict.dimension] = 1;
        break;
      case sc::Verdict::Kind::Residual:
        expected = shift_profile(*fallback, trace.suspensions);
        break;
    }
    if (!profiles_agree(actual, expected)) {
      std::cout << "verify: FAILED\n"
                << "  direct:  " << render_betti(actual) << '\n'
                << "  verdict: " << render_betti(expected) << '\n';
      return kVerifyFailed;
    }
    std::cout << "verify: ok (" << render_betti(actual) << ")\n";
  }
  return kOk;
}

// ----------------------------------------------------------- graphify -----

int cmd_graphify(const CommonOptions& opts) {
  sc::Hypergraph h = load_input(opts);
  const sc::NormalizationReport report = sc::normalize(h);
  if (!report.trivial()) log_info("input normalized before graphification");
  const sc::ReductionTrace trace = sc::graphify_trace(report.resulting);
  if (opts.json_output) {
    json out;
    out["graph"] = sc::hypergraph_to_json(trace.verdict.remainder);
    out["suspensions"] = trace.suspensions;
    out["steps"] = trace.to_json()["steps"];
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  print_trace(trace);
  sc::write_text(std::cout, trace.verdict.remainder);
  return kOk;
}

// ------------------------------------------------------------- search -----

int cmd_search(const CommonOptions& opts, int count, std::uint64_t budget,
               int max_vertices) {
  const std::string spec = opts.gen.empty() ? "random:9,0.25,2,3" : opts.gen;
  sc::SearchOptions search;
  search.node_budget = budget;

  int ternary_free = 0;
  int unknown = 0;
  int max_total = 0;
  std::vector<sc::Hypergraph> violations;
  for (int i = 0; i < count; ++i) {
    const sc::Hypergraph h = generate(spec, opts.seed + static_cast<std::uint64_t>(i));
    std::optional<sc::BergeCycle> ternary;
    try {
      ternary = sc::has_ternary_berge_cycle(h, search);
    } catch (const sc::SearchBudgetExceededError&) {
      ++unknown;
      continue;
    }
    if (ternary) continue;
    ++ternary_free;
    const sc::HomologyProfile profile = sc::betti(h, max_vertices);
    const int total = profile.total();
    if (total > max_total) max_total = total;
    if (total > 1 || !profile.torsion_free()) violations.push_back(h);
    log_debug("sample " + std::to_string(i) + ": ternary-free, total Betti " +
              std::to_string(total));
  }

  if (opts.json_output) {
    json out;
    out["sampled"] = count;
    out["ternary_free"] = ternary_free;
    out["unknown"] = unknown;
    out["max_total_betti"] = max_total;
    out["violations"] = json::array();
    for (const auto& h : violations) out["violations"].push_back(sc::hypergraph_to_json(h));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "sampled: " << count << '\n'
              << "ternary-free: " << ternary_free << '\n'
              << "unknown (budget): " << unknown << '\n'
              << "max total Betti: " << max_total << '\n';
    if (violations.empty()) {
      std::cout << "violations: none\n";
    } else {
      std::cout << "violations: " << violations.size() << '\n';
      for (const auto& h : violations) sc::write_text(std::cout, h);
    }
  }
  if (!violations.empty()) return kVerifyFailed;
  if (unknown > 0) return kBudget;
  return kOk;
}

// ------------------------------------------------------------- verify -----

bool vertex_eligible(const sc::Hypergraph& h, sc::Vertex v) {
  return !h.is_isolated(v) && !sc::vertex_in_induced_3cycle(h, v).has_value();
}

// Replays the set-level identities behind the reduction on one instance:
//   (a) I(H_i) equals st(v) \cap st(~e_i) for every edge e_i through v,
//   (b) the stars of v and of all ~e_i cover the whole complex,
//   (c) the closure of the reduced hypergraph is the intersection of the
//       closures of the H_i,
//   (d) the reduced edge set is exactly the minimal elements of that
//       intersection.
struct IdentityFailure {
  std::string which;
  sc::Vertex vertex;
};

std::optional<IdentityFailure> check_identities(const sc::Hypergraph& h,
                                                const sc::ReductionOptions& options) {
  const sc::ExplicitComplex complex = sc::ExplicitComplex::independence_complex(h);
  for (sc::Vertex v : h.vertices()) {
    if (!vertex_eligible(h, v)) continue;
    const auto through = h.edges_containing(v);
    const int k = static_cast<int>(through.size());

    const sc::ExplicitComplex star_v = sc::star(complex, {v});
    sc::ExplicitComplex covered = star_v;
    for (int i = 1; i <= k; ++i) {
      const sc::Edge tilde = sc::edge_difference(through[static_cast<std::size_t>(i - 1)], {v});
      const sc::ExplicitComplex star_tilde = sc::star(complex, tilde);
      const sc::ExplicitComplex lhs =
          sc::ExplicitComplex::independence_complex(sc::build_hi(h, v, i));
      const sc::ExplicitComplex rhs = sc::complex_intersection(star_v, star_tilde);
      if (lhs.faces() != rhs.faces()) return IdentityFailure{"independence(H_i) = st(v) ∩ st(~e_i)", v};
      covered = sc::complex_union(covered, star_tilde);
    }
    if (covered.faces() != complex.faces())
      return IdentityFailure{"st(v) ∪ ⋃ st(~e_i) covers the complex", v};

    std::vector<sc::Vertex> universe;
    for (sc::Vertex u : h.vertices())
      if (u != v) universe.push_back(u);

    std::set<sc::Edge> intersection;
    for (int i = 1; i <= k; ++i) {
      const auto cl = sc::closure(sc::build_hi(h, v, i), universe);
      if (i == 1) {
        intersection = cl;
      } else {
        std::set<sc::Edge> next;
        for (const auto& s : cl)
          if (intersection.count(s)) next.insert(s);
        intersection = std::move(next);
      }
    }

    const sc::Hypergraph reduced = sc::star_cluster_reduce(h, v, options);
    if (sc::closure(reduced, universe) != intersection)
      return IdentityFailure{"cl(H_v) = ⋂ cl(H_i)", v};

    const auto minimal = sc::minimal_elements(intersection);
    const std::set<sc::Edge> reduced_edges(reduced.edges().begin(), reduced.edges().end());
    if (minimal != reduced_edges)
      return IdentityFailure{"min ⋂ cl(H_i) = edges(H_v)", v};
  }
  return std::nullopt;
}

int cmd_verify(const CommonOptions& opts, int count, std::uint64_t tuple_cap) {
  const std::string spec = opts.gen.empty() ? "random:8,0.3,2,3" : opts.gen;
  sc::ReductionOptions options;
  options.tuple_cap = tuple_cap;

  int checked = 0;
  for (int i = 0; i < count; ++i) {
    const sc::Hypergraph h = generate(spec, opts.seed + static_cast<std::uint64_t>(i));
    if (h.vertex_count() > 10) {
      log_info("skipping instance " + std::to_string(i) + ": too many vertices");
      continue;
    }
    const auto failure = check_identities(h, options);
    if (failure) {
      std::cout << "verify: FAILED at sample " << i << ", vertex " << failure->vertex
                << ": " << failure->which << '\n';
      sc::write_text(std::cout, h);
      return kVerifyFailed;
    }
    ++checked;
    log_debug("sample " + std::to_string(i) + ": identities hold");
  }
  std::cout << "verify: ok (" << checked << " instances)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"independence-complex reductions for hypergraphs"};
  app.require_subcommand(1);

  GenOptions gen_opts;
  CLI::App* gen = app.add_subcommand("gen", "emit a generated hypergraph");
  gen->add_option("spec", gen_opts.spec, "generator spec (cycle:N | tightpath:N,K | random:...)");
  gen->add_option("--seed", gen_opts.common.seed, "seed for randomized generators");
  gen->add_flag("--json", gen_opts.common.json_output, "emit JSON");
  CLI::App* gen_lk = gen->add_subcommand("lk", "link expansion of a base hypergraph");
  gen_lk->fallthrough();  // let --seed / --json appear after the subcommand
  gen_lk->add_option("--k", gen_opts.lk_k, "edge size of the expansion")->required();
  gen_lk->add_option("--base", gen_opts.lk_base, "base generator spec")->required();
  gen_lk->add_option("--path", gen_opts.lk_path, "comma-separated tight path vertices (2k-2 ids)");

  CommonOptions normalize_opts;
  CLI::App* normalize_cmd = app.add_subcommand("normalize", "normalize a hypergraph");
  add_input_options(normalize_cmd, &normalize_opts);

  CommonOptions betti_opts;
  int betti_guard = sc::kDefaultVertexGuard;
  CLI::App* betti_cmd = app.add_subcommand("betti", "exact homology of the independence complex");
  add_input_options(betti_cmd, &betti_opts);
  betti_cmd->add_option("--max-vertices", betti_guard, "vertex guard for face enumeration");

  CommonOptions cycles_opts;
  std::uint64_t cycles_budget = 1'000'000;
  CLI::App* cycles_cmd = app.add_subcommand("cycles", "Berge cycle diagnostics");
  add_input_options(cycles_cmd, &cycles_opts);
  cycles_cmd->add_option("--budget", cycles_budget, "search node budget");

  CommonOptions reduce_opts;
  std::string reduce_strategy = "lex";
  std::uint64_t reduce_cap = 1'000'000;
  bool reduce_verify = false;
  int reduce_guard = sc::kDefaultVertexGuard;
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "run the reduction pipeline");
  add_input_options(reduce_cmd, &reduce_opts);
  reduce_cmd->add_option("--strategy", reduce_strategy, "vertex choice: lex | greedy")
      ->check(CLI::IsMember({"lex", "greedy"}));
  reduce_cmd->add_option("--tuple-cap", reduce_cap, "combination budget per reduction");
  reduce_cmd->add_flag("--verify", reduce_verify, "cross-check the verdict against direct homology");
  reduce_cmd->add_option("--max-vertices", reduce_guard, "vertex guard for homology checks");

  CommonOptions graphify_opts;
  CLI::App* graphify_cmd = app.add_subcommand("graphify", "gadget-replace edges of size >= 3");
  add_input_options(graphify_cmd, &graphify_opts);

  CommonOptions search_opts;
  int search_count = 100;
  std::uint64_t search_budget = 1'000'000;
  int search_guard = sc::kDefaultVertexGuard;
  CLI::App* search_cmd =
      app.add_subcommand("search", "sample ternary-free instances and bound their homology");
  add_input_options(search_cmd, &search_opts);
  search_cmd->add_option("--count", search_count, "number of samples");
  search_cmd->add_option("--budget", search_budget, "cycle search node budget");
  search_cmd->add_option("--max-vertices", search_guard, "vertex guard for homology");

  CommonOptions verify_opts;
  int verify_count = 25;
  std::uint64_t verify_cap = 1'000'000;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "replay the closure/star identities on sampled instances");
  add_input_options(verify_cmd, &verify_opts);
  verify_cmd->add_option("--count", verify_count, "number of sampled instances");
  verify_cmd->add_option("--tuple-cap", verify_cap, "combination budget per reduction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_opts, gen_lk->parsed());
    if (normalize_cmd->parsed()) return cmd_normalize(normalize_opts);
    if (betti_cmd->parsed()) return cmd_betti(betti_opts, betti_guard);
    if (cycles_cmd->parsed()) return cmd_cycles(cycles_opts, cycles_budget);
    if (reduce_cmd->parsed())
      return cmd_reduce(reduce_opts, reduce_strategy, reduce_cap, reduce_verify, reduce_guard);
    if (graphify_cmd->parsed()) return cmd_graphify(graphify_opts);
    if (search_cmd->parsed())
      return cmd_search(search_opts, search_count, search_budget, search_guard);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, verify_count, verify_cap);
  } catch (const sc::TooLargeError& e) {
    std::cerr << "error: " << e.what() << " (raise --max-vertices to override)\n";
    return kGuard;
  } catch (const sc::PipelineBudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const sc::SearchBudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const sc::CombinationBudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const sc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
