#include "skewspec/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

#include "skewspec/io.hpp"
#include "skewspec/orientation.hpp"
#include "skewspec/products.hpp"
#include "skewspec/spectra.hpp"

namespace skewspec::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxSpectrumOrder = 2048;

// Reals are reported with 12 significant digits.
Json real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  if (r == 0.0) r = 0.0;  // drop the sign of -0
  return r;
}

Json reals(const std::vector<double>& xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(real(x));
  return arr;
}

Json vertex_list(const std::vector<int>& vs) {
  Json arr = Json::array();
  for (int v : vs) arr.push_back(v);
  return arr;
}

Json arc_list(const OrientedGraph& og) {
  Json arr = Json::array();
  for (auto [t, h] : og.arcs()) arr.push_back(Json::array({t, h}));
  return arr;
}

// Thrown by command bodies for a clean input-side failure that has no
// library Error behind it.
struct InputProblem {
  std::string kind;
  std::string message;
};

OrientedGraph require_oriented(const io::GraphFile& file, const std::string& what) {
  if (const auto* og = std::get_if<OrientedGraph>(&file)) return *og;
  throw InputProblem{"ExpectedOrientedGraph", what + " must be an oriented graph file ('og' header)"};
}

const Graph& underlying(const io::GraphFile& file) {
  if (const auto* og = std::get_if<OrientedGraph>(&file)) return og->graph();
  return std::get<Graph>(file);
}

Json maximum_block(const OrientedGraph& og) {
  Json block;
  const Graph& g = og.graph();
  int max_degree = 0;
  for (int v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  const int k = g.regular_degree();
  block["regular_degree"] = k >= 0 ? Json(k) : Json(nullptr);
  block["bound"] = real(g.order() * std::sqrt(static_cast<double>(max_degree)));
  const bool certificate = k >= 0 && has_scalar_gram(og, k);
  block["exact_certificate"] = certificate;
  block["is_maximum"] = certificate;
  return block;
}

double resolve_tolerance(const CLI::Option* flag, double flag_value) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("SKEWSPEC_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(value >= 0.0)) {
      throw InputProblem{"InvalidArgument", std::string("SKEWSPEC_TOL is not a non-negative number: ") + env};
    }
    return value;
  }
  return kDefaultTolerance;
}

std::vector<int> parse_vertex_set(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t");
    const std::string token = item.substr(first, last - first + 1);
    char* end = nullptr;
    const long v = std::strtol(token.c_str(), &end, 10);
    if (*end != '\0') throw InputProblem{"InvalidArgument", "bad vertex '" + token + "' in --set"};
    out.push_back(static_cast<int>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct Outcome {
  Json report;
  int code = kSuccess;
};

// ---------------------------------------------------------------- commands

Outcome cmd_spectrum(const std::string& path, bool want_adjacency, bool want_skew, double tol) {
  const auto file = io::read_graph_file(path);
  const bool oriented = std::holds_alternative<OrientedGraph>(file);
  if (want_skew && !oriented) {
    throw InputProblem{"ExpectedOrientedGraph", "--skew needs an oriented graph file"};
  }
  const bool skew = oriented && !want_adjacency;
  const Graph& g = underlying(file);
  if (g.order() > kMaxSpectrumOrder) {
    throw InputProblem{"TooLarge", "spectra are limited to " + std::to_string(kMaxSpectrumOrder) + " vertices"};
  }
  Outcome out;
  Json& r = out.report;
  r["command"] = "spectrum";
  r["kind"] = skew ? "skew" : "adjacency";
  r["order"] = g.order();
  r["size"] = g.size();
  r["tolerance"] = tol;
  if (skew) {
    const auto& og = std::get<OrientedGraph>(file);
    const Spectrum sp = skew_spectrum(og);
    r["values"] = reals(sp.values);
    r["energy"] = real(sp.energy());
    Json block = maximum_block(og);
    // Cross-check the exact certificate against the spectrum.
    if (block["is_maximum"].get<bool>()) {
      const double root = std::sqrt(static_cast<double>(block["regular_degree"].get<int>()));
      const bool flat = std::all_of(sp.values.begin(), sp.values.end(), [&](double v) {
        return std::abs(std::abs(v) - root) <= tol * std::max(1.0, root);
      });
      if (!flat) out.code = kInconsistent;
    }
    r["maximum"] = std::move(block);
  } else {
    const Spectrum sp = adjacency_spectrum(g);
    r["values"] = reals(sp.values);
    r["energy"] = real(sp.energy());
  }
  return out;
}

Outcome cmd_check(const std::string& path, double tol) {
  const OrientedGraph og = require_oriented(io::read_graph_file(path), "input");
  (void)bipartition(og.graph());
  const auto cycles = chordless_cycles(og.graph());
  if (cycles.cap_exceeded) throw Error(Errc::CapExceeded, "too many chordless cycles");

  Json non_uniform = Json::array();
  for (const auto& c : cycles.cycles) {
    if (!is_uniformly_oriented(og, c)) non_uniform.push_back(vertex_list(c.vertices));
  }
  const bool uniform = non_uniform.empty();
  const bool spectral = spectral_predicate(og, tol);
  const auto equivalence = equivalent_to_elementary(og);
  const bool consistent = spectral == uniform && uniform == equivalence.equivalent();

  Outcome out;
  Json& r = out.report;
  r["command"] = "check";
  r["order"] = og.order();
  r["size"] = og.size();
  r["tolerance"] = tol;
  r["spectral_predicate"] = spectral;
  r["chordless_cycles"] = cycles.cycles.size();
  r["non_uniform_cycles"] = std::move(non_uniform);
  r["all_chordless_uniform"] = uniform;
  r["equivalent_to_elementary"] = equivalence.equivalent();
  r["witness"] = equivalence.witness ? vertex_list(equivalence.witness->w) : Json(nullptr);
  r["violating_cycle"] =
      equivalence.violating_cycle ? vertex_list(equivalence.violating_cycle->vertices) : Json(nullptr);
  r["consistent"] = consistent;
  out.code = !consistent ? kInconsistent : (spectral ? kSuccess : kFalseVerdict);
  return out;
}

Outcome cmd_product(const std::string& h_path, const std::string& g_path, bool verify,
                    const std::string& output, double tol) {
  const OrientedGraph h = require_oriented(io::read_graph_file(h_path), "H");
  const OrientedGraph g = require_oriented(io::read_graph_file(g_path), "G");
  const Bipartition b = bipartition(h.graph());
  const OrientedGraph product = oriented_product(h, g);
  if (!output.empty()) io::write_graph_file(output, product);

  Outcome out;
  Json& r = out.report;
  r["command"] = "product";
  r["h"] = {{"order", h.order()}, {"size", h.size()}, {"x_count", b.count(Side::X)}, {"y_count", b.count(Side::Y)}};
  r["g"] = {{"order", g.order()}, {"size", g.size()}};
  r["order"] = product.order();
  r["size"] = product.size();
  r["output"] = output.empty() ? Json(nullptr) : Json(output);
  r["maximum"] = maximum_block(product);
  if (verify) {
    if (product.order() > kMaxSpectrumOrder) {
      throw InputProblem{"TooLarge", "verification is limited to " + std::to_string(kMaxSpectrumOrder) + " vertices"};
    }
    const bool identity = product_matrix_identity_check(h, g);
    const Spectrum actual = skew_spectrum(product);
    const Spectrum predicted = predicted_product_spectrum(skew_spectrum(h), skew_spectrum(g));
    const bool match = spectra_equal(actual, predicted, tol);
    r["verify"] = {{"tolerance", tol},
                   {"matrix_identity", identity},
                   {"spectrum_match", match},
                   {"values", reals(actual.values)},
                   {"energy", real(actual.energy())}};
    if (!identity || !match) out.code = kInconsistent;
  }
  return out;
}

Outcome cmd_family(const std::string& base_name, int r_depth, int cap, const std::string& output, double tol) {
  const auto base = parse_family_base(base_name);
  if (!base) throw InputProblem{"InvalidArgument", "unknown base '" + base_name + "' (k44, k4, c4, p2)"};
  const FamilyMember member = generate_family({*base, r_depth}, cap);
  if (!output.empty()) io::write_graph_file(output, member.graph);

  const OrientedGraph& og = member.graph;
  const bool shape_ok = og.order() == member.order && og.graph().regular_degree() == member.degree;
  const bool certificate = shape_ok && has_scalar_gram(og, member.degree);

  Outcome out;
  Json& rep = out.report;
  rep["command"] = "family";
  rep["base"] = std::string(to_string(*base));
  rep["r"] = r_depth;
  rep["order"] = member.order;
  rep["degree"] = member.degree;
  rep["size"] = og.size();
  rep["shape_matches"] = shape_ok;
  rep["exact_certificate"] = certificate;
  rep["predicted_energy"] = real(member.predicted_energy());
  bool energy_ok = true;
  if (og.order() <= kMaxSpectrumOrder) {
    const double energy = skew_spectrum(og).energy();
    energy_ok = std::abs(energy - member.predicted_energy()) <= tol * std::max(1.0, member.predicted_energy());
    rep["energy"] = real(energy);
    rep["energy_matches"] = energy_ok;
  } else {
    rep["energy"] = nullptr;
    rep["energy_matches"] = nullptr;
  }
  rep["output"] = output.empty() ? Json(nullptr) : Json(output);
  if (!shape_ok || !certificate || !energy_ok) out.code = kInconsistent;
  return out;
}

Outcome cmd_search(const std::string& path, std::uint64_t budget) {
  const Graph g = underlying(io::read_graph_file(path));
  const auto result = find_max_energy_orientation(g, budget);
  Outcome out;
  Json& r = out.report;
  r["command"] = "search";
  r["order"] = g.order();
  r["size"] = g.size();
  r["regular_degree"] = g.regular_degree();
  r["found"] = result.found();
  r["states"] = result.states;
  r["budget_hit"] = result.budget_hit;
  if (result.found()) {
    const auto& og = *result.orientation;
    std::string bits;
    for (auto b : og.direction()) bits += b ? '1' : '0';
    r["direction"] = bits;
    r["arcs"] = arc_list(og);
    r["energy"] = real(og.order() * std::sqrt(static_cast<double>(g.regular_degree())));
  } else {
    r["direction"] = nullptr;
    r["arcs"] = nullptr;
    r["energy"] = nullptr;
  }
  out.code = result.found() ? kSuccess : kFalseVerdict;
  return out;
}

Outcome cmd_equiv(const std::string& a_path, const std::string& b_path) {
  const OrientedGraph a = require_oriented(io::read_graph_file(a_path), "first input");
  const OrientedGraph b = require_oriented(io::read_graph_file(b_path), "second input");
  const auto result = switching_equivalent(a, b);
  Outcome out;
  Json& r = out.report;
  r["command"] = "equiv";
  r["order"] = a.order();
  r["size"] = a.size();
  r["equivalent"] = result.equivalent();
  r["witness"] = result.witness ? vertex_list(result.witness->w) : Json(nullptr);
  r["violating_cycle"] = result.violating_cycle ? vertex_list(result.violating_cycle->vertices) : Json(nullptr);
  out.code = result.equivalent() ? kSuccess : kFalseVerdict;
  return out;
}

Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  Json r;
  r["command"] = command;
  r["error"] = kind;
  r["message"] = message;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew spectra, switching equivalence and oriented products of graphs", "skewspec"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Append wall-clock time to the report (makes output non-deterministic)");
  app.fallthrough();

  std::string file_a, file_b, output, base_name, set_text;
  bool adjacency = false, skew = false, verify = false;
  double tol_value = kDefaultTolerance;
  int r_depth = 1;
  int cap = kDefaultFamilyVertexCap;
  std::uint64_t budget = kDefaultSearchBudget;

  auto* spectrum = app.add_subcommand("spectrum", "Sorted spectrum and energy of a graph file");
  spectrum->add_option("file", file_a, "Graph file")->required();
  auto* adj_flag = spectrum->add_flag("--adjacency", adjacency, "Adjacency spectrum of the underlying graph");
  spectrum->add_flag("--skew", skew, "Skew spectrum (default for oriented input)")->excludes(adj_flag);
  auto* spectrum_tol = spectrum->add_option("--tol", tol_value, "Relative tolerance");

  auto* check = app.add_subcommand("check", "Cross-check the three uniformity predicates of an oriented bipartite graph");
  check->add_option("file", file_a, "Oriented graph file")->required();
  auto* check_tol = check->add_option("--tol", tol_value, "Relative tolerance");

  auto* product = app.add_subcommand("product", "Oriented Cartesian product of a bipartite H with G");
  product->add_option("h_file", file_a, "Oriented bipartite graph H")->required();
  product->add_option("g_file", file_b, "Oriented graph G")->required();
  product->add_flag("--verify", verify, "Check the matrix identity and the predicted spectrum");
  product->add_option("-o,--output", output, "Write the product graph file here");
  auto* product_tol = product->add_option("--tol", tol_value, "Relative tolerance");

  auto* family = app.add_subcommand("family", "Generate a member of a maximum skew energy family");
  family->add_option("--base", base_name, "k44, k4, c4 or p2")->required();
  family->add_option("--r", r_depth, "Iteration depth (>= 1)")->required();
  family->add_option("--cap", cap, "Vertex budget");
  family->add_option("-o,--output", output, "Write the generated graph file here");
  auto* family_tol = family->add_option("--tol", tol_value, "Relative tolerance");

  auto* search = app.add_subcommand("search", "Search for an orientation with S S^T = k I");
  search->add_option("file", file_a, "Regular graph file")->required();
  search->add_option("--budget", budget, "Maximum number of search states");

  auto* switch_cmd = app.add_subcommand("switch", "Switch an oriented graph with respect to a vertex set");
  switch_cmd->add_option("file", file_a, "Oriented graph file")->required();
  switch_cmd->add_option("--set", set_text, "Comma-separated vertex list")->required();
  switch_cmd->add_option("-o,--output", output, "Write here instead of stdout");

  auto* equiv = app.add_subcommand("equiv", "Decide switching equivalence of two orientations");
  equiv->add_option("a", file_a, "Oriented graph file")->required();
  equiv->add_option("b", file_b, "Oriented graph file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }

  std::string command = "?";
  const auto started = std::chrono::steady_clock::now();
  try {
    Outcome outcome;
    if (spectrum->parsed()) {
      command = "spectrum";
      outcome = cmd_spectrum(file_a, adjacency, skew, resolve_tolerance(spectrum_tol, tol_value));
    } else if (check->parsed()) {
      command = "check";
      outcome = cmd_check(file_a, resolve_tolerance(check_tol, tol_value));
    } else if (product->parsed()) {
      command = "product";
      outcome = cmd_product(file_a, file_b, verify, output, resolve_tolerance(product_tol, tol_value));
    } else if (family->parsed()) {
      command = "family";
      outcome = cmd_family(base_name, r_depth, cap, output, resolve_tolerance(family_tol, tol_value));
    } else if (search->parsed()) {
      command = "search";
      outcome = cmd_search(file_a, budget);
    } else if (switch_cmd->parsed()) {
      command = "switch";
      const OrientedGraph og = require_oriented(io::read_graph_file(file_a), "input");
      const OrientedGraph switched = switch_orientation(og, parse_vertex_set(set_text));
      if (output.empty()) {
        out << io::serialize(switched);
      } else {
        io::write_graph_file(output, switched);
      }
      return kSuccess;
    } else if (equiv->parsed()) {
      command = "equiv";
      outcome = cmd_equiv(file_a, file_b);
    }
    if (timing) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      outcome.report["timing_ms"] = real(std::chrono::duration<double, std::milli>(elapsed).count());
    }
    out << outcome.report.dump(2) << '\n';
    return outcome.code;
  } catch (const NotBipartiteError& e) {
    Json r = error_report(command, std::string(to_string(e.code())), e.what());
    r["odd_cycle"] = vertex_list(e.odd_cycle());
    out << r.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    Json r = error_report(command, std::string(to_string(e.code())), e.what());
    r["line"] = e.line();
    out << r.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    out << error_report(command, std::string(to_string(e.code())), e.what()).dump(2) << '\n';
    err << "error: " << e.what() << '\n';
  } catch (const InputProblem& p) {
    out << error_report(command, p.kind, p.message).dump(2) << '\n';
    err << "error: " << p.message << '\n';
  }
  return kInputError;
}

}  // namespace skewspec::cli
