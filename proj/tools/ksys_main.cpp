// ksys: command-line front end for k-system and AOF certificates.
//
// stdout carries data (canonical JSON documents, one per line in stream
// mode), stderr carries diagnostics, and the exit status is the verdict:
// 0 success/verified, 1 refuted/negative, 2 invalid input, 3 budget exceeded.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ksys/certificates.hpp"
#include "ksys/error.hpp"
#include "ksys/io.hpp"
#include "ksys/oracle.hpp"
#include "ksys/search.hpp"

namespace {

using namespace ksys;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

constexpr const char* kSchemas = R"(File formats (UTF-8 JSON, keys sorted, lists sorted):
  graph        {"d":int,"edges":[[u,v],...],"n":int}   u<v, lexicographic
  orientation  {"graph_fingerprint":hex,"heads":[0|1 per edge index]}
               heads[e]=1 points edge {u,v} into v, 0 into u
  set system   {"graph_fingerprint":hex,"k":int,"sets":[[v,...],...]}
  instance     {"coords":[[["num","den"],...],...]|null,"d":int,"facets":[[v,...],...],
                "graph":{...},"name":str}
  certificate  {"k":int (faces only),"orientation":{...},"sets":[[v,...],...],"type":"faces"|"aof"}
  h-vector     space-separated integers h_0 ... h_d
Any command taking <graph> also accepts an instance file.
Exit codes: 0 success/verified, 1 refuted/negative, 2 invalid input, 3 budget exceeded.)";

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded:
    case ErrorCode::CandidateCapExceeded:
      return kExitBudget;
    case ErrorCode::InconsistentTransport:
      return kExitNegative;
    default:
      return kExitInvalid;
  }
}

PolytopeGraph load_graph(const std::string& path) { return io::graph_from_json(io::read_file(path)); }
Instance load_instance(const std::string& path) { return io::instance_from_json(io::read_file(path)); }

/// "cube:3", "simplex:2", "fig1" or a path to an instance file.
Instance resolve_instance(const std::string& text) {
  auto colon = text.find(':');
  if (text == "fig1") return make_fig1();
  if (colon != std::string::npos && !std::filesystem::exists(text)) {
    std::string family = text.substr(0, colon);
    int d = 0;
    try {
      d = std::stoi(text.substr(colon + 1));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidParams, "bad dimension in '" + text + "'");
    }
    if (family == "cube") return make_cube(d);
    if (family == "simplex") return make_simplex(d);
    throw Error(ErrorCode::InvalidParams, "unknown family '" + family + "'");
  }
  return load_instance(text);
}

int parse_int(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidParams, std::string("expected an integer for ") + what + ", got '" + text + "'");
}

void emit(const std::string& document, const std::string& output) {
  if (output.empty()) {
    std::cout << document << '\n';
  } else {
    io::write_file(output, document + "\n");
  }
}

int report_verdict(const Verdict& verdict) {
  if (verdict.verified()) {
    std::cout << "VERIFIED: " << verdict.detail << '\n';
    return kExitOk;
  }
  std::cout << "REFUTED (" << to_string(verdict.reason) << "): " << verdict.detail << '\n';
  return kExitNegative;
}

struct SearchFlags {
  std::uint64_t budget = kDefaultBudget;
  std::size_t candidate_cap = kDefaultCandidateCap;
  std::size_t count_cap = kDefaultCountCap;
  unsigned jobs = 1;
};

void add_jobs(CLI::App* cmd, SearchFlags& flags) {
  cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-systems, H^k sums and AOF certificates for graphs of simple polytopes"};
  app.footer(kSchemas);
  app.require_subcommand(1);

  int result = kExitOk;
  SearchFlags flags;
  int k = 0;
  bool all_faces = false;
  std::string output;
  std::string graph_path, first_path, second_path, third_path;

  // gen
  std::string family;
  std::vector<std::string> params;
  auto* gen = app.add_subcommand("gen", "Generate an instance: simplex D | cube D | product A B | truncate A V | fig1 "
                                        "(A, B: cube:D, simplex:D, fig1 or an instance file)");
  gen->add_option("family", family, "simplex, cube, product, truncate or fig1")->required();
  gen->add_option("params", params, "Family parameters");
  gen->add_option("-o,--output", output, "Write to file instead of stdout");
  gen->callback([&] {
    Instance inst = [&] {
      auto want = [&](std::size_t count) {
        if (params.size() != count) {
          throw Error(ErrorCode::InvalidParams, family + " takes " + std::to_string(count) + " parameter(s)");
        }
      };
      if (family == "simplex") {
        want(1);
        return make_simplex(parse_int(params[0], "D"));
      }
      if (family == "cube") {
        want(1);
        return make_cube(parse_int(params[0], "D"));
      }
      if (family == "product") {
        want(2);
        return make_product(resolve_instance(params[0]), resolve_instance(params[1]));
      }
      if (family == "truncate") {
        want(2);
        return truncate_vertex(resolve_instance(params[0]), parse_int(params[1], "V"));
      }
      if (family == "fig1") {
        want(0);
        return make_fig1();
      }
      throw Error(ErrorCode::InvalidParams, "unknown family '" + family + "'");
    }();
    emit(io::to_json(inst), output);
  });

  auto* faces = app.add_subcommand("faces", "Vertex sets of all k-faces of an instance");
  faces->add_option("instance", first_path)->required();
  faces->add_option("-k", k, "Face dimension")->required();
  faces->callback([&] { emit(io::to_json(faces_from_incidence(load_instance(first_path), k)), ""); });

  auto* hvector = app.add_subcommand("hvector", "In-degree histogram h_0 ... h_d of an orientation");
  hvector->add_option("graph", graph_path)->required();
  hvector->add_option("orientation", first_path)->required();
  hvector->callback([&] {
    auto g = load_graph(graph_path);
    std::cout << io::to_text(indegree_histogram(g, io::orientation_from_json(io::read_file(first_path)))) << '\n';
  });

  auto* hk = app.add_subcommand("hk", "H^k = sum h_i binom(i,k) (or H with --all) from an h-vector file, or from "
                                      "<graph> <orientation>");
  hk->add_option("input", first_path, "h-vector file, or graph file")->required();
  hk->add_option("orientation", second_path, "Orientation file (with a graph as first argument)");
  auto* hk_k = hk->add_option("-k", k, "Face dimension");
  auto* hk_all = hk->add_flag("--all", all_faces, "Weight 2^i instead of binom(i,k)");
  hk_k->excludes(hk_all);
  hk->callback([&] {
    if (!all_faces && hk_k->count() == 0) throw Error(ErrorCode::InvalidParams, "need -k K or --all");
    HVector h = second_path.empty()
                    ? io::hvector_from_text(io::read_file(first_path))
                    : indegree_histogram(load_graph(first_path), io::orientation_from_json(io::read_file(second_path)));
    std::cout << hk_sum(h, all_faces ? kAllFaces : k) << '\n';
  });

  auto* certify = app.add_subcommand("certify", "Check a yes-certificate");
  certify->require_subcommand(1);
  auto* certify_faces = certify->add_subcommand("faces", "k-system + orientation with |S| = H^k(O)");
  certify_faces->add_option("graph", graph_path)->required();
  certify_faces->add_option("certificate", first_path)->required();
  certify_faces->callback([&] {
    auto g = load_graph(graph_path);
    result = report_verdict(verify_face_certificate(g, io::face_certificate_from_json(io::read_file(first_path))));
  });
  auto* certify_aof = certify->add_subcommand("aof", "orientation + 2-system with |S| = H^2(O)");
  certify_aof->add_option("graph", graph_path)->required();
  certify_aof->add_option("certificate", first_path)->required();
  certify_aof->callback([&] {
    auto g = load_graph(graph_path);
    result = report_verdict(verify_aof_certificate(g, io::aof_certificate_from_json(io::read_file(first_path))));
  });

  auto* refute = app.add_subcommand("refute", "Check a no-certificate");
  refute->require_subcommand(1);
  auto* refute_faces = refute->add_subcommand("faces", "A strictly larger k-system");
  refute_faces->add_option("graph", graph_path)->required();
  refute_faces->add_option("sets", first_path)->required();
  refute_faces->add_option("larger-sets", second_path)->required();
  refute_faces->callback([&] {
    auto g = load_graph(graph_path);
    result = report_verdict(verify_larger_system(g, io::set_system_from_json(io::read_file(first_path)),
                                                 io::set_system_from_json(io::read_file(second_path))));
  });
  auto* refute_aof = refute->add_subcommand("aof", "An acyclic orientation with strictly smaller H^2");
  refute_aof->add_option("graph", graph_path)->required();
  refute_aof->add_option("orientation", first_path)->required();
  refute_aof->add_option("smaller-orientation", second_path)->required();
  refute_aof->callback([&] {
    auto g = load_graph(graph_path);
    result = report_verdict(verify_smaller_h2(g, io::orientation_from_json(io::read_file(first_path)),
                                              io::orientation_from_json(io::read_file(second_path))));
  });

  auto* facets = app.add_subcommand("facets-from-2faces", "Rebuild the facets from the 2-faces");
  facets->add_option("graph", graph_path)->required();
  facets->add_option("2faces", first_path)->required();
  facets->callback([&] {
    auto g = load_graph(graph_path);
    emit(io::to_json(facets_from_2faces(g, io::set_system_from_json(io::read_file(first_path)))), "");
  });

  auto* validate = app.add_subcommand("validate-ksystem", "Print the k-system validation report");
  validate->add_option("graph", graph_path)->required();
  validate->add_option("sets", first_path)->required();
  validate->callback([&] {
    auto g = load_graph(graph_path);
    auto report = validate_k_system(g, io::set_system_from_json(io::read_file(first_path)));
    for (const auto& line : report.lines()) std::cout << line << '\n';
    result = report.valid ? kExitOk : kExitNegative;
  });

  auto* enum_orient = app.add_subcommand("enum-orient", "Stream every acyclic orientation");
  enum_orient->add_option("graph", graph_path)->required();
  enum_orient->add_option("--budget", flags.budget, "Maximum 2^|E|");
  add_jobs(enum_orient, flags);
  enum_orient->callback([&] {
    auto g = load_graph(graph_path);
    if (flags.jobs == 1) {
      enumerate_acyclic_orientations(g, flags.budget, [](const Orientation& o) {
        std::cout << io::to_json(o) << '\n';
        return true;
      });
    } else {
      for (const auto& o : collect_acyclic_orientations(g, flags.budget, flags.jobs)) std::cout << io::to_json(o) << '\n';
    }
  });

  auto* min_hk = app.add_subcommand("min-hk", "Minimum of H^k (or H) over all acyclic orientations");
  min_hk->add_option("graph", graph_path)->required();
  auto* min_k = min_hk->add_option("-k", k, "Face dimension");
  auto* min_all = min_hk->add_flag("--all", all_faces, "Minimize H");
  min_k->excludes(min_all);
  min_hk->add_option("--budget", flags.budget, "Maximum 2^|E|");
  add_jobs(min_hk, flags);
  min_hk->callback([&] {
    if (!all_faces && min_k->count() == 0) throw Error(ErrorCode::InvalidParams, "need -k K or --all");
    auto g = load_graph(graph_path);
    auto best = minimize_hk(g, all_faces ? kAllFaces : k, flags.budget, flags.jobs);
    std::string key = all_faces ? "\"all\"" : std::to_string(k);
    std::cout << "{\"k\":" << key << ",\"minimizers\":" << best.minimizers << ",\"minimum\":" << best.value
              << ",\"witness\":" << io::to_json(best.witness) << "}\n";
  });

  auto add_cap_flags = [&](CLI::App* cmd) {
    cmd->add_option("--candidate-cap", flags.candidate_cap, "Maximum number of candidate sets");
    cmd->add_option("--count-cap", flags.count_cap, "Maximum number of k-systems");
    add_jobs(cmd, flags);
  };

  auto* enum_ks = app.add_subcommand("enum-ksystems", "Stream k-systems found by exact cover");
  enum_ks->add_option("graph", graph_path)->required();
  enum_ks->add_option("-k", k, "System dimension")->required();
  add_cap_flags(enum_ks);
  enum_ks->callback([&] {
    auto g = load_graph(graph_path);
    auto found = collect_k_systems(g, k, flags.candidate_cap, flags.count_cap, flags.jobs);
    for (const auto& s : found.systems) std::cout << io::to_json(s) << '\n';
    if (found.truncated) std::cerr << "ksys: stopped at --count-cap " << flags.count_cap << '\n';
  });

  auto* max_ks = app.add_subcommand("max-ksystem", "A k-system of maximum cardinality");
  max_ks->add_option("graph", graph_path)->required();
  max_ks->add_option("-k", k, "System dimension")->required();
  add_cap_flags(max_ks);
  max_ks->callback([&] {
    auto g = load_graph(graph_path);
    auto best = max_k_system(g, k, flags.candidate_cap, flags.count_cap, flags.jobs);
    if (!best.exhaustive) std::cerr << "ksys: maximum over the first " << best.systems_seen << " systems only\n";
    emit(io::to_json(best.system), "");
  });

  auto* is_aof = app.add_subcommand("is-aof", "Full AOF test against the instance's faces");
  is_aof->add_option("instance", first_path)->required();
  is_aof->add_option("orientation", second_path)->required();
  is_aof->callback([&] {
    bool yes = is_aof_oracle(load_instance(first_path), io::orientation_from_json(io::read_file(second_path)));
    std::cout << (yes ? "true" : "false") << '\n';
    result = yes ? kExitOk : kExitNegative;
  });

  std::vector<std::string> weights;
  auto* geometric = app.add_subcommand("aof-geometric", "Orientation induced by a generic linear functional");
  geometric->add_option("instance", first_path)->required();
  geometric->add_option("--weights", weights, "One rational (p or p/q) per coordinate")->required();
  geometric->callback([&] {
    std::vector<Rational> w;
    for (const auto& text : weights) w.push_back(io::parse_rational(text));
    emit(io::to_json(geometric_aof(load_instance(first_path), w)), "");
  });

  auto* counterexample = app.add_subcommand(
      "search-k-sink-counterexample", "Acyclic orientation with one sink per k-face that is not an AOF");
  counterexample->add_option("instance", first_path)->required();
  counterexample->add_option("-k", k, "Face dimension")->required();
  counterexample->add_option("--budget", flags.budget, "Maximum 2^|E|");
  add_jobs(counterexample, flags);
  counterexample->callback([&] {
    auto found = search_k_sink_counterexample(load_instance(first_path), k, flags.budget, flags.jobs);
    if (found) {
      std::cout << io::to_json(*found) << '\n';
    } else {
      std::cerr << "ksys: no counterexample\n";
      result = kExitNegative;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  } catch (const Error& e) {
    std::cerr << "ksys: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ksys: " << e.what() << '\n';
    return kExitInvalid;
  }
  return result;
}
