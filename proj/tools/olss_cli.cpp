#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "olss/bounds.hpp"
#include "olss/constructions.hpp"
#include "olss/entropylp.hpp"
#include "olss/error.hpp"
#include "olss/formats.hpp"
#include "olss/report.hpp"

using namespace olss;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

unsigned worker_count() {
  if (const char* env = std::getenv("OLSS_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return static_cast<unsigned>(w);
    } catch (const std::exception&) {
    }
    throw Error(ErrorCode::BadParam, "OLSS_WORKERS must be a positive integer");
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<int> parse_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad vertex list '" + text + "'");
    }
  }
  return out;
}

std::string joined(const std::vector<int>& values, char sep = ' ') {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(values[i]);
  return s;
}

struct SchemeOptions {
  std::string name;
  std::optional<int> d;
  std::optional<int> k;
  std::string offline = "generalized-star-cover";
  std::string scheme_file;
  std::string offline_file;
};

std::optional<int> required(const std::optional<int>& value, const char* flag, const std::string& scheme) {
  if (!value) throw Error(ErrorCode::BadParam, scheme + " needs " + flag);
  return value;
}

// Off-line constructions addressable by name; empty when `name` is a dealer.
std::optional<LinearScheme> make_offline(const std::string& name, const AccessStructure& gamma,
                                         const SchemeOptions& opt, const std::string& file) {
  if (name == "stinson-cover") return stinson_star_cover(gamma, neighborhood_star_cover(gamma));
  if (name == "generalized-star-cover") return generalized_star_cover(gamma, canonical_star_system(gamma));
  if (name == "shamir-threshold") return shamir_threshold(gamma.size(), *required(opt.k, "--k", name));
  if (name == "c6-sigma") return c6_offline(kC6Sigma);
  if (name == "c6-pi") return c6_offline(kC6Pi);
  if (name == "scheme-file") {
    if (file.empty()) throw Error(ErrorCode::BadParam, "scheme-file needs a file path");
    return parse_scheme(read_file(file));
  }
  return std::nullopt;
}

DealerFactory make_dealer(const SchemeOptions& opt, const AccessStructure& gamma) {
  const int d = opt.d.value_or(max_degree(gamma));
  const std::string& name = opt.name;
  if (name == "p3-sample") return p3_sample();
  if (name == "first-fit-general") return first_fit_general(d);
  if (name == "first-fit-graph") {
    if (opt.d) throw Error(ErrorCode::BadParam, "first-fit-graph does not take --d");
    return first_fit_graph();
  }
  if (name == "first-fit-graph-known-d") return first_fit_graph_known_d(d);
  if (name == "c6-optimal") return c6_optimal();
  if (name == "online-star-packing") return online_star_packing(gamma.size(), d);
  if (name == "improved-graph-online") return improved_graph_online(gamma.size(), d, opt.k);
  if (name == "symmetric-lift") {
    auto offline = make_offline(opt.offline, gamma, opt, opt.offline_file);
    if (!offline) throw Error(ErrorCode::BadParam, "unknown off-line scheme '" + opt.offline + "'");
    return symmetric_lift(*offline, gamma);
  }
  throw Error(ErrorCode::BadParam, "unknown scheme '" + name + "'");
}

const std::vector<std::string> kSchemeNames = {
    "p3-sample",       "first-fit-general", "first-fit-graph",        "first-fit-graph-known-d",
    "c6-optimal",      "symmetric-lift",    "online-star-packing",    "improved-graph-online",
    "stinson-cover",   "generalized-star-cover", "shamir-threshold",  "c6-sigma",
    "c6-pi",           "scheme-file"};

AccessStructure generate(const std::string& family_name, const std::vector<int>& p) {
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw Error(ErrorCode::BadParam, family_name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (family_name == "path") return need(1), family::path(p[0]);
  if (family_name == "cycle") return need(1), family::cycle(p[0]);
  if (family_name == "complete") return need(1), family::complete(p[0]);
  if (family_name == "edgeless") return need(1), family::edgeless(p[0]);
  if (family_name == "star") return need(2), family::star_plus_isolated(p[0], p[1]);
  if (family_name == "tree-tn") return need(1), family::tree_tn(p[0]);
  if (family_name == "threshold") return need(2), family::threshold(p[0], p[1]);
  if (family_name == "cube") return need(1), family::cube_graph(p[0]);
  if (family_name == "petersen") return need(0), family::petersen();
  if (family_name == "multipartite") {
    if (p.empty()) throw Error(ErrorCode::BadParam, "multipartite takes the part sizes");
    return family::complete_multipartite(p);
  }
  throw Error(ErrorCode::BadParam, "unknown family '" + family_name + "'");
}

struct Output {
  bool json = false;
  std::string out_path;

  void emit(const Report& report, double seconds) const {
    Report r = report;
    r.header["wall_time_s"] = seconds;
    const std::string content = json ? r.json() : r.text();
    if (out_path.empty()) {
      std::cout << content;
    } else {
      write_file(out_path, content);
    }
    if (!json) std::cerr << "wall time: " << seconds << " s\n";
  }
};

std::string command_line(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"On-line and off-line secret sharing laboratory"};
  app.require_subcommand(1);
  Output output;
  app.add_flag("--json", output.json, "Machine-readable JSON report on stdout");

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  Report report;
  report.body["command"] = command_line(argc, argv);
  int status = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Write a structure file for a named family");
  std::string family_name;
  std::vector<int> family_params;
  std::string gen_out;
  gen->add_option("family", family_name, "path|cycle|complete|edgeless|star|tree-tn|threshold|cube|petersen|multipartite")
      ->required();
  gen->add_option("params", family_params, "Family parameters");
  gen->add_option("-o,--out", gen_out, "Output path (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Verify a scheme on a structure (all orderings or a sample)");
  std::string structure_path;
  SchemeOptions scheme_opt;
  std::vector<std::string> mode_args = {"all"};
  std::uint64_t seed = 0;
  std::string dump_path, transcripts_dir;
  verify->add_option("structure", structure_path, "Structure file")->required()->check(CLI::ExistingFile);
  verify->add_option("--scheme", scheme_opt.name, "Scheme name")->required()->check(CLI::IsMember(kSchemeNames));
  verify->add_option("--d", scheme_opt.d, "Maximum degree told to the dealer (default: from the structure)");
  verify->add_option("--k", scheme_opt.k, "Parallel copies (improved-graph-online) or threshold (shamir-threshold)");
  verify->add_option("--offline", scheme_opt.offline, "Off-line scheme lifted by symmetric-lift");
  verify->add_option("--offline-file", scheme_opt.offline_file, "Scheme file lifted by symmetric-lift");
  verify->add_option("--scheme-file", scheme_opt.scheme_file, "Scheme file for --scheme scheme-file");
  verify->add_option("--mode", mode_args, "all | sample K")->expected(1, 2);
  verify->add_option("--seed", seed, "Seed for sampled orderings");
  verify->add_option("--dump", dump_path, "Write the off-line scheme in dump format");
  verify->add_option("--transcripts", transcripts_dir, "Directory receiving one transcript file per ordering");

  // transcript
  auto* transcript = app.add_subcommand("transcript", "Print the transcript of one on-line run");
  std::string perm_text;
  transcript->add_option("structure", structure_path, "Structure file")->required()->check(CLI::ExistingFile);
  transcript->add_option("--scheme", scheme_opt.name, "Dealer name")->required()->check(CLI::IsMember(kSchemeNames));
  transcript->add_option("--d", scheme_opt.d, "Maximum degree told to the dealer");
  transcript->add_option("--k", scheme_opt.k, "Parallel copies for improved-graph-online");
  transcript->add_option("--offline", scheme_opt.offline, "Off-line scheme lifted by symmetric-lift");
  transcript->add_option("--offline-file", scheme_opt.offline_file, "Scheme file lifted by symmetric-lift");
  transcript->add_option("--perm", perm_text, "Arrival order, e.g. 2,0,1")->required();

  // lp
  auto* lp = app.add_subcommand("lp", "Entropy-method lower bound as an exact LP");
  std::string symmetrize;
  bool with_witness = false, drop_e = false;
  std::string export_path;
  lp->add_option("structure", structure_path, "Structure file")->required()->check(CLI::ExistingFile);
  lp->add_option("--symmetrize", symmetrize, "Vertex list of the substructure to symmetrize on");
  lp->add_flag("--witness", with_witness, "Include the optimal entropy function");
  lp->add_flag("--drop-rule-e", drop_e, "Omit strict submodularity above the pair-enumeration cap");
  lp->add_option("--export", export_path, "Write the constraint listing to a file");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "Evaluate a closed-form bound");
  std::string bound_name;
  int bd = 0, bm = 0, bn = 0, br = 0;
  bounds_cmd
      ->add_option("name", bound_name,
                   "stinson|ff|tightened-offline|star-lower|path-lower|cycle-upper|graph-online-upper|thm15|"
                   "tree-online-lower|perf-ratio-lower")
      ->required();
  bounds_cmd->add_option("--d", bd, "Maximum degree");
  bounds_cmd->add_option("--m", bm, "Isolated vertices");
  bounds_cmd->add_option("--n", bn, "Vertex count");
  bounds_cmd->add_option("--r", br, "Maximum hyperedge size");
  bounds_cmd->add_option("--structure", structure_path, "Structure file (for ff)");

  // fullsym
  auto* fullsym = app.add_subcommand("fullsym", "Check that every induced isomorphism extends to an automorphism");
  std::optional<int> size_cap;
  fullsym->add_option("structure", structure_path, "Structure file")->required()->check(CLI::ExistingFile);
  fullsym->add_option("--cap", size_cap, "Largest substructure size checked (default n)");

  for (auto* sub : {lp, bounds_cmd, fullsym}) sub->add_option("-o,--out", output.out_path, "Report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const auto gamma = generate(family_name, family_params);
      const std::string text = format_structure(gamma);
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        write_file(gen_out, text);
      }
      return 0;
    }

    const auto load = [&] { return parse_structure(read_file(structure_path)); };

    if (verify->parsed()) {
      const auto gamma = load();
      report.body["structure"] = structure_json(gamma);
      report.body["scheme"] = scheme_opt.name;
      if (auto offline = make_offline(scheme_opt.name, gamma, scheme_opt, scheme_opt.scheme_file)) {
        if (!dump_path.empty()) write_file(dump_path, format_scheme(*offline));
        const auto verdict = is_perfect(*offline, gamma);
        report.body["mode"] = "offline";
        report.body["field"] = offline->field().modulus();
        report.body["perfect"] = verdict.perfect;
        report.body["complexity"] = rational_json(verdict.complexity);
        report.body["violations"] = security_json(verdict)["violations"];
        status = verdict.perfect ? 0 : kExitViolation;
      } else {
        if (mode_args.size() == 1) {
          std::istringstream words(mode_args[0]);
          mode_args.assign(std::istream_iterator<std::string>(words), std::istream_iterator<std::string>());
          if (mode_args.empty()) mode_args.push_back("");
        }
        SweepMode mode;
        if (mode_args[0] == "all" && mode_args.size() == 1) {
          mode = SweepMode::all();
        } else if (mode_args[0] == "sample" && mode_args.size() == 2) {
          mode = SweepMode::sample(std::stoull(mode_args[1]), seed);
        } else {
          throw Error(ErrorCode::BadParam, "--mode takes 'all' or 'sample K'");
        }
        SweepOptions options{worker_count(), !transcripts_dir.empty()};
        const auto result = sweep(make_dealer(scheme_opt, gamma), gamma, mode, options);
        Json summary = sweep_json(result);
        report.body["mode"] = mode.kind == SweepMode::Kind::All ? "all" : "sample " + std::to_string(mode.samples);
        for (const char* key : {"orderings", "perfect", "dealer_failures", "violations", "worst_complexity", "seed"}) {
          report.body[key] = summary[key];
        }
        Json offending = Json::array();
        for (const auto& run : result.runs) {
          if (run.failure || !run.report->perfect) offending.push_back(joined(run.permutation));
        }
        report.body["offending_permutations"] = offending;
        if (output.json) {
          report.body["runs"] = summary["runs"];
        } else if (mode.kind == SweepMode::Kind::Sample) {
          Json perms = Json::array();
          for (const auto& run : result.runs) perms.push_back(joined(run.permutation));
          report.body["permutations"] = perms;
        }
        if (!transcripts_dir.empty()) {
          std::filesystem::create_directories(transcripts_dir);
          for (const auto& run : result.runs) {
            if (!run.transcript) continue;
            write_file(std::filesystem::path(transcripts_dir) / ("perm_" + joined(run.permutation, '_') + ".txt"),
                       format_transcript(*run.transcript));
          }
        }
        status = result.all_perfect ? 0 : kExitViolation;
      }
    } else if (transcript->parsed()) {
      const auto gamma = load();
      auto dealer = make_dealer(scheme_opt, gamma)();
      const auto tr = run(*dealer, gamma, parse_list(perm_text));
      const std::string text = format_transcript(tr);
      const auto verdict = is_perfect(tr.scheme, gamma);
      if (output.json) {
        report.body["transcript"] = text;
        report.body["perfect"] = verdict.perfect;
        report.body["complexity"] = rational_json(verdict.complexity);
        output.emit(report, elapsed());
      } else {
        std::cout << text;
      }
      return verdict.perfect ? 0 : kExitViolation;
    } else if (lp->parsed()) {
      const auto gamma = load();
      report.body["structure"] = structure_json(gamma);
      auto program = build_lp(gamma, drop_e);
      if (!symmetrize.empty()) {
        const auto vertices = parse_list(symmetrize);
        program = add_symmetry(std::move(program), induced(gamma, make_set(vertices)));
        report.body["symmetrize"] = vertices;
      }
      if (!export_path.empty()) write_file(export_path, export_lp(program));
      const auto result = solve(program);
      const Json kappa = kappa_json(result, with_witness);
      for (const auto& [key, value] : kappa.items()) report.body[key] = value;
    } else if (bounds_cmd->parsed()) {
      report.body["bound"] = bound_name;
      Rational value;
      if (bound_name == "stinson") {
        value = bounds::stinson(bd);
      } else if (bound_name == "ff") {
        if (structure_path.empty()) throw Error(ErrorCode::BadParam, "ff needs --structure");
        value = bounds::ff(load());
      } else if (bound_name == "tightened-offline") {
        value = bounds::tightened_offline(bd, bn);
      } else if (bound_name == "star-lower") {
        value = bounds::star_lower(bd, bm);
      } else if (bound_name == "path-lower") {
        value = bounds::path_lower(bn);
      } else if (bound_name == "cycle-upper") {
        value = bounds::cycle_upper(bn);
      } else if (bound_name == "graph-online-upper") {
        value = bounds::graph_online_upper(bd, bn);
      } else if (bound_name == "thm15") {
        report.body["M"] = rational_json(bounds::thm15_m(bn, br));
        value = bounds::thm15_upper(bn, bd, br);
      } else if (bound_name == "tree-online-lower") {
        value = bounds::tree_online_lower(bn);
      } else if (bound_name == "perf-ratio-lower") {
        std::ostringstream os;
        os.precision(6);
        os << std::fixed << bounds::perf_ratio_lower(bn);
        report.body["value"] = {{"decimal", os.str()}};
        output.emit(report, elapsed());
        return 0;
      } else {
        throw Error(ErrorCode::BadParam, "unknown bound '" + bound_name + "'");
      }
      report.body["value"] = rational_json(value);
    } else if (fullsym->parsed()) {
      const auto gamma = load();
      report.body["structure"] = structure_json(gamma);
      const int cap = size_cap.value_or(gamma.size());
      const auto result = is_fully_symmetric(gamma, cap);
      report.body["size_cap"] = cap;
      report.body["fully_symmetric"] = result.fully_symmetric;
      report.body["witness"] = result.witness ? Json(result.witness->to_string()) : Json(nullptr);
      report.body["examined"] = result.examined;
      report.body["automorphisms"] = automorphisms(gamma).size();
    }
    output.emit(report, elapsed());
    return status;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::DealerFailure ? kExitViolation : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
