// hwm: construct, verify, search, inspect and certify Hankel weighing matrices.
//
// Exit codes: 0 ok, 2 usage or input error, 3 resource refusal, 4 certification fail.

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hwm/hwm.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;
constexpr int kExitCertFail = 4;

/// Setting this to 1 lifts the hankel_hollow order bound, like --force.
constexpr const char* kAllowLargeEnv = "HWM_ALLOW_LARGE";

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return "";
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 14];
  while (in) {
    in.read(buf, sizeof buf);
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hwm::Error(hwm::ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

struct Manifest {
  json record;

  Manifest(const std::string& command, json parameters) {
    record["command"] = command;
    record["parameters"] = std::move(parameters);
    record["tool_version"] = hwm::kVersion;
    record["started_at"] = utc_now();
    record["inputs"] = json::array();
    record["outputs"] = json::array();
  }

  void input(const std::string& path) { record["inputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}}); }
  void output(const std::string& path) { record["outputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}}); }

  void write(const std::string& path) {
    record["finished_at"] = utc_now();
    write_text(path, record.dump(2) + "\n");
  }
};

std::vector<std::size_t> one_based(const std::vector<hwm::Vertex>& vs) {
  std::vector<std::size_t> out;
  for (auto v : vs) out.push_back(v + 1);
  return out;
}

json summary_json(const hwm::GraphSummary& s) {
  json j;
  j["order"] = s.order;
  j["regular_degree"] = s.regular_degree ? json(*s.regular_degree) : json(nullptr);
  j["edge_count"] = s.edge_count;
  j["loop_count"] = s.loop_count;
  j["loopless"] = s.loopless;
  j["connected"] = s.connected;
  j["component_count"] = s.component_count;
  j["bipartite"] = s.bipartite;
  return j;
}

json predicates_json(const hwm::TernaryMatrix& m) {
  const auto k = hwm::is_weighing(m);
  json j;
  j["order"] = m.order();
  j["weighing"] = k ? json(*k) : json(nullptr);
  j["symmetric"] = hwm::is_symmetric(m);
  j["hollow"] = hwm::is_hollow(m);
  j["hankel"] = hwm::is_hankel(m);
  j["anticirculant"] = hwm::is_anticirculant(m);
  j["circulant"] = hwm::is_circulant(m);
  return j;
}

// ---- construct ------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::optional<long long> t, offset, n_half, m;
  std::string out;
};

hwm::FamilyDescriptor descriptor_of(const ConstructArgs& a) {
  using hwm::Family;
  hwm::FamilyDescriptor d;
  d.family = hwm::parse_family(a.family);
  auto reject = [&](const std::optional<long long>& v, const char* flag) {
    if (v) throw hwm::Error(hwm::ErrorKind::InvalidArgument, std::string(flag) + " does not apply to " + a.family);
  };
  auto require = [&](const std::optional<long long>& v, const char* flag) {
    if (!v) throw hwm::Error(hwm::ErrorKind::InvalidArgument, a.family + " needs " + flag);
    d.parameters.push_back(*v);
  };
  switch (d.family) {
    case Family::AW44:
    case Family::AW64:
    case Family::AW74:
    case Family::CW64:
      reject(a.t, "--t"), reject(a.offset, "--offset"), reject(a.n_half, "--n-half"), reject(a.m, "--m");
      break;
    case Family::M44_interlaced:
      reject(a.n_half, "--n-half"), reject(a.m, "--m");
      require(a.t, "--t");
      if (a.offset) d.parameters.push_back(*a.offset);
      break;
    case Family::M64_interlaced:
    case Family::M74_interlaced:
      reject(a.offset, "--offset"), reject(a.n_half, "--n-half"), reject(a.m, "--m");
      require(a.t, "--t");
      break;
    case Family::HW_weight2_blocks:
      reject(a.t, "--t"), reject(a.offset, "--offset"), reject(a.m, "--m");
      require(a.n_half, "--n-half");
      break;
    case Family::M64_block_family:
      reject(a.t, "--t"), reject(a.offset, "--offset"), reject(a.n_half, "--n-half");
      require(a.m, "--m");
      break;
  }
  return d;
}

int cmd_construct(const ConstructArgs& a) {
  const auto d = descriptor_of(a);
  const auto m = hwm::construct(d);
  json summary;
  summary["family"] = a.family;
  summary["parameters"] = d.parameters;
  const auto preds = predicates_json(m);
  summary["order"] = preds["order"];
  summary["weight"] = preds["weighing"];
  summary["hollow"] = preds["hollow"];
  summary["hankel"] = preds["hankel"];
  summary["anticirculant"] = preds["anticirculant"];
  if (a.out.empty()) {
    std::cout << hwm::format_matrix(m);
  } else {
    hwm::write_matrix_file(a.out, m);
    Manifest manifest("construct", {{"family", a.family}, {"parameters", d.parameters}, {"out", a.out}});
    manifest.output(a.out);
    manifest.write(a.out + ".manifest.json");
  }
  std::cout << summary.dump() << "\n";
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& in) {
  const auto m = hwm::read_matrix_file(in);
  json report = predicates_json(m);
  report["graph"] = hwm::has_symmetric_support(m) ? summary_json(hwm::summarize(hwm::graph_of_matrix(m)))
                                                  : json(nullptr);
  std::cout << report.dump(2) << "\n";
  return kExitOk;
}

// ---- search ---------------------------------------------------------------

struct SearchArgs {
  std::size_t order = 0, weight = 0;
  std::string structure = "anticirculant";
  bool canonical = false, resume = false, force = false, compare_aw = false;
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
  std::size_t split_depth = 0;
  std::string out_dir;
};

bool env_allows_large() {
  const char* v = std::getenv(kAllowLargeEnv);
  return v && std::string(v) == "1";
}

int cmd_search(const SearchArgs& a) {
  hwm::SearchSpec spec;
  spec.order = a.order;
  spec.weight = a.weight;
  spec.structure = hwm::parse_structure(a.structure);
  spec.canonicalize = a.canonical;
  spec.limit = a.limit;
  spec.allow_large = a.force || env_allows_large();
  spec.validate();
  if (a.resume && a.out_dir.empty())
    throw hwm::Error(hwm::ErrorKind::InvalidArgument, "--resume needs --out-dir");

  hwm::RunOptions opts;
  opts.jobs = std::max(1u, a.jobs);
  opts.split_depth = a.split_depth;
  opts.resume = a.resume;
  if (!a.out_dir.empty()) {
    fs::create_directories(a.out_dir);
    opts.journal_path = (fs::path(a.out_dir) / "journal.jsonl").string();
  }

  const auto result = hwm::run_search(spec, opts);

  // Graphs of the anticirculant matrices of the same order and weight, for the HW/AW comparison.
  std::optional<std::vector<hwm::SimpleGraph>> aw_graphs;
  if (a.compare_aw && spec.structure == hwm::Structure::hankel_hollow) {
    hwm::SearchSpec aw = spec;
    aw.structure = hwm::Structure::anticirculant;
    aw.canonicalize = true;
    aw.limit.reset();
    aw_graphs.emplace();
    for (const auto& row : hwm::run_search(aw).solutions)
      aw_graphs->push_back(hwm::graph_of_matrix(hwm::solution_matrix(aw.structure, spec.order, row)));
  }

  std::ostringstream lines;
  for (const auto& c : result.solutions) {
    const auto m = hwm::solution_matrix(spec.structure, spec.order, c);
    json j;
    j["order"] = spec.order;
    j["weight"] = spec.weight;
    j["structure"] = std::string(hwm::to_string(spec.structure));
    j[spec.structure == hwm::Structure::anticirculant ? "first_row" : "skew_profile"] = c;
    const auto g = hwm::graph_of_matrix(m);
    j["graph_summary"] = summary_json(hwm::summarize(g));
    if (aw_graphs) {
      bool found = false;
      for (const auto& h : *aw_graphs)
        if (hwm::are_isomorphic(g, h)) {
          found = true;
          break;
        }
      j["isomorphic_to_aw"] = found;
    }
    lines << j.dump() << "\n";
  }

  json stats;
  stats["count"] = result.count();
  stats["nodes"] = result.stats.nodes;
  stats["pruned"] = result.stats.pruned;
  stats["leaves"] = result.stats.leaves;
  stats["subtrees"] = result.stats.subtrees;
  stats["resumed_subtrees"] = result.stats.resumed_subtrees;
  stats["wall_seconds"] = result.wall_seconds;

  if (a.out_dir.empty()) {
    std::cout << lines.str();
    std::cerr << stats.dump() << "\n";
    return kExitOk;
  }
  const std::string results_path = (fs::path(a.out_dir) / "results.jsonl").string();
  write_text(results_path, lines.str());
  json params;
  params["order"] = spec.order;
  params["weight"] = spec.weight;
  params["structure"] = std::string(hwm::to_string(spec.structure));
  params["canonical"] = spec.canonicalize;
  params["limit"] = spec.limit ? json(*spec.limit) : json(nullptr);
  params["jobs"] = opts.jobs;
  params["split_depth"] = opts.split_depth;
  params["resume"] = opts.resume;
  params["allow_large"] = spec.allow_large;
  params["compare_aw"] = a.compare_aw;
  Manifest manifest("search", params);
  manifest.record["statistics"] = stats;
  manifest.output(results_path);
  manifest.output(opts.journal_path);
  manifest.write((fs::path(a.out_dir) / "manifest.json").string());
  std::cout << stats.dump() << "\n";
  return kExitOk;
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
  std::string in;
  bool dot = false, summary = false, hamilton = false, chromatic = false, adjacency = false;
  std::string isomorphic;
};

int cmd_graph(const GraphArgs& a) {
  const auto g = hwm::graph_of_matrix(hwm::read_matrix_file(a.in));
  const bool any_json = a.summary || a.hamilton || a.chromatic || !a.isomorphic.empty();
  if (a.dot) std::cout << hwm::to_dot(g);
  if (a.adjacency) std::cout << hwm::to_adjacency_list(g);
  if (!any_json && (a.dot || a.adjacency)) return kExitOk;

  json j;
  if (a.summary || !any_json) j["summary"] = summary_json(hwm::summarize(g));
  if (a.hamilton) {
    const auto cycle = hwm::hamiltonian_cycle(g);
    j["hamiltonian_cycle"] = cycle ? json(one_based(*cycle)) : json(nullptr);
  }
  if (a.chromatic) j["chromatic_number"] = hwm::chromatic_number_small(g);
  if (!a.isomorphic.empty()) {
    const auto h = hwm::graph_of_matrix(hwm::read_matrix_file(a.isomorphic));
    const auto map = hwm::are_isomorphic(g, h);
    j["isomorphic"] = map.has_value();
    j["witness"] = map ? json(one_based(*map)) : json(nullptr);
  }
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

// ---- cvcs -----------------------------------------------------------------

int cmd_cvcs(const std::string& in, const std::vector<double>& r_list, const std::string& report_path) {
  const auto w = hwm::read_matrix_file(in);
  const auto c = hwm::CouplingMatrix::from_weighing(w);
  const auto cert = hwm::certify_cluster(c, r_list);

  json j;
  j["order"] = w.order();
  j["weight"] = *hwm::is_weighing(w);
  if (hwm::is_hankel(w)) {
    const auto spectrum = hwm::pump_spectrum(w);
    j["pump_count"] = spectrum.count();
    j["pump_frequencies"] = spectrum.frequencies;
    j["min_pump_count"] = hwm::minimal_pump_count(w);
  } else {
    j["pump_count"] = nullptr;
  }
  j["mask"] = one_based(cert.mask);
  j["sign"] = cert.sign;
  j["r"] = cert.r_values;
  j["variances"] = cert.variances;
  j["max_variance"] = cert.max_variance;
  j["slope"] = cert.slope;
  j["pass"] = cert.pass;

  const std::string text = j.dump(2) + "\n";
  std::cout << text;
  if (!report_path.empty()) {
    write_text(report_path, text);
    Manifest manifest("cvcs", {{"in", in}, {"r", r_list}, {"report", report_path}});
    manifest.input(in);
    manifest.output(report_path);
    manifest.write(report_path + ".manifest.json");
  }
  return cert.pass ? kExitOk : kExitCertFail;
}

int exit_code_for(const hwm::Error& e) {
  return e.kind() == hwm::ErrorKind::SizeLimitExceeded ? kExitRefused : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel and anticirculant weighing matrices, their graphs, and cluster-state checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", hwm::kVersion);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build a named family member");
  construct->add_option("--family", construct_args.family, "Family name")->required();
  construct->add_option("--t", construct_args.t, "Interlace count");
  construct->add_option("--offset", construct_args.offset, "Cyclic offset for M44_interlaced");
  construct->add_option("--n-half", construct_args.n_half, "Block size for HW_weight2_blocks");
  construct->add_option("--m", construct_args.m, "Parameter m for M64_block_family (>= 3)");
  construct->add_option("--out", construct_args.out, "Matrix output file (stdout if omitted)");

  std::string verify_in;
  auto* verify = app.add_subcommand("verify", "Report structural predicates of a matrix file");
  verify->add_option("input", verify_in, "Matrix file")->required();

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Enumerate weighing matrices of a given structure");
  search->add_option("--order", search_args.order, "Order n")->required();
  search->add_option("--weight", search_args.weight, "Weight k")->required();
  search->add_option("--structure", search_args.structure, "anticirculant or hankel_hollow");
  search->add_flag("--canonical", search_args.canonical, "Deduplicate up to the symmetry group");
  search->add_option("--limit", search_args.limit, "Maximum number of results");
  search->add_option("--jobs", search_args.jobs, "Worker threads");
  search->add_option("--split-depth", search_args.split_depth, "Variables fixed per subtree");
  search->add_flag("--resume", search_args.resume, "Skip subtrees completed in the journal");
  search->add_option("--out-dir", search_args.out_dir, "Directory for results, journal and manifest");
  search->add_flag("--force", search_args.force, "Lift the hankel_hollow order bound");
  search->add_flag("--compare-aw", search_args.compare_aw,
                   "For hankel_hollow, report whether an anticirculant matrix has an isomorphic graph");

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Analyse the graph of a matrix");
  graph->add_option("input", graph_args.in, "Matrix file")->required();
  graph->add_flag("--dot", graph_args.dot, "Print DOT");
  graph->add_flag("--adjacency", graph_args.adjacency, "Print adjacency lists");
  graph->add_flag("--summary", graph_args.summary, "Print the graph summary");
  graph->add_flag("--hamilton", graph_args.hamilton, "Find a Hamiltonian cycle");
  graph->add_flag("--chromatic", graph_args.chromatic, "Compute the chromatic number");
  graph->add_option("--isomorphic", graph_args.isomorphic, "Matrix file to test for isomorphism");

  std::string cvcs_in, cvcs_report;
  std::vector<double> r_list{0.5, 1.0, 1.5, 2.0};
  auto* cvcs = app.add_subcommand("cvcs", "Certify the cluster state generated by a weighing matrix");
  cvcs->add_option("input", cvcs_in, "Matrix file")->required();
  cvcs->add_option("--r", r_list, "Squeezing parameters")->delimiter(',');
  cvcs->add_option("--report", cvcs_report, "JSON report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(construct_args);
    if (*verify) return cmd_verify(verify_in);
    if (*search) return cmd_search(search_args);
    if (*graph) return cmd_graph(graph_args);
    if (*cvcs) return cmd_cvcs(cvcs_in, r_list, cvcs_report);
  } catch (const hwm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
