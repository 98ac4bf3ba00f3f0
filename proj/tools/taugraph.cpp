// taugraph: eccentricity indices, named families, tree rewrites, exhaustive
// enumeration and the verification suite from the command line.
//
// Exit codes: 0 success, 1 usage or input error, 2 a check failed.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taugraph/enumerate.hpp"
#include "taugraph/families.hpp"
#include "taugraph/io.hpp"
#include "taugraph/metrics.hpp"
#include "taugraph/rewrite.hpp"
#include "taugraph/verify.hpp"

namespace fs = std::filesystem;
using namespace taugraph;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kCheckFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_tau(const std::string& file, bool all) {
  const auto g = read_edge_list_file(file);
  if (g.order() == 0) throw UsageError("graph has no vertices");
  if (!is_connected(g)) throw UsageError("graph is disconnected");
  const auto r = index_report(g);
  std::cout << "n=" << r.n << " m=" << r.m << " tau=" << r.tau << " avec=" << to_string(r.avec) << " xi=" << r.xi
            << " rad=" << r.rad << " diam=" << r.diam << '\n';
  if (all) {
    const auto p = ecc_profile(g);
    for (Vertex v = 0; v < g.order(); ++v) std::cout << "ecc " << v << ' ' << p.ecc[v] << '\n';
  }
  return kOk;
}

int cmd_family(const std::string& name, int n, int k) {
  const auto id = parse_family(name);
  if (!id) {
    std::string known;
    for (auto f : kAllFamilies) known += (known.empty() ? "" : ", ") + std::string(to_string(f));
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
  const FamilySpec spec{*id, n, takes_k(*id) ? k : 0};
  if (takes_k(*id) && k == 0) throw UsageError(std::string(to_string(*id)) + " needs --k");
  if (auto why = range_violation(spec)) throw UsageError(*why);
  const auto g = construct(spec);
  const auto cf = closed_form_tau(spec);
  std::vector<std::string> comments{
      to_string(spec),
      "tau_computed " + std::to_string(tau(g)),
      "tau_closed_form " + to_string(cf.value),
      "tau_paper " + to_string(cf.paper_value),
      "status " + to_string(cf.status),
  };
  if (!cf.note.empty()) comments.push_back("note " + cf.note);
  write_edge_list(std::cout, g, comments);
  return kOk;
}

int cmd_rewrite(int algorithm, const std::string& file, const std::string& trace_out) {
  const auto g = read_edge_list_file(file);
  RewriteTrace trace;
  try {
    trace = run_algorithm(algorithm, g);
  } catch (const RewriteError& e) {
    throw UsageError(e.what());
  }
  const auto text = trace_string(trace);
  std::cout << "algorithm " << algorithm << ": tau " << trace.initial_tau << " -> " << trace.final_tau() << ", rad "
            << trace.initial_rad << " -> " << trace.final_rad() << ", " << trace.steps.size() << " steps\n";
  if (trace_out.empty()) {
    std::cout << text;
  } else {
    write_file_atomically(trace_out, text);
  }
  const auto problems = trace_violations(trace);
  for (const auto& p : problems) std::cerr << "violation: " << p << '\n';
  return problems.empty() ? kOk : kCheckFailed;
}

int cmd_enumerate(const std::string& cls_name, int min_n, int max_n, int bound, const std::string& witness_dir,
                  unsigned threads, const std::string& out_file) {
  const auto cls = parse_enum_class(cls_name);
  if (!cls) throw UsageError("unknown class '" + cls_name + "' (tree, unicyclic, bicyclic, conjugated-tree)");
  EnumerationLimits limits;
  if (bound > 0) {
    if (bound > kMaxEnumerationOrder) {
      throw UsageError("--bound may not exceed " + std::to_string(kMaxEnumerationOrder));
    }
    switch (*cls) {
      case EnumClass::tree: limits.tree = bound; break;
      case EnumClass::unicyclic: limits.unicyclic = bound; break;
      case EnumClass::bicyclic: limits.bicyclic = bound; break;
      case EnumClass::conjugated_tree: limits.conjugated = bound; break;
    }
  }
  if (min_n == 0) min_n = min_order(*cls);
  if (max_n == 0) max_n = min_n;
  if (min_n > max_n) throw UsageError("--min-n exceeds --max-n");
  if (min_n < min_order(*cls) || max_n > limits.max_for(*cls)) {
    throw UsageError(std::string(to_string(*cls)) + " enumeration supports " + std::to_string(min_order(*cls)) +
                     " <= n <= " + std::to_string(limits.max_for(*cls)));
  }
  if (!witness_dir.empty()) fs::create_directories(witness_dir);

  std::ostringstream csv;
  write_report_csv_header(csv);
  for (int n = min_n; n <= max_n; ++n) {
    if (*cls == EnumClass::conjugated_tree && n % 2 != 0) continue;
    const auto graphs = gen_class(*cls, n, limits, threads);
    const auto r = summarize(*cls, n, graphs);
    write_report_csv_row(csv, r);
    if (witness_dir.empty()) continue;
    auto dump = [&](const std::vector<CanonicalKey>& keys, const char* kind) {
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const auto g = graph_from_key(keys[i]);
        std::ostringstream body;
        write_edge_list(body, g, {std::string(to_string(*cls)) + " n=" + std::to_string(n) + " " + kind +
                                      " tau=" + std::to_string(tau(g))});
        const auto name = std::string(to_string(*cls)) + "_n" + std::to_string(n) + "_" + kind + "_" +
                          std::to_string(i) + ".txt";
        write_file_atomically(fs::path(witness_dir) / name, body.str());
      }
    };
    dump(r.min_witnesses, "min");
    dump(r.max_witnesses, "max");
  }
  if (out_file.empty()) {
    std::cout << csv.str();
  } else {
    write_file_atomically(out_file, csv.str());
  }
  return kOk;
}

struct VerifyFlags {
  int max_n = 0;
  int max_tree = 0;
  int max_unicyclic = 0;
  int max_bicyclic = 0;
  int max_conjugated = 0;
  int family_max_n = 20;
  unsigned threads = 1;
  std::string inject_fault;
};

int cmd_verify(const VerifyFlags& f) {
  VerifyOptions opt;
  opt.threads = f.threads;
  opt.family_max_order = f.family_max_n;
  if (f.max_n > 0) opt.limits = {f.max_n, f.max_n, f.max_n, f.max_n};
  if (f.max_tree > 0) opt.limits.tree = f.max_tree;
  if (f.max_unicyclic > 0) opt.limits.unicyclic = f.max_unicyclic;
  if (f.max_bicyclic > 0) opt.limits.bicyclic = f.max_bicyclic;
  if (f.max_conjugated > 0) opt.limits.conjugated = f.max_conjugated;
  for (int bound : {opt.limits.tree, opt.limits.unicyclic, opt.limits.bicyclic, opt.limits.conjugated}) {
    if (bound > kMaxEnumerationOrder) {
      throw UsageError("class bounds may not exceed " + std::to_string(kMaxEnumerationOrder));
    }
  }
  if (f.family_max_n < 1 || f.family_max_n > 64) throw UsageError("--family-max-n must be in 1..64");
  if (f.inject_fault == "u2") {
    opt.build = corrupted_u2;
  } else if (!f.inject_fault.empty()) {
    throw UsageError("unknown fault '" + f.inject_fault + "' (known: u2)");
  }

  const auto start = std::chrono::steady_clock::now();
  const auto results = run_verification(opt);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_verification_report(std::cout, results);
  std::cerr << "runtime " << std::fixed << std::setprecision(2) << seconds << " s\n";
  for (const auto& r : results)
    if (!r.passed) return kCheckFailed;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eccentricity indices, tree rewrites and exhaustive extremal checks"};
  app.require_subcommand(1);

  std::string file;
  bool all = false;
  auto* tau_cmd = app.add_subcommand("tau", "Print n, m, tau, avec, xi, rad and diam of an edge-list file");
  tau_cmd->add_option("file", file, "Edge-list file")->required();
  tau_cmd->add_flag("--all", all, "Also print every vertex eccentricity");

  std::string name;
  int n = 0;
  int k = 0;
  auto* family_cmd = app.add_subcommand("family", "Emit a family member with its computed and closed-form tau");
  family_cmd->add_option("--name", name, "Family name")->required();
  family_cmd->add_option("--n", n, "Order")->required();
  family_cmd->add_option("--k", k, "Part size (complete_bipartite) or first star size (double_star)");

  int algorithm = 0;
  std::string trace_out;
  auto* rewrite_cmd = app.add_subcommand("rewrite", "Run a tree-rewriting algorithm and record its trace");
  rewrite_cmd->add_option("--algorithm", algorithm, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  rewrite_cmd->add_option("file", file, "Edge-list file of a tree")->required();
  rewrite_cmd->add_option("--trace", trace_out, "Write the trace here instead of standard output");

  std::string cls;
  int min_n = 0;
  int max_n = 0;
  int bound = 0;
  std::string witness_dir;
  std::string out_file;
  unsigned threads = 1;
  auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive extremal scan as CSV");
  enum_cmd->add_option("--class", cls, "tree, unicyclic, bicyclic or conjugated-tree")->required();
  enum_cmd->add_option("--min-n", min_n, "Smallest order (default: class minimum)");
  enum_cmd->add_option("--max-n", max_n, "Largest order (default: --min-n)");
  enum_cmd->add_option("--bound", bound, "Raise the class order bound (at most 16)");
  enum_cmd->add_option("--witness-dir", witness_dir, "Write every extremal graph as an edge-list file here");
  enum_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1U, 256U));
  enum_cmd->add_option("--out", out_file, "Write the CSV here instead of standard output");

  VerifyFlags vf;
  auto* verify_cmd = app.add_subcommand("verify", "Run the full verification suite");
  verify_cmd->add_option("--max-n", vf.max_n, "Order bound for every class");
  verify_cmd->add_option("--max-tree", vf.max_tree, "Order bound for trees");
  verify_cmd->add_option("--max-unicyclic", vf.max_unicyclic, "Order bound for unicyclic graphs");
  verify_cmd->add_option("--max-bicyclic", vf.max_bicyclic, "Order bound for bicyclic graphs");
  verify_cmd->add_option("--max-conjugated", vf.max_conjugated, "Order bound for conjugated trees");
  verify_cmd->add_option("--family-max-n", vf.family_max_n, "Largest family order checked (default 20)");
  verify_cmd->add_option("--threads", vf.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  verify_cmd->add_option("--inject-fault", vf.inject_fault, "Swap in a corrupted constructor (u2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*tau_cmd) return cmd_tau(file, all);
    if (*family_cmd) return cmd_family(name, n, k);
    if (*rewrite_cmd) return cmd_rewrite(algorithm, file, trace_out);
    if (*enum_cmd) return cmd_enumerate(cls, min_n, max_n, bound, witness_dir, threads, out_file);
    if (*verify_cmd) return cmd_verify(vf);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
