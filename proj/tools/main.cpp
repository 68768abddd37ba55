// Command-line front end: batch computation of Kauffman-state invariants
// from planar diagram files.
//
// Exit codes: 0 success, 1 record errors under --strict (or failed verify
// checks), 2 usage errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kstate/batch.hpp"

namespace {

struct CommonArgs {
  std::string file;
  std::string format = "pd";
  std::string out = "text";
  kstate::ComputeOptions opts;
  bool strict = false;
  int marked_edge = 0;
  int outer_face = -1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_out = true) {
  cmd->add_option("file", args.file, "diagram file, one PD or Gauss line each; '-' for stdin")
      ->required();
  cmd->add_option("--format", args.format, "input format")
      ->check(CLI::IsMember({"pd", "gauss"}))
      ->capture_default_str();
  if (with_out)
    cmd->add_option("--out", args.out, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  cmd->add_option("--marked-edge", args.marked_edge, "override the marked edge");
  cmd->add_option("--outer-face", args.outer_face, "override the outer face A");
  cmd->add_flag("--strict", args.strict, "exit 1 if any record errored");
}

kstate::ComputeOptions finish_options(const CommonArgs& args) {
  kstate::ComputeOptions o = args.opts;
  o.format = args.format == "gauss" ? kstate::InputFormat::gauss
                                    : kstate::InputFormat::pd;
  if (args.marked_edge > 0) o.marked_edge = args.marked_edge;
  if (args.outer_face >= 0) o.outer_face = args.outer_face;
  return o;
}

int open_input(const std::string& path, std::ifstream& file, std::istream*& in) {
  if (path == "-") {
    in = &std::cin;
    return 0;
  }
  file.open(path);
  if (!file) {
    std::cerr << "cannot open '" << path << "'\n";
    return 2;
  }
  in = &file;
  return 0;
}

bool any_record_error(const std::vector<kstate::BatchRecord>& records) {
  for (const auto& r : records)
    if (!r.error.empty()) return true;
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kauffman-state invariants of knot and link projections"};
  app.require_subcommand(1);

  CommonArgs compute_args;
  bool flag_all = false;
  int sigma_override = 0;
  bool sigma_set = false;
  auto* compute = app.add_subcommand("compute", "compute invariants per diagram");
  add_common(compute, compute_args);
  compute->add_flag("--all", flag_all, "compute everything applicable");
  compute->add_flag("--count", compute_args.opts.count_states, "number of Kauffman states");
  compute->add_flag("--alexander", compute_args.opts.alexander,
                    "Alexander polynomial state sum");
  compute->add_flag("--signature", compute_args.opts.signature,
                    "signature of an alternating diagram");
  compute->add_flag("--hfk", compute_args.opts.hfk, "knot Floer ranks and gradings");
  compute->add_flag("--hfplus", compute_args.opts.hfplus, "HF+ of zero-surgery");
  compute->add_flag("--d1", compute_args.opts.d1, "correction term of +1-surgery");
  compute->add_flag("--obstruct", compute_args.opts.obstruct,
                    "alternating-ness obstruction");
  compute->add_flag("--hopf", compute_args.opts.hopf,
                    "Hopf invariant of the induced contact structure");
  compute->add_option("--sigma", sigma_override,
                      "externally supplied signature for --obstruct");
  compute->add_flag("--assume-fibered", compute_args.opts.assume_fibered,
                    "skip the fiberedness guard for --hopf");

  CommonArgs states_args;
  bool canonical_only = false, clock = false;
  auto* states = app.add_subcommand("states", "list Kauffman states");
  add_common(states, states_args);
  states->add_flag("--list", "list all states (default)");
  states->add_flag("--canonical", canonical_only, "print only the canonical state");
  states->add_flag("--clock", clock, "report transposition graph size and connectivity");

  CommonArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run oracle cross-checks");
  add_common(verify, verify_args, /*with_out=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) {
      auto opts = finish_options(compute_args);
      if (flag_all) opts.select_all();
      if (!opts.anything_selected()) opts.select_all();
      if (compute->count("--sigma")) {
        sigma_set = true;
        opts.sigma_override = sigma_override;
      }
      (void)sigma_set;
      std::ifstream file;
      std::istream* in = nullptr;
      if (int rc = open_input(compute_args.file, file, in)) return rc;
      auto records = kstate::run_compute(*in, opts);
      if (compute_args.out == "json")
        std::cout << kstate::render_json(records);
      else if (compute_args.out == "csv")
        std::cout << kstate::render_csv(records);
      else
        std::cout << kstate::render_text(records);
      return (compute_args.strict && any_record_error(records)) ? 1 : 0;
    }
    if (states->parsed()) {
      auto opts = finish_options(states_args);
      std::ifstream file;
      std::istream* in = nullptr;
      if (int rc = open_input(states_args.file, file, in)) return rc;
      auto records = kstate::run_states(*in, opts, canonical_only, clock);
      if (states_args.out == "json")
        std::cout << kstate::render_states_json(records);
      else
        std::cout << kstate::render_states_text(records);
      bool errored = false;
      for (const auto& r : records)
        if (!r.error.empty()) errored = true;
      return (states_args.strict && errored) ? 1 : 0;
    }
    if (verify->parsed()) {
      auto opts = finish_options(verify_args);
      std::ifstream file;
      std::istream* in = nullptr;
      if (int rc = open_input(verify_args.file, file, in)) return rc;
      auto rows = kstate::run_verify(*in, opts);
      std::cout << kstate::render_verify_text(rows);
      return kstate::verify_all_passed(rows) ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
