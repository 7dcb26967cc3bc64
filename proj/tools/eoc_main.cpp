// Command-line front end: run the enumeration pipeline, check it against the
// brute-force oracle, or print dataset statistics.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "eoc/errors.hpp"
#include "eoc/pipeline.hpp"

namespace {

enum Exit { ok = 0, usage = 1, data = 2, mismatch = 3 };

struct InputArgs {
  std::string path;
  std::string format = "uvt";
  std::string delimiter = "whitespace";
  bool rebase = false;
  std::optional<long long> t_start;
  std::optional<long long> t_end;
};

void add_input_options(CLI::App* app, InputArgs& in) {
  app->add_option("--input", in.path, "Link file, one link per line")->required();
  app->add_option("--format", in.format, "Column order")
      ->check(CLI::IsMember({"tuv", "uvt"}))
      ->capture_default_str();
  app->add_option("--delimiter", in.delimiter, "Field separator")
      ->check(CLI::IsMember({"whitespace", "comma"}))
      ->capture_default_str();
  app->add_flag("--rebase", in.rebase, "Shift timestamps so the first one is 0");
  app->add_option("--t-start", in.t_start, "Observation window start (default: first timestamp)");
  app->add_option("--t-end", in.t_end, "Observation window end (default: last timestamp)");
}

eoc::LinkStream load(const InputArgs& in) {
  eoc::FormatSpec spec;
  spec.order = in.format == "tuv" ? eoc::ColumnOrder::tuv : eoc::ColumnOrder::uvt;
  spec.delimiter = in.delimiter == "comma" ? eoc::Delimiter::comma : eoc::Delimiter::whitespace;
  spec.rebase = in.rebase;
  auto stream = eoc::parse_links_file(in.path, spec);
  if (in.t_start || in.t_end) {
    auto obs = stream.observation();
    if (in.t_start) obs.start = *in.t_start;
    if (in.t_end) obs.end = *in.t_end;
    stream = eoc::LinkStream::from_links(stream.links(), obs);
  }
  return stream;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal (delta,gamma)-clique enumeration with incremental batch updates"};
  app.require_subcommand(1);

  InputArgs input;
  eoc::Params params;
  std::string scheme = "ut";
  std::size_t partitions = 1;
  std::vector<long long> boundaries;
  std::string mode = "offline";
  std::string state_dir, out_path, report_path;
  std::optional<std::size_t> stop_after;
  bool verify = false, no_certify = false;

  auto* run = app.add_subcommand("run", "Enumerate maximal cliques, offline or batch by batch");
  add_input_options(run, input);
  run->add_option("--delta", params.delta, "Window length")->required()->check(CLI::PositiveNumber);
  run->add_option("--gamma", params.gamma, "Links per window")->required()->check(CLI::PositiveNumber);
  run->add_option("--scheme", scheme, "Partitioning scheme")
      ->check(CLI::IsMember({"ut", "ulc", "explicit"}))
      ->capture_default_str();
  run->add_option("--partitions", partitions, "Number of batches for ut/ulc")->capture_default_str();
  run->add_option("--boundaries", boundaries, "Batch boundaries for the explicit scheme")
      ->delimiter(',');
  run->add_option("--mode", mode, "offline or online")
      ->check(CLI::IsMember({"offline", "online"}))
      ->capture_default_str();
  run->add_option("--state-dir", state_dir, "Online mode: persist and resume state here");
  run->add_option("--stop-after", stop_after, "Online mode: stop after this many cycles");
  run->add_option("--out", out_path, "Result file (one clique per line)");
  run->add_option("--report", report_path, "Per-cycle CSV report");
  run->add_flag("--verify", verify, "Compare against the brute-force oracle when small enough");
  run->add_flag("--no-certify", no_certify, "Skip the maximality check of the output");

  InputArgs vinput;
  eoc::Params vparams;
  std::size_t max_vertices = 8;
  long long max_span = 40;
  auto* ver = app.add_subcommand("verify", "Brute-force oracle against the offline run");
  add_input_options(ver, vinput);
  ver->add_option("--delta", vparams.delta, "Window length")->required()->check(CLI::PositiveNumber);
  ver->add_option("--gamma", vparams.gamma, "Links per window")->required()->check(CLI::PositiveNumber);
  ver->add_option("--max-vertices", max_vertices, "Oracle vertex bound")->capture_default_str();
  ver->add_option("--max-span", max_span, "Oracle time-span bound")->capture_default_str();

  InputArgs sinput;
  auto* stats = app.add_subcommand("stats", "Dataset statistics");
  add_input_options(stats, sinput);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*stats) {
      auto s = load(sinput);
      auto b = s.time_bounds();
      std::cout << "vertices " << s.vertices().size() << "\nlinks " << s.link_count()
                << "\nstatic_edges " << s.static_edge_count() << "\nt_min " << b.t_min
                << "\nt_max " << b.t_max << "\nlifetime " << b.lifetime << '\n';
      return ok;
    }

    if (*ver) {
      auto s = load(vinput);
      eoc::PipelineOptions opt;
      opt.params = vparams;
      auto engine = eoc::run_pipeline(s, opt);
      eoc::OracleConfig cfg{max_vertices, max_span};
      auto truth = eoc::brute_force_enumerate(s, vparams, cfg);
      std::size_t missing = 0, extra = 0;
      for (const auto& k : truth) {
        if (!engine.result.contains(k)) {
          ++missing;
          std::cout << "missing " << eoc::to_string(k) << '\n';
        }
      }
      for (const auto& k : engine.result) {
        if (!truth.contains(k)) {
          ++extra;
          std::cout << "extra   " << eoc::to_string(k) << '\n';
        }
      }
      std::cout << "oracle " << truth.size() << " engine " << engine.result.size() << " missing "
                << missing << " extra " << extra << '\n';
      return missing + extra ? mismatch : ok;
    }

    if (mode == "online" && state_dir.empty()) {
      std::cerr << "error: --mode online needs --state-dir\n";
      return usage;
    }
    if (scheme == "explicit" && boundaries.empty()) {
      std::cerr << "error: --scheme explicit needs --boundaries\n";
      return usage;
    }
    auto s = load(input);
    eoc::PipelineOptions opt;
    opt.params = params;
    opt.mode = mode == "online" ? eoc::Mode::online : eoc::Mode::offline;
    opt.plan.scheme = scheme == "ut"    ? eoc::Scheme::uniform_time
                      : scheme == "ulc" ? eoc::Scheme::uniform_link_count
                                        : eoc::Scheme::explicit_boundaries;
    opt.plan.parts = partitions;
    opt.plan.boundaries.assign(boundaries.begin(), boundaries.end());
    if (!state_dir.empty()) opt.state_dir = state_dir;
    opt.stop_after = stop_after;
    opt.verify = verify;
    opt.certify = !no_certify;

    auto report = eoc::run_pipeline(s, opt);
    if (!report_path.empty()) {
      std::ofstream r(report_path);
      if (!r) throw eoc::Error("cannot write " + report_path);
      eoc::write_report(report, r);
    }
    if (!report.finished) {
      std::cout << "stopped after " << report.cycles.size() << " cycle(s); state in " << state_dir
                << '\n';
      return ok;
    }
    if (!out_path.empty()) {
      std::ofstream o(out_path);
      if (!o) throw eoc::Error("cannot write " + out_path);
      eoc::write_result(report.result, o);
    } else {
      eoc::write_result(report.result, std::cout);
    }
    std::cerr << "maximal cliques " << report.result.size() << ", cycles "
              << report.resumed_cycles + report.cycles.size() << ", live peak "
              << report.live_peak << ", " << report.seconds << " s, peak rss "
              << report.peak_rss_kb << " kB\n";
    if (!report.result.empty()) {
      std::cerr << "longest span " << report.temporally_maximum.front().span.length()
                << " (" << report.temporally_maximum.size() << " clique(s)), largest size "
                << report.cardinally_maximum.front().vertices.size() << " ("
                << report.cardinally_maximum.size() << " clique(s))\n";
    }
    if (!report.uncertified.empty()) {
      for (const auto& k : report.uncertified) std::cerr << "not maximal: " << eoc::to_string(k) << '\n';
      return mismatch;
    }
    if (verify) {
      if (report.verified) {
        std::cerr << "oracle " << (*report.verified ? "agrees" : "DISAGREES") << '\n';
        if (!*report.verified) return mismatch;
      } else {
        std::cerr << "oracle skipped: " << report.verify_note << '\n';
      }
    }
    return ok;
  } catch (const eoc::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const eoc::OracleBoundsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const eoc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return data;
  }
}
