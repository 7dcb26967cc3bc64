#include "eoc/pipeline.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>

#include "eoc/errors.hpp"

namespace eoc {

namespace {

std::vector<Timestamp> distinct_times(const LinkStream& stream) {
  std::vector<Timestamp> out;
  for (const auto& l : stream.links()) {
    if (out.empty() || out.back() != l.t) out.push_back(l.t);
  }
  return out;
}

std::vector<Timestamp> uniform_time(const LinkStream& stream, std::size_t k) {
  const auto b = stream.time_bounds();
  std::vector<Timestamp> out;
  for (std::size_t i = 1; i < k; ++i) {
    // floor(i * lifetime / k) without overflow for realistic epochs
    auto step = static_cast<Timestamp>((static_cast<__int128>(b.lifetime) * static_cast<__int128>(i)) /
                                       static_cast<__int128>(k));
    out.push_back(b.t_min + step);
  }
  return out;
}

std::vector<Timestamp> uniform_link_count(const LinkStream& stream, std::size_t k) {
  const auto& links = stream.links();
  const auto times = distinct_times(stream);
  const std::size_t m = links.size();
  std::vector<Timestamp> out;
  std::size_t prev = 0;  // position in `times` of the previous boundary
  for (std::size_t i = 1; i < k; ++i) {
    // The batch ends at the timestamp of its last link; that timestamp
    // stays whole inside this batch.
    std::size_t idx = (i * m + k - 1) / k - 1;
    auto pos = static_cast<std::size_t>(
        std::lower_bound(times.begin(), times.end(), links[idx].t) - times.begin());
    if (i > 1) pos = std::max(pos, prev + 1);
    pos = std::min(pos, times.size() - 1 - (k - i));
    out.push_back(times[pos]);
    prev = pos;
  }
  return out;
}

}  // namespace

std::vector<Batch> partition_links(const LinkStream& stream, const PartitionPlan& plan) {
  const Interval obs = stream.observation();
  std::vector<Timestamp> bounds;
  if (plan.scheme == Scheme::explicit_boundaries) {
    bounds = plan.boundaries;
    if (bounds.empty()) throw ConfigError("explicit plan without boundaries");
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (bounds[i] < obs.start || bounds[i] > obs.end) {
        throw ConfigError("boundary " + std::to_string(bounds[i]) + " outside the observation window");
      }
      if (i && bounds[i] <= bounds[i - 1]) throw ConfigError("boundaries must strictly increase");
    }
    if (bounds.back() < obs.end) bounds.push_back(obs.end);
  } else {
    if (plan.parts < 1) throw ConfigError("partition count must be >= 1");
    const auto times = distinct_times(stream);
    if (plan.parts > times.size()) {
      throw ConfigError("cannot split " + std::to_string(times.size()) + " distinct timestamps into " +
                        std::to_string(plan.parts) + " parts");
    }
    bounds = plan.scheme == Scheme::uniform_time ? uniform_time(stream, plan.parts)
                                                 : uniform_link_count(stream, plan.parts);
    bounds.push_back(obs.end);
    for (std::size_t i = 1; i < bounds.size(); ++i) {
      if (bounds[i] <= bounds[i - 1]) throw ConfigError("partition yields repeated boundaries");
    }
  }

  std::vector<Batch> out;
  auto it = stream.links().begin();
  for (Timestamp b : bounds) {
    Batch batch{b, {}};
    while (it != stream.links().end() && it->t <= b) batch.links.push_back(*it++);
    out.push_back(std::move(batch));
  }
  return out;
}

std::pair<std::vector<CliqueKey>, std::vector<CliqueKey>> stats_maximum_cliques(
    const KeySet& result) {
  if (result.empty()) throw Error("no cliques to rank");
  Timestamp longest = 0;
  std::size_t largest = 0;
  for (const auto& k : result) {
    longest = std::max(longest, k.span.length());
    largest = std::max(largest, k.vertices.size());
  }
  std::vector<CliqueKey> temporal, cardinal;
  for (const auto& k : result) {
    if (k.span.length() == longest) temporal.push_back(k);
    if (k.vertices.size() == largest) cardinal.push_back(k);
  }
  return {temporal, cardinal};
}

std::string state_path(const std::string& state_dir) {
  return (std::filesystem::path(state_dir) / "state.json").string();
}

RunReport run_pipeline(const LinkStream& stream, const PipelineOptions& options) {
  auto t0 = std::chrono::steady_clock::now();
  validate(options.params);
  if (stream.empty()) throw EmptyStreamError("stream has no links");
  const Interval obs = stream.observation();

  std::vector<Batch> batches;
  if (options.mode == Mode::offline) {
    batches.push_back({obs.end, stream.links()});
  } else {
    batches = partition_links(stream, options.plan);
  }

  RunReport report;
  BatchState state = BatchState::initial(options.params, obs.start);
  std::size_t next = 0;
  const bool persist = options.mode == Mode::online && options.state_dir;
  if (persist) {
    std::filesystem::create_directories(*options.state_dir);
    const std::string path = state_path(*options.state_dir);
    if (std::filesystem::exists(path)) {
      state = load_state_file(path, options.params);
      if (state.t_start != obs.start) {
        throw ConfigError("saved state starts at " + std::to_string(state.t_start) +
                          ", input starts at " + std::to_string(obs.start));
      }
      if (state.boundary) {
        while (next < batches.size() && batches[next].boundary <= *state.boundary) ++next;
        if (next == 0 || batches[next - 1].boundary != *state.boundary) {
          throw ConfigError("saved boundary " + std::to_string(*state.boundary) +
                            " is not a boundary of this plan");
        }
      }
      report.resumed_cycles = next;
    }
  }

  std::size_t ran = 0;
  for (; next < batches.size(); ++next) {
    if (options.stop_after && ran == *options.stop_after) break;
    auto [s, cycle] = update_batch(state, batches[next].links, batches[next].boundary,
                                   options.enumeration);
    cycle.cycle = next + 1;
    state = std::move(s);
    if (persist) save_state_file(state, state_path(*options.state_dir));
    report.live_peak = std::max(report.live_peak, cycle.live_peak);
    report.cycles.push_back(cycle);
    ++ran;
  }

  report.finished = next == batches.size();
  report.t_end = obs.end;
  if (report.finished) {
    report.result = finalize(state, obs.end);
    if (options.certify) report.uncertified = uncertified(report.result, stream, options.params);
    if (options.verify) {
      try {
        report.verified =
            brute_force_enumerate(stream, options.params, options.oracle) == report.result;
      } catch (const OracleBoundsError& e) {
        report.verify_note = e.what();
      }
    }
    if (!report.result.empty()) {
      std::tie(report.temporally_maximum, report.cardinally_maximum) =
          stats_maximum_cliques(report.result);
    }
  }

  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) == 0) report.peak_rss_kb = usage.ru_maxrss;
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

void write_result(const KeySet& result, std::ostream& out) {
  for (const auto& k : result) out << to_string(k) << '\n';
}

void write_report(const RunReport& report, std::ostream& out) {
  out << "cycle,boundary,new_links,seeds,carried,found_before_removal,checked,removed,found,"
         "maximal,frontier,live_peak,seconds\n";
  for (const auto& c : report.cycles) {
    out << c.cycle << ',' << c.boundary << ',' << c.new_links << ',' << c.seeds << ','
        << c.carried << ',' << c.found_before_removal << ',' << c.checked << ',' << c.removed
        << ',' << c.found << ',' << c.maximal << ',' << c.frontier << ',' << c.live_peak << ','
        << c.seconds << '\n';
  }
  if (report.finished) {
    out << "final," << report.t_end << ",,,,,,,," << report.result.size() << ",0,"
        << report.live_peak << ',' << report.seconds << '\n';
  }
}

}  // namespace eoc
