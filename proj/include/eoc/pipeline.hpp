#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "eoc/oracle.hpp"
#include "eoc/update.hpp"

namespace eoc {

enum class Scheme { uniform_time, uniform_link_count, explicit_boundaries };

struct PartitionPlan {
  Scheme scheme = Scheme::uniform_time;
  std::size_t parts = 1;
  std::vector<Timestamp> boundaries;  // explicit scheme only
};

struct Batch {
  Timestamp boundary = 0;
  LinkList links;  // t in (previous boundary, boundary]
};

// Splits the stream's links into consecutive batches. The last boundary is
// always the observation end.
std::vector<Batch> partition_links(const LinkStream& stream, const PartitionPlan& plan);

enum class Mode { offline, online };

struct PipelineOptions {
  Params params;
  PartitionPlan plan;
  Mode mode = Mode::offline;
  std::optional<std::string> state_dir;   // online: persist after every cycle, resume if present
  std::optional<std::size_t> stop_after;  // online: return after this many cycles
  bool certify = true;                    // check every output clique for maximality
  bool verify = false;                    // compare with the oracle when within bounds
  OracleConfig oracle;
  EnumerationOptions enumeration;
};

struct RunReport {
  std::vector<CycleReport> cycles;
  bool finished = false;          // false when stopped early
  std::size_t resumed_cycles = 0; // cycles already present in the loaded state
  Timestamp t_end = 0;
  KeySet result;  // finalized, clamped to t_end
  std::vector<CliqueKey> temporally_maximum;
  std::vector<CliqueKey> cardinally_maximum;
  std::vector<CliqueKey> uncertified;
  std::optional<bool> verified;   // empty when not run or out of oracle bounds
  std::string verify_note;
  double seconds = 0.0;
  long peak_rss_kb = 0;
  std::size_t live_peak = 0;
};

RunReport run_pipeline(const LinkStream& stream, const PipelineOptions& options);

// Longest-span cliques and largest cliques; ties are all kept.
std::pair<std::vector<CliqueKey>, std::vector<CliqueKey>> stats_maximum_cliques(
    const KeySet& result);

std::string state_path(const std::string& state_dir);
void write_result(const KeySet& result, std::ostream& out);
// One CSV row per cycle, then a "final" row whose maximal count equals the
// number of result lines.
void write_report(const RunReport& report, std::ostream& out);

}  // namespace eoc
