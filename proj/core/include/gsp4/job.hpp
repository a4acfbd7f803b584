#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsp4/localrep.hpp"
#include "gsp4/serre.hpp"

#include <json.hpp>

namespace gsp4 {

enum class Task { Classify, Weight, Generic, Lift, Classical, Pdcris, FlCheck };

const char* to_string(Task t);
Task task_from_string(const std::string& name);

/// A batch job: one representation description, the tasks to run on it, and
/// the window/format knobs.
struct JobSpec {
    Prime prime;
    LocalRepresentation rep;
    std::set<Task> tasks;
    SearchWindow window;

    JobSpec(Prime p, LocalRepresentation r, std::set<Task> t, SearchWindow w);
};

/// Parses a representation description: either the key-value text format
///
///     prime = 7
///     type  = borel        # borel|siegel|klingen|endoscopic|irreducible
///     x = 4
///     y = 2
///     w = 3
///     tau0 = peu           # peu|tres|unramified|ramified
///
/// or the equivalent JSON object (detected by a leading '{'). Unknown keys are
/// rejected with the offending line. `task_override` replaces any tasks named
/// in the document.
JobSpec parse_job(const std::string& document,
                  const std::vector<std::string>& task_override = {},
                  std::optional<std::int64_t> prime_override = std::nullopt,
                  const std::string& window_override = {});

/// Runs every requested task. The result is a canonical JSON object (sorted
/// keys, schema-tagged); identical inputs give byte-identical dumps.
nlohmann::json run(const JobSpec& job);

/// Human-readable rendering of a report.
std::string render_text(const nlohmann::json& report);

/// Result of a full enumeration over one representation type.
struct EnumerationResult {
    std::vector<nlohmann::json> reports;
    nlohmann::json summary;
};

/// One report per inertial datum of the given type inside the window, plus
/// summary counts (instances, generic, obstruction successes). `jobs` > 1
/// fans the window out across threads; the merged output is independent of
/// the thread count.
EnumerationResult enumerate_mode(Prime p, RepType type, const SearchWindow& window, int jobs = 1);

/// Parses "a=1:21,b=1:21,c=0:12,w=0:12" style overrides onto a window.
SearchWindow parse_window_spec(const std::string& spec, SearchWindow base);

}  // namespace gsp4
