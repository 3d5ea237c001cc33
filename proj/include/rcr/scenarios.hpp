#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rcr {

/// One replayable reference scenario with its expected outputs frozen in.
struct Scenario {
    std::string name;
    // Returns a mismatch description, or nothing on success.
    std::function<std::optional<std::string>()> run;
};

const std::vector<Scenario>& reference_scenarios();

/// Runs every scenario, printing one pass/fail line per scenario.
/// Returns true when all pass.
bool run_reference_scenarios(std::ostream& os);

}  // namespace rcr
