#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke {

struct CriterionResult {
    int index;
    std::string name;
    bool pass;
    std::string detail;
};

// Runs the verification suite (all ten checks, or the subset in `only`),
// printing one [PASS]/[FAIL] line per criterion to `log`. The two forms it
// needs are generated on first use; the level-11 table is the slow part.
std::vector<CriterionResult> run_acceptance(std::ostream& log,
                                            const std::vector<int>& only = {});

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace hecke
