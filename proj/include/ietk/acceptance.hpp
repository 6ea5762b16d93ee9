#ifndef IETK_ACCEPTANCE_HPP
#define IETK_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ietk::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

/// Runs the full reproduction suite with its pinned inputs and tolerances.
std::vector<CriterionResult> run_all();

/// One pass/fail line per criterion on `out`; timings go to `err` so the
/// primary stream stays byte-deterministic. Returns true iff all passed.
bool print_table(std::ostream& out, std::ostream& err, const std::vector<CriterionResult>& results);

} // namespace ietk::acceptance

#endif
