#pragma once

#include <string>
#include <vector>

namespace phel::verify {

struct Check {
    std::string name;
    double tolerance;
    double deviation;
    bool pass;
    std::string note;
};

// Acceptance criteria 1..9; each returns one Check per subcheck.
std::vector<Check> criterion(int n);

std::vector<Check> run_quick();
std::vector<Check> run_full();

bool all_pass(const std::vector<Check>& checks);
std::string to_json(const std::vector<Check>& checks);

} // namespace phel::verify
