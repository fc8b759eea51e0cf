// Acceptance suite driver. Usage: acceptance [ids...] [--hi N] [--jobs N]
// With no ids, runs all ten criteria. Exit code = number of failures.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pproot/acceptance.hpp"

int main(int argc, char** argv) {
    pproot::AcceptanceOptions opt;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--hi" && i + 1 < argc) {
            opt.survey_hi = std::strtoull(argv[++i], nullptr, 10);
        } else if (arg == "--jobs" && i + 1 < argc) {
            opt.jobs = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
        } else {
            int id = std::atoi(arg.c_str());
            if (id < 1 || id > 10) {
                std::cerr << "unknown criterion id: " << arg << "\n";
                return 2;
            }
            ids.push_back(id);
        }
    }

    auto results = pproot::run_acceptance_criteria(ids, opt, std::cout);
    int failures = 0;
    for (const auto& r : results) failures += r.pass ? 0 : 1;
    return failures;
}
