#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bk {

struct SuiteConfig {
    std::string suite;
    int max_cells = 6;      // tableau size bound
    int max_entry = 5;      // alphabet bound n
    int max_word_len = 6;   // word length bound
    int max_index = 7;      // generator index bound for word suites
    std::uint64_t seed = 1; // for sampled extensions
};

struct Failure {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct Report {
    std::string suite;
    SuiteConfig config;
    long long instances = 0;
    std::vector<Failure> failures;
    long long millis = 0;  // kept at 0 in serialized reports for determinism

    bool passed() const { return failures.empty(); }
    std::string to_json() const;
    std::string to_text() const;
};

// Suites: bk-basic | bk-classic | bk-new | cactus-q | cactus-tau | locality |
// dual-route | crystal-props | group-words | golden.
std::vector<std::string> suite_names();

Report run_suite(const SuiteConfig& config);

// Replays the worked examples (evacuation triangle, q_[2,4] diagram with all
// interior labels, tau_[2,4] hexagon, the crystal and Bender-Knuth displays).
Report golden_examples();

}  // namespace bk
