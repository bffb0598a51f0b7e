#pragma once

#include "nfc/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nfc {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> notes;  // first few failure descriptions
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<std::string> data;  // one line per random datum
    std::vector<SuiteResult> suites;
    int total_cases() const;
    int total_failures() const;
    bool ok() const { return total_failures() == 0; }
    std::string text() const;  // deterministic for a fixed seed
};

// Random small positive-definite datum with g in [1, 3] that is integral at some level <= 4.
struct RandomDatum {
    FCDatum d;
    Level lev;
    std::string description;
};
std::vector<RandomDatum> random_data(std::uint64_t seed, int count);

VerifyReport run_verify(std::uint64_t seed);

}  // namespace nfc
