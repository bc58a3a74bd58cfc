#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dqlin/determinant.hpp"

namespace dqlin {

struct PropertyRecord {
    std::string id;
    std::string description;
    int trials = 0;
    int failures = 0;
    // Max over trials of the relative (or scaled absolute) discrepancy.
    double max_discrepancy = 0.0;
    uint64_t seed = 0;
};

struct VerifyReport {
    int n = 0;
    int trials = 0;
    uint64_t seed = 0;
    std::vector<PropertyRecord> records;
    bool pass = false;
};

// Stable ids of all registered properties, in run order.
std::vector<std::string> verify_property_ids();

// Runs every registered property (or just the one matching `filter`) with
// deterministic per-trial seeding.  The same (seed, n, trials) always
// produces an identical report.
// Throws InputError for an unknown filter and SizeCapError for n > cap.
VerifyReport run_verify(int n, int trials, uint64_t seed,
                        const std::string& filter = "", int cap = kDetCap);

} // namespace dqlin
