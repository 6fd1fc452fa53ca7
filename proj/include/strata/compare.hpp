#ifndef STRATA_COMPARE_HPP
#define STRATA_COMPARE_HPP

#include "strata/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace strata {

// The formula-vs-oracle harness.  Every record carries the claimed
// closed-form value and whichever oracle values ran; mismatches are data,
// not failures.  The verdicts:
//   verified-match   — a VERIFIED-class formula agreeing with its oracle
//   claimed-match    — a reported-only formula that happens to agree
//   claimed-mismatch — any disagreement; both values and the witness embed
//   oracle-unavailable — no oracle ran for the instance
struct ComparisonRecord {
    std::string claim;
    Json spec;
    long long claimed = 0;
    std::vector<std::pair<std::string, long long>> oracles;
    bool verified_class = false;
    std::string verdict;
    Json witness; // embedded for mismatches

    void finalize();
};

Json record_to_json(const ComparisonRecord& r);

/// Suites: complexes, subcomplex, chain-map, quasi-iso, g, dgla, all.
/// Instances are enumerated deterministically; the seed is recorded in the
/// report (reports are byte-identical for equal inputs).
std::vector<ComparisonRecord> run_suite(const std::string& suite, uint64_t seed);

Json compare_report(const std::string& suite, uint64_t seed);

} // namespace strata

#endif
