#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arcfas/packing.hpp"

namespace arcfas {

enum class ClaimStatus { Pass, Fail, Skipped };

std::string to_string(ClaimStatus s);

struct ClaimResult {
    std::string claim_id;
    ClaimStatus status = ClaimStatus::Skipped;
    std::string observed;
    std::string expected;
    double seconds = 0.0;

    bool operator==(const ClaimResult&) const = default;
};

/// `CLAIM <id> <PASS|FAIL|SKIPPED> observed=<v> expected=<v> secs=<t>`
std::string format_claim(const ClaimResult& r);
std::optional<ClaimResult> parse_claim(const std::string& line);

/// Outcome of a seeded randomized property run.
struct PropertyRun {
    int instances = 0;
    int checks = 0;
    int failures = 0;
};

/// Through-vertex cycle bound at every eligible vertex: `count` random
/// tournaments and `count` random oriented graphs (p = 0.5), orders 3..12.
PropertyRun theorem21_suite(int count, std::uint64_t seed);
/// tau >= delta+ (delta+ + 1) / 2 on random digraphs of order 2..10.
PropertyRun remark3_suite(int count, std::uint64_t seed);
/// Every minimum out-degree vertex lies on at least delta+ triangles
/// (random tournaments of order 3..12).
PropertyRun landau_suite(int count, std::uint64_t seed);
/// Second-neighborhood vertex exists in every tournament class of order <= 7
/// and in `random_order8` random tournaments of order 8.
PropertyRun seymour_suite(int random_order8, std::uint64_t seed);

struct ClaimOptions {
    Budget budget = Budget::from_env();
};

/// Claims in fixed order: TAU_T, NU_T, TAU_T7, NU_T7, TAU_TP, NU_TP,
/// NU_EQ_TAU_LE6, EULER_T11, TRI_K_T11, FLOW_K_T11, THM21_RANDOM,
/// REMARK3_RANDOM, LANDAU_RANDOM, SEYMOUR_LE8, FAMC_VALID, ISAAK_HYP_T.
std::vector<ClaimResult> verify_paper(const ClaimOptions& options = {});

}  // namespace arcfas
