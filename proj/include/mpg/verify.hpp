#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mpg/arena.hpp"

namespace mpg {

struct CheckResult
{
    std::string name;
    bool ok = true;
    std::string detail;  ///< first failure, empty on success
};

struct VerifyOptions
{
    std::uint64_t max_strategies = 1'000'000;
    /// Extra Min-k rows audited beyond k'.
    std::size_t ttpg_extra_rows = 4;
    /// Horizon for the plain recursion against game-tree search.
    std::size_t plain_ttpg_k = 4;
    unsigned jobs = 1;
};

struct VerifyReport
{
    std::vector<CheckResult> checks;
    bool degenerate = false;            ///< some class has |B*| > |X*|
    std::size_t recursion_edges = 0;    ///< seeded restarts cross-checked
    std::size_t classes = 0;

    bool ok() const;
    const CheckResult* find(const std::string& name) const;
};

/// Names of the checks verify_arena runs, in report order.
const std::vector<std::string>& verify_check_names();

/// Differential battery of one arena against the brute-force oracle.
/// Throws oracle::BoundExceeded if the arena has too many strategies.
VerifyReport verify_arena(const Arena& a, const VerifyOptions& opts = {});

/// verify_arena over many arenas, spread over opts.jobs threads. Reports
/// come back in input order.
std::vector<VerifyReport> verify_many(const std::vector<Arena>& arenas, const VerifyOptions& opts = {});

} // namespace mpg
