#pragma once

// Data-parallel inner loops shared by the checkers, constructions and sweeps.
// Each kernel has a serial reference that spells out the definition directly;
// the parallel variant must agree with it on every input.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "filterlab/errors.hpp"

namespace filterlab::kernels {

enum class Exec { serial, parallel };

/// Largest universe for the exhaustive family sweep (2^(2^4) families).
inline constexpr std::size_t kMaxSweepUniverse = 4;

/// Largest family handed to the subfamily oracle (2^20 subfamilies).
inline constexpr std::size_t kMaxOracleFamily = 20;

/// First (i, j), i < j, in row-major order with members[i] & members[j] not in
/// `members`. `members` must be sorted ascending and duplicate-free.
std::optional<std::pair<std::size_t, std::size_t>>
first_unclosed_pair(std::span<const std::uint64_t> members, Exec exec = Exec::parallel);

/// Ascending list of every u ⊆ {0..width-1} that contains some member of `base`.
/// Serial: literal scan over pow(A). Parallel: superset-sum transform, one pass per bit.
std::vector<std::uint64_t> upward_closure(std::span<const std::uint64_t> base, std::size_t width,
                                          Exec exec = Exec::parallel);

/// True iff every nonempty subfamily of `members` has a nonempty intersection.
/// Enumerates all 2^|members| - 1 subfamilies.
bool all_subfamilies_intersect(std::span<const std::uint64_t> members, std::size_t width,
                               Exec exec = Exec::parallel);

/// Members of the family with index `code` over a universe of size n: bit s of
/// `code` set means subset s is a member.
inline std::vector<std::uint64_t> decode_family(std::uint64_t code, std::size_t n)
{
    std::vector<std::uint64_t> members;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < subsets; ++s) {
        if ((code >> s) & 1U) {
            members.push_back(s);
        }
    }
    return members;
}

inline std::uint64_t family_count(std::size_t n)
{
    if (n > kMaxSweepUniverse) {
        throw CapacityError("family sweep over a universe of size " + std::to_string(n) +
                            " exceeds bound " + std::to_string(kMaxSweepUniverse));
    }
    const std::uint64_t subsets = std::uint64_t{1} << n;
    return subsets >= 64 ? 0 : std::uint64_t{1} << subsets;
}

/// Codes of every family over an n-set for which `pred(code)` holds, ascending.
template <class Pred>
std::vector<std::uint64_t> sweep_families(std::size_t n, Pred pred, Exec exec = Exec::parallel)
{
    const std::uint64_t total = family_count(n);
    std::vector<std::uint64_t> hits;
    if (exec == Exec::serial) {
        for (std::uint64_t code = 0; code < total; ++code) {
            if (pred(code)) {
                hits.push_back(code);
            }
        }
        return hits;
    }

    const auto count = static_cast<std::int64_t>(total);
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
        for (std::int64_t code = 0; code < count; ++code) {
            if (pred(static_cast<std::uint64_t>(code))) {
                local.push_back(static_cast<std::uint64_t>(code));
            }
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

} // namespace filterlab::kernels
