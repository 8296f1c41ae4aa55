#include <atomic>
#include <limits>
#include <string>

#include "filterlab/kernels.hpp"
#include "filterlab/setcore.hpp"
#include "kernels_detail.hpp"

namespace filterlab::kernels {

namespace {

std::optional<std::pair<std::size_t, std::size_t>>
parallel_first_unclosed_pair(std::span<const std::uint64_t> members)
{
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best_row{none};
    std::size_t best_col = none;
    const auto rows = static_cast<std::int64_t>(members.size());

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t r = 0; r < rows; ++r) {
        const auto i = static_cast<std::size_t>(r);
        if (i > best_row.load(std::memory_order_relaxed)) {
            continue;
        }
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const std::uint64_t meet = members[i] & members[j];
            if (!std::binary_search(members.begin(), members.end(), meet)) {
#pragma omp critical(filterlab_first_pair)
                {
                    const std::size_t row = best_row.load(std::memory_order_relaxed);
                    if (i < row || (i == row && j < best_col)) {
                        best_row.store(i, std::memory_order_relaxed);
                        best_col = j;
                    }
                }
                break;
            }
        }
    }
    if (best_row.load() == none) {
        return std::nullopt;
    }
    return std::pair{best_row.load(), best_col};
}

std::vector<std::uint64_t> parallel_upward_closure(std::span<const std::uint64_t> base,
                                                   std::size_t width)
{
    const std::uint64_t subsets = std::uint64_t{1} << width;
    std::vector<std::uint8_t> up(subsets, 0);
    for (auto b : base) {
        up[b] = 1;
    }
    const auto count = static_cast<std::int64_t>(subsets);
    for (std::size_t bit = 0; bit < width; ++bit) {
        const std::uint64_t mask = std::uint64_t{1} << bit;
        // u ^ mask lacks `bit`, so no cell read in this pass is also written in it.
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < count; ++k) {
            const auto u = static_cast<std::uint64_t>(k);
            if ((u & mask) != 0) {
                up[u] |= up[u ^ mask];
            }
        }
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t u = 0; u < subsets; ++u) {
        if (up[u] != 0) {
            out.push_back(u);
        }
    }
    return out;
}

bool parallel_all_subfamilies_intersect(std::span<const std::uint64_t> members, std::size_t width)
{
    const std::uint64_t full = width_mask(width);
    const auto subfamilies = static_cast<std::int64_t>(std::uint64_t{1} << members.size());
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t p = 1; p < subfamilies; ++p) {
        const auto pick = static_cast<std::uint64_t>(p);
        std::uint64_t meet = full;
        for (std::size_t k = 0; k < members.size(); ++k) {
            if ((pick >> k) & 1U) {
                meet &= members[k];
            }
        }
        ok = ok && meet != 0;
    }
    return ok;
}

} // namespace

std::optional<std::pair<std::size_t, std::size_t>>
first_unclosed_pair(std::span<const std::uint64_t> members, Exec exec)
{
    return exec == Exec::serial ? reference::first_unclosed_pair(members)
                                : parallel_first_unclosed_pair(members);
}

std::vector<std::uint64_t> upward_closure(std::span<const std::uint64_t> base, std::size_t width,
                                          Exec exec)
{
    if (width > kMaxScan) {
        throw CapacityError("upward closure over width " + std::to_string(width) +
                            " exceeds scan bound " + std::to_string(kMaxScan));
    }
    for (auto b : base) {
        if ((b & ~width_mask(width)) != 0) {
            throw StructuralError("base member has bits above width " + std::to_string(width));
        }
    }
    return exec == Exec::serial ? reference::upward_closure(base, width)
                                : parallel_upward_closure(base, width);
}

bool all_subfamilies_intersect(std::span<const std::uint64_t> members, std::size_t width,
                               Exec exec)
{
    if (members.size() > kMaxOracleFamily) {
        throw CapacityError("subfamily enumeration over " + std::to_string(members.size()) +
                            " members exceeds bound " + std::to_string(kMaxOracleFamily));
    }
    return exec == Exec::serial ? reference::all_subfamilies_intersect(members, width)
                                : parallel_all_subfamilies_intersect(members, width);
}

} // namespace filterlab::kernels
