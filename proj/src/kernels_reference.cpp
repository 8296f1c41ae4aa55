// Serial reference kernels: direct transcriptions of the definitions.

#include <algorithm>

#include "kernels_detail.hpp"

namespace filterlab::kernels::reference {

std::optional<std::pair<std::size_t, std::size_t>>
first_unclosed_pair(std::span<const std::uint64_t> members)
{
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const std::uint64_t meet = members[i] & members[j];
            if (!std::binary_search(members.begin(), members.end(), meet)) {
                return std::pair{i, j};
            }
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> upward_closure(std::span<const std::uint64_t> base, std::size_t width)
{
    std::vector<std::uint64_t> out;
    const std::uint64_t subsets = std::uint64_t{1} << width;
    for (std::uint64_t u = 0; u < subsets; ++u) {
        for (auto b : base) {
            if ((b & ~u) == 0) {
                out.push_back(u);
                break;
            }
        }
    }
    return out;
}

bool all_subfamilies_intersect(std::span<const std::uint64_t> members, std::size_t width)
{
    const std::uint64_t full = width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
    const std::uint64_t subfamilies = std::uint64_t{1} << members.size();
    for (std::uint64_t pick = 1; pick < subfamilies; ++pick) {
        std::uint64_t meet = full;
        for (std::size_t k = 0; k < members.size(); ++k) {
            if ((pick >> k) & 1U) {
                meet &= members[k];
            }
        }
        if (meet == 0) {
            return false;
        }
    }
    return true;
}

} // namespace filterlab::kernels::reference
