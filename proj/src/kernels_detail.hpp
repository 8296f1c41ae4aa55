#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace filterlab::kernels::reference {

std::optional<std::pair<std::size_t, std::size_t>>
first_unclosed_pair(std::span<const std::uint64_t> members);

std::vector<std::uint64_t> upward_closure(std::span<const std::uint64_t> base, std::size_t width);

bool all_subfamilies_intersect(std::span<const std::uint64_t> members, std::size_t width);

} // namespace filterlab::kernels::reference
