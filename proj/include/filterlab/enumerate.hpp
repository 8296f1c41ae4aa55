#pragma once

// Exhaustive enumeration of filters and ultrafilters over small universes.

#include <cstddef>
#include <string_view>
#include <vector>

#include "filterlab/kernels.hpp"
#include "filterlab/setcore.hpp"

namespace filterlab {

enum class EnumerationKind { Filters, Ultrafilters };

std::string_view kind_name(EnumerationKind kind);

struct EnumerationResult {
    std::size_t universe_size = 0;
    EnumerationKind kind = EnumerationKind::Filters;
    std::vector<SubsetFamily> families;   // distinct, ascending
    std::size_t count = 0;
};

/// Largest universe for the characterized enumerations.
inline constexpr std::size_t kMaxEnumerate = 10;

/// Largest universe for the brute-force sweep over all families of pow(A).
inline constexpr std::size_t kMaxBruteForce = 3;

/// All filters, one per nonempty b ⊆ A: {x : b ⊆ x ⊆ A}.
EnumerationResult enumerate_filters(const Universe& universe);

/// All filters, by running is_filter on each of the 2^(2^n) families of pow(A).
EnumerationResult enumerate_filters_bruteforce(const Universe& universe,
                                               kernels::Exec exec = kernels::Exec::parallel);

/// All ultrafilters: the enumerated filters that pass is_ultrafilter.
EnumerationResult enumerate_ultrafilters(const Universe& universe);

/// Family of pow(A) with sweep code `code` (bit s set: subset s is a member).
SubsetFamily family_from_code(std::uint64_t code, std::size_t n);

} // namespace filterlab
