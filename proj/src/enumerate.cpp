#include "filterlab/enumerate.hpp"

#include <algorithm>

#include "filterlab/axioms.hpp"
#include "filterlab/construct.hpp"

namespace filterlab {

std::string_view kind_name(EnumerationKind kind)
{
    return kind == EnumerationKind::Filters ? "filters" : "ultrafilters";
}

namespace {

void require_size(const Universe& universe, std::size_t bound, std::string_view what)
{
    if (universe.size() > bound) {
        throw CapacityError(std::string(what) + ": universe of size " +
                            std::to_string(universe.size()) + " exceeds bound " +
                            std::to_string(bound));
    }
}

EnumerationResult finish(const Universe& universe, EnumerationKind kind,
                         std::vector<SubsetFamily> families)
{
    std::sort(families.begin(), families.end());
    EnumerationResult r;
    r.universe_size = universe.size();
    r.kind = kind;
    r.count = families.size();
    r.families = std::move(families);
    return r;
}

} // namespace

SubsetFamily family_from_code(std::uint64_t code, std::size_t n)
{
    const auto bits = kernels::decode_family(code, n);
    return SubsetFamily::from_bits(bits, n);
}

EnumerationResult enumerate_filters(const Universe& universe)
{
    require_size(universe, kMaxEnumerate, "filter enumeration");
    std::vector<SubsetFamily> families;
    families.reserve((std::size_t{1} << universe.size()) - 1);
    for (auto b : powerset_iter(universe)) {
        if (!b.is_empty()) {
            families.push_back(filter_from_family(SubsetFamily({b}, universe.size()), universe));
        }
    }
    return finish(universe, EnumerationKind::Filters, std::move(families));
}

EnumerationResult enumerate_filters_bruteforce(const Universe& universe, kernels::Exec exec)
{
    require_size(universe, kMaxBruteForce, "brute-force filter enumeration");
    const std::size_t n = universe.size();
    const auto codes = kernels::sweep_families(
        n, [&](std::uint64_t code) { return is_filter(family_from_code(code, n), universe).verdict(); },
        exec);
    std::vector<SubsetFamily> families;
    families.reserve(codes.size());
    for (auto code : codes) {
        families.push_back(family_from_code(code, n));
    }
    return finish(universe, EnumerationKind::Filters, std::move(families));
}

EnumerationResult enumerate_ultrafilters(const Universe& universe)
{
    require_size(universe, kMaxEnumerate, "ultrafilter enumeration");
    auto filters = enumerate_filters(universe);
    std::vector<SubsetFamily> families;
    for (auto& f : filters.families) {
        if (is_ultrafilter(f, universe)) {
            families.push_back(std::move(f));
        }
    }
    return finish(universe, EnumerationKind::Ultrafilters, std::move(families));
}

} // namespace filterlab
