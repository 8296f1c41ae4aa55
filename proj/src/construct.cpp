#include "filterlab/construct.hpp"

#include <algorithm>
#include <unordered_set>

#include "filterlab/axioms.hpp"
#include "filterlab/kernels.hpp"

namespace filterlab {

namespace {

SubsetFamily family_from_bits(const std::vector<std::uint64_t>& bits, std::size_t width)
{
    std::vector<Subset> members;
    members.reserve(bits.size());
    for (auto b : bits) {
        members.push_back(unchecked_subset(b, width));
    }
    return SubsetFamily(std::move(members), width);
}

} // namespace

SubsetFamily principal_ultrafilter(const Universe& universe, std::size_t a)
{
    if (a >= universe.size()) {
        throw StructuralError("element index " + std::to_string(a) +
                              " out of range for universe of size " +
                              std::to_string(universe.size()));
    }
    require_scannable(universe, "principal ultrafilter");
    std::vector<Subset> members;
    members.reserve(std::size_t{1} << (universe.size() - 1));
    for (auto u : powerset_iter(universe)) {
        if (u.contains(a)) {
            members.push_back(u);
        }
    }
    return SubsetFamily(std::move(members), universe.size());
}

SubsetFamily frechet_finite(const Universe& universe)
{
    require_scannable(universe, "Frechet family");
    std::vector<Subset> members;
    for (auto a : powerset_iter(universe)) {
        if (is_finite(complement(universe, a))) {
            members.push_back(a);
        }
    }
    return SubsetFamily(std::move(members), universe.size());
}

SubsetFamily base_from_family(const SubsetFamily& family)
{
    if (family.empty()) {
        throw PreconditionError("filter base needs a nonempty family");
    }
    // Every finite intersection is a generator folded into a shorter one, so
    // intersecting the newest layer with the generators reaches them all.
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> frontier;
    for (const auto& g : family) {
        if (seen.insert(g.bits()).second) {
            frontier.push_back(g.bits());
        }
    }
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (auto f : frontier) {
            for (const auto& g : family) {
                const std::uint64_t meet = f & g.bits();
                if (seen.insert(meet).second) {
                    next.push_back(meet);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::uint64_t> bits(seen.begin(), seen.end());
    return family_from_bits(bits, family.width());
}

SubsetFamily filter_from_base(const SubsetFamily& base, const Universe& universe)
{
    require_width(base, universe);
    require_scannable(universe, "filter from base");
    std::vector<std::uint64_t> bits;
    bits.reserve(base.size());
    for (const auto& b : base) {
        bits.push_back(b.bits());
    }
    return family_from_bits(kernels::upward_closure(bits, universe.size()), universe.size());
}

SubsetFamily filter_from_family(const SubsetFamily& family, const Universe& universe)
{
    if (family.empty()) {
        throw PreconditionError("filter generation needs a nonempty family");
    }
    require_width(family, universe);
    require_scannable(universe, "filter from family");
    const std::uint64_t core = intersect_all(family).bits();
    return family_from_bits(kernels::upward_closure(std::span(&core, 1), universe.size()),
                            universe.size());
}

SubsetFamily extend_to_ultrafilter(const SubsetFamily& filter, const Universe& universe,
                                   std::vector<GreedyStep>* trace)
{
    if (auto report = is_filter(filter, universe); !report) {
        throw PreconditionError("cannot extend to an ultrafilter: not a filter (" +
                                std::string(describe(*report.failed_axiom())) + ")");
    }
    require_scannable(universe, "ultrafilter extension");

    // Sequential on purpose: each decision depends on everything adjoined so far.
    std::vector<Subset> accumulated(filter.begin(), filter.end());
    Subset core = intersect_all(filter);
    for (auto a : powerset_iter(universe)) {
        const bool keeps_fip = !(core & a).is_empty();
        const Subset chosen = keeps_fip ? a : complement(universe, a);
        accumulated.push_back(chosen);
        core = core & chosen;
        if (trace != nullptr) {
            trace->push_back({a, chosen, keeps_fip});
        }
    }
    return filter_from_family(SubsetFamily(std::move(accumulated), universe.size()), universe);
}

SubsetFamily fep(const SubsetFamily& family, const Universe& universe,
                 std::vector<GreedyStep>* trace)
{
    if (family.empty()) {
        throw PreconditionError("hypothesis fails: family is empty");
    }
    if (family.width() != universe.size()) {
        throw PreconditionError("hypothesis fails: family is not a subset of pow(A)");
    }
    if (!has_fip(family)) {
        throw PreconditionError("hypothesis fails: finite intersection property fails");
    }
    return extend_to_ultrafilter(filter_from_family(family, universe), universe, trace);
}

} // namespace filterlab
