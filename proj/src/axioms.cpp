#include "filterlab/axioms.hpp"

#include "filterlab/kernels.hpp"

namespace filterlab {

std::string_view tag_name(AxiomTag tag)
{
    switch (tag) {
    case AxiomTag::NotSubsetFamily: return "NotSubsetFamily";
    case AxiomTag::EmptyMember: return "EmptyMember";
    case AxiomTag::GroundSetMissing: return "GroundSetMissing";
    case AxiomTag::NotIntersectionClosed: return "NotIntersectionClosed";
    case AxiomTag::NotUpwardClosed: return "NotUpwardClosed";
    case AxiomTag::EmptyFamily: return "EmptyFamily";
    case AxiomTag::DichotomyFails: return "DichotomyFails";
    case AxiomTag::NotMaximal: return "NotMaximal";
    case AxiomTag::NotFilter: return "NotFilter";
    case AxiomTag::FiniteMember: return "FiniteMember";
    }
    return "Unknown";
}

std::string_view describe(AxiomTag tag)
{
    switch (tag) {
    case AxiomTag::NotSubsetFamily: return "member is not a subset of the universe";
    case AxiomTag::EmptyMember: return "empty set is a member";
    case AxiomTag::GroundSetMissing: return "universe is not a member";
    case AxiomTag::NotIntersectionClosed: return "not closed under intersection";
    case AxiomTag::NotUpwardClosed: return "not closed under supersets";
    case AxiomTag::EmptyFamily: return "family is empty";
    case AxiomTag::DichotomyFails: return "neither a set nor its complement is a member";
    case AxiomTag::NotMaximal: return "a strictly larger filter exists";
    case AxiomTag::NotFilter: return "not a filter";
    case AxiomTag::FiniteMember: return "a finite set is a member";
    }
    return "unknown";
}

namespace {

std::vector<std::uint64_t> raw_bits(const SubsetFamily& family)
{
    std::vector<std::uint64_t> bits;
    bits.reserve(family.size());
    for (const auto& m : family) {
        bits.push_back(m.bits());
    }
    return bits;
}

std::optional<AxiomReport> check_subset_family(const SubsetFamily& family, const Universe& universe)
{
    const std::uint64_t mask = width_mask(universe.size());
    for (const auto& m : family) {
        if ((m.bits() & ~mask) != 0) {
            return AxiomReport::fail(AxiomTag::NotSubsetFamily, {m});
        }
    }
    return std::nullopt;
}

std::optional<AxiomReport> check_intersection_closed(const SubsetFamily& family)
{
    const auto bits = raw_bits(family);
    if (auto pair = kernels::first_unclosed_pair(bits)) {
        return AxiomReport::fail(AxiomTag::NotIntersectionClosed,
                                 {family[pair->first], family[pair->second]});
    }
    return std::nullopt;
}

// A finite family is upward closed iff adding any single element to a member
// stays inside the family.
std::optional<AxiomReport> check_upward_closed(const SubsetFamily& family, const Universe& universe)
{
    for (const auto& m : family) {
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (m.contains(i)) {
                continue;
            }
            const Subset grown = m | Subset::singleton(i, universe.size());
            if (!family.contains(grown)) {
                return AxiomReport::fail(AxiomTag::NotUpwardClosed, {m, grown});
            }
        }
    }
    return std::nullopt;
}

AxiomReport not_filter(const AxiomReport& inner)
{
    return AxiomReport::fail(AxiomTag::NotFilter, *inner.witness(), inner.failed_axiom());
}

} // namespace

AxiomReport is_filter(const SubsetFamily& family, const Universe& universe)
{
    require_width(family, universe);
    if (auto r = check_subset_family(family, universe)) {
        return *r;
    }
    if (family.contains(universe.none())) {
        return AxiomReport::fail(AxiomTag::EmptyMember, {universe.none()});
    }
    if (!family.contains(universe.full())) {
        return AxiomReport::fail(AxiomTag::GroundSetMissing, {universe.full()});
    }
    if (auto r = check_intersection_closed(family)) {
        return *r;
    }
    if (auto r = check_upward_closed(family, universe)) {
        return *r;
    }
    return AxiomReport::pass();
}

AxiomReport is_filter_base(const SubsetFamily& base, const Universe& universe)
{
    require_width(base, universe);
    if (base.empty()) {
        return AxiomReport::fail(AxiomTag::EmptyFamily, {});
    }
    if (auto r = check_subset_family(base, universe)) {
        return *r;
    }
    if (base.contains(universe.none())) {
        return AxiomReport::fail(AxiomTag::EmptyMember, {universe.none()});
    }
    if (auto r = check_intersection_closed(base)) {
        return *r;
    }
    return AxiomReport::pass();
}

bool has_fip(const SubsetFamily& family)
{
    // Adding members only shrinks an intersection, so the whole family is the
    // worst finite subfamily.
    return family.empty() || !intersect_all(family).is_empty();
}

bool has_fip_oracle(const SubsetFamily& family)
{
    const auto bits = raw_bits(family);
    return kernels::all_subfamilies_intersect(bits, family.width());
}

AxiomReport is_ultrafilter(const SubsetFamily& family, const Universe& universe)
{
    if (auto filter = is_filter(family, universe); !filter) {
        return not_filter(filter);
    }
    require_scannable(universe, "ultrafilter check");
    for (auto a : powerset_iter(universe)) {
        if (!family.contains(a) && !family.contains(complement(universe, a))) {
            return AxiomReport::fail(AxiomTag::DichotomyFails, {a});
        }
    }
    return AxiomReport::pass();
}

AxiomReport is_max_filter(const SubsetFamily& family, const Universe& universe)
{
    if (auto filter = is_filter(family, universe); !filter) {
        return not_filter(filter);
    }
    require_scannable(universe, "maximality check");
    // A filter is nonempty, so FIP of F ∪ {a} reduces to (∩F) ∩ a ≠ ∅.
    const Subset core = intersect_all(family);
    for (auto a : powerset_iter(universe)) {
        if (!family.contains(a) && !(core & a).is_empty()) {
            return AxiomReport::fail(AxiomTag::NotMaximal, {a});
        }
    }
    return AxiomReport::pass();
}

AxiomReport is_free_ultrafilter(const SubsetFamily& family, const Universe& universe)
{
    if (auto ultra = is_ultrafilter(family, universe); !ultra) {
        return ultra;
    }
    for (const auto& m : family) {
        if (is_finite(m)) {
            return AxiomReport::fail(AxiomTag::FiniteMember, {m});
        }
    }
    return AxiomReport::pass();
}

std::optional<std::size_t> is_principal(const SubsetFamily& family, const Universe& universe)
{
    require_width(family, universe);
    if (family.empty()) {
        return std::nullopt;
    }
    // F ⊆ F_a and |F| = |F_a| = 2^(n-1) together give F = F_a.
    const std::uint64_t principal_size = std::uint64_t{1} << (universe.size() - 1);
    if (family.size() != principal_size) {
        return std::nullopt;
    }
    const Subset core = intersect_all(family);
    for (std::size_t a = 0; a < universe.size(); ++a) {
        if (core.contains(a)) {
            return a;
        }
    }
    return std::nullopt;
}

} // namespace filterlab
