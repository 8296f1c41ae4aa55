#pragma once

// Builders: principal ultrafilters, the finite Fréchet family, the base and
// filter closures, greedy extension to an ultrafilter and the full
// extension pipeline.

#include <cstddef>
#include <vector>

#include "filterlab/setcore.hpp"

namespace filterlab {

/// F_a: every subset of the universe containing element `a`.
SubsetFamily principal_ultrafilter(const Universe& universe, std::size_t a);

/// {a ⊆ A : A ∼ a finite}. Over a finite universe this is all of pow(A),
/// which contains ∅ and so is not a filter.
SubsetFamily frechet_finite(const Universe& universe);

/// Closure of a nonempty family under finite intersections (empty subfamily excluded).
SubsetFamily base_from_family(const SubsetFamily& family);

/// {u ⊆ A : some member of `base` is contained in u}.
SubsetFamily filter_from_base(const SubsetFamily& base, const Universe& universe);

/// {u ⊆ A : some finite intersection of members lies in u}. Computed from the
/// intersection of the whole family, which is the smallest such intersection.
SubsetFamily filter_from_family(const SubsetFamily& family, const Universe& universe);

/// One decision of the greedy extension.
struct GreedyStep {
    Subset considered;
    Subset adjoined;   // `considered` itself or its complement
    bool took_considered = false;
};

/// Extends a filter to an ultrafilter. Subsets are scanned in ascending order;
/// each is adjoined when the family keeps the finite intersection property,
/// otherwise its complement is. If `trace` is given, every step is appended.
SubsetFamily extend_to_ultrafilter(const SubsetFamily& filter, const Universe& universe,
                                   std::vector<GreedyStep>* trace = nullptr);

/// Ultrafilter containing a nonempty family with the finite intersection
/// property. Throws PreconditionError naming the hypothesis that fails.
SubsetFamily fep(const SubsetFamily& family, const Universe& universe,
                 std::vector<GreedyStep>* trace = nullptr);

} // namespace filterlab
