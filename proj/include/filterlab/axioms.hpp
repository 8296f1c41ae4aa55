#pragma once

// Decidable checkers for the filter predicates over a finite universe. Each
// checker returns a report naming the first violated axiom, in canonical
// order, together with the subsets that exhibit the violation.

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "filterlab/setcore.hpp"

namespace filterlab {

enum class AxiomTag {
    NotSubsetFamily,
    EmptyMember,
    GroundSetMissing,
    NotIntersectionClosed,
    NotUpwardClosed,
    EmptyFamily,
    DichotomyFails,
    NotMaximal,
    NotFilter,
    FiniteMember,
};

std::string_view tag_name(AxiomTag tag);

/// Human-readable description used in CLI reports, e.g. "empty set is a member".
std::string_view describe(AxiomTag tag);

/// Verdict plus witness. A failing report always carries a tag and a witness
/// list (possibly empty); a passing report carries neither.
template <class Witness>
class BasicAxiomReport {
public:
    static BasicAxiomReport pass() { return {}; }

    static BasicAxiomReport fail(AxiomTag tag, std::vector<Witness> witness,
                                 std::optional<AxiomTag> cause = std::nullopt)
    {
        BasicAxiomReport r;
        r.failed_ = tag;
        r.witness_ = std::move(witness);
        r.cause_ = cause;
        return r;
    }

    bool verdict() const noexcept { return !failed_.has_value(); }
    explicit operator bool() const noexcept { return verdict(); }

    const std::optional<AxiomTag>& failed_axiom() const noexcept { return failed_; }
    const std::optional<std::vector<Witness>>& witness() const noexcept { return witness_; }

    /// For NotFilter: the filter axiom that failed underneath.
    const std::optional<AxiomTag>& cause() const noexcept { return cause_; }

private:
    std::optional<AxiomTag> failed_;
    std::optional<std::vector<Witness>> witness_;
    std::optional<AxiomTag> cause_;
};

using AxiomReport = BasicAxiomReport<Subset>;

AxiomReport is_filter(const SubsetFamily& family, const Universe& universe);
AxiomReport is_filter_base(const SubsetFamily& base, const Universe& universe);

/// Finite intersection property, via the intersection of the whole family.
bool has_fip(const SubsetFamily& family);

/// Finite intersection property by enumerating every nonempty subfamily.
/// At most kernels::kMaxOracleFamily members.
bool has_fip_oracle(const SubsetFamily& family);

AxiomReport is_ultrafilter(const SubsetFamily& family, const Universe& universe);
AxiomReport is_max_filter(const SubsetFamily& family, const Universe& universe);
AxiomReport is_free_ultrafilter(const SubsetFamily& family, const Universe& universe);

/// Element index a with family == F_a, if any.
std::optional<std::size_t> is_principal(const SubsetFamily& family, const Universe& universe);

/// Finiteness of a subset of the universe. Always true here; kept as a named
/// predicate so the free-ultrafilter check reads as its definition does.
inline bool is_finite(const Subset&) noexcept { return true; }

} // namespace filterlab
