#pragma once

// Finite and cofinite subsets of the natural numbers. Sets that are neither
// (the evens, say) have no representation here.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "filterlab/axioms.hpp"

namespace filterlab {

class CofiniteSet {
public:
    enum class Mode : std::uint8_t { Finite, Cofinite };

    /// Finite: exactly `support`. Cofinite: ω minus `support`.
    CofiniteSet(Mode mode, std::vector<std::uint64_t> support);

    static CofiniteSet finite(std::vector<std::uint64_t> support)
    {
        return {Mode::Finite, std::move(support)};
    }
    static CofiniteSet cofinite(std::vector<std::uint64_t> support)
    {
        return {Mode::Cofinite, std::move(support)};
    }
    static CofiniteSet empty() { return finite({}); }
    static CofiniteSet omega() { return cofinite({}); }

    Mode mode() const noexcept { return mode_; }
    std::span<const std::uint64_t> support() const noexcept { return support_; }
    bool is_finite() const noexcept { return mode_ == Mode::Finite; }
    bool is_empty() const noexcept { return is_finite() && support_.empty(); }
    bool contains(std::uint64_t n) const;
    bool is_subset_of(const CofiniteSet& other) const;

    std::string to_string() const;

    bool operator==(const CofiniteSet&) const = default;
    auto operator<=>(const CofiniteSet&) const = default;

private:
    Mode mode_;
    std::vector<std::uint64_t> support_;
};

CofiniteSet cof_complement(const CofiniteSet& s);
CofiniteSet cof_intersect(const CofiniteSet& s, const CofiniteSet& t);
CofiniteSet cof_union(const CofiniteSet& s, const CofiniteSet& t);

/// Membership in the Fréchet filter over ω: the complement is finite.
bool frechet_contains(const CofiniteSet& s);

using CofiniteReport = BasicAxiomReport<CofiniteSet>;

/// Checks the filter axioms for the Fréchet filter on the samples and their
/// pairwise intersections: ∅ excluded, ω included, closure under intersection
/// and supersets, and no finite member.
CofiniteReport frechet_axiom_suite(std::span<const CofiniteSet> samples);

} // namespace filterlab
