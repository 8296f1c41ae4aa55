#include "filterlab/cofinite.hpp"

#include <algorithm>
#include <iterator>

namespace filterlab {

CofiniteSet::CofiniteSet(Mode mode, std::vector<std::uint64_t> support)
    : mode_(mode), support_(std::move(support))
{
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
}

bool CofiniteSet::contains(std::uint64_t n) const
{
    const bool listed = std::binary_search(support_.begin(), support_.end(), n);
    return is_finite() ? listed : !listed;
}

bool CofiniteSet::is_subset_of(const CofiniteSet& other) const
{
    const auto& a = support_;
    const auto& b = other.support_;
    if (is_finite() && other.is_finite()) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    if (is_finite()) {
        // a ⊆ ω∖b  iff  a ∩ b = ∅
        std::vector<std::uint64_t> meet;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
        return meet.empty();
    }
    if (other.is_finite()) {
        return false;
    }
    // ω∖a ⊆ ω∖b  iff  b ⊆ a
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::string CofiniteSet::to_string() const
{
    std::string out = is_finite() ? "finite{" : "cofinite{";
    for (std::size_t i = 0; i < support_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(support_[i]);
    }
    out += '}';
    return out;
}

CofiniteSet cof_complement(const CofiniteSet& s)
{
    const auto flipped = s.is_finite() ? CofiniteSet::Mode::Cofinite : CofiniteSet::Mode::Finite;
    return {flipped, std::vector<std::uint64_t>(s.support().begin(), s.support().end())};
}

CofiniteSet cof_intersect(const CofiniteSet& s, const CofiniteSet& t)
{
    const auto a = s.support();
    const auto b = t.support();
    std::vector<std::uint64_t> out;
    if (s.is_finite() && t.is_finite()) {
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return CofiniteSet::finite(std::move(out));
    }
    if (s.is_finite()) {
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return CofiniteSet::finite(std::move(out));
    }
    if (t.is_finite()) {
        std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(out));
        return CofiniteSet::finite(std::move(out));
    }
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CofiniteSet::cofinite(std::move(out));
}

CofiniteSet cof_union(const CofiniteSet& s, const CofiniteSet& t)
{
    return cof_complement(cof_intersect(cof_complement(s), cof_complement(t)));
}

bool frechet_contains(const CofiniteSet& s)
{
    return !s.is_finite();
}

CofiniteReport frechet_axiom_suite(std::span<const CofiniteSet> samples)
{
    if (frechet_contains(CofiniteSet::empty())) {
        return CofiniteReport::fail(AxiomTag::EmptyMember, {CofiniteSet::empty()});
    }
    if (!frechet_contains(CofiniteSet::omega())) {
        return CofiniteReport::fail(AxiomTag::GroundSetMissing, {CofiniteSet::omega()});
    }

    std::vector<CofiniteSet> pool(samples.begin(), samples.end());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            pool.push_back(cof_intersect(samples[i], samples[j]));
        }
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    for (std::size_t i = 0; i < pool.size(); ++i) {
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            const auto& s = pool[i];
            const auto& t = pool[j];
            if (frechet_contains(s) && frechet_contains(t) &&
                !frechet_contains(cof_intersect(s, t))) {
                return CofiniteReport::fail(AxiomTag::NotIntersectionClosed, {s, t});
            }
        }
    }
    for (const auto& s : pool) {
        for (const auto& t : pool) {
            if (frechet_contains(s) && s.is_subset_of(t) && !frechet_contains(t)) {
                return CofiniteReport::fail(AxiomTag::NotUpwardClosed, {s, t});
            }
        }
    }
    for (const auto& s : pool) {
        if (s.is_finite() && frechet_contains(s)) {
            return CofiniteReport::fail(AxiomTag::FiniteMember, {s});
        }
    }
    return CofiniteReport::pass();
}

} // namespace filterlab
