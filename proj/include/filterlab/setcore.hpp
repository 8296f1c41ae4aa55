#pragma once

// Finite ground sets, bit-vector subsets and canonical subset families.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "filterlab/errors.hpp"

namespace filterlab {

/// Largest universe a Subset can encode (one machine word, top bit kept clear).
inline constexpr std::size_t kMaxUniverse = 63;

/// Largest universe for operations that walk every subset of the universe.
inline constexpr std::size_t kMaxScan = 20;

/// A subset of a universe of `width` elements; bit i set means element i is a member.
class Subset {
public:
    Subset() = default;
    Subset(std::uint64_t bits, std::size_t width);

    static Subset empty(std::size_t width) { return Subset(0, width); }
    static Subset full(std::size_t width);
    static Subset singleton(std::size_t index, std::size_t width);

    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t width() const noexcept { return width_; }

    bool contains(std::size_t index) const noexcept
    {
        return index < width_ && ((bits_ >> index) & 1U) != 0;
    }
    bool is_empty() const noexcept { return bits_ == 0; }
    std::size_t count() const noexcept;
    bool is_subset_of(const Subset& other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }

    /// Intersection; both operands must share a width.
    Subset operator&(const Subset& other) const;
    Subset operator|(const Subset& other) const;

    bool operator==(const Subset&) const = default;
    /// Canonical order: ascending numeric bit-vector value.
    std::strong_ordering operator<=>(const Subset& other) const noexcept
    {
        if (auto c = bits_ <=> other.bits_; c != 0) {
            return c;
        }
        return width_ <=> other.width_;
    }

private:
    struct Unchecked {};
    Subset(std::uint64_t bits, std::size_t width, Unchecked) noexcept
        : bits_(bits), width_(static_cast<std::uint8_t>(width))
    {
    }

    std::uint64_t bits_ = 0;
    std::uint8_t width_ = 0;

    friend Subset unchecked_subset(std::uint64_t bits, std::size_t width) noexcept;
};

/// Builds a subset without validating; bits above `width` must already be clear.
inline Subset unchecked_subset(std::uint64_t bits, std::size_t width) noexcept
{
    return Subset(bits, width, Subset::Unchecked{});
}

inline std::uint64_t width_mask(std::size_t width) noexcept
{
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

/// Named, ordered finite ground set.
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    /// Universe {prefix0, prefix1, ...} of the given size.
    static Universe numbered(std::size_t size, std::string_view prefix = "e");

    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<std::size_t> index_of(std::string_view label) const;

    Subset full() const { return Subset::full(size()); }
    Subset none() const { return Subset::empty(size()); }

    /// Subset made of the named elements; throws StructuralError on an unknown name.
    Subset subset(std::initializer_list<std::string_view> names) const;
    Subset subset(std::span<const std::string> names) const;

    /// Renders a subset as {x,y}.
    std::string format(const Subset& s) const;

    bool operator==(const Universe&) const = default;

private:
    std::vector<std::string> labels_;
};

/// Sorted, deduplicated collection of subsets sharing one width.
class SubsetFamily {
public:
    explicit SubsetFamily(std::size_t width) : width_(width) {}
    SubsetFamily(std::vector<Subset> members, std::size_t width);
    SubsetFamily(std::initializer_list<Subset> members, std::size_t width)
        : SubsetFamily(std::vector<Subset>(members), width)
    {
    }

    /// Family from raw bit vectors; every value must fit `width`.
    static SubsetFamily from_bits(std::span<const std::uint64_t> bits, std::size_t width);

    std::size_t width() const noexcept { return width_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::span<const Subset> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    const Subset& operator[](std::size_t i) const { return members_[i]; }

    bool contains(const Subset& s) const;
    bool includes(const SubsetFamily& other) const;

    /// Copy with `s` added (no-op when already present).
    SubsetFamily with(const Subset& s) const;
    SubsetFamily merged(const SubsetFamily& other) const;

    bool operator==(const SubsetFamily&) const = default;
    /// Lexicographic over canonically ordered members.
    std::strong_ordering operator<=>(const SubsetFamily& other) const;

private:
    std::vector<Subset> members_;
    std::size_t width_ = 0;
};

/// A ∼ a.
Subset complement(const Universe& universe, const Subset& a);

/// Intersection of every member; the family must be nonempty.
Subset intersect_all(const SubsetFamily& family);

/// Lazily yields every subset of the universe in ascending order.
inline auto powerset_iter(const Universe& universe)
{
    const std::size_t n = universe.size();
    if (n > kMaxUniverse) {
        throw CapacityError("universe of size " + std::to_string(n) + " exceeds capacity " +
                            std::to_string(kMaxUniverse));
    }
    return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << n) |
           std::views::transform([n](std::uint64_t bits) { return unchecked_subset(bits, n); });
}

/// pow(A) as a materialized family; bounded by kMaxScan.
SubsetFamily powerset_family(const Universe& universe);

/// Throws CapacityError when the universe is too large for a scan over pow(A).
void require_scannable(const Universe& universe, std::string_view operation);

/// Throws StructuralError unless the family's width matches the universe.
void require_width(const SubsetFamily& family, const Universe& universe);

std::string format_family(const Universe& universe, const SubsetFamily& family);

} // namespace filterlab
