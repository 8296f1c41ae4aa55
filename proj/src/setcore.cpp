#include "filterlab/setcore.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace filterlab {

Subset::Subset(std::uint64_t bits, std::size_t width) : bits_(bits), width_(0)
{
    if (width > kMaxUniverse) {
        throw CapacityError("subset width " + std::to_string(width) + " exceeds capacity " +
                            std::to_string(kMaxUniverse));
    }
    if ((bits & ~width_mask(width)) != 0) {
        throw StructuralError("subset has bits above its width " + std::to_string(width));
    }
    width_ = static_cast<std::uint8_t>(width);
}

Subset Subset::full(std::size_t width)
{
    if (width > kMaxUniverse) {
        throw CapacityError("subset width " + std::to_string(width) + " exceeds capacity");
    }
    return unchecked_subset(width_mask(width), width);
}

Subset Subset::singleton(std::size_t index, std::size_t width)
{
    if (index >= width) {
        throw StructuralError("element index " + std::to_string(index) + " out of range for width " +
                              std::to_string(width));
    }
    return Subset(std::uint64_t{1} << index, width);
}

std::size_t Subset::count() const noexcept
{
    return static_cast<std::size_t>(std::popcount(bits_));
}

namespace {

void require_same_width(const Subset& a, const Subset& b)
{
    if (a.width() != b.width()) {
        throw StructuralError("subset widths differ: " + std::to_string(a.width()) + " vs " +
                              std::to_string(b.width()));
    }
}

} // namespace

Subset Subset::operator&(const Subset& other) const
{
    require_same_width(*this, other);
    return unchecked_subset(bits_ & other.bits_, width_);
}

Subset Subset::operator|(const Subset& other) const
{
    require_same_width(*this, other);
    return unchecked_subset(bits_ | other.bits_, width_);
}

// ---------------------------------------------------------------------------

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels))
{
    if (labels_.empty()) {
        throw StructuralError("universe must have at least one element");
    }
    if (labels_.size() > kMaxUniverse) {
        throw CapacityError("universe of size " + std::to_string(labels_.size()) +
                            " exceeds capacity " + std::to_string(kMaxUniverse));
    }
    std::unordered_set<std::string_view> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second) {
            throw StructuralError("duplicate element name \"" + label + "\"");
        }
    }
}

Universe Universe::numbered(std::size_t size, std::string_view prefix)
{
    std::vector<std::string> labels;
    labels.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        labels.push_back(std::string(prefix) + std::to_string(i));
    }
    return Universe(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

Subset Universe::subset(std::initializer_list<std::string_view> names) const
{
    std::uint64_t bits = 0;
    for (auto name : names) {
        auto idx = index_of(name);
        if (!idx) {
            throw StructuralError("unknown element \"" + std::string(name) + "\"");
        }
        bits |= std::uint64_t{1} << *idx;
    }
    return unchecked_subset(bits, size());
}

Subset Universe::subset(std::span<const std::string> names) const
{
    std::uint64_t bits = 0;
    for (const auto& name : names) {
        auto idx = index_of(name);
        if (!idx) {
            throw StructuralError("unknown element \"" + name + "\"");
        }
        bits |= std::uint64_t{1} << *idx;
    }
    return unchecked_subset(bits, size());
}

std::string Universe::format(const Subset& s) const
{
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < size(); ++i) {
        if (s.contains(i)) {
            if (!first) {
                out += ',';
            }
            out += labels_[i];
            first = false;
        }
    }
    out += '}';
    return out;
}

// ---------------------------------------------------------------------------

SubsetFamily::SubsetFamily(std::vector<Subset> members, std::size_t width)
    : members_(std::move(members)), width_(width)
{
    for (const auto& m : members_) {
        if (m.width() != width_) {
            throw StructuralError("family member of width " + std::to_string(m.width()) +
                                  " in family of width " + std::to_string(width_));
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubsetFamily SubsetFamily::from_bits(std::span<const std::uint64_t> bits, std::size_t width)
{
    std::vector<Subset> members;
    members.reserve(bits.size());
    for (auto b : bits) {
        members.emplace_back(b, width);
    }
    return SubsetFamily(std::move(members), width);
}

bool SubsetFamily::contains(const Subset& s) const
{
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool SubsetFamily::includes(const SubsetFamily& other) const
{
    return width_ == other.width_ &&
           std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
}

SubsetFamily SubsetFamily::with(const Subset& s) const
{
    std::vector<Subset> members = members_;
    members.push_back(s);
    return SubsetFamily(std::move(members), width_);
}

SubsetFamily SubsetFamily::merged(const SubsetFamily& other) const
{
    std::vector<Subset> members = members_;
    members.insert(members.end(), other.members_.begin(), other.members_.end());
    return SubsetFamily(std::move(members), width_);
}

std::strong_ordering SubsetFamily::operator<=>(const SubsetFamily& other) const
{
    if (auto c = width_ <=> other.width_; c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(members_.begin(), members_.end(),
                                                  other.members_.begin(), other.members_.end());
}

// ---------------------------------------------------------------------------

Subset complement(const Universe& universe, const Subset& a)
{
    if (a.width() != universe.size()) {
        throw StructuralError("subset width " + std::to_string(a.width()) +
                              " does not match universe size " + std::to_string(universe.size()));
    }
    return unchecked_subset(~a.bits() & width_mask(a.width()), a.width());
}

Subset intersect_all(const SubsetFamily& family)
{
    if (family.empty()) {
        throw PreconditionError("intersection of an empty family is undefined");
    }
    std::uint64_t acc = width_mask(family.width());
    for (const auto& m : family) {
        acc &= m.bits();
    }
    return unchecked_subset(acc, family.width());
}

void require_scannable(const Universe& universe, std::string_view operation)
{
    if (universe.size() > kMaxScan) {
        throw CapacityError(std::string(operation) + ": universe of size " +
                            std::to_string(universe.size()) + " exceeds scan bound " +
                            std::to_string(kMaxScan));
    }
}

void require_width(const SubsetFamily& family, const Universe& universe)
{
    if (family.width() != universe.size()) {
        throw StructuralError("family width " + std::to_string(family.width()) +
                              " does not match universe size " + std::to_string(universe.size()));
    }
}

SubsetFamily powerset_family(const Universe& universe)
{
    require_scannable(universe, "powerset");
    std::vector<Subset> members;
    members.reserve(std::size_t{1} << universe.size());
    for (auto s : powerset_iter(universe)) {
        members.push_back(s);
    }
    return SubsetFamily(std::move(members), universe.size());
}

std::string format_family(const Universe& universe, const SubsetFamily& family)
{
    std::string out = "{";
    bool first = true;
    for (const auto& m : family) {
        if (!first) {
            out += ',';
        }
        out += universe.format(m);
        first = false;
    }
    out += '}';
    return out;
}

} // namespace filterlab
