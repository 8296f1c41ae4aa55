#include "filterlab/document.hpp"

#include <json.hpp>

namespace filterlab {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& node, std::string_view what)
{
    if (!node.is_array()) {
        throw ValidationError(std::string(what) + " must be an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(node.size());
    for (const auto& item : node) {
        if (!item.is_string()) {
            throw ValidationError(std::string(what) + " must contain only strings");
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

Universe read_universe(const json& node)
{
    auto labels = string_list(node, "\"universe\"");
    if (labels.empty()) {
        throw ValidationError("\"universe\" must name at least one element");
    }
    if (labels.size() > kMaxUniverse) {
        throw CapacityError("universe of size " + std::to_string(labels.size()) +
                            " exceeds capacity " + std::to_string(kMaxUniverse));
    }
    try {
        return Universe(std::move(labels));
    } catch (const StructuralError& e) {
        throw ValidationError(e.what());
    }
}

SubsetFamily read_family(const json& node, const Universe& universe)
{
    if (!node.is_array()) {
        throw ValidationError("\"family\" must be an array of arrays of strings");
    }
    std::vector<Subset> members;
    members.reserve(node.size());
    for (const auto& item : node) {
        const auto names = string_list(item, "each \"family\" member");
        try {
            members.push_back(universe.subset(std::span<const std::string>(names)));
        } catch (const StructuralError& e) {
            throw ValidationError(e.what());
        }
    }
    return SubsetFamily(std::move(members), universe.size());
}

CofiniteSet read_cofinite_set(const json& node)
{
    if (!node.is_object()) {
        throw ValidationError("cofinite set must be an object");
    }
    for (const auto& [key, value] : node.items()) {
        if (key != "mode" && key != "support") {
            throw ValidationError("unknown key \"" + key + "\" in cofinite set");
        }
    }
    if (!node.contains("mode") || !node.contains("support")) {
        throw ValidationError("cofinite set needs \"mode\" and \"support\"");
    }
    const auto& mode = node.at("mode");
    if (!mode.is_string() || (mode != "finite" && mode != "cofinite")) {
        throw ValidationError("\"mode\" must be \"finite\" or \"cofinite\"");
    }
    const auto& support = node.at("support");
    if (!support.is_array()) {
        throw ValidationError("\"support\" must be an array of naturals");
    }
    std::vector<std::uint64_t> elements;
    for (const auto& item : support) {
        if (!item.is_number_unsigned() || item.get<std::uint64_t>() > kMaxSupportElement) {
            throw ValidationError("\"support\" entries must be naturals below 2^32");
        }
        elements.push_back(item.get<std::uint64_t>());
    }
    return {mode == "finite" ? CofiniteSet::Mode::Finite : CofiniteSet::Mode::Cofinite,
            std::move(elements)};
}

} // namespace

ParsedDocument parse_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) {
        throw ValidationError("document must be a JSON object");
    }
    for (const auto& [key, value] : root.items()) {
        if (key != "universe" && key != "family" && key != "cofinite") {
            throw ValidationError("unknown key \"" + key + "\"");
        }
    }

    ParsedDocument doc;
    const bool has_universe = root.contains("universe");
    const bool has_family = root.contains("family");
    if (has_family != has_universe) {
        throw ValidationError("\"universe\" and \"family\" must be given together");
    }
    if (has_universe) {
        doc.universe = read_universe(root.at("universe"));
        doc.family = read_family(root.at("family"), *doc.universe);
    }
    if (root.contains("cofinite")) {
        const auto& node = root.at("cofinite");
        std::vector<CofiniteSet> sets;
        if (node.is_array()) {
            for (const auto& item : node) {
                sets.push_back(read_cofinite_set(item));
            }
        } else {
            sets.push_back(read_cofinite_set(node));
        }
        doc.cofinite = std::move(sets);
    }
    if (!doc.universe && !doc.cofinite) {
        throw ValidationError("document needs \"universe\" and \"family\"");
    }
    return doc;
}

std::pair<Universe, SubsetFamily> parse_family(std::string_view text)
{
    auto doc = parse_document(text);
    if (!doc.universe) {
        throw ValidationError("document has no \"universe\"");
    }
    return {std::move(*doc.universe), std::move(*doc.family)};
}

std::string serialize_family(const Universe& universe, const SubsetFamily& family)
{
    require_width(family, universe);
    auto names = [&](const Subset& s) {
        std::string out = "[";
        bool first = true;
        for (std::size_t i = 0; i < universe.size(); ++i) {
            if (!s.contains(i)) {
                continue;
            }
            if (!first) {
                out += ", ";
            }
            out += json(universe.labels()[i]).dump();
            first = false;
        }
        return out + "]";
    };

    std::string out = "{\n  \"universe\": " + names(universe.full()) + ",\n  \"family\": [";
    if (family.empty()) {
        return out + "]\n}\n";
    }
    for (std::size_t k = 0; k < family.size(); ++k) {
        out += (k == 0 ? "\n    " : ",\n    ") + names(family[k]);
    }
    return out + "\n  ]\n}\n";
}

} // namespace filterlab
