#pragma once

// JSON family documents:
//   {"universe": [name...], "family": [[name...]...],
//    "cofinite": {"mode": "finite"|"cofinite", "support": [n...]} | [ {...}, ... ]}
// "cofinite" is optional; "universe" and "family" may be omitted only when it is present.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "filterlab/cofinite.hpp"
#include "filterlab/setcore.hpp"

namespace filterlab {

/// Malformed JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed JSON that violates the document schema.
class ValidationError : public Error {
public:
    using Error::Error;
};

struct ParsedDocument {
    std::optional<Universe> universe;
    std::optional<SubsetFamily> family;
    std::optional<std::vector<CofiniteSet>> cofinite;
};

/// Largest support element accepted for a cofinite set.
inline constexpr std::uint64_t kMaxSupportElement = (std::uint64_t{1} << 32) - 1;

ParsedDocument parse_document(std::string_view text);

/// Universe and family of a document; both keys are required.
std::pair<Universe, SubsetFamily> parse_family(std::string_view text);

/// Canonical serialization: members ascending, names in universe order, trailing newline.
std::string serialize_family(const Universe& universe, const SubsetFamily& family);

} // namespace filterlab
