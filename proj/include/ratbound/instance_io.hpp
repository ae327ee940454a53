#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ratbound/ratfun.hpp"

namespace ratbound {

/// An instance file: JSON object
///   {"poles": [[re, im], ...], "zeros": [[re, im], ...], "leading": [re, im], "k": 1.5}
/// with "k" optional. The numerator is always given in root form.
struct Instance {
    RationalFunction r;
    std::optional<double> k;
};

/// Throws ParseError for malformed text or an inadmissible function.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

nlohmann::json instance_to_json(const RationalFunction& r, std::optional<double> k = std::nullopt);
std::string dump_instance(const RationalFunction& r, std::optional<double> k = std::nullopt);

}  // namespace ratbound
