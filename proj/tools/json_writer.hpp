#pragma once

#include <json.hpp>

#include <string>

namespace hosc::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints with two-space indent, keys in insertion order and every
/// floating-point number as %.17g. Non-finite numbers become null.
std::string write_json(const Json& value);

}  // namespace hosc::cli
