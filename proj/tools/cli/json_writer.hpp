#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

namespace milnor::cli {

using Json = nlohmann::ordered_json;

/// Pretty-prints with two-space indentation. Floating-point values are
/// written with 17 significant digits (always with a '.' or exponent so they
/// read back as floats); non-finite values become null.
void write_json(std::ostream& out, const Json& value);
std::string to_json_string(const Json& value);

}  // namespace milnor::cli
