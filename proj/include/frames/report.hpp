#pragma once

// Canonical serialization: JSON with sorted keys and exact numbers, CSV per
// RFC 4180.

#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "frames/exact.hpp"

namespace frames::report {

using Json = nlohmann::json;

/// A JSON number when it fits in 64 bits, otherwise a decimal string.
Json integer(const BigInt& v);
/// Always a "num/den" string.
Json rational(const Rational& r);
/// integer() for integral values, rational() otherwise.
Json exact(const Rational& r);

/// Compact single-line JSON followed by a newline.
std::string to_json_text(const Json& j);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(std::string_view s);
/// Header row plus data rows, CRLF line endings.
std::string to_csv(const Table& t);

/// Two-column (key, value) table of the scalar leaves of j, keys as dotted
/// paths in sorted order; arrays index with [i].
Table flatten(const Json& j);

}  // namespace frames::report
