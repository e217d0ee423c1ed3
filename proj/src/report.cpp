#include "frames/report.hpp"

namespace frames::report {

Json integer(const BigInt& v) {
    if (const auto small = as_int64(v)) return *small;
    return to_string(v);
}

Json rational(const Rational& r) { return to_fraction_string(r); }

Json exact(const Rational& r) {
    if (const auto i = as_integer(r)) return integer(*i);
    return rational(r);
}

std::string to_json_text(const Json& j) { return j.dump() + "\n"; }

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

void append_row(std::string& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_field(row[i]);
    }
    out += "\r\n";
}

void walk(const Json& j, const std::string& path, Table& t) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            walk(it.value(), path.empty() ? it.key() : path + "." + it.key(), t);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], path + "[" + std::to_string(i) + "]", t);
    } else {
        t.rows.push_back({path, j.is_string() ? j.get<std::string>() : j.dump()});
    }
}

}  // namespace

std::string to_csv(const Table& t) {
    std::string out;
    append_row(out, t.header);
    for (const auto& r : t.rows) append_row(out, r);
    return out;
}

Table flatten(const Json& j) {
    Table t{{"key", "value"}, {}};
    walk(j, "", t);
    return t;
}

}  // namespace frames::report
