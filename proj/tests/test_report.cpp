#include <doctest.h>

#include "frames/report.hpp"

using namespace frames;
using namespace frames::report;

TEST_CASE("exact numbers") {
    CHECK(integer(BigInt(42)).dump() == "42");
    CHECK(integer(BigInt("123456789012345678901234567890")).dump() == "\"123456789012345678901234567890\"");
    CHECK(rational(Rational(3, 5)).dump() == "\"3/5\"");
    CHECK(rational(Rational(-6, 4)).dump() == "\"-3/2\"");
    CHECK(rational(Rational(4)).dump() == "\"4/1\"");
    CHECK(exact(Rational(4)).dump() == "4");
    CHECK(exact(Rational(1, 3)).dump() == "\"1/3\"");
}

TEST_CASE("canonical JSON has sorted keys on one line") {
    Json j;
    j["zeta"] = 1;
    j["alpha"] = Json{{"b", 2}, {"a", 1}};
    CHECK(to_json_text(j) == "{\"alpha\":{\"a\":1,\"b\":2},\"zeta\":1}\n");
}

TEST_CASE("CSV quoting follows RFC 4180") {
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(csv_field("") == "");
}

TEST_CASE("tables") {
    CHECK(to_csv(Table{{"id", "row0", "row1"}, {}}) == "id,row0,row1\r\n");
    Table census{{"case", "count"}, {}};
    for (int i = 1; i <= 6; ++i) census.rows.push_back({std::to_string(i), std::to_string(i * 10)});
    const auto text = to_csv(census);
    CHECK(text.rfind("case,count\r\n1,10\r\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);
}

TEST_CASE("flatten uses dotted keys") {
    Json j{{"b", Json::array({1, "x"})}, {"a", Json{{"c", "3/5"}}}};
    const auto t = flatten(j);
    CHECK(t.header == std::vector<std::string>{"key", "value"});
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0] == std::vector<std::string>{"a.c", "3/5"});
    CHECK(t.rows[1] == std::vector<std::string>{"b[0]", "1"});
    CHECK(t.rows[2] == std::vector<std::string>{"b[1]", "x"});
}
