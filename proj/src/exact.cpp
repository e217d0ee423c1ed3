#include "frames/exact.hpp"

#include <limits>

namespace frames {

BigInt ipow(long long q, long long e) {
    BigInt r = 1;
    BigInt b = q;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Rational rpow(long long q, long long e) {
    if (e >= 0) return Rational(ipow(q, e));
    return Rational(BigInt(1), ipow(q, -e));
}

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_string(const BigInt& v) { return v.str(); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::optional<BigInt> as_integer(const Rational& r) {
    if (!is_integer(r)) return std::nullopt;
    return numerator(r);
}

std::optional<long long> as_int64(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        return std::nullopt;
    return static_cast<long long>(v);
}

}  // namespace frames
