// Exact arithmetic layer: arbitrary-precision integers and rationals plus the
// few helpers the rest of the library needs. No floating point anywhere.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace hamfp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using json = nlohmann::json;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& x) { return boost::multiprecision::abs(x); }

/// True iff d != 0 and d divides x.
inline bool divides(const Int& d, const Int& x) { return d != 0 && x % d == 0; }

/// Quotient x/d when the division is exact, nullopt otherwise.
inline std::optional<Int> exact_div(const Int& x, const Int& d) {
    if (!divides(d, x)) return std::nullopt;
    return Int(x / d);
}

/// Canonical residue of x modulo m > 0, in [0, m).
inline Int residue(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

/// Exact fraction num/den with den != 0. Built by division because the
/// two-argument cpp_rational constructor rejects negative denominators.
inline Rat make_rat(const Int& num, const Int& den) { return Rat(num) / Rat(den); }

inline bool is_integer(const Rat& q) { return boost::multiprecision::denominator(q) == 1; }

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Positive divisors of n > 0, ascending.
std::vector<Int> divisors(const Int& n);

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that.
json int_to_json(const Int& v);

/// Accepts a JSON integer or a decimal string. nullopt on anything else.
std::optional<Int> int_from_json(const json& j);

/// Rationals serialize as an integer when the denominator is 1, otherwise as
/// a "p/q" string.
json rat_to_json(const Rat& q);

}  // namespace hamfp
