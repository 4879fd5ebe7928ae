// Exact arithmetic types shared by every module: GMP-backed arbitrary
// precision integers and rationals. Floating point is confined to the
// stats module and to infinite q-Pochhammer products.
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace padichl {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int int_pow(const Int& base, long long e) {
    if (e < 0) throw argument_error("int_pow: negative exponent");
    Int r = 1, b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// base^e for integer e of either sign.
inline Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw domain_error("rat_pow: 0 to negative power");
        return Rat(0);
    }
    bool neg = e < 0;
    unsigned long long m = neg ? static_cast<unsigned long long>(-(e + 1)) + 1ull
                               : static_cast<unsigned long long>(e);
    Rat r = 1, b = base;
    while (m > 0) {
        if (m & 1ull) r *= b;
        b *= b;
        m >>= 1;
    }
    return neg ? Rat(1) / r : r;
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string rat_string(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a/b", decimal "0.125", and plain integers.
Rat parse_rational(const std::string& s);

}  // namespace padichl
