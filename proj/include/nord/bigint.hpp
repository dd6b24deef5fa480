#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace nord {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

// C(a, b) for possibly negative a; a < b or b-from-nothing gives 0.
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || a < b) return 0;
    if (b == 0 || b == a) return 1;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

// Falling factorial q(q-1)...(q-k+1); empty product for k = 0.
inline BigInt falling_factorial(long long q, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= q - static_cast<long long>(i);
    return r;
}

inline BigInt pow_big(const BigInt& base, unsigned e) {
    BigInt r = 1, b = base;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// Rational that is required to be an integer; throws if it is not.
inline BigInt require_integer(const BigRat& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error(std::string(what) + ": non-integral value " + r.str());
    return boost::multiprecision::numerator(r);
}

inline bool is_prime(unsigned long long p) {
    if (p < 2) return false;
    for (unsigned long long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace nord
