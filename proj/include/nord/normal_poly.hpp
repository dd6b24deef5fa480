#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "nord/bigint.hpp"
#include "nord/partition.hpp"

namespace nord {

// Commutative monomial y_0^{a_0} y_1^{a_1} ... times t^k.  The y's commute
// with each other; t-powers are kept collected on the right.
struct NormalMonomial {
    std::map<unsigned, unsigned> y;  // variable index -> exponent, no zero entries
    unsigned t = 0;

    static NormalMonomial one() { return {}; }
    static NormalMonomial y_var(unsigned i, unsigned e = 1);
    static NormalMonomial t_pow(unsigned k);

    NormalMonomial operator*(const NormalMonomial& o) const;
    bool operator==(const NormalMonomial&) const = default;

    unsigned exponent(unsigned i) const;
    unsigned y_degree() const;  // sum of exponents
    unsigned weight() const;    // sum of i * exponent(i) + t

    // Indices >= 1 with multiplicity, as a partition (descending).
    Partition positive_part() const;
};

// Term order used everywhere a polynomial is iterated, printed or
// serialized: higher t-power first, then lexicographically larger
// positive-index partition first, then larger y_0 exponent first.
struct TermOrder {
    bool operator()(const NormalMonomial& a, const NormalMonomial& b) const;
};

class NormalPolynomial {
public:
    using TermMap = std::map<NormalMonomial, BigInt, TermOrder>;

    NormalPolynomial() = default;
    explicit NormalPolynomial(BigInt constant);
    explicit NormalPolynomial(const NormalMonomial& m, BigInt coeff = 1);

    static NormalPolynomial zero() { return NormalPolynomial{}; }
    static NormalPolynomial one() { return NormalPolynomial{BigInt(1)}; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coefficient(const NormalMonomial& m) const;

    NormalPolynomial operator+(const NormalPolynomial& o) const;
    NormalPolynomial operator-(const NormalPolynomial& o) const;
    NormalPolynomial operator*(const NormalPolynomial& o) const;
    NormalPolynomial operator-() const;
    NormalPolynomial operator*(const BigInt& c) const;

    NormalPolynomial& operator+=(const NormalPolynomial& o);
    void add_term(const NormalMonomial& m, const BigInt& c);

    NormalPolynomial times_y0() const;  // multiply by y_0
    NormalPolynomial times_t() const;   // append one t on the right

    bool operator==(const NormalPolynomial&) const = default;

    std::string to_string() const;
    std::string to_latex() const;

    // Substitute y_i -> y_of(i) and t^k -> tpow_of(k) in a commutative ring T.
    // T needs T(BigInt), operator+ and operator*.
    template <class T, class FY, class FT>
    T substitute(FY&& y_of, FT&& tpow_of) const {
        T acc = T(BigInt(0));
        for (const auto& [m, c] : terms_) {
            T term = T(c);
            for (const auto& [i, e] : m.y)
                for (unsigned r = 0; r < e; ++r) term = term * y_of(i);
            acc = acc + term * tpow_of(m.t);
        }
        return acc;
    }

private:
    TermMap terms_;  // nonzero coefficients only
};

// Leibniz extension of y_i -> y_{i+1}; t-powers untouched.
NormalPolynomial delta(const NormalPolynomial& p);

// Split a monomial of an order-n universal polynomial into (lambda, k),
// where the monomial is y_0^{n-len(lambda)} y_lambda t^k.  Empty result when
// the y_0 exponent is inconsistent with n - len(lambda).
std::optional<std::pair<Partition, unsigned>> canonical_split(const NormalMonomial& m, unsigned n);

}  // namespace nord
