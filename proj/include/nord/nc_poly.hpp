#pragma once

#include <map>
#include <string>
#include <vector>

#include "nord/bigint.hpp"
#include "nord/normal_poly.hpp"

namespace nord {

// Word in noncommuting letters y_0, y_1, ... with a t-power collected on the
// right of the whole word.
struct NCWord {
    std::vector<unsigned> letters;
    unsigned t = 0;

    static NCWord one() { return {}; }
    static NCWord letter(unsigned i);

    NCWord operator*(const NCWord& o) const;  // concatenate, add t-powers
    bool operator==(const NCWord&) const = default;

    unsigned length() const { return static_cast<unsigned>(letters.size()); }
};

struct NCTermOrder {
    bool operator()(const NCWord& a, const NCWord& b) const;
};

class NCPolynomial {
public:
    using TermMap = std::map<NCWord, BigInt, NCTermOrder>;

    NCPolynomial() = default;
    explicit NCPolynomial(BigInt constant);
    explicit NCPolynomial(const NCWord& w, BigInt coeff = 1);

    static NCPolynomial one() { return NCPolynomial{BigInt(1)}; }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    BigInt coefficient(const NCWord& w) const;

    NCPolynomial operator+(const NCPolynomial& o) const;
    NCPolynomial operator-(const NCPolynomial& o) const;
    NCPolynomial operator*(const NCPolynomial& o) const;
    NCPolynomial operator-() const;
    NCPolynomial operator*(const BigInt& c) const;
    void add_term(const NCWord& w, const BigInt& c);

    NCPolynomial times_y0_left() const;  // prepend the letter y_0
    NCPolynomial times_t() const;

    bool operator==(const NCPolynomial&) const = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

// Positionwise letter increment y_j -> y_{j+1}, summed over positions.
NCPolynomial delta_nc(const NCPolynomial& p);

// Sort the letters of every word into a commutative monomial.
NormalPolynomial abelianize(const NCPolynomial& p);

}  // namespace nord
