#pragma once

#include <map>
#include <string>
#include <vector>

#include "nord/bigint.hpp"
#include "nord/normal_poly.hpp"
#include "nord/universal.hpp"

namespace nord {

// Dense univariate polynomial over the integers, with the usual derivative.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(BigInt constant);
    explicit IntPoly(std::vector<BigInt> coeffs);  // coeffs[i] multiplies x^i

    static IntPoly x() { return monomial(1, 1); }
    static IntPoly monomial(unsigned e, BigInt c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(unsigned i) const;
    const std::vector<BigInt>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    IntPoly operator*(const BigInt& s) const;
    bool operator==(const IntPoly&) const = default;

    IntPoly derivative() const;
    IntPoly pow(unsigned e) const;
    BigInt eval(const BigInt& v) const;

    std::string to_string(const char* var = "x") const;

private:
    std::vector<BigInt> c_;  // no trailing zeros; empty means 0
    void trim();
};

// Exact division; throws std::logic_error when den does not divide num
// over the integers.
IntPoly exact_div(const IntPoly& num, const IntPoly& den);

// Coefficient-ring bindings for the skew variable z with z a = a z + D(a).
struct XRing {
    using Elem = IntPoly;
    static Elem derive(const Elem& e) { return e.derivative(); }
    static std::string render(const Elem& e) { return e.to_string(); }
};

struct YRing {
    using Elem = NormalPolynomial;
    static Elem derive(const Elem& e) { return delta(e); }
    static std::string render(const Elem& e) { return e.to_string(); }
};

// Normal form sum a_k z^k; multiplication rewrites z a -> a z + D(a).
template <class Ring>
class SkewPoly {
public:
    using Elem = typename Ring::Elem;

    SkewPoly() = default;
    static SkewPoly from_coeff(const Elem& a, unsigned k = 0) {
        SkewPoly p;
        if (!a.is_zero()) p.c_[k] = a;
        return p;
    }
    static SkewPoly z() { return from_coeff(Elem(BigInt(1)), 1); }

    bool is_zero() const { return c_.empty(); }
    int z_degree() const { return c_.empty() ? -1 : static_cast<int>(c_.rbegin()->first); }
    Elem coeff(unsigned k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Elem(BigInt(0)) : it->second;
    }
    const std::map<unsigned, Elem>& coeffs() const { return c_; }

    void add_term(unsigned k, const Elem& a) {
        if (a.is_zero()) return;
        auto [it, inserted] = c_.emplace(k, a);
        if (!inserted) {
            it->second = it->second + a;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    SkewPoly operator+(const SkewPoly& o) const {
        SkewPoly r = *this;
        for (const auto& [k, a] : o.c_) r.add_term(k, a);
        return r;
    }

    SkewPoly operator-(const SkewPoly& o) const {
        SkewPoly r = *this;
        for (const auto& [k, a] : o.c_) r.add_term(k, -a);
        return r;
    }

    // z^i a = sum_s C(i,s) D^s(a) z^{i-s}
    SkewPoly operator*(const SkewPoly& o) const {
        SkewPoly r;
        for (const auto& [i, a] : c_) {
            for (const auto& [j, b] : o.c_) {
                Elem db = b;
                for (unsigned s = 0; s <= i; ++s) {
                    r.add_term(i - s + j, a * db * Elem(binomial(i, s)));
                    if (s < i) db = Ring::derive(db);
                }
            }
        }
        return r;
    }

    bool operator==(const SkewPoly&) const = default;

    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string s;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + Ring::render(it->second) + ")";
            if (it->first > 0) {
                s += "·z";
                if (it->first > 1) s += "^" + std::to_string(it->first);
            }
        }
        return s;
    }

private:
    std::map<unsigned, Elem> c_;  // z-degree -> nonzero coefficient
};

using SkewPolyX = SkewPoly<XRing>;
using SkewPolyY = SkewPoly<YRing>;

// (h z^d)^n in normal form, by repeated products.
template <class Ring>
SkewPoly<Ring> power_h_zd(const typename Ring::Elem& h, unsigned d, unsigned n) {
    if (d == 0) throw std::domain_error("power_h_zd: d must be >= 1");
    SkewPoly<Ring> factor = SkewPoly<Ring>::from_coeff(h, d);
    SkewPoly<Ring> acc = SkewPoly<Ring>::from_coeff(typename Ring::Elem(BigInt(1)));
    for (unsigned i = 0; i < n; ++i) acc = acc * factor;
    return acc;
}

// Substitute y_i -> D^i(h) and t -> z into a universal polynomial; the
// result is already in normal form.
template <class Ring>
SkewPoly<Ring> eval_u(const NormalPolynomial& u, const typename Ring::Elem& h) {
    using Elem = typename Ring::Elem;
    std::vector<Elem> dh = {h};  // dh[i] = D^i(h)
    SkewPoly<Ring> r;
    for (const auto& [m, c] : u.terms()) {
        Elem a = Elem(c);
        for (const auto& [i, e] : m.y) {
            while (dh.size() <= i) dh.push_back(Ring::derive(dh.back()));
            for (unsigned rep = 0; rep < e; ++rep) a = a * dh[i];
        }
        r.add_term(m.t, a);
    }
    return r;
}

// Action of a normal form on a polynomial: sum a_k f^{(k)}.
IntPoly apply_operator(const SkewPolyX& p, const IntPoly& f);

// Transition matrices between the three module bases generated by
// yhat = z h, by h z, and by h^k z^k.  Entries are row-major, (n+1)x(n+1),
// upper triangular; matrix A expresses yhat powers over the (h z) powers,
// B the (h z) powers over h^k z^k, C the yhat powers over h^k z^k.
struct AhTransitions {
    std::vector<std::vector<IntPoly>> A, B, C;
    std::string to_json() const;
};

AhTransitions ah_transitions(unsigned n, const IntPoly& h);

// Table read off the y-instance oracle: coefficients of (y_0 z^d)^n.
CoeffTable coeff_table_from_y_oracle(unsigned n, unsigned d);

}  // namespace nord
