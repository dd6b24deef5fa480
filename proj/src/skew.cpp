#include "nord/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace nord {

IntPoly::IntPoly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(unsigned e, BigInt c) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(e + 1, BigInt(0));
        p.c_[e] = std::move(c);
    }
    return p;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPoly::coeff(unsigned i) const { return i < c_.size() ? c_[i] : BigInt(0); }

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    if (s == 0) return {};
    IntPoly r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * BigInt(i);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r(BigInt(1)), b = *this;
    while (e) {
        if (e & 1u) r = r * b;
        b = b * b;
        e >>= 1u;
    }
    return r;
}

BigInt IntPoly::eval(const BigInt& v) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

std::string IntPoly::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !(c_[i] == 1)) {
            os << c_[i].str();
            if (i > 0) os << "·";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

IntPoly exact_div(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::logic_error("exact_div: division by zero");
    if (num.is_zero()) return {};
    // long division over the rationals, then integrality of the quotient
    std::vector<BigRat> r(num.coeffs().begin(), num.coeffs().end());
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) throw std::logic_error("exact_div: degree too small");
    std::vector<BigRat> q(dn - dd + 1, BigRat(0));
    BigRat lead(den.coeff(dd));
    for (int i = dn; i >= dd; --i) {
        BigRat cur = r[i];
        if (cur == 0) continue;
        BigRat f = cur / lead;
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * BigRat(den.coeff(j));
    }
    for (const BigRat& rest : r)
        if (rest != 0) throw std::logic_error("exact_div: nonzero remainder");
    std::vector<BigInt> qi(q.size());
    for (size_t i = 0; i < q.size(); ++i) qi[i] = require_integer(q[i], "exact_div");
    return IntPoly(std::move(qi));
}

IntPoly apply_operator(const SkewPolyX& p, const IntPoly& f) {
    IntPoly out;
    IntPoly df = f;
    unsigned cur = 0;
    for (const auto& [k, a] : p.coeffs()) {
        while (cur < k) {
            df = df.derivative();
            ++cur;
        }
        out = out + a * df;
    }
    return out;
}

std::string AhTransitions::to_json() const {
    auto dump = [](const std::vector<std::vector<IntPoly>>& m) {
        std::ostringstream os;
        os << '[';
        for (size_t i = 0; i < m.size(); ++i) {
            if (i) os << ',';
            os << '[';
            for (size_t j = 0; j < m[i].size(); ++j) {
                if (j) os << ',';
                os << '"' << m[i][j].to_string() << '"';
            }
            os << ']';
        }
        os << ']';
        return os.str();
    };
    return "{\"A\":" + dump(A) + ",\"B\":" + dump(B) + ",\"C\":" + dump(C) + "}";
}

AhTransitions ah_transitions(unsigned n, const IntPoly& h) {
    if (h.is_zero()) throw std::domain_error("ah_transitions: h must be nonzero");

    std::vector<SkewPolyX> hz_pow(n + 1), zh_pow(n + 1);
    SkewPolyX hz = SkewPolyX::from_coeff(h, 1);
    SkewPolyX zh = SkewPolyX::z() * SkewPolyX::from_coeff(h);
    hz_pow[0] = zh_pow[0] = SkewPolyX::from_coeff(IntPoly(BigInt(1)));
    for (unsigned j = 1; j <= n; ++j) {
        hz_pow[j] = hz_pow[j - 1] * hz;
        zh_pow[j] = zh_pow[j - 1] * zh;
    }

    std::vector<IntPoly> h_pow(n + 1);
    h_pow[0] = IntPoly(BigInt(1));
    for (unsigned i = 1; i <= n; ++i) h_pow[i] = h_pow[i - 1] * h;

    AhTransitions t;
    auto blank = std::vector<std::vector<IntPoly>>(n + 1, std::vector<IntPoly>(n + 1));
    t.A = t.B = t.C = blank;

    for (unsigned j = 0; j <= n; ++j) {
        for (unsigned i = 0; i <= j; ++i) {
            IntPoly pb = hz_pow[j].coeff(i);
            if (!pb.is_zero()) t.B[i][j] = exact_div(pb, h_pow[i]);
            IntPoly pc = zh_pow[j].coeff(i);
            if (!pc.is_zero()) t.C[i][j] = exact_div(pc, h_pow[i]);
        }
        // express zh^j over the hz powers by top-down elimination
        SkewPolyX residual = zh_pow[j];
        for (int i = static_cast<int>(j); i >= 0; --i) {
            IntPoly top = residual.coeff(i);
            if (top.is_zero()) continue;
            IntPoly f = exact_div(top, h_pow[i]);
            t.A[i][j] = f;
            residual = residual - SkewPolyX::from_coeff(f) * hz_pow[i];
        }
        if (!residual.is_zero())
            throw std::logic_error("ah_transitions: elimination left a nonzero residual");
    }
    return t;
}

CoeffTable coeff_table_from_y_oracle(unsigned n, unsigned d) {
    if (n == 0 || d == 0) throw std::domain_error("coeff_table_from_y_oracle: n, d >= 1");
    NormalPolynomial y0 = NormalPolynomial(NormalMonomial::y_var(0));
    SkewPolyY power = power_h_zd<YRing>(y0, d, n);
    CoeffTable t;
    t.n = n;
    t.d = d;
    for (const auto& [k, elem] : power.coeffs()) {
        for (const auto& [m, c] : elem.terms()) {
            if (m.t != 0)
                throw std::logic_error("coeff_table_from_y_oracle: stray t power");
            auto split = canonical_split(m, n);
            if (!split)
                throw std::logic_error("coeff_table_from_y_oracle: inconsistent monomial");
            t.entries[{split->first, k}] = c;
        }
    }
    t.validate();
    return t;
}

}  // namespace nord
