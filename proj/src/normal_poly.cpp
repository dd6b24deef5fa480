#include "nord/normal_poly.hpp"

#include <algorithm>
#include <sstream>

namespace nord {

NormalMonomial NormalMonomial::y_var(unsigned i, unsigned e) {
    NormalMonomial m;
    if (e > 0) m.y[i] = e;
    return m;
}

NormalMonomial NormalMonomial::t_pow(unsigned k) {
    NormalMonomial m;
    m.t = k;
    return m;
}

NormalMonomial NormalMonomial::operator*(const NormalMonomial& o) const {
    NormalMonomial r = *this;
    for (const auto& [i, e] : o.y) r.y[i] += e;
    r.t += o.t;
    return r;
}

unsigned NormalMonomial::exponent(unsigned i) const {
    auto it = y.find(i);
    return it == y.end() ? 0 : it->second;
}

unsigned NormalMonomial::y_degree() const {
    unsigned s = 0;
    for (const auto& [i, e] : y) s += e;
    return s;
}

unsigned NormalMonomial::weight() const {
    unsigned s = t;
    for (const auto& [i, e] : y) s += i * e;
    return s;
}

Partition NormalMonomial::positive_part() const {
    std::vector<unsigned> parts;
    for (auto it = y.rbegin(); it != y.rend(); ++it) {
        if (it->first == 0) continue;
        for (unsigned r = 0; r < it->second; ++r) parts.push_back(it->first);
    }
    Partition p(std::move(parts));
    return p;
}

bool TermOrder::operator()(const NormalMonomial& a, const NormalMonomial& b) const {
    if (a.t != b.t) return a.t > b.t;
    Partition pa = a.positive_part(), pb = b.positive_part();
    if (pa != pb) return partition_display_less(pa, pb);
    return a.exponent(0) > b.exponent(0);
}

NormalPolynomial::NormalPolynomial(BigInt constant) {
    if (constant != 0) terms_[NormalMonomial::one()] = std::move(constant);
}

NormalPolynomial::NormalPolynomial(const NormalMonomial& m, BigInt coeff) {
    if (coeff != 0) terms_[m] = std::move(coeff);
}

BigInt NormalPolynomial::coefficient(const NormalMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void NormalPolynomial::add_term(const NormalMonomial& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NormalPolynomial& NormalPolynomial::operator+=(const NormalPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NormalPolynomial NormalPolynomial::operator+(const NormalPolynomial& o) const {
    NormalPolynomial r = *this;
    r += o;
    return r;
}

NormalPolynomial NormalPolynomial::operator-() const {
    NormalPolynomial r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

NormalPolynomial NormalPolynomial::operator-(const NormalPolynomial& o) const {
    return *this + (-o);
}

NormalPolynomial NormalPolynomial::operator*(const NormalPolynomial& o) const {
    NormalPolynomial r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, c1 * c2);
    return r;
}

NormalPolynomial NormalPolynomial::operator*(const BigInt& c) const {
    NormalPolynomial r;
    if (c == 0) return r;
    for (const auto& [m, c0] : terms_) r.terms_[m] = c0 * c;
    return r;
}

NormalPolynomial NormalPolynomial::times_y0() const {
    NormalPolynomial r;
    NormalMonomial y0 = NormalMonomial::y_var(0);
    for (const auto& [m, c] : terms_) r.terms_[m * y0] = c;
    return r;
}

NormalPolynomial NormalPolynomial::times_t() const {
    NormalPolynomial r;
    for (const auto& [m, c] : terms_) {
        NormalMonomial m2 = m;
        ++m2.t;
        r.terms_[m2] = c;
    }
    return r;
}

static void render_monomial(std::ostringstream& os, const NormalMonomial& m, const BigInt& c,
                            bool latex) {
    bool unit_coeff = (c == 1) && !(m.y.empty() && m.t == 0);
    if (!unit_coeff) {
        os << c.str();
        if (!(m.y.empty() && m.t == 0)) os << (latex ? "\\," : "·");
    }
    bool first = true;
    for (const auto& [i, e] : m.y) {
        if (!first) os << ' ';
        first = false;
        if (latex)
            os << "y_{" << i << '}';
        else
            os << 'y' << i;
        if (e != 1) os << '^' << (latex ? "{" : "") << e << (latex ? "}" : "");
    }
    if (m.t > 0) {
        if (!first) os << ' ';
        os << 't';
        if (m.t != 1) os << '^' << (latex ? "{" : "") << m.t << (latex ? "}" : "");
    }
}

std::string NormalPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        render_monomial(os, m, c, false);
    }
    return os.str();
}

std::string NormalPolynomial::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        render_monomial(os, m, c, true);
    }
    return os.str();
}

NormalPolynomial delta(const NormalPolynomial& p) {
    NormalPolynomial r;
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [i, e] : m.y) {
            NormalMonomial d = m;
            if (e == 1)
                d.y.erase(i);
            else
                d.y[i] = e - 1;
            ++d.y[i + 1];
            r.add_term(d, c * e);
        }
    }
    return r;
}

std::optional<std::pair<Partition, unsigned>> canonical_split(const NormalMonomial& m,
                                                              unsigned n) {
    Partition lambda = m.positive_part();
    if (lambda.length() > n) return std::nullopt;
    if (m.exponent(0) != n - lambda.length()) return std::nullopt;
    return std::make_pair(std::move(lambda), m.t);
}

}  // namespace nord
