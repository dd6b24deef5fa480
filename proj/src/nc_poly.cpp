#include "nord/nc_poly.hpp"

#include <sstream>

namespace nord {

NCWord NCWord::letter(unsigned i) {
    NCWord w;
    w.letters.push_back(i);
    return w;
}

NCWord NCWord::operator*(const NCWord& o) const {
    NCWord r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    r.t += o.t;
    return r;
}

bool NCTermOrder::operator()(const NCWord& a, const NCWord& b) const {
    if (a.t != b.t) return a.t > b.t;
    return a.letters > b.letters;
}

NCPolynomial::NCPolynomial(BigInt constant) {
    if (constant != 0) terms_[NCWord::one()] = std::move(constant);
}

NCPolynomial::NCPolynomial(const NCWord& w, BigInt coeff) {
    if (coeff != 0) terms_[w] = std::move(coeff);
}

BigInt NCPolynomial::coefficient(const NCWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void NCPolynomial::add_term(const NCWord& w, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator+(const NCPolynomial& o) const {
    NCPolynomial r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NCPolynomial NCPolynomial::operator-(const NCPolynomial& o) const { return *this + (-o); }

NCPolynomial NCPolynomial::operator*(const NCPolynomial& o) const {
    NCPolynomial r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) r.add_term(w1 * w2, c1 * c2);
    return r;
}

NCPolynomial NCPolynomial::operator*(const BigInt& c) const {
    NCPolynomial r;
    if (c == 0) return r;
    for (const auto& [w, c0] : terms_) r.terms_[w] = c0 * c;
    return r;
}

NCPolynomial NCPolynomial::times_y0_left() const {
    NCPolynomial r;
    for (const auto& [w, c] : terms_) {
        NCWord w2;
        w2.letters.reserve(w.letters.size() + 1);
        w2.letters.push_back(0);
        w2.letters.insert(w2.letters.end(), w.letters.begin(), w.letters.end());
        w2.t = w.t;
        r.terms_[w2] = c;
    }
    return r;
}

NCPolynomial NCPolynomial::times_t() const {
    NCPolynomial r;
    for (const auto& [w, c] : terms_) {
        NCWord w2 = w;
        ++w2.t;
        r.terms_[w2] = c;
    }
    return r;
}

std::string NCPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool unit = (c == 1) && !(w.letters.empty() && w.t == 0);
        if (!unit) {
            os << c.str();
            if (!(w.letters.empty() && w.t == 0)) os << "·";
        }
        bool inner_first = true;
        for (unsigned l : w.letters) {
            if (!inner_first) os << ' ';
            inner_first = false;
            os << 'y' << l;
        }
        if (w.t > 0) {
            if (!inner_first) os << ' ';
            os << 't';
            if (w.t != 1) os << '^' << w.t;
        }
    }
    return os.str();
}

NCPolynomial delta_nc(const NCPolynomial& p) {
    NCPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        for (size_t pos = 0; pos < w.letters.size(); ++pos) {
            NCWord w2 = w;
            ++w2.letters[pos];
            r.add_term(w2, c);
        }
    }
    return r;
}

NormalPolynomial abelianize(const NCPolynomial& p) {
    NormalPolynomial r;
    for (const auto& [w, c] : p.terms()) {
        NormalMonomial m;
        for (unsigned l : w.letters) ++m.y[l];
        m.t = w.t;
        r.add_term(m, c);
    }
    return r;
}

}  // namespace nord
