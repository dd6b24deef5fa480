#include "nord/specialize.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace nord {

BigInt stirling_first(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) return 0;
    BigInt s = 0;
    for (const Partition& lambda : partitions_of(n - k)) s += coeff_recurrence(n, lambda);
    return s;
}

BigInt stirling_second(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) return 0;
    std::vector<unsigned> ones(n - k, 1);
    return coeff_recurrence(n, Partition(std::move(ones)));
}

BigInt bell(unsigned n) {
    BigInt s = 0;
    for (unsigned k = 1; k <= n; ++k) s += stirling_second(n, k);
    return s;
}

BigInt stirling_second_positional(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) return 0;
    unsigned r = n - k;  // choose a_1 < ... < a_r from 1..n-1
    BigInt total = 0;
    std::vector<unsigned> a(r);
    std::function<void(unsigned, unsigned, BigInt)> rec = [&](unsigned s, unsigned lo,
                                                              BigInt prod) {
        if (s == r) {
            total += prod;
            return;
        }
        for (unsigned v = lo; v <= n - 1; ++v) {
            a[s] = v;
            rec(s + 1, v + 1, prod * (v - s));
        }
    };
    rec(0, 1, 1);
    return total;
}

std::vector<BigInt> eulerian_row(unsigned n) {
    if (n == 0) throw std::domain_error("eulerian_row: n must be >= 1");
    std::vector<BigInt> row(n, 0);  // row[k-1] = A(n,k), lengths k-1 = 0..n-1
    for (unsigned m = 0; m <= n - 1; ++m)
        for (const Partition& lambda : partitions_of(m)) {
            if (lambda.length() > n - 1) continue;
            BigInt c = coeff_recurrence(n, lambda);
            if (c != 0) row[lambda.length()] += c;
        }
    for (unsigned k = 1; k <= n; ++k)
        if (row[k - 1] != row[n - k])
            throw std::logic_error("eulerian row " + std::to_string(n) + " is not palindromic");
    return row;
}

BigInt eulerian(unsigned n, unsigned k) {
    if (n == 0 || k == 0 || k > n) return 0;
    return eulerian_row(n)[k - 1];
}

BigInt gen_stirling_falling_sum(unsigned n, unsigned k, unsigned q, unsigned d) {
    if (n == 0 || d == 0) throw std::domain_error("gen_stirling: n, d must be >= 1");
    if (q < d) throw std::domain_error("gen_stirling_falling_sum: requires q >= d");
    if (k > n * d) return 0;
    unsigned m = n * d - k;
    BigInt s = 0;
    for (const Partition& lambda : partitions_of(m, n - 1)) {
        BigInt prod = 1;
        for (unsigned part : lambda.parts()) prod *= falling_factorial(q, part);
        if (prod != 0) s += coeff_binomial(n, d, lambda) * prod;
    }
    return s;
}

BigInt gen_stirling_array(unsigned n, unsigned k, unsigned q, unsigned d) {
    if (n == 0 || d == 0 || q == 0)
        throw std::domain_error("gen_stirling_array: n, q, d must be >= 1");
    if (k > n * d) return 0;
    unsigned want_total = n * d - k;

    // Sum over lower-triangular arrays with total want_total; rows weighted
    // by (d) falling factorials, columns by (q) falling factorials.
    BigRat acc = 0;
    std::vector<unsigned> col(n, 0);
    std::vector<unsigned> row_sums(n + 1, 0);
    BigInt inv_den = 1;

    std::function<void(unsigned, unsigned, unsigned, unsigned, BigInt)> rec =
        [&](unsigned i, unsigned j, unsigned total, unsigned row_sum, BigInt den) {
            if (i > n) {
                if (total != want_total) return;
                BigInt num = 1;
                for (unsigned r = 2; r <= n; ++r) num *= falling_factorial(d, row_sums[r]);
                for (unsigned c = 0; c + 1 < n; ++c) num *= falling_factorial(q, col[c]);
                if (num != 0) acc += BigRat(num, den);
                return;
            }
            if (j == i) {  // row i complete
                row_sums[i] = row_sum;
                rec(i + 1, 1, total, 0, den);
                return;
            }
            unsigned room = std::min(d - row_sum, want_total - total);
            for (unsigned v = 0; v <= room; ++v) {
                col[j - 1] += v;
                rec(i, j + 1, total + v, row_sum + v, den * factorial(v));
                col[j - 1] -= v;
            }
        };
    rec(2, 1, 0, 0, inv_den);
    return require_integer(acc, "gen_stirling_array");
}

BigInt gen_stirling(unsigned n, unsigned k, unsigned q, unsigned d) {
    if (n == 0 || d == 0) throw std::domain_error("gen_stirling: n, d must be >= 1");
    if (q == 0) return k == n * d ? 1 : 0;  // powers of D alone
    if (q >= d) return gen_stirling_falling_sum(n, k, q, d);
    return gen_stirling_array(n, k, q, d);
}

std::vector<BigInt> ode_coefficients(const std::vector<BigInt>& y, unsigned N) {
    if (N == 0) throw std::domain_error("ode_coefficients: N must be >= 1");
    if (y.size() < N)
        throw std::domain_error("ode_coefficients: need at least N initial y values");
    std::vector<BigInt> x;
    x.reserve(N);
    for (unsigned n = 1; n <= N; ++n) {
        // x_n is u_{n-1} with every t^k replaced by y_k (k = 0 included).
        BigInt xn = u_poly(n - 1).substitute<BigInt>([&](unsigned i) { return y.at(i); },
                                                     [&](unsigned k) { return y.at(k); });
        x.push_back(std::move(xn));
    }
    return x;
}

NormalPolynomial faa_di_bruno(unsigned n) {
    NormalPolynomial f = NormalPolynomial::one();
    NormalMonomial y1t = NormalMonomial::y_var(1) * NormalMonomial::t_pow(1);
    for (unsigned step = 0; step < n; ++step)
        f = delta(f) + f * NormalPolynomial(y1t);
    return f;
}

std::string ModpReport::to_text() const {
    std::ostringstream os;
    if (d == 1)
        os << "mod-" << p << " check, n=" << n << ": ";
    else
        os << "mod-" << p << " check, n=" << n << " d=" << d << ": ";
    if (ok()) {
        os << "ok (no violations)\n";
        return os.str();
    }
    os << violations.size() << " violation(s)\n";
    for (const auto& v : violations)
        os << "  " << v.lambda.to_string() << " -> " << v.value.str() << "  [" << v.detail
           << "]\n";
    return os.str();
}

ModpReport verify_modp(unsigned p, unsigned m) {
    if (!is_prime(p)) throw std::domain_error("verify_modp: p must be prime");
    if (m == 0) throw std::domain_error("verify_modp: m must be >= 1");
    unsigned n = 1;
    for (unsigned i = 0; i < m; ++i) n *= p;

    ModpReport report;
    report.p = p;
    report.n = n;
    for (unsigned size = 0; size <= n - 1; ++size) {
        if (size == n - 1 || size % p == 0) continue;  // excluded from the claim
        for (const Partition& lambda : partitions_of(size)) {
            BigInt c = coeff_recurrence(n, lambda);
            if (c % p != 0)
                report.violations.push_back(
                    {lambda, c, "expected 0 mod " + std::to_string(p)});
        }
    }
    return report;
}

ModpReport verify_modp_d(unsigned p, unsigned e, unsigned n) {
    if (!is_prime(p)) throw std::domain_error("verify_modp_d: p must be prime");
    if (n == 0) throw std::domain_error("verify_modp_d: n must be >= 1");
    unsigned d = 1;
    for (unsigned i = 0; i < e; ++i) d *= p;

    ModpReport report;
    report.p = p;
    report.n = n;
    report.d = d;
    CoeffTable table = coeff_table(n, d, CoeffMethod::binomial);
    for (const auto& [key, c] : table.entries) {
        const Partition& mu = key.first;
        if (mu.all_parts_divisible_by(d)) {
            BigInt base = coeff_recurrence(n, mu.unscaled(d));
            if ((c - base) % p != 0)
                report.violations.push_back(
                    {mu, c,
                     "expected congruent to " + base.str() + " mod " + std::to_string(p)});
        } else if (c % p != 0) {
            report.violations.push_back({mu, c, "expected 0 mod " + std::to_string(p)});
        }
    }
    return report;
}

const char* to_string(TriangleKind k) {
    switch (k) {
        case TriangleKind::stirling1: return "stirling1";
        case TriangleKind::stirling2: return "stirling2";
        case TriangleKind::eulerian: return "eulerian";
        case TriangleKind::bell: return "bell";
        case TriangleKind::gen_stirling: return "genstirling";
    }
    return "?";
}

TriangleKind parse_triangle_kind(const std::string& name) {
    for (TriangleKind k : {TriangleKind::stirling1, TriangleKind::stirling2,
                           TriangleKind::eulerian, TriangleKind::bell,
                           TriangleKind::gen_stirling})
        if (name == to_string(k)) return k;
    throw std::domain_error("unknown triangle: " + name);
}

const char* triangle_oeis(TriangleKind k) {
    switch (k) {
        case TriangleKind::stirling1: return "A132393";
        case TriangleKind::stirling2: return "A008277";
        case TriangleKind::eulerian: return "A008292";
        case TriangleKind::bell: return "A000110";
        case TriangleKind::gen_stirling: return "";
    }
    return "";
}

BigInt IntegerTriangle::at(unsigned n, unsigned k) const {
    auto it = entries.find({n, k});
    return it == entries.end() ? BigInt(0) : it->second;
}

IntegerTriangle build_triangle(TriangleKind kind, unsigned max_n, unsigned q, unsigned d) {
    IntegerTriangle t;
    t.kind = kind;
    t.q = q;
    t.d = d;
    for (unsigned n = 1; n <= max_n; ++n) {
        switch (kind) {
            case TriangleKind::stirling1:
                for (unsigned k = 1; k <= n; ++k) t.entries[{n, k}] = stirling_first(n, k);
                break;
            case TriangleKind::stirling2:
                for (unsigned k = 1; k <= n; ++k) t.entries[{n, k}] = stirling_second(n, k);
                break;
            case TriangleKind::eulerian: {
                auto row = eulerian_row(n);
                for (unsigned k = 1; k <= n; ++k) t.entries[{n, k}] = row[k - 1];
                break;
            }
            case TriangleKind::bell:
                t.entries[{n, 1}] = bell(n);
                break;
            case TriangleKind::gen_stirling:
                for (unsigned k = 0; k <= n * d; ++k) {
                    BigInt v = gen_stirling(n, k, q, d);
                    if (v != 0) t.entries[{n, k}] = v;
                }
                break;
        }
    }
    return t;
}

std::string IntegerTriangle::to_json() const {
    std::ostringstream os;
    os << "{\"name\":\"" << to_string(kind) << '"';
    if (kind == TriangleKind::gen_stirling) os << ",\"q\":" << q << ",\"d\":" << d;
    os << ",\"entries\":[";
    bool first = true;
    for (const auto& [nk, v] : entries) {
        if (!first) os << ',';
        first = false;
        os << "{\"n\":" << nk.first << ",\"k\":" << nk.second << ",\"coeff\":\"" << v.str()
           << "\"}";
    }
    os << "]}";
    return os.str();
}

std::string IntegerTriangle::to_csv() const {
    std::ostringstream os;
    os << "n,k,coeff\n";
    for (const auto& [nk, v] : entries)
        os << nk.first << ',' << nk.second << ',' << v.str() << '\n';
    return os.str();
}

std::string IntegerTriangle::to_text() const {
    std::ostringstream os;
    os << "triangle " << to_string(kind);
    if (kind == TriangleKind::gen_stirling) os << " q=" << q << " d=" << d;
    if (*triangle_oeis(kind)) os << " (OEIS " << triangle_oeis(kind) << ')';
    os << '\n';
    unsigned cur = 0;
    for (const auto& [nk, v] : entries) {
        if (nk.first != cur) {
            if (cur) os << '\n';
            cur = nk.first;
            os << "n=" << cur << ':';
        }
        os << ' ' << v.str();
    }
    os << '\n';
    return os.str();
}

std::string IntegerTriangle::to_latex() const {
    std::ostringstream os;
    unsigned max_n = entries.empty() ? 0 : entries.rbegin()->first.first;
    unsigned max_k = 0;
    for (const auto& [nk, v] : entries) max_k = std::max(max_k, nk.second);
    os << "\\begin{array}{c|*{" << max_k + 1 << "}{c}}\n n\\backslash k";
    for (unsigned k = 0; k <= max_k; ++k) os << " & " << k;
    os << " \\\\\n\\hline\n";
    for (unsigned n = 1; n <= max_n; ++n) {
        os << ' ' << n;
        for (unsigned k = 0; k <= max_k; ++k) {
            os << " & ";
            auto it = entries.find({n, k});
            if (it != entries.end()) os << it->second.str();
        }
        os << " \\\\\n";
    }
    os << "\\end{array}\n";
    return os.str();
}

}  // namespace nord
