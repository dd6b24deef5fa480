#include "nord/universal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nord/enumerate.hpp"

namespace nord {

NormalPolynomial u_poly(unsigned n) { return u_poly_d(n, 1); }

NormalPolynomial u_poly_d(unsigned n, unsigned d) {
    if (d == 0) throw std::domain_error("u_poly_d: d must be >= 1");
    NormalPolynomial u = NormalPolynomial::one();
    for (unsigned step = 0; step < n; ++step) {
        for (unsigned r = 0; r < d; ++r) u = delta(u) + u.times_t();
        u = u.times_y0();
    }
    return u;
}

NCPolynomial v_poly(unsigned n) {
    NCPolynomial v = NCPolynomial::one();
    for (unsigned step = 0; step < n; ++step)
        v = (delta_nc(v) + v.times_t()).times_y0_left();
    return v;
}

namespace {

using Memo = std::map<std::pair<unsigned, Partition>, BigInt>;

BigInt coeff_rec(unsigned n, const Partition& lambda, Memo& memo) {
    if (n == 0) return 0;
    if (lambda.size() >= n) return 0;
    if (n == 1) return 1;  // only the empty partition reaches here
    auto key = std::make_pair(n, lambda);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // beta_0 counts the slots below the smallest part: n-1 minus the length.
    BigInt acc = coeff_rec(n - 1, lambda, memo);
    unsigned beta0 = (n - 1) - lambda.length();
    for (unsigned i : lambda.distinct_parts()) {
        unsigned beta_prev = (i == 1) ? beta0 : lambda.multiplicity(i - 1);
        acc += BigInt(beta_prev + 1) * coeff_rec(n - 1, lambda.with_part_decremented(i), memo);
    }
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

BigInt coeff_recurrence(unsigned n, const Partition& lambda) {
    Memo memo;
    return coeff_rec(n, lambda, memo);
}

void for_each_arrangement(const Partition& lambda, unsigned len,
                          const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (lambda.length() > len) return;
    std::vector<unsigned> seq(len, 0);
    std::copy(lambda.parts().begin(), lambda.parts().end(), seq.begin());
    std::sort(seq.begin(), seq.end());
    do {
        visit(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
}

BigInt coeff_binomial(unsigned n, unsigned d, const Partition& lambda) {
    if (n == 0 || d == 0) throw std::domain_error("coeff_binomial: n, d must be >= 1");
    BigInt total = 0;
    for_each_arrangement(lambda, n - 1, [&](const std::vector<unsigned>& seq) {
        BigInt prod = 1;
        long long prefix = 0;
        for (unsigned j = 1; j < n; ++j) {
            unsigned ij = seq[j - 1];
            if (ij > 0) {
                prod *= binomial(static_cast<long long>(j) * d - prefix, ij);
                if (prod == 0) return;
            }
            prefix += ij;
        }
        total += prod;
    });
    return total;
}

// Telescoped form of the binomial-product sum: each binomial chain collapses
// into per-position falling factorials of length d, divided once at the end
// by (k-d)! and the part factorials.  At d = 1 this is Comtet's formula.
BigInt coeff_comtet(unsigned n, unsigned d, const Partition& lambda) {
    if (n == 0 || d == 0) throw std::domain_error("coeff_comtet: n, d must be >= 1");
    long long k = static_cast<long long>(n) * d - static_cast<long long>(lambda.size());
    if (k < 1) throw std::domain_error("coeff_comtet: requires nd - |lambda| >= 1");
    if (lambda.length() > n - 1 || lambda.size() > (n - 1) * d) return 0;

    BigInt sum = 0;
    for_each_arrangement(lambda, n - 1, [&](const std::vector<unsigned>& seq) {
        BigInt prod = 1;
        long long prefix = 0;
        for (unsigned j = 1; j < n; ++j) {
            if (prefix + seq[j - 1] > static_cast<long long>(j) * d) return;
            prod *= falling_factorial(static_cast<long long>(j) * d - prefix, d);
            prefix += seq[j - 1];
        }
        sum += prod;
    });

    BigInt den = factorial(static_cast<unsigned>(k - d));
    for (unsigned p : lambda.parts()) den *= factorial(p);
    return require_integer(BigRat(sum, den), "coeff_comtet");
}

namespace {

// Lower-triangular nonnegative arrays, visited row by row; rows with sum > d
// contribute a zero falling factorial and are skipped at the source.
void visit_arrays(unsigned n, unsigned d, unsigned want_total,
                  const std::function<void(const std::vector<std::vector<unsigned>>&)>& visit) {
    std::vector<std::vector<unsigned>> rows(n >= 2 ? n - 1 : 0);  // rows i=2..n
    unsigned total = 0;

    std::function<void(unsigned)> rec_row = [&](unsigned r) {
        if (r == rows.size()) {
            if (total == want_total) visit(rows);
            return;
        }
        unsigned cells = r + 1;  // row i = r+2 has i-1 cells
        rows[r].assign(cells, 0);
        std::function<void(unsigned, unsigned)> rec_cell = [&](unsigned c, unsigned row_sum) {
            if (c == cells) {
                rec_row(r + 1);
                return;
            }
            unsigned room = std::min(d - row_sum, want_total - total);
            for (unsigned v = 0; v <= room; ++v) {
                rows[r][c] = v;
                total += v;
                rec_cell(c + 1, row_sum + v);
                total -= v;
            }
            rows[r][c] = 0;
        };
        rec_cell(0, 0);
    };
    rec_row(0);
}

}  // namespace

BigInt coeff_arrays(unsigned n, unsigned d, const Partition& lambda) {
    if (n == 0 || d == 0) throw std::domain_error("coeff_arrays: n, d must be >= 1");
    std::vector<unsigned> want = lambda.parts().empty() ? std::vector<unsigned>{}
                                                        : lambda.parts();
    BigRat acc = 0;
    visit_arrays(n, d, lambda.size(), [&](const std::vector<std::vector<unsigned>>& rows) {
        // Nonzero column sums must match lambda as a multiset.
        std::vector<unsigned> col(n, 0);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < rows[r].size(); ++c) col[c] += rows[r][c];
        std::vector<unsigned> nz;
        for (unsigned s : col)
            if (s > 0) nz.push_back(s);
        std::sort(nz.begin(), nz.end(), std::greater<>());
        if (nz != want) return;

        BigInt num = 1;
        BigInt den = 1;
        for (const auto& row : rows) {
            unsigned rsum = 0;
            for (unsigned v : row) {
                rsum += v;
                den *= factorial(v);
            }
            num *= falling_factorial(d, rsum);
        }
        acc += BigRat(num, den);
    });
    return require_integer(acc, "coeff_arrays");
}

const char* to_string(CoeffMethod m) {
    switch (m) {
        case CoeffMethod::extraction: return "extraction";
        case CoeffMethod::recurrence: return "recurrence";
        case CoeffMethod::binomial: return "binomial";
        case CoeffMethod::comtet: return "comtet";
        case CoeffMethod::arrays: return "arrays";
        case CoeffMethod::enumeration: return "enumeration";
    }
    return "?";
}

CoeffMethod parse_coeff_method(const std::string& name) {
    for (CoeffMethod m : {CoeffMethod::extraction, CoeffMethod::recurrence, CoeffMethod::binomial,
                          CoeffMethod::comtet, CoeffMethod::arrays, CoeffMethod::enumeration})
        if (name == to_string(m)) return m;
    throw std::domain_error("unknown coefficient method: " + name);
}

BigInt CoeffTable::at(const Partition& lambda) const {
    unsigned k = n * d - lambda.size();
    auto it = entries.find({lambda, k});
    return it == entries.end() ? BigInt(0) : it->second;
}

BigInt CoeffTable::coefficient_sum() const {
    BigInt s = 0;
    for (const auto& [key, c] : entries) s += c;
    return s;
}

void CoeffTable::validate() const {
    if (n == 0 || d == 0) throw std::logic_error("coeff table: n, d must be >= 1");
    for (const auto& [key, c] : entries) {
        const auto& [lambda, k] = key;
        if (lambda.size() + k != n * d)
            throw std::logic_error("coeff table: |lambda| + k != nd at " + lambda.to_string());
        if (k < d || k > n * d)
            throw std::logic_error("coeff table: k out of range at " + lambda.to_string());
        if (lambda.length() > n - 1)
            throw std::logic_error("coeff table: too many parts at " + lambda.to_string());
        if (c <= 0)
            throw std::logic_error("coeff table: nonpositive entry at " + lambda.to_string());
    }
    if (d == 1) {
        unsigned long long expect = 0;
        for (unsigned m = 0; m < n; ++m) expect += partition_count(m);
        if (entries.size() != expect)
            throw std::logic_error("coeff table: entry count " + std::to_string(entries.size()) +
                                   " != partitions of size < n (" + std::to_string(expect) + ")");
    }
}

std::vector<Partition> coeff_index_set(unsigned n, unsigned d) {
    std::vector<Partition> out;
    if (n == 0) return out;
    for (unsigned m = 0; m <= (n - 1) * d; ++m)
        for (auto& p : partitions_of(m, n - 1)) out.push_back(std::move(p));
    return out;
}

CoeffTable coeff_table_from_poly(const NormalPolynomial& p, unsigned n, unsigned d) {
    CoeffTable t;
    t.n = n;
    t.d = d;
    for (const auto& [m, c] : p.terms()) {
        auto split = canonical_split(m, n);
        if (!split)
            throw std::logic_error("coeff table extraction: inconsistent monomial in U_{" +
                                   std::to_string(n) + "," + std::to_string(d) + "}");
        t.entries[{split->first, split->second}] = c;
    }
    t.validate();
    return t;
}

CoeffTable coeff_table(unsigned n, unsigned d, CoeffMethod method) {
    if (n == 0 || d == 0) throw std::domain_error("coeff_table: n, d must be >= 1");
    if (method == CoeffMethod::recurrence && d != 1)
        throw std::domain_error("coeff_table: recurrence method is defined for d = 1 only");

    if (method == CoeffMethod::extraction)
        return coeff_table_from_poly(u_poly_d(n, d), n, d);

    CoeffTable t;
    t.n = n;
    t.d = d;
    if (method == CoeffMethod::enumeration) {
        for (auto& [lambda, c] : pd_type_census(n, d))
            t.entries[{lambda, n * d - lambda.size()}] = c;
        t.validate();
        return t;
    }

    Memo memo;
    for (const Partition& lambda : coeff_index_set(n, d)) {
        BigInt c;
        switch (method) {
            case CoeffMethod::recurrence: c = coeff_rec(n, lambda, memo); break;
            case CoeffMethod::binomial: c = coeff_binomial(n, d, lambda); break;
            case CoeffMethod::comtet: c = coeff_comtet(n, d, lambda); break;
            case CoeffMethod::arrays: c = coeff_arrays(n, d, lambda); break;
            default: throw std::logic_error("unreachable");
        }
        if (c != 0) t.entries[{lambda, n * d - lambda.size()}] = c;
    }
    t.validate();
    return t;
}

static std::string partition_json(const Partition& p) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < p.parts().size(); ++i) {
        if (i) os << ',';
        os << p.parts()[i];
    }
    os << ']';
    return os.str();
}

std::string CoeffTable::to_json() const {
    std::ostringstream os;
    os << "{\"n\":" << n << ",\"d\":" << d << ",\"entries\":[";
    bool first = true;
    for (const auto& [key, c] : entries) {
        if (!first) os << ',';
        first = false;
        os << "{\"partition\":" << partition_json(key.first) << ",\"k\":" << key.second
           << ",\"coeff\":\"" << c.str() << "\"}";
    }
    os << "]}";
    return os.str();
}

std::string CoeffTable::to_csv() const {
    std::ostringstream os;
    os << "partition,k,coeff\n";
    for (const auto& [key, c] : entries) {
        os << '"';
        for (size_t i = 0; i < key.first.parts().size(); ++i) {
            if (i) os << ',';
            os << key.first.parts()[i];
        }
        os << "\"," << key.second << ',' << c.str() << '\n';
    }
    return os.str();
}

std::string CoeffTable::to_text() const {
    std::ostringstream os;
    os << "coefficients n=" << n << " d=" << d << " (" << entries.size() << " entries)\n";
    for (const auto& [key, c] : entries)
        os << "  " << key.first.to_string() << "  k=" << key.second << "  " << c.str() << '\n';
    return os.str();
}

std::string CoeffTable::to_latex() const {
    std::ostringstream os;
    os << "\\begin{array}{c|*{" << entries.size() << "}{c}}\n\\lambda";
    for (const auto& [key, c] : entries) {
        os << " & (";
        for (size_t i = 0; i < key.first.parts().size(); ++i) {
            if (i) os << ',';
            os << key.first.parts()[i];
        }
        os << ')';
    }
    os << " \\\\\n\\hline\nc^{" << n << ',' << d << "}_{\\lambda}";
    for (const auto& [key, c] : entries) os << " & " << c.str();
    os << "\n\\end{array}\n";
    return os.str();
}

}  // namespace nord
