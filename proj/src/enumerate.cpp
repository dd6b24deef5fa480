#include "nord/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace nord {

namespace {

// Lexicographic odometer over arrays with position-dependent radixes:
// cell c runs over 0..radix(c)-1.
template <class Radix, class Visit>
void odometer(unsigned cells, Radix radix, Visit visit) {
    std::vector<unsigned> v(cells, 0);
    while (true) {
        visit(v);
        unsigned c = cells;
        while (c > 0) {
            --c;
            if (v[c] + 1 < radix(c)) {
                ++v[c];
                std::fill(v.begin() + c + 1, v.end(), 0u);
                break;
            }
            if (c == 0) return;
        }
        if (cells == 0) return;
    }
}

void check_budget(const BigInt& count, const char* what, const EnumCaps& caps) {
    if (count > caps.item_budget()) throw CapExceeded(what, count);
}

}  // namespace

std::vector<unsigned> SubdiagonalMap::fiber_sizes() const {
    std::vector<unsigned> fib(n + 1, 0);
    for (unsigned v : image) ++fib[v];
    return fib;
}

Partition SubdiagonalMap::type() const {
    auto fib = fiber_sizes();
    std::vector<unsigned> parts;
    for (unsigned i = 1; i <= n; ++i)
        if (fib[i] > 0) parts.push_back(fib[i]);
    return Partition(std::move(parts));
}

unsigned PartialSubdiagonalMap::domain_size() const {
    return static_cast<unsigned>(std::count_if(cells.begin(), cells.end(),
                                               [](unsigned v) { return v != 0; }));
}

Partition PartialSubdiagonalMap::type() const {
    std::vector<unsigned> fib(n + 1, 0);
    for (unsigned v : cells)
        if (v != 0) ++fib[v];
    std::vector<unsigned> parts;
    for (unsigned j = 1; j <= n; ++j)
        if (fib[j] > 0) parts.push_back(fib[j]);
    return Partition(std::move(parts));
}

std::vector<unsigned> IncreasingTree::child_counts() const {
    std::vector<unsigned> ch(n + 1, 0);
    for (unsigned p : parent) ++ch[p];
    return ch;
}

void for_each_sd(unsigned n, const std::function<void(const SubdiagonalMap&)>& visit,
                 const EnumCaps& caps) {
    check_budget(factorial(n), "subdiagonal map stream", caps);
    SubdiagonalMap f;
    f.n = n;
    odometer(n, [](unsigned c) { return c + 1; }, [&](const std::vector<unsigned>& v) {
        f.image = v;
        visit(f);
    });
}

void for_each_increasing_tree(unsigned n, const std::function<void(const IncreasingTree&)>& visit,
                              const EnumCaps& caps) {
    check_budget(factorial(n), "increasing tree stream", caps);
    IncreasingTree t;
    t.n = n;
    odometer(n, [](unsigned c) { return c + 1; }, [&](const std::vector<unsigned>& v) {
        t.parent = v;
        visit(t);
    });
}

void for_each_pd(unsigned n, unsigned d,
                 const std::function<void(const PartialSubdiagonalMap&)>& visit,
                 const EnumCaps& caps) {
    if (d == 0) throw std::domain_error("for_each_pd: d must be >= 1");
    check_budget(pow_big(factorial(n), d), "partial map stream", caps);
    PartialSubdiagonalMap g;
    g.n = n;
    g.d = d;
    // Cell (i,a) ranges over 0 (undefined) and 1..i-1.
    odometer(n * d, [d](unsigned c) { return c / d + 1; }, [&](const std::vector<unsigned>& v) {
        g.cells = v;
        visit(g);
    });
}

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end());
    size_ = 1;
    code_.clear();
    code_ += '(';
    for (const auto& c : children_) {
        size_ += c.size_;
        code_ += c.code_;
    }
    code_ += ')';
}

bool RootedTree::operator<(const RootedTree& o) const {
    if (size_ != o.size_) return size_ < o.size_;
    return code_ < o.code_;
}

void RootedTree::collect_outdegrees(std::vector<unsigned>& non_root, unsigned& root) const {
    root = static_cast<unsigned>(children_.size());
    std::function<void(const RootedTree&)> rec = [&](const RootedTree& t) {
        non_root.push_back(static_cast<unsigned>(t.children().size()));
        for (const auto& c : t.children()) rec(c);
    };
    for (const auto& c : children_) rec(c);
}

// Number of rooted trees on m unlabeled vertices, by the divisor-sum
// recurrence; used only to report refusal sizes.
static BigInt rooted_tree_count(unsigned m) {
    std::vector<BigInt> r(m + 1, 0);
    if (m >= 1) r[1] = 1;
    for (unsigned v = 1; v < m; ++v) {
        BigInt acc = 0;
        for (unsigned k = 1; k <= v; ++k) {
            BigInt dsum = 0;
            for (unsigned dd = 1; dd <= k; ++dd)
                if (k % dd == 0) dsum += BigInt(dd) * r[dd];
            acc += dsum * r[v + 1 - k];
        }
        r[v + 1] = require_integer(BigRat(acc, v), "rooted_tree_count");
    }
    return m == 0 ? BigInt(1) : r[m];
}

std::vector<RootedTree> enumerate_shapes(unsigned n, const EnumCaps& caps) {
    if (n > caps.shape_cap) throw CapExceeded("shape stream", rooted_tree_count(n + 1));
    // pool[m] = all shapes with m+1 vertices, canonical order
    std::vector<std::vector<RootedTree>> pool(n + 1);
    pool[0] = {RootedTree{}};
    for (unsigned m = 1; m <= n; ++m) {
        // choose a multiset of smaller shapes with sizes summing to m,
        // non-decreasing in the global (size, code) order
        std::vector<RootedTree> flat;
        for (unsigned s = 0; s < m; ++s)
            flat.insert(flat.end(), pool[s].begin(), pool[s].end());
        std::vector<RootedTree> chosen;
        std::vector<RootedTree>& out = pool[m];
        std::function<void(unsigned, size_t)> rec = [&](unsigned left, size_t start) {
            if (left == 0) {
                out.emplace_back(chosen);
                return;
            }
            for (size_t idx = start; idx < flat.size(); ++idx) {
                if (flat[idx].size() > left) break;  // flat is sorted by size
                chosen.push_back(flat[idx]);
                rec(left - flat[idx].size(), idx);
                chosen.pop_back();
            }
        };
        rec(m, 0);
        std::sort(out.begin(), out.end());
    }
    return pool[n];
}

BigInt alpha(const RootedTree& shape) {
    static std::map<std::string, BigInt> memo;  // keyed by canonical code
    static std::mutex memo_mutex;
    if (shape.size() == 1) return 1;
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(shape.code());
        if (it != memo.end()) return it->second;
    }

    unsigned n = shape.size() - 1;
    BigInt num = factorial(n);
    BigInt den = 1;
    BigInt prod = 1;
    // group equal branches
    const auto& ch = shape.children();
    for (size_t i = 0; i < ch.size();) {
        size_t j = i;
        while (j < ch.size() && ch[j] == ch[i]) ++j;
        unsigned mult = static_cast<unsigned>(j - i);
        den *= factorial(mult) * pow_big(factorial(ch[i].size()), mult);
        prod *= pow_big(alpha(ch[i]), mult);
        i = j;
    }
    BigInt result = require_integer(BigRat(num * prod, den), "alpha");
    std::lock_guard lock(memo_mutex);
    memo.emplace(shape.code(), result);
    return result;
}

NormalPolynomial u_from_subdiagonal(unsigned n, const EnumCaps& caps) {
    NormalPolynomial u;
    for_each_sd(n, [&](const SubdiagonalMap& f) {
        auto fib = f.fiber_sizes();
        NormalMonomial m;
        for (unsigned i = 1; i <= n; ++i) ++m.y[fib[i]];
        m.t = fib[0];
        u.add_term(m, 1);
    }, caps);
    return u;
}

NormalPolynomial u_from_trees(unsigned n, const EnumCaps& caps) {
    NormalPolynomial u;
    for_each_increasing_tree(n, [&](const IncreasingTree& t) {
        auto ch = t.child_counts();
        NormalMonomial m;
        for (unsigned i = 1; i <= n; ++i) ++m.y[ch[i]];
        m.t = ch[0];
        u.add_term(m, 1);
    }, caps);
    return u;
}

NormalPolynomial u_from_shapes(unsigned n, const EnumCaps& caps) {
    NormalPolynomial u;
    for (const RootedTree& shape : enumerate_shapes(n, caps)) {
        std::vector<unsigned> degs;
        unsigned root_deg = 0;
        shape.collect_outdegrees(degs, root_deg);
        NormalMonomial m;
        for (unsigned deg : degs) ++m.y[deg];
        m.t = root_deg;
        u.add_term(m, alpha(shape));
    }
    return u;
}

NormalPolynomial u_d_from_tree_tuples(unsigned n, unsigned d, const EnumCaps& caps) {
    if (d == 0) throw std::domain_error("u_d_from_tree_tuples: d must be >= 1");
    check_budget(pow_big(factorial(n), d), "tree tuple stream", caps);

    std::vector<std::vector<unsigned>> trees;  // all parent arrays
    for_each_increasing_tree(n, [&](const IncreasingTree& t) { trees.push_back(t.parent); },
                             caps);

    NormalPolynomial u;
    odometer(d, [&](unsigned) { return static_cast<unsigned>(trees.size()); },
             [&](const std::vector<unsigned>& pick) {
                 std::vector<unsigned> ch(n + 1, 0);
                 for (unsigned a = 0; a < d; ++a)
                     for (unsigned p : trees[pick[a]]) ++ch[p];
                 NormalMonomial m;
                 for (unsigned i = 1; i <= n; ++i) ++m.y[ch[i]];
                 m.t = ch[0];
                 u.add_term(m, 1);
             });
    return u;
}

std::map<Partition, BigInt> pd_type_census(unsigned n, unsigned d, const EnumCaps& caps) {
    std::map<Partition, BigInt> census;
    for_each_pd(n, d, [&](const PartialSubdiagonalMap& g) { ++census[g.type()]; }, caps);
    return census;
}

BigInt count_pd_by_type(unsigned n, unsigned d, const Partition& lambda, const EnumCaps& caps) {
    auto census = pd_type_census(n, d, caps);
    auto it = census.find(lambda);
    return it == census.end() ? BigInt(0) : it->second;
}

BigInt count_partial_bijections(unsigned n, unsigned k, unsigned q, unsigned d,
                                const EnumCaps& caps) {
    if (d == 0 || q == 0) throw std::domain_error("count_partial_bijections: q, d must be >= 1");
    // Work bound: each source cell (i,a) has 1 + (i-1)q choices.
    BigInt bound = 1;
    for (unsigned i = 1; i <= n; ++i) bound *= pow_big(BigInt(1 + (i - 1) * q), d);
    check_budget(bound, "partial bijection enumeration", caps);

    if (k > n * d) return 0;
    unsigned want = n * d - k;
    std::vector<bool> used(n * q, false);  // target (j,b) at (j-1)*q + (b-1)
    BigInt count = 0;

    // cells in row-major order: cell index c -> source (i,a) with i = c/d + 1
    std::function<void(unsigned, unsigned)> rec = [&](unsigned c, unsigned placed) {
        if (placed + (n * d - c) < want) return;  // cannot reach the target size
        if (c == n * d) {
            if (placed == want) ++count;
            return;
        }
        unsigned i = c / d + 1;
        rec(c + 1, placed);  // cell undefined
        if (placed < want) {
            for (unsigned j = 1; j < i; ++j)
                for (unsigned b = 1; b <= q; ++b) {
                    unsigned tgt = (j - 1) * q + (b - 1);
                    if (used[tgt]) continue;
                    used[tgt] = true;
                    rec(c + 1, placed + 1);
                    used[tgt] = false;
                }
        }
    };
    rec(0, 0);
    return count;
}

}  // namespace nord
