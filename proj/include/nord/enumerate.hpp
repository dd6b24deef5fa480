#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "nord/bigint.hpp"
#include "nord/normal_poly.hpp"
#include "nord/partition.hpp"

namespace nord {

// Budgets for the factorial-sized streams.  Exceeding one is an error, not
// a truncation.
struct EnumCaps {
    unsigned factorial_cap = 9;  // 9! = 362880 items
    unsigned shape_cap = 15;

    // Largest item count a factorial stream may produce.
    BigInt item_budget() const { return factorial(factorial_cap); }
};

class CapExceeded : public std::domain_error {
public:
    CapExceeded(const std::string& what, BigInt count)
        : std::domain_error(what + " (would generate " + count.str() + " items)"),
          would_generate(std::move(count)) {}
    BigInt would_generate;
};

// Total map f : [n] -> {0,...,n-1} with f(i) < i;  image[i-1] = f(i).
struct SubdiagonalMap {
    unsigned n = 0;
    std::vector<unsigned> image;

    // Fiber sizes over 0..n; index 0 is the t-exponent slot.
    std::vector<unsigned> fiber_sizes() const;
    Partition type() const;  // nonzero fiber sizes over targets >= 1
};

// Partial map g : [n] x [d] -> [n] with g(i,a) < i.  Cell (i,a) holds 0 when
// undefined, otherwise the value j in {1,...,i-1}.
struct PartialSubdiagonalMap {
    unsigned n = 0, d = 1;
    std::vector<unsigned> cells;  // row-major: cell (i,a) at (i-1)*d + (a-1)

    unsigned domain_size() const;
    Partition type() const;  // nonzero fiber sizes over [n]
};

// Increasing rooted tree on {0,...,n}: parent[j-1] < j for vertex j.
struct IncreasingTree {
    unsigned n = 0;
    std::vector<unsigned> parent;

    std::vector<unsigned> child_counts() const;  // outdegree of 0..n
};

// Unlabeled rooted tree in canonical form: children sorted by
// (size, canonical code).
class RootedTree {
public:
    RootedTree() = default;  // single vertex
    explicit RootedTree(std::vector<RootedTree> children);

    unsigned size() const { return size_; }  // vertex count
    const std::vector<RootedTree>& children() const { return children_; }
    const std::string& code() const { return code_; }

    bool operator==(const RootedTree& o) const { return code_ == o.code_; }
    bool operator<(const RootedTree& o) const;

    // Multiset of outdegrees of non-root vertices, and the root outdegree.
    void collect_outdegrees(std::vector<unsigned>& non_root, unsigned& root) const;

private:
    std::vector<RootedTree> children_;
    unsigned size_ = 1;
    std::string code_ = "()";
};

// Streams, lexicographic in the underlying arrays.  All throw CapExceeded
// when the item count would exceed the budget.
void for_each_sd(unsigned n, const std::function<void(const SubdiagonalMap&)>& visit,
                 const EnumCaps& caps = {});
void for_each_pd(unsigned n, unsigned d,
                 const std::function<void(const PartialSubdiagonalMap&)>& visit,
                 const EnumCaps& caps = {});
void for_each_increasing_tree(unsigned n, const std::function<void(const IncreasingTree&)>& visit,
                              const EnumCaps& caps = {});

// All shapes with n+1 vertices, in canonical order.
std::vector<RootedTree> enumerate_shapes(unsigned n, const EnumCaps& caps = {});

// Number of increasing labelings of the shape, by the branch-multiset
// product formula.
BigInt alpha(const RootedTree& shape);

// Expansions; each equals u_poly / u_poly_d on its range.
NormalPolynomial u_from_subdiagonal(unsigned n, const EnumCaps& caps = {});
NormalPolynomial u_from_trees(unsigned n, const EnumCaps& caps = {});
NormalPolynomial u_from_shapes(unsigned n, const EnumCaps& caps = {});
NormalPolynomial u_d_from_tree_tuples(unsigned n, unsigned d, const EnumCaps& caps = {});

// Census of partial-map types: type -> count, one pass over the stream.
std::map<Partition, BigInt> pd_type_census(unsigned n, unsigned d, const EnumCaps& caps = {});
BigInt count_pd_by_type(unsigned n, unsigned d, const Partition& lambda,
                        const EnumCaps& caps = {});

// Partial bijections [n] x [d] -> [n] x [q] with targets strictly below the
// source row and exactly nd - k mapped pairs.
BigInt count_partial_bijections(unsigned n, unsigned k, unsigned q, unsigned d,
                                const EnumCaps& caps = {});

}  // namespace nord
