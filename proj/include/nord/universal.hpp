#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nord/bigint.hpp"
#include "nord/nc_poly.hpp"
#include "nord/normal_poly.hpp"
#include "nord/partition.hpp"

namespace nord {

// U_n, defined by U_0 = 1, U_{n+1} = y_0 (delta(U_n) + U_n t).
NormalPolynomial u_poly(unsigned n);

// U_{n,d}, defined by U_{0,d} = 1, U_{n+1,d} = y_0 (delta + right-t)^d U_{n,d}.
// d = 0 is rejected.
NormalPolynomial u_poly_d(unsigned n, unsigned d);

// Noncommutative analogue V_n with the positionwise letter increment.
NCPolynomial v_poly(unsigned n);

// Coefficient of y_0^{n-len(lambda)} y_lambda t^{n-|lambda|} in U_n, by the
// recurrence over (n, lambda).  Returns 0 when |lambda| >= n or n = 0.
BigInt coeff_recurrence(unsigned n, const Partition& lambda);

// Same coefficient for U_{n,d} as a sum of binomial products over the
// arrangements of lambda's parts into an (n-1)-sequence.
BigInt coeff_binomial(unsigned n, unsigned d, const Partition& lambda);

// Factorial-prefactor form of the arrangement sum (the binomial products
// telescoped into falling factorials); exact rationals inside, integral
// result asserted.  Requires k = nd - |lambda| >= 1.
BigInt coeff_comtet(unsigned n, unsigned d, const Partition& lambda);

// Sum over lower-triangular nonnegative arrays with prescribed nonzero
// column sums; exact rationals inside, integral result asserted.
BigInt coeff_arrays(unsigned n, unsigned d, const Partition& lambda);

enum class CoeffMethod { extraction, recurrence, binomial, comtet, arrays, enumeration };

const char* to_string(CoeffMethod m);
CoeffMethod parse_coeff_method(const std::string& name);

struct EntryOrder {
    bool operator()(const std::pair<Partition, unsigned>& a,
                    const std::pair<Partition, unsigned>& b) const {
        if (a.second != b.second) return a.second > b.second;
        return partition_display_less(a.first, b.first);
    }
};

// The full coefficient family of one U_{n,d}, keyed by (lambda, k) with
// k = nd - |lambda|.
struct CoeffTable {
    unsigned n = 0;
    unsigned d = 1;
    std::map<std::pair<Partition, unsigned>, BigInt, EntryOrder> entries;

    BigInt at(const Partition& lambda) const;
    BigInt coefficient_sum() const;
    bool operator==(const CoeffTable&) const = default;

    // Structural checks: k-range, length bound, positivity, and for d = 1
    // the entry count (number of partitions of size < n).
    void validate() const;

    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
    std::string to_latex() const;
};

// Assemble the table by the chosen method; all methods agree.
// method = recurrence requires d = 1.
CoeffTable coeff_table(unsigned n, unsigned d, CoeffMethod method);

// Read a table off an already-computed polynomial equal to U_{n,d}.
CoeffTable coeff_table_from_poly(const NormalPolynomial& p, unsigned n, unsigned d);

// Candidate index set of a table: all lambda with |lambda| <= (n-1)d and
// at most n-1 parts.
std::vector<Partition> coeff_index_set(unsigned n, unsigned d);

// Visit every distinct arrangement of lambda's parts padded with zeros to
// the given length (multiset permutations; equal parts not double-counted).
void for_each_arrangement(const Partition& lambda, unsigned len,
                          const std::function<void(const std::vector<unsigned>&)>& visit);

}  // namespace nord
