#pragma once

#include <map>
#include <string>
#include <vector>

#include "nord/bigint.hpp"
#include "nord/normal_poly.hpp"
#include "nord/partition.hpp"
#include "nord/universal.hpp"

namespace nord {

// Signless Stirling numbers of the first kind, as coefficient sums over
// partitions of n-k.  Out of range gives 0.
BigInt stirling_first(unsigned n, unsigned k);

// Stirling numbers of the second kind as the one-column coefficients, and
// the Bell numbers as their row sums.
BigInt stirling_second(unsigned n, unsigned k);
BigInt bell(unsigned n);

// Positional product formula over increasing index tuples.
BigInt stirling_second_positional(unsigned n, unsigned k);

// Eulerian numbers as length-restricted coefficient sums; every computed
// row is checked to be palindromic.
BigInt eulerian(unsigned n, unsigned k);
std::vector<BigInt> eulerian_row(unsigned n);  // A(n,1) .. A(n,n)

// Generalized Stirling numbers: coefficients in the normally ordered
// (x^q D^d)^n.  Dispatches to the falling-factorial sum for q >= d and to
// the symmetric array sum otherwise.  q >= 0, d >= 1; out-of-range k -> 0.
BigInt gen_stirling(unsigned n, unsigned k, unsigned q, unsigned d);
BigInt gen_stirling_falling_sum(unsigned n, unsigned k, unsigned q, unsigned d);  // q >= d
BigInt gen_stirling_array(unsigned n, unsigned k, unsigned q, unsigned d);

// Exponential-series coefficients x_1..x_N of the solution of
// x'(u) = y(x(u)) with x(0) = 0, for the given y_0..y_{N-1} (at least).
std::vector<BigInt> ode_coefficients(const std::vector<BigInt>& y, unsigned N);

// Derivative polynomials of a composition: F_0 = 1,
// F_{n+1} = delta(F_n) + y_1 F_n t.
NormalPolynomial faa_di_bruno(unsigned n);

struct ModpViolation {
    Partition lambda;
    BigInt value;
    std::string detail;
};

struct ModpReport {
    unsigned p = 0;
    unsigned n = 0;
    unsigned d = 1;
    std::vector<ModpViolation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_text() const;
};

// Vanishing of the order-p^m coefficients modulo p away from the allowed
// sizes.  p must be prime.
ModpReport verify_modp(unsigned p, unsigned m);

// Congruences of the (n, p^e) table modulo p: entries at d-scaled indices
// drop to the order-n coefficients, all others vanish.
ModpReport verify_modp_d(unsigned p, unsigned e, unsigned n);

enum class TriangleKind { stirling1, stirling2, eulerian, bell, gen_stirling };

const char* to_string(TriangleKind k);
TriangleKind parse_triangle_kind(const std::string& name);
const char* triangle_oeis(TriangleKind k);  // annotation only

struct IntegerTriangle {
    TriangleKind kind = TriangleKind::stirling2;
    unsigned q = 1, d = 1;  // used by gen_stirling only
    std::map<std::pair<unsigned, unsigned>, BigInt> entries;  // (n,k) -> value

    BigInt at(unsigned n, unsigned k) const;
    std::string to_json() const;
    std::string to_csv() const;
    std::string to_text() const;
    std::string to_latex() const;
};

IntegerTriangle build_triangle(TriangleKind kind, unsigned max_n, unsigned q = 1, unsigned d = 1);

}  // namespace nord
