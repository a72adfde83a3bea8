#pragma once

#include <utility>
#include <vector>

#include "crystalk/exact_linalg.hpp"

// The input datum of the whole engine: a cyclic group Z/m acting on Z^n by a
// single integer matrix T of exact order m, freely outside the origin. The
// pair (m, T) determines the crystallographic group Z^n \rtimes Z/m; every
// subgroup action is a derived power of T.

namespace crystalk {

struct CyclicLattice {
    long m = 1;
    long n = 0;
    IntegerMatrix action;  // T, n x n
};

struct SylowData {
    std::vector<std::pair<long, long>> prime_powers;  // (p_i, r_i), ascending p_i
    long k = 0;                                       // n = k * phi(m); k = n for m = 1
    std::vector<long> k_per_prime;                    // k[i] = n / ((p_i - 1) p_i^{r_i - 1})
};

// Checks T^m = I, T^j != I for 0 < j < m, and det(T^j - I) != 0 for
// 0 < j < m. Throws WrongOrder / NotFreeOutsideOrigin with the offending
// power.
CyclicLattice validate(long m, IntegerMatrix t);

// Block-diagonal sum of k copies of the companion matrix of the m-th
// cyclotomic polynomial; n = k * phi(m). Always passes validate.
CyclicLattice cyclotomic_lattice(long m, long k);

// Coefficients of Phi_m, ascending by degree.
std::vector<Int> cyclotomic_polynomial(long m);

SylowData sylow_data(const CyclicLattice& lattice);

// T^{m/d}: the action of the canonical generator of the order-d subgroup.
IntegerMatrix subgroup_generator(const CyclicLattice& lattice, long d);

std::vector<long> divisors(long m);  // ascending, includes 1 and m
long euler_phi(long m);
std::vector<std::pair<long, long>> factorize(long m);

}  // namespace crystalk
