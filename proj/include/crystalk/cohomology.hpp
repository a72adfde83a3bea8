#pragma once

#include <vector>

#include "crystalk/burnside.hpp"
#include "crystalk/lattice.hpp"

// Cohomology of cyclic subgroups C = G_d with lattice coefficients.
// H^1(C; L) = cok(T^{m/d} - I) carries the residual G-action and is the
// engine behind the subgroup census; Tate cohomology of Z/m with exterior
// power coefficients feeds the cohomology tables.

namespace crystalk {

inline constexpr long kDefaultEnumerationThreshold = 1000000;

struct FiniteAbelianGroupWithAction {
    std::vector<Int> invariant_factors;  // ascending divisibility chain, each >= 2
    IntegerMatrix action;                // endomorphism matrix, row i reduced mod factor i
    long order_of_action = 1;            // order of the acting automorphism; divides m

    Int group_order() const;
    bool trivial() const { return invariant_factors.empty(); }
};

// The G-set H^1(G_d; L) for a divisor d > 1: invariant factors of
// cok(T^{m/d} - I) together with the automorphism induced by T.
FiniteAbelianGroupWithAction h1_as_gset(const CyclicLattice& lattice, long d);

// |ker(u^e - 1)| computed from the Smith form of the stacked
// presentation-plus-endomorphism matrix; never by enumeration.
Int fixed_point_count(const FiniteAbelianGroupWithAction& group, unsigned long e);

// Orbits of <u> by Burnside counting; when the group is small enough the
// count is cross-checked against literal enumeration.
Int orbit_count(const FiniteAbelianGroupWithAction& group,
                long enumeration_threshold = kDefaultEnumerationThreshold);

// Enumeration paths, used for the cross-checks and the test oracles. Both
// require group_order() <= threshold-sized iteration from the caller.
Int fixed_point_count_by_enumeration(const FiniteAbelianGroupWithAction& group, unsigned long e);
Int orbit_count_by_enumeration(const FiniteAbelianGroupWithAction& group);

// [H^1(G_d; L)] in A(Z/m): marks under G_e are fixed points of u^{m/e}.
BurnsideElement burnside_class_of_h1(const CyclicLattice& lattice, long d);

enum class Parity { even, odd };

struct TateGroup {
    Parity parity = Parity::even;
    std::vector<Int> invariant_factors;  // ascending, each >= 2; empty = trivial

    bool trivial() const { return invariant_factors.empty(); }
    Int order() const;
};

// Tate cohomology of the order-d subgroup acting on Lambda^l L through
// sigma = Lambda^l(T^{m/d}):
//   H^even = ker(sigma - 1)/im(N),  H^odd = ker(N)/im(sigma - 1),
// with N the norm 1 + sigma + ... + sigma^{d-1}. Only the parity matters
// (2-periodicity).
TateGroup tate(const CyclicLattice& lattice, long d, long l, Parity parity,
               long cap = kDefaultExteriorCap);

// The norm matrix N of the order-d subgroup on Lambda^l L.
IntegerMatrix norm_matrix(const CyclicLattice& lattice, long d, long l,
                          long cap = kDefaultExteriorCap);

}  // namespace crystalk
