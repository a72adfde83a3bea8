#pragma once

#include <map>
#include <string>
#include <vector>

#include "crystalk/cohomology.hpp"

// The maximal-finite-subgroup census: |C(G_d)| conjugacy classes of finite
// subgroups with image G_d, and |M(G_d)| classes of maximal ones, for every
// divisor d > 1. Two independent routes must agree: orbit counting on
// H^1(G_d; L) with inclusion-exclusion, and the closed formulas.

namespace crystalk {

struct DivisorCensus {
    Int classes;  // |C(G_d)|
    Int maximal;  // |M(G_d)|
};

struct SubgroupCensus {
    long m = 1;
    std::map<long, DivisorCensus> per_divisor;  // d > 1, d | m

    Int total_maximal() const;       // |M|
    Int sum_order_minus_one() const; // sum over (M) of |M| - 1
    Rat sum_reciprocal() const;      // sum of 1/|M|
    Rat sum_sq() const;              // sum of (|M|^2 - 1)/|M|
    Rat sum_alt_from_census() const; // sum of (|M| - 1)/|M|
};

SubgroupCensus census_bruteforce(const CyclicLattice& lattice,
                                 long enumeration_threshold = kDefaultEnumerationThreshold);

SubgroupCensus census_closed_form(const CyclicLattice& lattice);

// [H^1(G_d; L)] in A(Z/m) per the printed formulas (prime-power and general
// case); NonIntegralFormula if any printed fraction fails to be an integer.
BurnsideElement h1_class_closed_form(const CyclicLattice& lattice, long d);

struct CrossCheckEntry {
    std::string quantity;
    std::string lhs, rhs;  // brute-force vs closed-form rendering
    bool pass;
};

struct CrossCheckReport {
    long m = 1;
    std::vector<CrossCheckEntry> entries;
    bool all_pass() const;
    std::string summary() const;
};

// Compares both census routes field by field and both [H^1] class routes for
// every divisor. Throws CrossCheckMismatch (message embeds every failing
// quantity with both values) when anything disagrees.
CrossCheckReport cross_check(const CyclicLattice& lattice,
                             long enumeration_threshold = kDefaultEnumerationThreshold);

}  // namespace crystalk
