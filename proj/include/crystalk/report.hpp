#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crystalk/census.hpp"

// Headline outputs: invariant ranks of the exterior powers, the K-theory
// ranks s_0 and s_1 of C*_r(Gamma), the cohomology tables of Gamma and of
// the toroidal orbifold quotient, the equivariant Euler characteristic in
// A(G), and the a-priori identity checks tying all of them together.

namespace crystalk {

struct LambdaRanks {
    std::vector<Int> ranks;  // r_l for 0 <= l <= n, character oracle
    Int sum_all = 0;         // sum of r_l
    Int sum_alt = 0;         // alternating sum
    bool m_even = false;
    std::optional<Int> closed_sum_all;  // prime-power closed form when m = p^r

    Int sum_even() const;
    Int sum_odd() const;
    bool odd_ranks_vanish() const;
};

// Character oracle: r_l = (1/m) sum_j e_l(T^j); every rank must come out a
// nonnegative integer (NonIntegralRank otherwise). When m is a prime power
// the closed-form total is evaluated alongside.
LambdaRanks lambda_ranks(const CyclicLattice& lattice);

// s_0 = sum (|M|-1) + sum of even ranks; s_1 = sum of odd ranks.
std::pair<Int, Int> s_values(const SubgroupCensus& census, const LambdaRanks& ranks);

// chi^G(L \ E-bar Gamma) = a [G] + sum maximal_d [G/G_d], a = -sum 1/|M|.
struct EulerClass {
    Rat free_orbit_coefficient = 0;  // a, exact rational
    std::map<long, Int> orbit_terms;  // d -> maximal_d
    long m = 1;

    Rat quot() const;         // orbit count evaluation
    Rat kg() const;           // [G/H] -> |H| evaluation
    Rat cardinality() const;  // mark at the trivial subgroup; 0 by construction
    bool integral() const;
    BurnsideElement as_burnside() const;  // NonIntegralEulerClass when a is not integral
};

EulerClass euler_class(const CyclicLattice& lattice, const SubgroupCensus& census);

struct CheckResult {
    std::string name;
    bool pass;
    std::string lhs, rhs;
};

// The three identities of the a-priori estimates plus the three evaluations
// of the Euler class (cardinality 0, quot = alternating sum, kg = s0 - s1).
std::vector<CheckResult> euler_identities(const CyclicLattice& lattice, const SubgroupCensus& census,
                                          const LambdaRanks& ranks, const EulerClass& euler);

struct GradedGroup {
    long degree = 0;
    Int free_rank = 0;
    std::vector<Int> torsion;  // concatenated per summand, not renormalized
};

// Tate groups of the full group Z/m on every exterior power, plus the free
// rank of the sigma-fixed sublattice read off the same elimination.
struct TateTable {
    long n = 0;
    std::vector<TateGroup> even;     // index l
    std::vector<TateGroup> odd;      // index l
    std::vector<long> fixed_rank;    // rank of ker(Lambda^l T - 1)
};

TateTable tate_table(const CyclicLattice& lattice, long cap = kDefaultExteriorCap);

// H^i(Gamma): Z^{r_i} plus, for even i, the Tate groups H^{i-l}(Z/m, Lambda^l).
std::vector<GradedGroup> gamma_cohomology(const CyclicLattice& lattice, long max_degree,
                                          const TateTable& table, const LambdaRanks& ranks);

// H^i of the toroidal orbifold quotient: Z^{r_i} for even i; for odd i >= 3
// additionally the Tate groups H^l(Z/m, Lambda^l) for i <= l <= n.
std::vector<GradedGroup> orbifold_cohomology(const CyclicLattice& lattice, long max_degree,
                                             const TateTable& table, const LambdaRanks& ranks);

// Canonical invariant-factor chain of a concatenated torsion list.
std::vector<Int> normalize_torsion(const std::vector<Int>& factors);

struct ReportOptions {
    long max_degree = -1;  // default 2n + 2
    long enumeration_threshold = kDefaultEnumerationThreshold;
    long exterior_cap = kDefaultExteriorCap;
};

struct KTheoryReport {
    long m = 1, n = 0, k = 0;
    std::vector<std::pair<long, long>> prime_powers;
    std::vector<long> k_per_prime;
    long max_degree = 0;

    LambdaRanks ranks;
    SubgroupCensus census;
    CrossCheckReport census_checks;
    Int s0 = 0, s1 = 0;
    EulerClass euler;
    std::vector<GradedGroup> gamma;
    std::vector<GradedGroup> orbifold;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> provenance;  // quantity -> route

    bool all_checks_pass() const;
};

KTheoryReport build_report(const CyclicLattice& lattice, const ReportOptions& options = {});

}  // namespace crystalk
