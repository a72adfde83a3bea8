#include "crystalk/report.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace crystalk {

Int LambdaRanks::sum_even() const {
    Int total = 0;
    for (size_t l = 0; l < ranks.size(); l += 2) total += ranks[l];
    return total;
}

Int LambdaRanks::sum_odd() const {
    Int total = 0;
    for (size_t l = 1; l < ranks.size(); l += 2) total += ranks[l];
    return total;
}

bool LambdaRanks::odd_ranks_vanish() const {
    return sum_odd() == 0;
}

namespace {

Int pow2(long e) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

Int ppow(long p, long e) {
    if (e < 0) throw NonIntegralFormula("rank closed form produced a negative exponent");
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return out;
}

// Lemma-level closed form for the total invariant rank when m = p^r.
Int closed_sum_all_prime_power(long p, long r, long k, long n) {
    if (p != 2) {
        Int num = pow2(n) - 1;
        Int q, rem;
        Int pr = ppow(p, r);
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), pr.get_mpz_t());
        if (rem != 0) throw NonIntegralFormula("(2^n - 1)/p^r is not an integer");
        return 1 + q;
    }
    if (r == 1) return pow2(k - 1);
    if (r == 2) return pow2(2 * k - 2) + pow2(k - 1);
    Int total = pow2(k - 1) + pow2(k * (1L << (r - 2)) - r + 1) + pow2(k * (1L << (r - 1)) - r);
    for (long i = 3; i <= r - 1; ++i) total += pow2(k * (1L << (r - i)) - r + i - 1);
    return total;
}

}  // namespace

LambdaRanks lambda_ranks(const CyclicLattice& lattice) {
    long m = lattice.m, n = lattice.n;
    LambdaRanks out;
    out.m_even = (m % 2 == 0);
    out.ranks.assign(n + 1, 0);

    // character sums: e_l(T^j) is (-1)^l times the coefficient of x^{n-l} in
    // det(xI - T^j)
    std::vector<Int> rank_sums(n + 1, 0);
    Int det_plus_sum = 0, det_minus_sum = 0;
    IntegerMatrix power = IntegerMatrix::identity(n);
    IntegerMatrix id = IntegerMatrix::identity(n);
    for (long j = 0; j < m; ++j) {
        if (j > 0) power = power * lattice.action;
        std::vector<Int> chi = characteristic_polynomial(power);
        for (long l = 0; l <= n; ++l) {
            Int e = chi[n - l];
            if (l % 2 == 1) e = -e;
            rank_sums[l] += e;
        }
        det_plus_sum += determinant(id + power);
        det_minus_sum += determinant(id - power);
    }
    Int all = 0, alt = 0;
    for (long l = 0; l <= n; ++l) {
        Int q, rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rank_sums[l].get_mpz_t(), Int(m).get_mpz_t());
        if (rem != 0 || q < 0)
            throw NonIntegralRank("lambda_ranks: character sum for l = " + std::to_string(l) +
                                  " is not a nonnegative multiple of m");
        out.ranks[l] = q;
        all += q;
        alt += (l % 2 == 0) ? q : -q;
    }
    out.sum_all = all;
    out.sum_alt = alt;
    if (all * m != det_plus_sum || alt * m != det_minus_sum)
        throw NonIntegralRank("lambda_ranks: determinant route disagrees with character route");

    auto factors = factorize(m);
    if (factors.size() == 1) {
        SylowData sylow = sylow_data(lattice);
        out.closed_sum_all =
            closed_sum_all_prime_power(factors[0].first, factors[0].second, sylow.k, n);
    }
    return out;
}

std::pair<Int, Int> s_values(const SubgroupCensus& census, const LambdaRanks& ranks) {
    return {census.sum_order_minus_one() + ranks.sum_even(), ranks.sum_odd()};
}

Rat EulerClass::quot() const {
    Rat total = free_orbit_coefficient;
    for (const auto& [d, c] : orbit_terms) total += Rat(c);
    total.canonicalize();
    return total;
}

Rat EulerClass::kg() const {
    Rat total = free_orbit_coefficient;  // [G] = [G/G_1] contributes |G_1| = 1
    for (const auto& [d, c] : orbit_terms) total += Rat(c * d);
    total.canonicalize();
    return total;
}

Rat EulerClass::cardinality() const {
    Rat total = free_orbit_coefficient * m;
    for (const auto& [d, c] : orbit_terms) total += Rat(c * (m / d));
    total.canonicalize();
    return total;
}

bool EulerClass::integral() const {
    return free_orbit_coefficient.get_den() == 1;
}

BurnsideElement EulerClass::as_burnside() const {
    if (!integral())
        throw NonIntegralEulerClass("euler class: coefficient of [G] is " +
                                    free_orbit_coefficient.get_str() + ", not an integer");
    BurnsideElement x(m);
    if (free_orbit_coefficient != 0) x.set_coefficient(1, free_orbit_coefficient.get_num());
    for (const auto& [d, c] : orbit_terms) x.add_to_coefficient(d, c);
    return x;
}

EulerClass euler_class(const CyclicLattice& lattice, const SubgroupCensus& census) {
    EulerClass out;
    out.m = lattice.m;
    out.free_orbit_coefficient = -census.sum_reciprocal();
    out.free_orbit_coefficient.canonicalize();
    for (const auto& [d, entry] : census.per_divisor)
        if (entry.maximal != 0) out.orbit_terms[d] = entry.maximal;
    if (!out.integral())
        throw NonIntegralEulerClass("euler class: -sum 1/|M| = " + out.free_orbit_coefficient.get_str() +
                                    " is not an integer");
    return out;
}

namespace {

std::string rat_str(const Rat& q) {
    return q.get_str();
}

}  // namespace

std::vector<CheckResult> euler_identities(const CyclicLattice& lattice, const SubgroupCensus& census,
                                          const LambdaRanks& ranks, const EulerClass& euler) {
    std::vector<CheckResult> results;
    long m = lattice.m, n = lattice.n;

    // (1) perm(chi^G) = sum (-1)^l [Lambda^l L (x) Q], compared dimension-wise
    // on every subgroup's fixed space
    std::vector<Int> det_minus(m);
    IntegerMatrix power = IntegerMatrix::identity(n);
    IntegerMatrix id = IntegerMatrix::identity(n);
    for (long j = 0; j < m; ++j) {
        if (j > 0) power = power * lattice.action;
        det_minus[j] = determinant(id - power);
    }
    bool perm_ok = true;
    std::ostringstream lhs1, rhs1;
    for (long d : divisors(m)) {
        Rat lhs = euler.free_orbit_coefficient * Rat(m / d);  // orbits of G_d on the free class [G]
        for (const auto& [e, c] : euler.orbit_terms) {
            long g = std::gcd(e, d);
            lhs += Rat(c * ((m / e) * g / d));
        }
        lhs.canonicalize();
        Rat rhs = 0;
        for (long i = 0; i < d; ++i) rhs += Rat(det_minus[(i * (m / d)) % m]);
        rhs /= d;
        rhs.canonicalize();
        if (lhs != rhs) perm_ok = false;
        lhs1 << (d > 1 ? " " : "") << "d=" << d << ":" << rat_str(lhs);
        rhs1 << (d > 1 ? " " : "") << "d=" << d << ":" << rat_str(rhs);
    }
    results.push_back({"euler_identity_rq_marks", perm_ok, lhs1.str(), rhs1.str()});

    // (2) sum (|M|-1)/|M| = alternating rank sum
    Rat lhs2 = census.sum_alt_from_census();
    Rat rhs2 = Rat(ranks.sum_alt);
    results.push_back({"euler_identity_alternating_sum", lhs2 == rhs2, rat_str(lhs2), rat_str(rhs2)});

    // (3) sum (|M|^2-1)/|M| = s0 - s1
    auto [s0, s1] = s_values(census, ranks);
    Rat lhs3 = census.sum_sq();
    Rat rhs3 = Rat(s0 - s1);
    results.push_back({"euler_identity_k_theory_rank", lhs3 == rhs3, rat_str(lhs3), rat_str(rhs3)});

    // evaluations of the Euler class itself
    Rat card = euler.cardinality();
    results.push_back({"euler_class_cardinality_zero", card == 0, rat_str(card), "0"});
    Rat q = euler.quot();
    results.push_back({"euler_class_quot_alternating_sum", q == rhs2, rat_str(q), rat_str(rhs2)});
    Rat kgv = euler.kg();
    results.push_back({"euler_class_kg_rank_difference", kgv == rhs3, rat_str(kgv), rat_str(rhs3)});
    return results;
}

TateTable tate_table(const CyclicLattice& lattice, long cap) {
    long m = lattice.m, n = lattice.n;
    TateTable table;
    table.n = n;
    table.even.resize(n + 1);
    table.odd.resize(n + 1);
    table.fixed_rank.assign(n + 1, 0);

    // all powers of T once; Lambda^l(T^j) = (Lambda^l T)^j by functoriality
    std::vector<IntegerMatrix> powers(m);
    powers[0] = IntegerMatrix::identity(n);
    for (long j = 1; j < m; ++j) powers[j] = powers[j - 1] * lattice.action;

    for (long l = 0; l <= n; ++l) {
        IntegerMatrix sigma = exterior_power(lattice.action, l, cap);
        IntegerMatrix norm = exterior_power(powers[0], l, cap);
        for (long j = 1; j < m; ++j) norm = norm + exterior_power(powers[j], l, cap);

        table.even[l].parity = Parity::even;
        for (const Int& f : smith_diagonal(norm))
            if (f > 1) table.even[l].invariant_factors.push_back(f);

        table.odd[l].parity = Parity::odd;
        long zeros = 0;
        for (const Int& f : smith_diagonal(sigma - IntegerMatrix::identity(sigma.rows()))) {
            if (f == 0)
                ++zeros;
            else if (f > 1)
                table.odd[l].invariant_factors.push_back(f);
        }
        table.fixed_rank[l] = zeros;
    }
    return table;
}

namespace {

Int rank_at(const LambdaRanks& ranks, long degree) {
    if (degree < 0 || degree >= static_cast<long>(ranks.ranks.size())) return 0;
    return ranks.ranks[degree];
}

}  // namespace

std::vector<GradedGroup> gamma_cohomology(const CyclicLattice& lattice, long max_degree,
                                          const TateTable& table, const LambdaRanks& ranks) {
    std::vector<GradedGroup> out;
    long n = lattice.n;
    for (long i = 0; i <= max_degree; ++i) {
        GradedGroup g;
        g.degree = i;
        g.free_rank = rank_at(ranks, i);
        if (i >= 2 && i % 2 == 0) {
            for (long l = 0; l <= std::min(i - 1, n); ++l) {
                const TateGroup& summand = ((i - l) % 2 == 0) ? table.even[l] : table.odd[l];
                g.torsion.insert(g.torsion.end(), summand.invariant_factors.begin(),
                                 summand.invariant_factors.end());
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GradedGroup> orbifold_cohomology(const CyclicLattice& lattice, long max_degree,
                                             const TateTable& table, const LambdaRanks& ranks) {
    std::vector<GradedGroup> out;
    long n = lattice.n;
    for (long i = 0; i <= max_degree; ++i) {
        GradedGroup g;
        g.degree = i;
        g.free_rank = rank_at(ranks, i);
        if (i >= 3 && i % 2 == 1) {
            for (long l = i; l <= n; ++l) {
                const TateGroup& summand = (l % 2 == 0) ? table.even[l] : table.odd[l];
                g.torsion.insert(g.torsion.end(), summand.invariant_factors.begin(),
                                 summand.invariant_factors.end());
            }
        }
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Int> normalize_torsion(const std::vector<Int>& factors) {
    // elementary divisors, then recombined into one divisibility chain
    std::map<Int, std::vector<long>> exponents;  // prime -> exponents, one per cyclic piece
    for (const Int& f : factors) {
        Int rest = f;
        for (Int p = 2; p * p <= rest;) {
            if (rest % p == 0) {
                long e = 0;
                while (rest % p == 0) {
                    rest /= p;
                    ++e;
                }
                exponents[p].push_back(e);
            }
            p += (p == 2) ? 1 : 2;
        }
        if (rest > 1) exponents[rest].push_back(1);
    }
    size_t slots = 0;
    for (auto& [p, es] : exponents) {
        std::sort(es.begin(), es.end(), std::greater<long>());
        slots = std::max(slots, es.size());
    }
    std::vector<Int> chain(slots, 1);
    for (const auto& [p, es] : exponents)
        for (size_t i = 0; i < es.size(); ++i) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[i]));
            chain[i] *= pe;
        }
    std::reverse(chain.begin(), chain.end());  // ascending: d_1 | d_2 | ...
    return chain;
}

bool KTheoryReport::all_checks_pass() const {
    for (const CheckResult& c : checks)
        if (!c.pass) return false;
    return census_checks.all_pass();
}

KTheoryReport build_report(const CyclicLattice& lattice, const ReportOptions& options) {
    KTheoryReport report;
    report.m = lattice.m;
    report.n = lattice.n;
    SylowData sylow = sylow_data(lattice);
    report.k = sylow.k;
    report.prime_powers = sylow.prime_powers;
    report.k_per_prime = sylow.k_per_prime;
    report.max_degree = options.max_degree >= 0 ? options.max_degree : 2 * lattice.n + 2;

    report.census_checks = cross_check(lattice, options.enumeration_threshold);
    report.census = census_bruteforce(lattice, options.enumeration_threshold);
    report.ranks = lambda_ranks(lattice);
    auto [s0, s1] = s_values(report.census, report.ranks);
    report.s0 = s0;
    report.s1 = s1;
    report.euler = euler_class(lattice, report.census);
    report.checks = euler_identities(lattice, report.census, report.ranks, report.euler);

    if (report.ranks.closed_sum_all) {
        report.checks.push_back({"rank_sum_closed_form", *report.ranks.closed_sum_all == report.ranks.sum_all,
                                 report.ranks.closed_sum_all->get_str(), report.ranks.sum_all.get_str()});
    }
    if (report.ranks.m_even) {
        report.checks.push_back({"odd_ranks_vanish_m_even", report.ranks.odd_ranks_vanish(),
                                 report.ranks.sum_odd().get_str(), "0"});
        report.checks.push_back({"s1_zero_m_even", report.s1 == 0, report.s1.get_str(), "0"});
    }

    TateTable table = tate_table(lattice, options.exterior_cap);

    // Tate vanishing: H^{parity}(Z/m; Lambda^l) = 0 whenever parity + l is odd
    {
        bool ok = true;
        std::ostringstream bad;
        for (long l = 0; l <= lattice.n; ++l) {
            const TateGroup& mixed = (l % 2 == 0) ? table.odd[l] : table.even[l];
            if (!mixed.trivial()) {
                ok = false;
                bad << " l=" << l;
            }
        }
        report.checks.push_back({"tate_vanishing", ok, ok ? "all trivial" : ("nontrivial at" + bad.str()),
                                 "all trivial"});
    }
    // free rank of the fixed sublattice must match the character oracle
    {
        bool ok = true;
        for (long l = 0; l <= lattice.n; ++l)
            if (Int(table.fixed_rank[l]) != report.ranks.ranks[l]) ok = false;
        std::ostringstream lhs, rhs;
        for (long l = 0; l <= lattice.n; ++l) {
            lhs << (l ? "," : "") << table.fixed_rank[l];
            rhs << (l ? "," : "") << report.ranks.ranks[l].get_str();
        }
        report.checks.push_back({"fixed_rank_character_oracle", ok, lhs.str(), rhs.str()});
    }

    report.gamma = gamma_cohomology(lattice, report.max_degree, table, report.ranks);
    report.orbifold = orbifold_cohomology(lattice, report.max_degree, table, report.ranks);

    if (lattice.m >= 2 && report.max_degree >= 1) {
        const GradedGroup& h1 = report.gamma[1];
        report.checks.push_back({"gamma_h1_trivial", h1.free_rank == 0 && h1.torsion.empty(),
                                 h1.free_rank.get_str() + " free, " + std::to_string(h1.torsion.size()) +
                                     " torsion factors",
                                 "0"});
    }
    // restriction to maximal finite subgroups is bijective above degree n:
    // the torsion of H^i(Gamma) has order prod d^{|M(G_d)|} for even i > n
    {
        bool ok = true;
        std::ostringstream lhs, rhs;
        Int expected = 1;
        for (const auto& [d, entry] : report.census.per_divisor) {
            if (!entry.maximal.fits_ulong_p())
                throw DimensionOverflow("restriction check: |M(G_d)| too large to exponentiate");
            Int dp;
            mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), entry.maximal.get_ui());
            expected *= dp;
        }
        bool any = false;
        for (long i = lattice.n + 1; i <= report.max_degree; ++i) {
            if (i % 2 != 0) continue;
            any = true;
            Int order = 1;
            for (const Int& f : report.gamma[i].torsion) order *= f;
            if (order != expected || report.gamma[i].free_rank != 0) ok = false;
            lhs << "i=" << i << ":" << order.get_str() << " ";
        }
        rhs << expected.get_str();
        if (any)
            report.checks.push_back({"restriction_high_degree_torsion", ok, lhs.str(), rhs.str()});
    }
    // monotonicity of class counts along subgroup inclusion
    {
        bool ok = true;
        for (long d : divisors(lattice.m)) {
            if (d == 1) continue;
            for (long e : divisors(lattice.m)) {
                if (e == 1 || e % d != 0) continue;
                if (report.census.per_divisor.at(d).classes < report.census.per_divisor.at(e).classes)
                    ok = false;
            }
        }
        if (lattice.m >= 2)
            report.checks.push_back({"class_count_monotone", ok, "", ""});
    }
    if (lattice.m >= 2) {
        const DivisorCensus& top = report.census.per_divisor.at(lattice.m);
        report.checks.push_back({"maximal_equals_classes_at_top", top.maximal == top.classes,
                                 top.maximal.get_str(), top.classes.get_str()});
    }

    report.provenance.emplace_back("census", "both-agree");
    report.provenance.emplace_back("h1_classes", "both-agree");
    bool prime_power = report.prime_powers.size() == 1;
    // even m: the odd ranks vanish so the census route covers the total too;
    // odd composite m has no printed formula and stays oracle-only
    report.provenance.emplace_back(
        "rank_sum_all", prime_power || report.ranks.m_even ? "both-agree" : "oracle");
    report.provenance.emplace_back("rank_sum_alt", "both-agree");  // census route always available
    report.provenance.emplace_back("s_values", "both-agree");
    report.provenance.emplace_back("cohomology_tables", "closed-form");
    return report;
}

}  // namespace crystalk
