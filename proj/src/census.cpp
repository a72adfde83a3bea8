#include "crystalk/census.hpp"

#include <sstream>

namespace crystalk {

Int SubgroupCensus::total_maximal() const {
    Int total = 0;
    for (const auto& [d, entry] : per_divisor) total += entry.maximal;
    return total;
}

Int SubgroupCensus::sum_order_minus_one() const {
    Int total = 0;
    for (const auto& [d, entry] : per_divisor) total += entry.maximal * (d - 1);
    return total;
}

Rat SubgroupCensus::sum_reciprocal() const {
    Rat total = 0;
    for (const auto& [d, entry] : per_divisor) total += Rat(entry.maximal) / d;
    total.canonicalize();
    return total;
}

Rat SubgroupCensus::sum_sq() const {
    Rat total = 0;
    for (const auto& [d, entry] : per_divisor) total += Rat(entry.maximal * (Int(d) * d - 1)) / d;
    total.canonicalize();
    return total;
}

Rat SubgroupCensus::sum_alt_from_census() const {
    Rat total = 0;
    for (const auto& [d, entry] : per_divisor) total += Rat(entry.maximal * (d - 1)) / d;
    total.canonicalize();
    return total;
}

SubgroupCensus census_bruteforce(const CyclicLattice& lattice, long enumeration_threshold) {
    if (lattice.m < 2) return SubgroupCensus{lattice.m, {}};
    SubgroupCensus census;
    census.m = lattice.m;
    std::map<long, Int> classes;
    for (long d : divisors(lattice.m)) {
        if (d == 1) continue;
        classes[d] = orbit_count(h1_as_gset(lattice, d), enumeration_threshold);
    }
    // inclusion-exclusion over the primes of [G : G_d]
    for (long d : divisors(lattice.m)) {
        if (d == 1) continue;
        std::vector<long> primes;
        for (auto [p, r] : factorize(lattice.m / d)) primes.push_back(p);
        long s = static_cast<long>(primes.size());
        Int maximal = 0;
        for (long mask = 0; mask < (1L << s); ++mask) {
            long over = d;
            int bits = 0;
            for (long i = 0; i < s; ++i)
                if (mask & (1L << i)) {
                    over *= primes[i];
                    ++bits;
                }
            maximal += (bits % 2 == 0) ? classes[over] : -classes[over];
        }
        census.per_divisor[d] = DivisorCensus{classes[d], maximal};
    }
    return census;
}

namespace {

Int pow_int(long base, long exp) {
    if (exp < 0) throw NonIntegralFormula("closed form produced a negative exponent");
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return out;
}

Int exact_div(const Int& num, long den, const char* what) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), Int(den).get_mpz_t());
    if (r != 0)
        throw NonIntegralFormula(std::string(what) + ": " + num.get_str() + " is not divisible by " +
                                 std::to_string(den));
    return q;
}

long ipow_long(long base, long exp) {
    long out = 1;
    for (long i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

BurnsideElement h1_class_closed_form(const CyclicLattice& lattice, long d) {
    long m = lattice.m;
    if (d < 2 || m % d != 0) throw NotADivisor(d, m);
    SylowData sylow = sylow_data(lattice);
    BurnsideElement out(m);
    out.set_coefficient(m, 1);  // [G/G]

    auto d_factors = factorize(d);
    if (d_factors.size() != 1) return out;  // C meets two Sylow directions: [G/G]

    auto [p, c] = d_factors[0];
    long i = -1;
    for (size_t idx = 0; idx < sylow.prime_powers.size(); ++idx)
        if (sylow.prime_powers[idx].first == p) i = static_cast<long>(idx);
    if (i < 0) throw NotADivisor(d, m);
    long r = sylow.prime_powers[i].second;
    long ki = sylow.k_per_prime[i];
    long sylow_order = ipow_long(p, r);

    // [G/G] + (p^k[i] - 1) p^{r_i} / m * [G/Sylow]
    //       + sum_l (p^{k[i] p^{r-c-l} + c + l} - p^{k[i] p^{r-c-l-1} + c + l}) / m * [G/G_{p^{c+l}}]
    Int top = exact_div((pow_int(p, ki) - 1) * sylow_order, m, "h1 closed form, Sylow coefficient");
    out.add_to_coefficient(sylow_order, top);
    for (long l = 0; l <= r - c - 1; ++l) {
        Int num = pow_int(p, ki * ipow_long(p, r - c - l) + c + l) -
                  pow_int(p, ki * ipow_long(p, r - c - l - 1) + c + l);
        out.add_to_coefficient(ipow_long(p, c + l), exact_div(num, m, "h1 closed form, tower coefficient"));
    }
    return out;
}

SubgroupCensus census_closed_form(const CyclicLattice& lattice) {
    if (lattice.m < 2) return SubgroupCensus{lattice.m, {}};
    long m = lattice.m;
    SylowData sylow = sylow_data(lattice);
    long s = static_cast<long>(sylow.prime_powers.size());
    SubgroupCensus census;
    census.m = m;
    for (long d : divisors(m)) {
        if (d == 1) continue;
        DivisorCensus entry;
        entry.classes = quot(h1_class_closed_form(lattice, d));
        auto d_factors = factorize(d);
        if (d == m) {
            entry.maximal = (s == 1) ? pow_int(sylow.prime_powers[0].first, sylow.k) : Int(1);
        } else if (d_factors.size() != 1) {
            entry.maximal = 0;
        } else {
            auto [p, j] = d_factors[0];
            long i = 0;
            while (sylow.prime_powers[i].first != p) ++i;
            long r = sylow.prime_powers[i].second;
            long ki = sylow.k_per_prime[i];
            if (j == r) {
                entry.maximal =
                    exact_div((pow_int(p, ki) - 1) * ipow_long(p, r), m, "maximal count, Sylow top");
            } else {
                Int num = pow_int(p, ki * ipow_long(p, r - j) + j) - pow_int(p, ki * ipow_long(p, r - j - 1) + j);
                entry.maximal = exact_div(num, m, "maximal count, tower");
            }
        }
        census.per_divisor[d] = entry;
    }
    return census;
}

bool CrossCheckReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::string CrossCheckReport::summary() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << (e.pass ? "pass" : "FAIL") << "  " << e.quantity;
        if (!e.pass) os << "  brute-force=" << e.lhs << "  closed-form=" << e.rhs;
        os << "\n";
    }
    return os.str();
}

CrossCheckReport cross_check(const CyclicLattice& lattice, long enumeration_threshold) {
    CrossCheckReport report;
    report.m = lattice.m;
    if (lattice.m < 2) return report;
    SubgroupCensus brute = census_bruteforce(lattice, enumeration_threshold);
    SubgroupCensus closed = census_closed_form(lattice);
    for (long d : divisors(lattice.m)) {
        if (d == 1) continue;
        const DivisorCensus& b = brute.per_divisor.at(d);
        const DivisorCensus& c = closed.per_divisor.at(d);
        report.entries.push_back({"classes(G_" + std::to_string(d) + ")", b.classes.get_str(),
                                  c.classes.get_str(), b.classes == c.classes});
        report.entries.push_back({"maximal(G_" + std::to_string(d) + ")", b.maximal.get_str(),
                                  c.maximal.get_str(), b.maximal == c.maximal});
        BurnsideElement lhs = burnside_class_of_h1(lattice, d);
        BurnsideElement rhs = h1_class_closed_form(lattice, d);
        report.entries.push_back({"[H1(G_" + std::to_string(d) + ";L)]", lhs.to_string(), rhs.to_string(),
                                  lhs == rhs});
    }
    if (!report.all_pass())
        throw CrossCheckMismatch("cross_check failed for m = " + std::to_string(lattice.m) + "\n" +
                                 report.summary());
    return report;
}

}  // namespace crystalk
