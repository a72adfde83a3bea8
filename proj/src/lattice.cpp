#include "crystalk/lattice.hpp"

#include <algorithm>

namespace crystalk {

std::vector<long> divisors(long m) {
    std::vector<long> out;
    for (long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            out.push_back(d);
            if (d != m / d) out.push_back(m / d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<long, long>> factorize(long m) {
    std::vector<std::pair<long, long>> out;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            long r = 0;
            while (m % p == 0) {
                m /= p;
                ++r;
            }
            out.emplace_back(p, r);
        }
    }
    if (m > 1) out.emplace_back(m, 1);
    return out;
}

long euler_phi(long m) {
    long phi = 1;
    for (auto [p, r] : factorize(m)) {
        long pr = 1;
        for (long i = 1; i < r; ++i) pr *= p;
        phi *= (p - 1) * pr;
    }
    return phi;
}

CyclicLattice validate(long m, IntegerMatrix t) {
    if (m < 1) throw InputError("validate: m must be >= 1");
    if (t.rows() != t.cols()) throw InputError("validate: action matrix must be square");
    long n = t.rows();
    IntegerMatrix power = IntegerMatrix::identity(n);
    IntegerMatrix id = IntegerMatrix::identity(n);
    for (long j = 1; j <= m; ++j) {
        power = power * t;
        if (j < m) {
            if (power.is_identity()) throw WrongOrder(j);
            if (determinant(power - id) == 0) throw NotFreeOutsideOrigin(j);
        }
    }
    if (!power.is_identity()) throw WrongOrder(m);
    return CyclicLattice{m, n, std::move(t)};
}

namespace {

// exact division of integer polynomials, ascending coefficients
std::vector<Int> poly_divexact(std::vector<Int> num, const std::vector<Int>& den) {
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    std::vector<Int> q(dn - dd + 1);
    for (long i = dn - dd; i >= 0; --i) {
        Int c;
        mpz_divexact(c.get_mpz_t(), num[i + dd].get_mpz_t(), den[dd].get_mpz_t());
        q[i] = c;
        for (long j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
    if (m < 1) throw InputError("cyclotomic_polynomial: m must be >= 1");
    // x^m - 1 divided by all Phi_d for proper divisors d
    std::vector<Int> poly(m + 1);
    poly[0] = -1;
    poly[m] = 1;
    for (long d : divisors(m)) {
        if (d == m) continue;
        poly = poly_divexact(std::move(poly), cyclotomic_polynomial(d));
    }
    return poly;
}

CyclicLattice cyclotomic_lattice(long m, long k) {
    if (m < 1 || k < 1) throw InputError("cyclotomic_lattice: need m >= 1 and k >= 1");
    std::vector<Int> phi = cyclotomic_polynomial(m);
    long deg = static_cast<long>(phi.size()) - 1;
    long n = k * deg;
    IntegerMatrix t(n, n);
    for (long b = 0; b < k; ++b) {
        long off = b * deg;
        for (long i = 0; i + 1 < deg; ++i) t(off + i + 1, off + i) = 1;
        for (long i = 0; i < deg; ++i) t(off + i, off + deg - 1) = -phi[i];
    }
    return validate(m, std::move(t));
}

SylowData sylow_data(const CyclicLattice& lattice) {
    SylowData data;
    data.prime_powers = factorize(lattice.m);
    if (lattice.m == 1) {
        data.k = lattice.n;  // degenerate convention
        return data;
    }
    long phi = euler_phi(lattice.m);
    if (lattice.n % phi != 0)
        throw NonIntegralMultiplicity("sylow_data: n is not a multiple of phi(m)");
    data.k = lattice.n / phi;
    for (auto [p, r] : data.prime_powers) {
        long local = p - 1;
        for (long i = 1; i < r; ++i) local *= p;
        if (lattice.n % local != 0)
            throw NonIntegralMultiplicity("sylow_data: n not divisible by (p-1)p^{r-1} for p = " +
                                          std::to_string(p));
        data.k_per_prime.push_back(lattice.n / local);
    }
    return data;
}

IntegerMatrix subgroup_generator(const CyclicLattice& lattice, long d) {
    if (d < 1 || lattice.m % d != 0) throw NotADivisor(d, lattice.m);
    return lattice.action.pow(static_cast<unsigned long>(lattice.m / d));
}

}  // namespace crystalk
