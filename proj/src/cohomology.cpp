#include "crystalk/cohomology.hpp"

#include <algorithm>

namespace crystalk {

Int FiniteAbelianGroupWithAction::group_order() const {
    Int order = 1;
    for (const Int& d : invariant_factors) order *= d;
    return order;
}

namespace {

// Reduce row i of an endomorphism matrix modulo the i-th invariant factor;
// representatives in [0, d_i).
void reduce_rows(IntegerMatrix& u, const std::vector<Int>& factors) {
    for (long i = 0; i < u.rows(); ++i)
        for (long j = 0; j < u.cols(); ++j) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), u(i, j).get_mpz_t(), factors[i].get_mpz_t());
            u(i, j) = r;
        }
}

IntegerMatrix mod_power(const IntegerMatrix& u, unsigned long e, const std::vector<Int>& factors) {
    IntegerMatrix result = IntegerMatrix::identity(u.rows());
    reduce_rows(result, factors);
    IntegerMatrix base = u;
    while (e > 0) {
        if (e & 1) {
            result = result * base;
            reduce_rows(result, factors);
        }
        e >>= 1;
        if (e > 0) {
            base = base * base;
            reduce_rows(base, factors);
        }
    }
    return result;
}

bool is_identity_mod(const IntegerMatrix& u, const std::vector<Int>& factors) {
    for (long i = 0; i < u.rows(); ++i)
        for (long j = 0; j < u.cols(); ++j) {
            Int r;
            Int delta = u(i, j) - (i == j ? 1 : 0);
            mpz_fdiv_r(r.get_mpz_t(), delta.get_mpz_t(), factors[i].get_mpz_t());
            if (r != 0) return false;
        }
    return true;
}

}  // namespace

FiniteAbelianGroupWithAction h1_as_gset(const CyclicLattice& lattice, long d) {
    if (d < 2 || lattice.m % d != 0) throw NotADivisor(d, lattice.m);
    long n = lattice.n;
    IntegerMatrix gen = subgroup_generator(lattice, d);
    IntegerMatrix presentation = gen - IntegerMatrix::identity(n);
    SmithTransforms smith = smith_with_inverses(presentation);

    // cok(T^{m/d} - I) = Z^n / im(S) in the U-coordinates; T pushes through
    // as U T U^{-1}. Coordinates with factor 1 are dropped.
    std::vector<long> keep;
    std::vector<Int> factors;
    for (long i = 0; i < n; ++i) {
        const Int& s = smith.s(i, i);
        if (s == 0)
            throw IdentityError("h1_as_gset: infinite cokernel, lattice not free outside origin");
        if (s > 1) {
            keep.push_back(i);
            factors.push_back(s);
        }
    }
    IntegerMatrix conjugated = smith.u * lattice.action * smith.u_inv;
    long s_count = static_cast<long>(keep.size());
    IntegerMatrix action(s_count, s_count);
    for (long i = 0; i < s_count; ++i)
        for (long j = 0; j < s_count; ++j) action(i, j) = conjugated(keep[i], keep[j]);

    FiniteAbelianGroupWithAction group;
    group.invariant_factors = std::move(factors);
    reduce_rows(action, group.invariant_factors);
    group.action = std::move(action);

    group.order_of_action = lattice.m;
    if (group.invariant_factors.empty()) {
        group.order_of_action = 1;
        return group;
    }
    for (long o : divisors(lattice.m)) {
        if (is_identity_mod(mod_power(group.action, static_cast<unsigned long>(o), group.invariant_factors),
                            group.invariant_factors)) {
            group.order_of_action = o;
            break;
        }
    }
    return group;
}

Int fixed_point_count(const FiniteAbelianGroupWithAction& group, unsigned long e) {
    long s = static_cast<long>(group.invariant_factors.size());
    if (s == 0) return 1;
    // |ker(w)| = |cok(w)| = |cok [w | D]| for w an endomorphism of the finite
    // group Z^s / D Z^s presented by D = diag(invariant factors).
    IntegerMatrix w = mod_power(group.action, e, group.invariant_factors);
    IntegerMatrix stacked(s, 2 * s);
    for (long i = 0; i < s; ++i) {
        for (long j = 0; j < s; ++j) stacked(i, j) = w(i, j) - (i == j ? 1 : 0);
        stacked(i, s + i) = group.invariant_factors[i];
    }
    Int count = 1;
    for (const Int& f : smith_diagonal(stacked)) {
        if (f == 0) throw IdentityError("fixed_point_count: presentation lost full rank");
        count *= f;
    }
    return count;
}

Int fixed_point_count_by_enumeration(const FiniteAbelianGroupWithAction& group, unsigned long e) {
    long s = static_cast<long>(group.invariant_factors.size());
    if (s == 0) return 1;
    IntegerMatrix w = mod_power(group.action, e, group.invariant_factors);
    std::vector<long> radix(s);
    for (long i = 0; i < s; ++i) radix[i] = group.invariant_factors[i].get_si();
    std::vector<long> x(s, 0);
    Int count = 0;
    for (;;) {
        bool fixed = true;
        for (long i = 0; i < s && fixed; ++i) {
            Int acc = 0;
            for (long j = 0; j < s; ++j) acc += w(i, j) * x[j];
            acc -= x[i];
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), group.invariant_factors[i].get_mpz_t());
            fixed = (r == 0);
        }
        if (fixed) ++count;
        long pos = 0;
        while (pos < s && ++x[pos] == radix[pos]) x[pos++] = 0;
        if (pos == s) break;
    }
    return count;
}

Int orbit_count_by_enumeration(const FiniteAbelianGroupWithAction& group) {
    long s = static_cast<long>(group.invariant_factors.size());
    if (s == 0) return 1;
    std::vector<long> radix(s);
    long total = 1;
    for (long i = 0; i < s; ++i) {
        radix[i] = group.invariant_factors[i].get_si();
        total *= radix[i];
    }
    // dense index <-> tuple
    auto encode = [&](const std::vector<long>& x) {
        long idx = 0;
        for (long i = s - 1; i >= 0; --i) idx = idx * radix[i] + x[i];
        return idx;
    };
    std::vector<bool> seen(static_cast<size_t>(total), false);
    std::vector<long> x(s, 0), y(s), z(s);
    Int orbits = 0;
    for (long start = 0; start < total; ++start) {
        if (seen[static_cast<size_t>(start)]) {
            long pos = 0;
            while (pos < s && ++x[pos] == radix[pos]) x[pos++] = 0;
            continue;
        }
        ++orbits;
        y = x;
        for (long step = 0; step < group.order_of_action; ++step) {
            seen[static_cast<size_t>(encode(y))] = true;
            for (long i = 0; i < s; ++i) {
                Int acc = 0;
                for (long j = 0; j < s; ++j) acc += group.action(i, j) * y[j];
                Int r;
                mpz_fdiv_r(r.get_mpz_t(), acc.get_mpz_t(), group.invariant_factors[i].get_mpz_t());
                z[i] = r.get_si();
            }
            y = z;
        }
        long pos = 0;
        while (pos < s && ++x[pos] == radix[pos]) x[pos++] = 0;
    }
    return orbits;
}

Int orbit_count(const FiniteAbelianGroupWithAction& group, long enumeration_threshold) {
    long o = group.order_of_action;
    Int total = 0;
    for (long e = 0; e < o; ++e) total += fixed_point_count(group, static_cast<unsigned long>(e));
    Int orbits, rem;
    mpz_fdiv_qr(orbits.get_mpz_t(), rem.get_mpz_t(), total.get_mpz_t(), Int(o).get_mpz_t());
    if (rem != 0) throw IdentityError("orbit_count: Burnside sum not divisible by the action order");
    if (group.group_order() <= enumeration_threshold) {
        Int direct = orbit_count_by_enumeration(group);
        if (direct != orbits)
            throw IdentityError("orbit_count: Burnside count " + orbits.get_str() +
                                " disagrees with enumeration " + direct.get_str());
    }
    return orbits;
}

BurnsideElement burnside_class_of_h1(const CyclicLattice& lattice, long d) {
    FiniteAbelianGroupWithAction group = h1_as_gset(lattice, d);
    MarkVector marks;
    marks.m = lattice.m;
    for (long e : divisors(lattice.m))
        marks.marks[e] = fixed_point_count(group, static_cast<unsigned long>(lattice.m / e));
    return from_marks(marks);  // NotIntegral here signals an implementation bug
}

Int TateGroup::order() const {
    Int o = 1;
    for (const Int& d : invariant_factors) o *= d;
    return o;
}

IntegerMatrix norm_matrix(const CyclicLattice& lattice, long d, long l, long cap) {
    if (d < 1 || lattice.m % d != 0) throw NotADivisor(d, lattice.m);
    long step = lattice.m / d;
    IntegerMatrix power = IntegerMatrix::identity(lattice.n);
    IntegerMatrix gen = lattice.action.pow(static_cast<unsigned long>(step));
    IntegerMatrix norm = exterior_power(power, l, cap);
    for (long j = 1; j < d; ++j) {
        power = power * gen;
        norm = norm + exterior_power(power, l, cap);  // Lambda^l(T^{j m/d}) = (Lambda^l T^{m/d})^j
    }
    return norm;
}

TateGroup tate(const CyclicLattice& lattice, long d, long l, Parity parity, long cap) {
    if (d < 1 || lattice.m % d != 0) throw NotADivisor(d, lattice.m);
    // For a lattice M with sigma^d = 1:
    //   ker(sigma-1)/im(N) = torsion cok(N),  ker(N)/im(sigma-1) = torsion cok(sigma-1).
    // (x torsion mod im(N) forces (sigma-1)x = 0 since (sigma-1)N = 0 and M is
    // torsion-free; conversely N is invertible on the invariants over Q. Same
    // argument with the roles swapped.)
    IntegerMatrix presentation;
    if (parity == Parity::even) {
        presentation = norm_matrix(lattice, d, l, cap);
    } else {
        IntegerMatrix sigma = exterior_power(subgroup_generator(lattice, d), l, cap);
        presentation = sigma - IntegerMatrix::identity(sigma.rows());
    }
    TateGroup group;
    group.parity = parity;
    for (const Int& f : smith_diagonal(presentation))
        if (f > 1) group.invariant_factors.push_back(f);
    return group;
}

}  // namespace crystalk
