#pragma once

#include <map>
#include <string>

#include "crystalk/exact_linalg.hpp"

// Arithmetic in the Burnside ring A(Z/m). The cyclic group Z/m has one
// subgroup G_h per divisor h, so a basis class [G/G_h] is indexed by the
// subgroup ORDER h. Via the permutation isomorphism the same data doubles as
// an element of the rational representation ring R_Q(Z/m) in the basis
// {[Q[G/G_h]]}.

namespace crystalk {

class BurnsideElement {
  public:
    explicit BurnsideElement(long m) : m_(m) {}

    // [G/G_h] for h | m
    static BurnsideElement basis(long m, long h);

    long group_order() const { return m_; }
    const std::map<long, Int>& coefficients() const { return coeffs_; }
    Int coefficient(long h) const;
    void set_coefficient(long h, const Int& value);
    void add_to_coefficient(long h, const Int& value);

    BurnsideElement operator+(const BurnsideElement& other) const;
    BurnsideElement operator-(const BurnsideElement& other) const;
    BurnsideElement scaled(const Int& c) const;
    bool operator==(const BurnsideElement& other) const;

    std::string to_string() const;

  private:
    long m_;
    std::map<long, Int> coeffs_;  // divisor h -> coefficient of [G/G_h]; absent = 0
};

struct MarkVector {
    long m = 1;
    std::map<long, Int> marks;  // divisor d -> |X^{G_d}|
};

// ch: marks under every subgroup. |(G/G_h)^{G_d}| = m/h when d | h, else 0.
MarkVector marks_of(const BurnsideElement& x);

// Triangular inversion over divisors in decreasing order; throws NotIntegral
// when the vector is not realizable by an integral element.
BurnsideElement from_marks(const MarkVector& v);

// Product computed pointwise on marks (the character map is a ring
// embedding) and inverted back.
BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y);

// Induction A(G[i]) -> A(G) along the inclusion of the p-Sylow subgroup
// G[i] of order q: [G[i]/G_h] -> [G/G_h]. Throws NotSylow unless x lives
// over a maximal prime-power divisor of m.
BurnsideElement induce_from_sylow(const BurnsideElement& x, long m);

// Orbit count: [G/G_h] -> 1.
Int quot(const BurnsideElement& x);

// [G/G_h] -> h.
Int kg(const BurnsideElement& x);

// Mark at the trivial subgroup: [G/G_h] -> m/h (the underlying cardinality).
Int cardinality(const BurnsideElement& x);

// dim_Q of the G_d-fixed subspace of the associated permutation module:
// [G/G_h] -> number of G_d-orbits on G/G_h = m*gcd(h,d)/(h*d).
Int perm_dim_fixed(const BurnsideElement& x, long d);

}  // namespace crystalk
