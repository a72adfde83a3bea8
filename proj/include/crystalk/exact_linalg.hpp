#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "crystalk/errors.hpp"

// Exact integer linear algebra: Smith normal form, fraction-free rank and
// determinant, exterior powers, characteristic polynomials. Everything is
// over arbitrary-precision integers; there is no floating point in this
// module or anywhere downstream of it.

namespace crystalk {

using Int = mpz_class;
using Rat = mpq_class;

inline constexpr long kDefaultExteriorCap = 200000;

class IntegerMatrix {
  public:
    IntegerMatrix() : rows_(0), cols_(0) {}
    IntegerMatrix(long rows, long cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {}

    static IntegerMatrix identity(long n);
    static IntegerMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const Int& operator()(long i, long j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    Int& operator()(long i, long j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntegerMatrix& other) const = default;

    IntegerMatrix operator*(const IntegerMatrix& other) const;
    IntegerMatrix operator+(const IntegerMatrix& other) const;
    IntegerMatrix operator-(const IntegerMatrix& other) const;

    // Non-negative exponent; pow(0) is the identity.
    IntegerMatrix pow(unsigned long e) const;

    bool is_identity() const;
    bool is_zero() const;
    Int trace() const;

    std::string to_string() const;

  private:
    long rows_, cols_;
    std::vector<Int> entries_;
};

// U * A * V == S with U, V unimodular and S diagonal, nonnegative,
// d_i | d_{i+1}.
struct SmithDecomposition {
    IntegerMatrix u, s, v;

    std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
    long rank() const;
    bool verify(const IntegerMatrix& a) const;  // recomputes U*A*V == S and the chain
};

// Full decomposition plus the inverses of the transforms, for callers that
// need to move vectors between the original and the diagonalized bases.
struct SmithTransforms {
    IntegerMatrix u, s, v, u_inv, v_inv;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& a);
SmithTransforms smith_with_inverses(const IntegerMatrix& a);

// Diagonal of the Smith form only (no transform tracking); considerably
// faster on large matrices. Entries come back nonnegative in a divisibility
// chain, including any zeros.
std::vector<Int> smith_diagonal(const IntegerMatrix& a);

// Rank over Q by fraction-free (Bareiss) elimination.
long rational_rank(const IntegerMatrix& a);

// Fraction-free determinant; a must be square.
Int determinant(const IntegerMatrix& a);

// The C(n,l) x C(n,l) matrix of the l-th exterior power in the basis of
// l-element index subsets in lexicographic order. Entry (R, C) is the l x l
// minor of a with row set R and column set C, both sorted ascending, no sign
// beyond the minor itself. Throws DimensionOverflow if C(n,l) > cap.
IntegerMatrix exterior_power(const IntegerMatrix& a, long l, long cap = kDefaultExteriorCap);

// Coefficients of det(xI - A), ascending by degree (coeffs[n] = 1).
// coeffs[n-l] = (-1)^l * e_l(eigenvalues) = (-1)^l * trace(exterior_power(A, l)).
std::vector<Int> characteristic_polynomial(const IntegerMatrix& a);

Int binomial(long n, long l);

std::vector<std::vector<long>> index_subsets(long n, long l);  // lexicographic

}  // namespace crystalk
