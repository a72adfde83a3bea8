#include "crystalk/exact_linalg.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <utility>

namespace crystalk {

IntegerMatrix IntegerMatrix::identity(long n) {
    IntegerMatrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    long r = static_cast<long>(rows.size());
    long c = r == 0 ? 0 : static_cast<long>(rows[0].size());
    IntegerMatrix m(r, c);
    for (long i = 0; i < r; ++i) {
        if (static_cast<long>(rows[i].size()) != c)
            throw InputError("from_rows: ragged row lengths");
        for (long j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
    if (cols_ != other.rows_) throw InputError("matrix product: dimension mismatch");
    IntegerMatrix out(rows_, other.cols_);
    for (long i = 0; i < rows_; ++i)
        for (long k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (long j = 0; j < other.cols_; ++j) {
                const Int& b = other(k, j);
                if (b != 0) out(i, j) += a * b;
            }
        }
    return out;
}

IntegerMatrix IntegerMatrix::operator+(const IntegerMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum: dimension mismatch");
    IntegerMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::operator-(const IntegerMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference: dimension mismatch");
    IntegerMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

IntegerMatrix IntegerMatrix::pow(unsigned long e) const {
    if (rows_ != cols_) throw InputError("matrix power: not square");
    IntegerMatrix result = identity(rows_);
    IntegerMatrix base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

bool IntegerMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

bool IntegerMatrix::is_zero() const {
    for (const Int& e : entries_)
        if (e != 0) return false;
    return true;
}

Int IntegerMatrix::trace() const {
    Int t = 0;
    for (long i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

std::string IntegerMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (long j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form
//
// Classic smallest-pivot reduction. The core is templated over the scalar so
// the same code runs on checked 64-bit integers first and falls back to mpz
// when an intermediate value overflows; entry growth in these matrices is
// usually mild but is not bounded a priori.

namespace {

struct Overflow64 {};

struct C64 {
    int64_t v = 0;
    C64() = default;
    explicit C64(int64_t x) : v(x) {}

    friend C64 operator+(C64 a, C64 b) {
        C64 r;
        if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow64{};
        return r;
    }
    friend C64 operator-(C64 a, C64 b) {
        C64 r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow64{};
        return r;
    }
    friend C64 operator*(C64 a, C64 b) {
        C64 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow64{};
        return r;
    }
    friend C64 operator/(C64 a, C64 b) { return C64(a.v / b.v); }  // truncated
    friend C64 operator%(C64 a, C64 b) { return C64(a.v % b.v); }
    C64 operator-() const {
        if (v == INT64_MIN) throw Overflow64{};
        return C64(-v);
    }
    friend bool operator==(C64 a, C64 b) { return a.v == b.v; }
    friend bool operator<(C64 a, C64 b) { return a.v < b.v; }
    friend bool operator>(C64 a, C64 b) { return a.v > b.v; }
};

template <class Z>
Z abs_of(const Z& x) {
    return x < Z(0) ? -x : x;
}

// b > 0; quotient rounded to nearest so remainders shrink like in the
// centered Euclid algorithm.
template <class Z>
Z nearest_quotient(const Z& a, const Z& b) {
    Z q = a / b;
    Z r = a - q * b;
    Z two_r = r + r;
    if (two_r > b)
        q = q + Z(1);
    else if (-two_r > b)
        q = q - Z(1);
    return q;
}

template <class Z>
class SnfCore {
  public:
    SnfCore(long rows, long cols, std::vector<Z> s, bool track)
        : r_(rows), c_(cols), s_(std::move(s)), track_(track) {
        if (track_) {
            u_.assign(static_cast<size_t>(r_) * r_, Z(0));
            uinv_.assign(static_cast<size_t>(r_) * r_, Z(0));
            v_.assign(static_cast<size_t>(c_) * c_, Z(0));
            vinv_.assign(static_cast<size_t>(c_) * c_, Z(0));
            for (long i = 0; i < r_; ++i) u_[idx(i, i, r_)] = uinv_[idx(i, i, r_)] = Z(1);
            for (long j = 0; j < c_; ++j) v_[idx(j, j, c_)] = vinv_[idx(j, j, c_)] = Z(1);
        }
    }

    void run() {
        long steps = std::min(r_, c_);
        for (long t = 0; t < steps; ++t) {
            if (!select_pivot(t)) break;
            reduce_pivot(t);
        }
    }

    const std::vector<Z>& s() const { return s_; }
    const std::vector<Z>& u() const { return u_; }
    const std::vector<Z>& uinv() const { return uinv_; }
    const std::vector<Z>& v() const { return v_; }
    const std::vector<Z>& vinv() const { return vinv_; }

  private:
    static size_t idx(long i, long j, long stride) { return static_cast<size_t>(i) * stride + j; }

    Z& S(long i, long j) { return s_[idx(i, j, c_)]; }

    void row_swap(long a, long b) {
        if (a == b) return;
        for (long j = 0; j < c_; ++j) std::swap(S(a, j), S(b, j));
        if (track_) {
            for (long j = 0; j < r_; ++j) std::swap(u_[idx(a, j, r_)], u_[idx(b, j, r_)]);
            for (long i = 0; i < r_; ++i) std::swap(uinv_[idx(i, a, r_)], uinv_[idx(i, b, r_)]);
        }
    }

    void col_swap(long a, long b) {
        if (a == b) return;
        for (long i = 0; i < r_; ++i) std::swap(S(i, a), S(i, b));
        if (track_) {
            for (long i = 0; i < c_; ++i) std::swap(v_[idx(i, a, c_)], v_[idx(i, b, c_)]);
            for (long j = 0; j < c_; ++j) std::swap(vinv_[idx(a, j, c_)], vinv_[idx(b, j, c_)]);
        }
    }

    // row[dst] -= q * row[src]
    void row_submul(long dst, long src, const Z& q) {
        for (long j = 0; j < c_; ++j) {
            if (!(S(src, j) == Z(0))) S(dst, j) = S(dst, j) - q * S(src, j);
        }
        if (track_) {
            for (long j = 0; j < r_; ++j)
                if (!(u_[idx(src, j, r_)] == Z(0)))
                    u_[idx(dst, j, r_)] = u_[idx(dst, j, r_)] - q * u_[idx(src, j, r_)];
            for (long i = 0; i < r_; ++i)
                if (!(uinv_[idx(i, dst, r_)] == Z(0)))
                    uinv_[idx(i, src, r_)] = uinv_[idx(i, src, r_)] + q * uinv_[idx(i, dst, r_)];
        }
    }

    // col[dst] -= q * col[src]
    void col_submul(long dst, long src, const Z& q) {
        for (long i = 0; i < r_; ++i) {
            if (!(S(i, src) == Z(0))) S(i, dst) = S(i, dst) - q * S(i, src);
        }
        if (track_) {
            for (long i = 0; i < c_; ++i)
                if (!(v_[idx(i, src, c_)] == Z(0)))
                    v_[idx(i, dst, c_)] = v_[idx(i, dst, c_)] - q * v_[idx(i, src, c_)];
            for (long j = 0; j < c_; ++j)
                if (!(vinv_[idx(dst, j, c_)] == Z(0)))
                    vinv_[idx(src, j, c_)] = vinv_[idx(src, j, c_)] + q * vinv_[idx(dst, j, c_)];
        }
    }

    void row_negate(long i) {
        for (long j = 0; j < c_; ++j) S(i, j) = -S(i, j);
        if (track_) {
            for (long j = 0; j < r_; ++j) u_[idx(i, j, r_)] = -u_[idx(i, j, r_)];
            for (long k = 0; k < r_; ++k) uinv_[idx(k, i, r_)] = -uinv_[idx(k, i, r_)];
        }
    }

    // row[dst] += row[src]
    void row_add(long dst, long src) {
        for (long j = 0; j < c_; ++j)
            if (!(S(src, j) == Z(0))) S(dst, j) = S(dst, j) + S(src, j);
        if (track_) {
            for (long j = 0; j < r_; ++j)
                if (!(u_[idx(src, j, r_)] == Z(0)))
                    u_[idx(dst, j, r_)] = u_[idx(dst, j, r_)] + u_[idx(src, j, r_)];
            for (long i = 0; i < r_; ++i)
                if (!(uinv_[idx(i, dst, r_)] == Z(0)))
                    uinv_[idx(i, src, r_)] = uinv_[idx(i, src, r_)] - uinv_[idx(i, dst, r_)];
        }
    }

    bool select_pivot(long t) {
        long bi = -1, bj = -1;
        for (long i = t; i < r_; ++i)
            for (long j = t; j < c_; ++j) {
                if (S(i, j) == Z(0)) continue;
                if (bi < 0 || abs_of(S(i, j)) < abs_of(S(bi, bj))) {
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) return false;
        row_swap(t, bi);
        col_swap(t, bj);
        if (S(t, t) < Z(0)) row_negate(t);
        return true;
    }

    void reduce_pivot(long t) {
        for (;;) {
            bool disturbed = false;
            // clear column t below the pivot
            for (long i = t + 1; i < r_; ++i) {
                if (S(i, t) == Z(0)) continue;
                Z q = nearest_quotient(S(i, t), S(t, t));
                if (!(q == Z(0))) row_submul(i, t, q);
                if (!(S(i, t) == Z(0))) {
                    row_swap(t, i);
                    if (S(t, t) < Z(0)) row_negate(t);
                    disturbed = true;
                }
            }
            if (disturbed) continue;
            // clear row t right of the pivot
            for (long j = t + 1; j < c_; ++j) {
                if (S(t, j) == Z(0)) continue;
                Z q = nearest_quotient(S(t, j), S(t, t));
                if (!(q == Z(0))) col_submul(j, t, q);
                if (!(S(t, j) == Z(0))) {
                    col_swap(t, j);
                    if (S(t, t) < Z(0)) row_negate(t);
                    disturbed = true;
                }
            }
            if (disturbed) continue;
            // pivot must divide the whole remaining block for the chain to hold
            bool fixed_up = false;
            for (long i = t + 1; i < r_ && !fixed_up; ++i)
                for (long j = t + 1; j < c_ && !fixed_up; ++j) {
                    if (S(i, j) == Z(0)) continue;
                    if (!(S(i, j) % S(t, t) == Z(0))) {
                        row_add(t, i);
                        fixed_up = true;
                    }
                }
            if (!fixed_up) return;
        }
    }

    long r_, c_;
    std::vector<Z> s_;
    bool track_;
    std::vector<Z> u_, uinv_, v_, vinv_;
};

bool fits_int64(const IntegerMatrix& a) {
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!a(i, j).fits_slong_p()) return false;
    return true;
}

std::vector<C64> to_c64(const IntegerMatrix& a) {
    std::vector<C64> out(static_cast<size_t>(a.rows()) * a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) out[static_cast<size_t>(i) * a.cols() + j] = C64(a(i, j).get_si());
    return out;
}

std::vector<mpz_class> to_mpz(const IntegerMatrix& a) {
    std::vector<mpz_class> out(static_cast<size_t>(a.rows()) * a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) out[static_cast<size_t>(i) * a.cols() + j] = a(i, j);
    return out;
}

IntegerMatrix from_flat_c64(const std::vector<C64>& f, long r, long c) {
    IntegerMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = Int(static_cast<long>(f[static_cast<size_t>(i) * c + j].v));
    return m;
}

IntegerMatrix from_flat_mpz(const std::vector<mpz_class>& f, long r, long c) {
    IntegerMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = f[static_cast<size_t>(i) * c + j];
    return m;
}

}  // namespace

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> out;
    for (long i = 0; i < std::min(s.rows(), s.cols()); ++i)
        if (s(i, i) != 0) out.push_back(s(i, i));
    return out;
}

long SmithDecomposition::rank() const {
    return static_cast<long>(invariant_factors().size());
}

bool SmithDecomposition::verify(const IntegerMatrix& a) const {
    if (u * a * v != s) return false;
    Int prev = 0;
    for (long i = 0; i < std::min(s.rows(), s.cols()); ++i) {
        const Int& d = s(i, i);
        if (d < 0) return false;
        if (prev != 0 && d != 0 && d % prev != 0) return false;
        if (prev == 0 && i > 0 && d != 0) return false;  // zeros must come last
        prev = d;
    }
    for (long i = 0; i < s.rows(); ++i)
        for (long j = 0; j < s.cols(); ++j)
            if (i != j && s(i, j) != 0) return false;
    Int du = determinant(u), dv = determinant(v);
    return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

SmithTransforms smith_with_inverses(const IntegerMatrix& a) {
    if (fits_int64(a)) {
        try {
            SnfCore<C64> core(a.rows(), a.cols(), to_c64(a), true);
            core.run();
            return {from_flat_c64(core.u(), a.rows(), a.rows()), from_flat_c64(core.s(), a.rows(), a.cols()),
                    from_flat_c64(core.v(), a.cols(), a.cols()), from_flat_c64(core.uinv(), a.rows(), a.rows()),
                    from_flat_c64(core.vinv(), a.cols(), a.cols())};
        } catch (const Overflow64&) {
            // retry below with arbitrary precision
        }
    }
    SnfCore<mpz_class> core(a.rows(), a.cols(), to_mpz(a), true);
    core.run();
    return {from_flat_mpz(core.u(), a.rows(), a.rows()), from_flat_mpz(core.s(), a.rows(), a.cols()),
            from_flat_mpz(core.v(), a.cols(), a.cols()), from_flat_mpz(core.uinv(), a.rows(), a.rows()),
            from_flat_mpz(core.vinv(), a.cols(), a.cols())};
}

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
    SmithTransforms t = smith_with_inverses(a);
    return {std::move(t.u), std::move(t.s), std::move(t.v)};
}

std::vector<Int> smith_diagonal(const IntegerMatrix& a) {
    long n = std::min(a.rows(), a.cols());
    std::vector<Int> diag;
    diag.reserve(n);
    if (fits_int64(a)) {
        try {
            SnfCore<C64> core(a.rows(), a.cols(), to_c64(a), false);
            core.run();
            for (long i = 0; i < n; ++i) diag.emplace_back(static_cast<long>(core.s()[static_cast<size_t>(i) * a.cols() + i].v));
            return diag;
        } catch (const Overflow64&) {
            diag.clear();
        }
    }
    SnfCore<mpz_class> core(a.rows(), a.cols(), to_mpz(a), false);
    core.run();
    for (long i = 0; i < n; ++i) diag.push_back(core.s()[static_cast<size_t>(i) * a.cols() + i]);
    return diag;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination (Bareiss)

long rational_rank(const IntegerMatrix& a) {
    long r = a.rows(), c = a.cols();
    std::vector<Int> m = to_mpz(a);
    auto at = [&](long i, long j) -> Int& { return m[static_cast<size_t>(i) * c + j]; };
    Int prev = 1;
    long rank = 0;
    for (long col = 0; col < c && rank < r; ++col) {
        long piv = -1;
        for (long i = rank; i < r; ++i)
            if (at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != rank)
            for (long j = 0; j < c; ++j) std::swap(at(piv, j), at(rank, j));
        for (long i = rank + 1; i < r; ++i) {
            for (long j = col + 1; j < c; ++j) {
                Int num = at(rank, col) * at(i, j) - at(i, col) * at(rank, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, col) = 0;
        }
        prev = at(rank, col);
        ++rank;
    }
    return rank;
}

Int determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("determinant: not square");
    long n = a.rows();
    if (n == 0) return 1;
    std::vector<Int> m = to_mpz(a);
    auto at = [&](long i, long j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            long piv = -1;
            for (long i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(at(piv, j), at(k, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Int num = at(k, k) * at(i, j) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

// ---------------------------------------------------------------------------
// Exterior powers and characteristic polynomials

Int binomial(long n, long l) {
    if (l < 0 || l > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(l));
    return b;
}

std::vector<std::vector<long>> index_subsets(long n, long l) {
    std::vector<std::vector<long>> out;
    if (l < 0 || l > n) return out;
    std::vector<long> cur(l);
    for (long i = 0; i < l; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        long i = l - 1;
        while (i >= 0 && cur[i] == n - l + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (long j = i + 1; j < l; ++j) cur[j] = cur[j - 1] + 1;
    }
    if (l == 0) out.assign(1, {});
    return out;
}

namespace {

// lexicographic rank of a sorted subset among l-subsets of {0..n-1}
long subset_rank(const std::vector<long>& s, long n) {
    long l = static_cast<long>(s.size());
    long rank = 0;
    long prev = -1;
    for (long pos = 0; pos < l; ++pos) {
        for (long x = prev + 1; x < s[pos]; ++x) rank += binomial(n - 1 - x, l - 1 - pos).get_si();
        prev = s[pos];
    }
    return rank;
}

}  // namespace

IntegerMatrix exterior_power(const IntegerMatrix& a, long l, long cap) {
    if (a.rows() != a.cols()) throw InputError("exterior_power: not square");
    long n = a.rows();
    if (l < 0 || l > n) throw InputError("exterior_power: degree out of range");
    if (binomial(n, l) > cap)
        throw DimensionOverflow("exterior_power: C(" + std::to_string(n) + "," + std::to_string(l) +
                                ") exceeds cap " + std::to_string(cap));
    if (l == 0) {
        IntegerMatrix one(1, 1);
        one(0, 0) = 1;
        return one;
    }

    // Build minor tables level by level: a t x t minor expands along its last
    // row into t minors of the previous level (Laplace).
    IntegerMatrix prev(1, 1);
    prev(0, 0) = 1;
    for (long t = 1; t <= l; ++t) {
        std::vector<std::vector<long>> subs = index_subsets(n, t);
        long dim = static_cast<long>(subs.size());
        IntegerMatrix cur(dim, dim);
        // ranks of sub-subsets obtained by deleting one element
        std::vector<std::vector<long>> drop_rank(dim, std::vector<long>(t));
        for (long b = 0; b < dim; ++b) {
            std::vector<long> reduced(subs[b].begin(), subs[b].end() - 1);
            for (long pos = t - 1; pos >= 0; --pos) {
                drop_rank[b][pos] = subset_rank(reduced, n);
                if (pos > 0) reduced[pos - 1] = subs[b][pos];  // restore order: remove element pos-1 instead
            }
        }
        for (long ai = 0; ai < dim; ++ai) {
            const std::vector<long>& rows = subs[ai];
            long last_row = rows.back();
            std::vector<long> rows_head(rows.begin(), rows.end() - 1);
            long head_rank = subset_rank(rows_head, n);
            for (long b = 0; b < dim; ++b) {
                const std::vector<long>& cols = subs[b];
                Int acc = 0;
                for (long pos = 0; pos < t; ++pos) {
                    const Int& entry = a(last_row, cols[pos]);
                    if (entry == 0) continue;
                    const Int& sub = prev(head_rank, drop_rank[b][pos]);
                    if (sub == 0) continue;
                    if (((t - 1) + pos) % 2 == 0)
                        acc += entry * sub;
                    else
                        acc -= entry * sub;
                }
                cur(ai, b) = acc;
            }
        }
        prev = std::move(cur);
    }
    return prev;
}

std::vector<Int> characteristic_polynomial(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw InputError("characteristic_polynomial: not square");
    long n = a.rows();
    std::vector<Int> coeffs(n + 1);
    coeffs[n] = 1;
    if (n == 0) return coeffs;
    // Faddeev-LeVerrier; every division is exact over the integers.
    // Invariant entering step k: m == A * M_{k-1}.
    IntegerMatrix m = a;
    Int c = -a.trace();
    coeffs[n - 1] = c;
    for (long k = 2; k <= n; ++k) {
        for (long i = 0; i < n; ++i) m(i, i) += c;
        m = a * m;
        Int tr = m.trace();
        Int ck;
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        c = -ck;
        coeffs[n - k] = c;
    }
    return coeffs;
}

}  // namespace crystalk
