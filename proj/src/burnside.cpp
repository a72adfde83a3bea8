#include "crystalk/burnside.hpp"

#include <numeric>
#include <sstream>

#include "crystalk/lattice.hpp"

namespace crystalk {

BurnsideElement BurnsideElement::basis(long m, long h) {
    if (h < 1 || m % h != 0) throw NotADivisor(h, m);
    BurnsideElement x(m);
    x.coeffs_[h] = 1;
    return x;
}

Int BurnsideElement::coefficient(long h) const {
    auto it = coeffs_.find(h);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void BurnsideElement::set_coefficient(long h, const Int& value) {
    if (h < 1 || m_ % h != 0) throw NotADivisor(h, m_);
    if (value == 0)
        coeffs_.erase(h);
    else
        coeffs_[h] = value;
}

void BurnsideElement::add_to_coefficient(long h, const Int& value) {
    set_coefficient(h, coefficient(h) + value);
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& other) const {
    if (m_ != other.m_) throw InputError("Burnside sum: mismatched group orders");
    BurnsideElement out = *this;
    for (const auto& [h, c] : other.coeffs_) out.add_to_coefficient(h, c);
    return out;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& other) const {
    if (m_ != other.m_) throw InputError("Burnside difference: mismatched group orders");
    BurnsideElement out = *this;
    for (const auto& [h, c] : other.coeffs_) out.add_to_coefficient(h, -c);
    return out;
}

BurnsideElement BurnsideElement::scaled(const Int& c) const {
    BurnsideElement out(m_);
    if (c == 0) return out;
    for (const auto& [h, a] : coeffs_) out.coeffs_[h] = a * c;
    return out;
}

bool BurnsideElement::operator==(const BurnsideElement& other) const {
    return m_ == other.m_ && coeffs_ == other.coeffs_;
}

std::string BurnsideElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [h, c] : coeffs_) {
        if (!first) os << " + ";
        os << c.get_str() << "*[G/G_" << h << "]";
        first = false;
    }
    return os.str();
}

MarkVector marks_of(const BurnsideElement& x) {
    long m = x.group_order();
    MarkVector v;
    v.m = m;
    for (long d : divisors(m)) {
        Int mark = 0;
        for (const auto& [h, c] : x.coefficients())
            if (h % d == 0) mark += c * (m / h);
        v.marks[d] = mark;
    }
    return v;
}

BurnsideElement from_marks(const MarkVector& v) {
    long m = v.m;
    std::vector<long> divs = divisors(m);
    BurnsideElement x(m);
    // back-substitute from the top subgroup down
    for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
        long d = *it;
        auto mk = v.marks.find(d);
        Int target = mk == v.marks.end() ? Int(0) : mk->second;
        for (const auto& [h, c] : x.coefficients())
            if (h % d == 0) target -= c * (m / h);
        // remaining contribution is a_d * (m/d)
        Int q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), target.get_mpz_t(), Int(m / d).get_mpz_t());
        if (r != 0)
            throw NotIntegral("from_marks: mark vector is not realizable (divisor " + std::to_string(d) +
                              ", residue " + r.get_str() + ")");
        if (q != 0) x.set_coefficient(d, q);
    }
    return x;
}

BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
    if (x.group_order() != y.group_order()) throw InputError("Burnside product: mismatched group orders");
    MarkVector mx = marks_of(x), my = marks_of(y);
    MarkVector prod;
    prod.m = mx.m;
    for (const auto& [d, mark] : mx.marks) prod.marks[d] = mark * my.marks.at(d);
    return from_marks(prod);  // NotIntegral here would be an arithmetic bug
}

BurnsideElement induce_from_sylow(const BurnsideElement& x, long m) {
    long q = x.group_order();
    if (q < 2 || m % q != 0)
        throw NotSylow("induce_from_sylow: " + std::to_string(q) + " is not a subgroup order of Z/" +
                       std::to_string(m));
    auto factors = factorize(q);
    if (factors.size() != 1 || (m / q) % factors[0].first == 0)
        throw NotSylow("induce_from_sylow: " + std::to_string(q) +
                       " is not a maximal prime power dividing " + std::to_string(m));
    // G x_{G[i]} (G[i]/G_h) is the transitive G-set G/G_h.
    BurnsideElement out(m);
    for (const auto& [h, c] : x.coefficients()) out.set_coefficient(h, c);
    return out;
}

Int quot(const BurnsideElement& x) {
    Int sum = 0;
    for (const auto& [h, c] : x.coefficients()) sum += c;
    return sum;
}

Int kg(const BurnsideElement& x) {
    Int sum = 0;
    for (const auto& [h, c] : x.coefficients()) sum += c * h;
    return sum;
}

Int cardinality(const BurnsideElement& x) {
    Int sum = 0;
    long m = x.group_order();
    for (const auto& [h, c] : x.coefficients()) sum += c * (m / h);
    return sum;
}

Int perm_dim_fixed(const BurnsideElement& x, long d) {
    long m = x.group_order();
    if (d < 1 || m % d != 0) throw NotADivisor(d, m);
    Int sum = 0;
    for (const auto& [h, c] : x.coefficients()) {
        long g = std::gcd(h, d);
        sum += c * ((m / h) * g / d);
    }
    return sum;
}

}  // namespace crystalk
