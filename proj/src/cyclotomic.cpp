#include "starkrankin/cyclotomic.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace starkrankin {

namespace {

using Poly = std::vector<Rat>; // ascending coefficients

void trim(Poly &p)
{
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

Poly poly_mul(const Poly &a, const Poly &b)
{
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Division of a by monic b; returns quotient, leaves remainder in a.
Poly poly_divmod_monic(Poly &a, const Poly &b)
{
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 1, Rat(0));
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
        std::size_t shift = a.size() - b.size();
        Rat c = a.back();
        if (c == 0) {
            a.pop_back();
            continue;
        }
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        trim(a);
        if (a.size() == 1 && a[0] == 0)
            break;
    }
    trim(q);
    return q;
}

Poly poly_mod(Poly a, const Poly &mod)
{
    poly_divmod_monic(a, mod);
    return a;
}

} // namespace

const std::vector<Rat> &CyclotomicElement::cyclotomic_polynomial(long m)
{
    static std::map<long, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(m);
    if (it != cache.end())
        return it->second;
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::function<void(long)> build = [&](long n) {
        if (cache.count(n))
            return;
        Poly num(n + 1, Rat(0));
        num[0] = -1;
        num[n] = 1;
        for (long d : divisors(n)) {
            if (d == n)
                continue;
            build(d);
            Poly tmp = num;
            num = poly_divmod_monic(tmp, cache.at(d));
        }
        cache.emplace(n, std::move(num));
    };
    build(m);
    return cache.at(m);
}

CyclotomicElement CyclotomicElement::zeta(long m, long k)
{
    if (m < 1)
        throw std::domain_error("zeta: order must be positive");
    k %= m;
    if (k < 0)
        k += m;
    const Poly &mod = cyclotomic_polynomial(m);
    long deg = static_cast<long>(mod.size()) - 1;
    Poly x(k + 1, Rat(0));
    x[k] = 1;
    x = poly_mod(std::move(x), mod);
    x.resize(deg, Rat(0));
    return CyclotomicElement(m, std::move(x));
}

bool CyclotomicElement::is_zero() const
{
    for (const Rat &c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicElement::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rat CyclotomicElement::to_rational() const
{
    if (!is_rational())
        throw std::domain_error("to_rational: element is not rational");
    return coeffs_[0];
}

CyclotomicElement CyclotomicElement::operator-() const
{
    std::vector<Rat> c = coeffs_;
    for (Rat &x : c)
        x = -x;
    return CyclotomicElement(order_, std::move(c));
}

void CyclotomicElement::align(CyclotomicElement &a, CyclotomicElement &b)
{
    if (a.order_ == b.order_)
        return;
    long m = lcm_ll(a.order_, b.order_);
    a = a.promoted(m);
    b = b.promoted(m);
}

CyclotomicElement CyclotomicElement::promoted(long m) const
{
    if (m == order_)
        return *this;
    if (m % order_ != 0)
        throw std::domain_error("promoted: current order must divide target order");
    const Poly &mod = cyclotomic_polynomial(m);
    long deg = static_cast<long>(mod.size()) - 1;
    long step = m / order_;
    Poly acc(deg, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        long e = (static_cast<long>(i) * step) % m;
        Poly x(e + 1, Rat(0));
        x[e] = coeffs_[i];
        x = poly_mod(std::move(x), mod);
        for (std::size_t j = 0; j < x.size(); ++j)
            acc[j] += x[j];
    }
    return CyclotomicElement(m, std::move(acc));
}

CyclotomicElement CyclotomicElement::simplified() const
{
    if (order_ > 1 && is_rational())
        return CyclotomicElement(coeffs_[0]);
    return *this;
}

CyclotomicElement CyclotomicElement::operator+(const CyclotomicElement &o) const
{
    CyclotomicElement a = *this, b = o;
    align(a, b);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        a.coeffs_[i] += b.coeffs_[i];
    return a;
}

CyclotomicElement CyclotomicElement::operator-(const CyclotomicElement &o) const
{
    return *this + (-o);
}

CyclotomicElement CyclotomicElement::operator*(const CyclotomicElement &o) const
{
    CyclotomicElement a = *this, b = o;
    align(a, b);
    const Poly &mod = cyclotomic_polynomial(a.order_);
    long deg = static_cast<long>(mod.size()) - 1;
    Poly prod = poly_mul(a.coeffs_, b.coeffs_);
    prod = poly_mod(std::move(prod), mod);
    prod.resize(deg, Rat(0));
    return CyclotomicElement(a.order_, std::move(prod));
}

CyclotomicElement CyclotomicElement::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse: zero has no inverse");
    if (is_rational())
        return CyclotomicElement(Rat(1) / coeffs_[0]).promoted(order_);
    // Extended Euclid in Q[x] against the cyclotomic polynomial.
    const Poly &mod = cyclotomic_polynomial(order_);
    long deg = static_cast<long>(mod.size()) - 1;
    Poly r0 = mod, r1 = coeffs_;
    trim(r1);
    Poly s0{Rat(0)}, s1{Rat(1)}; // coefficients of *this in the Bezout identity
    while (!(r1.size() == 1 && r1[0] == 0)) {
        // r0 = q*r1 + r; non-monic division
        Rat lead = r1.back();
        Poly r1m = r1;
        for (Rat &c : r1m)
            c /= lead;
        Poly a = r0;
        Poly q = poly_divmod_monic(a, r1m); // r0 = (q/lead)*r1 + a
        for (Rat &c : q)
            c /= lead;
        // new remainder a, new s = s0 - q*s1
        Poly qs = poly_mul(q, s1);
        Poly s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rat(0));
        for (std::size_t i = 0; i < qs.size(); ++i)
            s2[i] -= qs[i];
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(a);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (constant, nonzero since Phi is irreducible and *this != 0)
    if (r0.size() != 1 || r0[0] == 0)
        throw std::logic_error("inverse: unexpected non-constant gcd");
    for (Rat &c : s0)
        c /= r0[0];
    s0 = poly_mod(std::move(s0), mod);
    s0.resize(deg, Rat(0));
    return CyclotomicElement(order_, std::move(s0));
}

CyclotomicElement CyclotomicElement::operator/(const CyclotomicElement &o) const
{
    return *this * o.inverse();
}

CyclotomicElement CyclotomicElement::pow(long e) const
{
    CyclotomicElement base = e >= 0 ? *this : inverse();
    unsigned long k = e >= 0 ? e : -e;
    CyclotomicElement r(Rat(1));
    while (k) {
        if (k & 1)
            r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r.promoted(order_);
}

bool CyclotomicElement::operator==(const CyclotomicElement &o) const
{
    CyclotomicElement a = *this, b = o;
    align(a, b);
    return a.coeffs_ == b.coeffs_;
}

CyclotomicElement CyclotomicElement::galois(long a) const
{
    long m = order_;
    a %= m;
    if (a < 0)
        a += m;
    if (gcd_ll(a, m) != 1)
        throw std::domain_error("galois: exponent not coprime to the order");
    const Poly &mod = cyclotomic_polynomial(m);
    long deg = static_cast<long>(mod.size()) - 1;
    Poly acc(deg, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        long e = (static_cast<long>(i) * a) % m;
        Poly x(e + 1, Rat(0));
        x[e] = coeffs_[i];
        x = poly_mod(std::move(x), mod);
        for (std::size_t j = 0; j < x.size(); ++j)
            acc[j] += x[j];
    }
    return CyclotomicElement(m, std::move(acc));
}

CyclotomicElement CyclotomicElement::conj() const
{
    if (order_ <= 2)
        return *this;
    return galois(order_ - 1);
}

BigComplex CyclotomicElement::to_complex(long prec_bits) const
{
    BigComplex acc(prec_bits);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        BigComplex term = BigComplex::root_of_unity(static_cast<long>(i), order_, prec_bits);
        acc = acc + BigComplex::from_rat(coeffs_[i], prec_bits) * term;
    }
    return acc;
}

std::string CyclotomicElement::to_string() const
{
    if (is_rational())
        return coeffs_[0].get_str();
    std::ostringstream os;
    os << "cyc" << order_ << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            os << ",";
        os << coeffs_[i].get_str();
    }
    os << "]";
    return os.str();
}

} // namespace starkrankin
