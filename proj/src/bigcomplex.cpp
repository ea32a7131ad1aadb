#include "starkrankin/bigcomplex.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

namespace starkrankin {

namespace {
long max_prec(const BigFloat &a, const BigFloat &b)
{
    return std::max(a.precision(), b.precision());
}
} // namespace

BigFloat BigFloat::from_long(long x, long prec)
{
    BigFloat r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_int(const Int &x, long prec)
{
    BigFloat r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_rat(const Rat &x, long prec)
{
    BigFloat r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::from_double(double x, long prec)
{
    BigFloat r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(long prec)
{
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::string BigFloat::to_string(std::size_t digits) const
{
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%zuRg", digits);
    std::vector<char> buf(digits + 64);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

BigFloat BigFloat::operator-() const
{
    BigFloat r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat &o) const
{
    BigFloat r(max_prec(*this, o));
    mpfr_add(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat &o) const
{
    BigFloat r(max_prec(*this, o));
    mpfr_sub(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat &o) const
{
    BigFloat r(max_prec(*this, o));
    mpfr_mul(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat &o) const
{
    BigFloat r(max_prec(*this, o));
    mpfr_div(r.v_, v_, o.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const
{
    BigFloat r(precision());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sqrt() const
{
    BigFloat r(precision());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::sin() const
{
    BigFloat r(precision());
    mpfr_sin(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::cos() const
{
    BigFloat r(precision());
    mpfr_cos(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::exp() const
{
    BigFloat r(precision());
    mpfr_exp(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::log() const
{
    BigFloat r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pow_long(long e) const
{
    BigFloat r(precision());
    mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
    return r;
}

BigComplex BigComplex::from_rat(const Rat &x, long prec)
{
    return {BigFloat::from_rat(x, prec), BigFloat(prec)};
}

BigComplex BigComplex::root_of_unity(long a, long m, long prec)
{
    a %= m;
    if (a < 0)
        a += m;
    BigFloat angle = BigFloat::pi(prec) * BigFloat::from_long(2 * a, prec) /
                     BigFloat::from_long(m, prec);
    return {angle.cos(), angle.sin()};
}

BigComplex BigComplex::operator*(const BigComplex &o) const
{
    return {re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_};
}

BigComplex BigComplex::operator/(const BigComplex &o) const
{
    BigFloat n = o.re_ * o.re_ + o.im_ * o.im_;
    return {(re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n};
}

double BigComplex::arg() const
{
    return std::atan2(im_.to_double(), re_.to_double());
}

} // namespace starkrankin
