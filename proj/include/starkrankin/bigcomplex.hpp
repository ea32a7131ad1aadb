#ifndef STARKRANKIN_BIGCOMPLEX_HPP
#define STARKRANKIN_BIGCOMPLEX_HPP

#include <string>

#include <mpfr.h>

#include "starkrankin/numutil.hpp"

namespace starkrankin {

// Arbitrary-precision real number backed by MPFR.  Binary operations carry
// at least the larger of the two operand precisions.
class BigFloat {
  public:
    static constexpr long default_precision = 256;

    BigFloat() : BigFloat(default_precision) {}
    explicit BigFloat(long prec_bits) { mpfr_init2(v_, prec_bits); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat &o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigFloat(BigFloat &&o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    BigFloat &operator=(BigFloat o) { mpfr_swap(v_, o.v_); return *this; }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_long(long x, long prec = default_precision);
    static BigFloat from_int(const Int &x, long prec = default_precision);
    static BigFloat from_rat(const Rat &x, long prec = default_precision);
    static BigFloat from_double(double x, long prec = default_precision);
    static BigFloat pi(long prec = default_precision);

    long precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(std::size_t digits = 30) const;

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat &o) const;
    BigFloat operator-(const BigFloat &o) const;
    BigFloat operator*(const BigFloat &o) const;
    BigFloat operator/(const BigFloat &o) const;

    bool operator<(const BigFloat &o) const { return mpfr_cmp(v_, o.v_) < 0; }
    bool operator>(const BigFloat &o) const { return mpfr_cmp(v_, o.v_) > 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    BigFloat abs() const;
    BigFloat sqrt() const;
    BigFloat sin() const;
    BigFloat cos() const;
    BigFloat exp() const;
    BigFloat log() const;
    BigFloat pow_long(long e) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

// Complex number with BigFloat real and imaginary parts.
class BigComplex {
  public:
    BigComplex() = default;
    BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
    explicit BigComplex(long prec) : re_(prec), im_(prec) {}

    static BigComplex from_rat(const Rat &x, long prec = BigFloat::default_precision);
    // e^{2*pi*i * a/m}
    static BigComplex root_of_unity(long a, long m, long prec = BigFloat::default_precision);

    const BigFloat &real() const { return re_; }
    const BigFloat &imag() const { return im_; }

    BigComplex operator+(const BigComplex &o) const { return {re_ + o.re_, im_ + o.im_}; }
    BigComplex operator-(const BigComplex &o) const { return {re_ - o.re_, im_ - o.im_}; }
    BigComplex operator-() const { return {-re_, -im_}; }
    BigComplex operator*(const BigComplex &o) const;
    BigComplex operator/(const BigComplex &o) const;
    BigComplex conj() const { return {re_, -im_}; }

    BigFloat abs() const { return (re_ * re_ + im_ * im_).sqrt(); }
    // Distance to another complex value, as a double (for tolerance checks).
    double dist(const BigComplex &o) const { return (*this - o).abs().to_double(); }
    double arg() const;

  private:
    BigFloat re_, im_;
};

} // namespace starkrankin

#endif
