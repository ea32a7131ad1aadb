#ifndef STARKRANKIN_QUADFIELD_HPP
#define STARKRANKIN_QUADFIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "starkrankin/numutil.hpp"

namespace starkrankin {

// Imaginary quadratic field of discriminant -D_K (fundamental).
struct ImagQuadField {
    long D_K;
    long w_K;                 // number of roots of unity: 6, 4 or 2
    bool small_disc_warning;  // set when D_K < 7

    explicit ImagQuadField(long D);
};

// Positive definite integral binary quadratic form a x^2 + b xy + c y^2.
struct QuadForm {
    Int a, b, c;

    QuadForm() : a(1), b(0), c(0) {}
    QuadForm(Int a_, Int b_, Int c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {}

    Int disc() const { return b * b - 4 * a * c; }
    bool is_reduced() const;
    QuadForm reduced() const;
    QuadForm inverse() const { return QuadForm(a, -b, c).reduced(); }
    bool is_principal() const;
    std::string to_string() const;

    // principal form of the given negative discriminant
    static QuadForm identity(const Int &disc);
    // Gaussian composition (inputs must share a discriminant and be primitive)
    static QuadForm compose(const QuadForm &f, const QuadForm &g);
    QuadForm pow(long e) const;

    bool operator==(const QuadForm &o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator!=(const QuadForm &o) const { return !(*this == o); }
    bool operator<(const QuadForm &o) const
    {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// Form class group of a negative discriminant, with cyclic decomposition
// d_1 | d_2 | ... and genus number [Cl : Cl^2].
class ClassGroup {
  public:
    explicit ClassGroup(const Int &disc);

    const Int &disc() const { return disc_; }
    long h() const { return h_; }
    long genus_number() const { return genus_; }
    const std::vector<QuadForm> &elements() const { return elements_; }
    const std::vector<QuadForm> &generators() const { return generators_; }
    const std::vector<long> &orders() const { return orders_; }
    QuadForm principal() const { return QuadForm::identity(disc_); }

    // exponent vector of a class on the cyclic generators (e_i mod d_i)
    std::vector<long> decompose(const QuadForm &f) const;
    long order_of(const QuadForm &f) const;

  private:
    Int disc_;
    long h_ = 0;
    long genus_ = 1;
    std::vector<QuadForm> elements_;
    std::vector<QuadForm> generators_;
    std::vector<long> orders_;
    std::vector<std::vector<long>> dlog_; // exponent vector per element index
    long index_of(const QuadForm &f) const;
};

enum class SplitKind { split, inert, ramified };

struct PrimeSplitting {
    long q = 0;
    SplitKind kind = SplitKind::inert;
    QuadForm prime;      // unreduced representative (q, b, *) when split/ramified
    QuadForm conjugate;  // (q, -b, *) normalized; equals prime when ramified
};

// Splitting of q in the order of conductor c inside K; requires gcd(q, c) = 1.
PrimeSplitting prime_splitting(const ImagQuadField &K, long c, long q);

// One prime-power factor of an integral ideal: e copies of a prime above q.
// which = 0 selects the distinguished prime (or the ramified/inert prime),
// which = 1 its conjugate.  Inert factors carry even e (the ideal (q^{e/2})).
struct PrimePowerIdeal {
    long q = 0;
    SplitKind kind = SplitKind::inert;
    int which = 0;
    long e = 0;
};

struct FactoredIdeal {
    long D_K = 0;
    long c = 1;
    std::vector<PrimePowerIdeal> parts; // sorted by q, at most two entries per q

    Int norm() const;
    FactoredIdeal conj() const;
    bool is_unit() const { return parts.empty(); }
    std::string to_string() const;
};

// All integral ideals of the order of conductor c with norm n, gcd(n, c) = 1.
std::vector<FactoredIdeal> ideals_of_norm(const ImagQuadField &K, long c, long n);

// Ideal class of a factored ideal as a reduced form of discriminant -D_K c^2.
QuadForm ideal_class(const ImagQuadField &K, long c, const FactoredIdeal &ideal);

// Cyclic ideal N with O_K/N isomorphic to Z/N_E; nullopt when no such ideal exists.
std::optional<FactoredIdeal> heegner_ideal(const ImagQuadField &K, long N_E);

// Element x + y*sqrt(-D) of K with rational coordinates.
struct QuadRat {
    Rat x, y;
    long D = 0;

    QuadRat() = default;
    QuadRat(Rat x_, Rat y_, long D_) : x(std::move(x_)), y(std::move(y_)), D(D_) {}

    Rat norm() const { return x * x + Rat(D) * y * y; }
    QuadRat conj() const { return QuadRat(x, -y, D); }
    QuadRat operator*(const QuadRat &o) const;
    QuadRat operator+(const QuadRat &o) const;
    QuadRat operator-(const QuadRat &o) const;
    QuadRat pow(long e) const;
    bool operator==(const QuadRat &o) const { return x == o.x && y == o.y && D == o.D; }
    bool is_rational() const { return y == 0; }
    std::string to_string() const;
};

// Generator of the h-th power of the prime ideal attached to a form (q, b, *)
// of discriminant -D_K c^2; the power must be principal.  The ideal model is
// [q, (b + sqrt(-D_K c^2))/2], so the generator satisfies x = b*y (mod 2 q^h)
// in coordinates gamma = (x + y sqrt(-D))/2.
QuadRat principal_generator(const ImagQuadField &K, long c, const QuadForm &prime_form, long h);

} // namespace starkrankin

#endif
