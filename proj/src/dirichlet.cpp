#include "starkrankin/dirichlet.hpp"

#include <map>
#include <stdexcept>

namespace starkrankin {

std::vector<std::pair<long, long>> unit_group_generators(long n)
{
    if (n < 1)
        throw std::domain_error("unit_group_generators: modulus must be positive");
    std::vector<std::pair<long, long>> gens;
    for (auto [p, e] : factorize(n)) {
        long pe = 1;
        for (int i = 0; i < e; ++i)
            pe *= p;
        long rest = n / pe;
        auto crt = [&](long g) {
            // residue congruent to g mod pe and to 1 mod rest
            if (rest == 1)
                return g % n;
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), Int(rest).get_mpz_t(), Int(pe).get_mpz_t()) == 0)
                throw std::logic_error("crt: moduli not coprime");
            Int r = (Int(g) - 1) * inv % pe;
            Int val = (r * rest + 1) % n;
            long out = val.get_si();
            return out < 0 ? out + n : out;
        };
        if (p == 2) {
            if (e == 1)
                continue;
            if (e == 2) {
                gens.emplace_back(crt(3), 2);
            } else {
                gens.emplace_back(crt(pe - 1), 2);
                gens.emplace_back(crt(5), pe / 4);
            }
        } else {
            gens.emplace_back(crt(primitive_root(pe)), euler_phi(pe));
        }
    }
    return gens;
}

namespace {

long cyc_root_order(const Cyc &v)
{
    Cyc x = v;
    for (long k = 1; k <= 2 * v.order() + 2; ++k) {
        if (x == Cyc(1))
            return k;
        x = x * v;
    }
    throw std::domain_error("value is not a root of unity");
}

} // namespace

void DirichletCharacter::finalize()
{
    long n = modulus_;
    // order
    order_ = 1;
    for (long a = 0; a < n; ++a)
        if (!values_[a].is_zero() && gcd_ll(a == 0 ? n : a, n) == 1)
            order_ = lcm_ll(order_, cyc_root_order(values_[a]));
    if (n == 1)
        order_ = 1;
    // parity
    even_ = n == 1 || values_[(n - 1) % n] == Cyc(1);
    // conductor: smallest f | n with chi trivial on {a = 1 mod f, gcd(a,n)=1}
    conductor_ = n;
    for (long f : divisors(n)) {
        bool ok = true;
        for (long a = 1; a < n && ok; ++a) {
            if (gcd_ll(a, n) != 1 || a % f != 1 % f)
                continue;
            if (!(values_[a] == Cyc(1)))
                ok = false;
        }
        if (ok) {
            conductor_ = f;
            break;
        }
    }
    // generator presentation, derived from the value table
    gens_.clear();
    for (auto [g, d] : unit_group_generators(n)) {
        Generator gen{g, d, 0};
        Cyc zd = Cyc::zeta(d);
        Cyc val = values_[g % n];
        Cyc acc(1);
        bool found = false;
        for (long k = 0; k < d; ++k) {
            if (acc == val) {
                gen.exponent = k;
                found = true;
                break;
            }
            acc = acc * zd;
        }
        if (!found)
            throw std::logic_error("finalize: generator value is not in the expected cyclic group");
        gens_.push_back(gen);
    }
}

DirichletCharacter DirichletCharacter::trivial(long n)
{
    if (n < 1)
        throw std::domain_error("trivial: modulus must be positive");
    DirichletCharacter chi;
    chi.modulus_ = n;
    chi.values_.assign(n, Cyc(0));
    if (n == 1) {
        chi.values_[0] = Cyc(1);
    } else {
        for (long a = 0; a < n; ++a)
            if (gcd_ll(a == 0 ? n : a, n) == 1 && a != 0)
                chi.values_[a] = Cyc(1);
    }
    chi.finalize();
    return chi;
}

DirichletCharacter DirichletCharacter::kronecker(long disc)
{
    long n = disc < 0 ? -disc : disc;
    if (n == 0)
        throw std::domain_error("kronecker: discriminant must be nonzero");
    DirichletCharacter chi;
    chi.modulus_ = n == 1 ? 1 : n;
    chi.values_.assign(chi.modulus_, Cyc(0));
    if (chi.modulus_ == 1) {
        chi.values_[0] = Cyc(1);
    } else {
        for (long a = 1; a < n; ++a)
            if (gcd_ll(a, n) == 1)
                chi.values_[a] = Cyc(Rat(kronecker_symbol(disc, a)));
    }
    chi.finalize();
    return chi;
}

DirichletCharacter DirichletCharacter::from_exponents(long n, const std::vector<long> &exponents)
{
    auto gens = unit_group_generators(n);
    if (exponents.size() != gens.size())
        throw std::domain_error("from_exponents: exponent count does not match generator count");
    DirichletCharacter chi;
    chi.modulus_ = n;
    chi.values_.assign(n, Cyc(0));
    std::map<long, Cyc> table;
    table[1 % n] = Cyc(1);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto [g, d] = gens[i];
        Cyc step = Cyc::zeta(d, exponents[i]);
        std::map<long, Cyc> next;
        long gk = 1 % n;
        Cyc val(1);
        for (long k = 0; k < d; ++k) {
            for (const auto &[r, v] : table) {
                long idx = static_cast<long>((static_cast<__int128>(r) * gk) % n);
                next.emplace(idx, v * val);
            }
            gk = static_cast<long>((static_cast<__int128>(gk) * g) % n);
            val = val * step;
        }
        table = std::move(next);
    }
    for (const auto &[r, v] : table)
        chi.values_[r] = v;
    if (n == 1)
        chi.values_[0] = Cyc(1);
    chi.finalize();
    return chi;
}

DirichletCharacter DirichletCharacter::induced(const DirichletCharacter &chi, long n)
{
    DirichletCharacter prim = chi.primitive_character();
    if (n % prim.modulus() != 0)
        throw std::domain_error("induced: conductor must divide the target modulus");
    DirichletCharacter out;
    out.modulus_ = n;
    out.values_.assign(n, Cyc(0));
    if (n == 1) {
        out.values_[0] = Cyc(1);
    } else {
        for (long a = 1; a < n; ++a)
            if (gcd_ll(a, n) == 1)
                out.values_[a] = prim(a);
    }
    out.finalize();
    return out;
}

Cyc DirichletCharacter::operator()(long n) const
{
    long a = n % modulus_;
    if (a < 0)
        a += modulus_;
    if (modulus_ == 1)
        return Cyc(1);
    if (a == 0)
        return Cyc(0);
    return values_[a];
}

Cyc DirichletCharacter::operator()(const Int &n) const
{
    Int a = n % modulus_;
    long s = a.get_si();
    return (*this)(s);
}

DirichletCharacter DirichletCharacter::inverse_character() const
{
    DirichletCharacter out = *this;
    for (Cyc &v : out.values_)
        if (!v.is_zero())
            v = v.conj(); // roots of unity: inverse = conjugate
    out.finalize();
    return out;
}

DirichletCharacter DirichletCharacter::primitive_character() const
{
    long f = conductor_;
    if (f == modulus_)
        return *this;
    DirichletCharacter out;
    out.modulus_ = f;
    out.values_.assign(f, Cyc(0));
    if (f == 1) {
        out.values_[0] = Cyc(1);
    } else {
        for (long a = 1; a < f; ++a) {
            if (gcd_ll(a, f) != 1)
                continue;
            long b = a;
            while (gcd_ll(b, modulus_) != 1)
                b += f;
            out.values_[a] = values_[b % modulus_];
        }
    }
    out.finalize();
    return out;
}

} // namespace starkrankin
