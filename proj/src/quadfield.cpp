#include "starkrankin/quadfield.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace starkrankin {

ImagQuadField::ImagQuadField(long D) : D_K(D)
{
    if (D <= 0)
        throw std::domain_error("ImagQuadField: D_K must be positive");
    if (!is_fundamental_discriminant_neg(D))
        throw std::domain_error("ImagQuadField: -D_K is not a fundamental discriminant");
    w_K = D == 3 ? 6 : (D == 4 ? 4 : 2);
    small_disc_warning = D < 7;
}

bool QuadForm::is_reduced() const
{
    Int ab = abs(b);
    if (!(a > 0 && ab <= a && a <= c))
        return false;
    if ((ab == a || a == c) && b < 0)
        return false;
    return true;
}

QuadForm QuadForm::reduced() const
{
    if (a <= 0)
        throw std::domain_error("QuadForm::reduced: form must be positive definite");
    Int d = disc();
    if (d >= 0)
        throw std::domain_error("QuadForm::reduced: discriminant must be negative");
    QuadForm f = *this;
    for (;;) {
        // normalize b into (-a, a]
        Int two_a = 2 * f.a;
        Int r = f.b % two_a;
        if (r < 0)
            r += two_a;
        if (r > f.a)
            r -= two_a;
        f.c = (r * r - d) / (4 * f.a);
        f.b = r;
        if (f.c < f.a) {
            f = QuadForm(f.c, -f.b, f.a);
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0)
        f.b = -f.b;
    return f;
}

QuadForm QuadForm::identity(const Int &disc)
{
    if (disc >= 0)
        throw std::domain_error("QuadForm::identity: discriminant must be negative");
    Int D = -disc;
    if (D % 4 == 0)
        return QuadForm(1, 0, D / 4);
    if (D % 4 == 3)
        return QuadForm(1, 1, (D + 1) / 4);
    throw std::domain_error("QuadForm::identity: discriminant not 0 or 1 mod 4");
}

bool QuadForm::is_principal() const { return reduced() == identity(disc()); }

std::string QuadForm::to_string() const
{
    std::ostringstream os;
    os << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str() << ")";
    return os.str();
}

QuadForm QuadForm::compose(const QuadForm &f, const QuadForm &g)
{
    if (f.disc() != g.disc())
        throw std::domain_error("QuadForm::compose: discriminants differ");
    const QuadForm &f1 = f.a <= g.a ? f : g;
    const QuadForm &f2 = f.a <= g.a ? g : f;
    Int s = (f1.b + f2.b) / 2;
    Int n = f2.b - s;
    Int d, u, v;
    mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), f2.a.get_mpz_t(), f1.a.get_mpz_t());
    Int y1 = u, x2, y2, d1;
    if (s % d == 0) {
        x2 = 0;
        y2 = -1;
        d1 = d;
    } else {
        Int u2, v2;
        mpz_gcdext(d1.get_mpz_t(), u2.get_mpz_t(), v2.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
        x2 = u2;
        y2 = -v2;
    }
    Int v1 = f1.a / d1;
    Int w2 = f2.a / d1;
    Int r = (y1 * y2 * n - x2 * f2.c) % v1;
    if (r < 0)
        r += v1;
    Int a3 = v1 * w2;
    Int b3 = f2.b + 2 * w2 * r;
    Int c3 = (f2.c * d1 + r * (f2.b + w2 * r)) / v1;
    return QuadForm(a3, b3, c3).reduced();
}

QuadForm QuadForm::pow(long e) const
{
    QuadForm base = reduced();
    QuadForm acc = identity(disc());
    bool invert = e < 0;
    unsigned long k = invert ? -(unsigned long)e : (unsigned long)e;
    if (invert)
        base = base.inverse();
    while (k) {
        if (k & 1)
            acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

ClassGroup::ClassGroup(const Int &disc) : disc_(disc)
{
    if (disc >= 0 || (((-disc) % 4) != 0 && ((-disc) % 4) != 3))
        throw std::domain_error("ClassGroup: discriminant must be negative, 0 or 1 mod 4");
    if (-disc > 10000000)
        throw std::runtime_error("ClassGroup: |discriminant| exceeds the configured bound 10^7");
    Int D = -disc;

    // enumerate primitive reduced forms
    for (Int a = 1; 3 * a * a <= D; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            if (((b - disc) % 2) != 0)
                continue;
            Int num = b * b + D;
            if (num % (4 * a) != 0)
                continue;
            Int c = num / (4 * a);
            if (c < a)
                continue;
            if (a == c && b < 0)
                continue;
            Int g = gcd(gcd(a, abs(b)), c);
            if (g != 1)
                continue;
            elements_.push_back(QuadForm(a, b, c));
        }
    }
    std::sort(elements_.begin(), elements_.end());
    h_ = static_cast<long>(elements_.size());

    std::map<QuadForm, long> index;
    for (long i = 0; i < h_; ++i)
        index[elements_[i]] = i;
    auto op = [&](long i, long j) {
        QuadForm r = QuadForm::compose(elements_[i], elements_[j]);
        auto it = index.find(r);
        if (it == index.end())
            throw std::logic_error("ClassGroup: composition left the reduced-form list");
        return it->second;
    };
    long id = index.at(principal().reduced());
    auto elt_pow = [&](long i, long e) {
        long acc = id, base = i;
        while (e) {
            if (e & 1)
                acc = op(acc, base);
            base = op(base, base);
            e >>= 1;
        }
        return acc;
    };
    auto elt_inv = [&](long i) {
        auto it = index.find(elements_[i].inverse());
        return it->second;
    };

    // cyclic decomposition, one Sylow subgroup at a time
    struct Gen {
        long idx;
        long order;
    };
    std::vector<std::vector<Gen>> per_prime;
    for (auto [p, v] : factorize(h_)) {
        long pv = 1;
        for (int i = 0; i < v; ++i)
            pv *= p;
        std::vector<long> sylow;
        {
            std::map<long, bool> seen;
            for (long i = 0; i < h_; ++i) {
                long x = elt_pow(i, h_ / pv);
                if (!seen.count(x)) {
                    seen[x] = true;
                    sylow.push_back(x);
                }
            }
        }
        std::vector<Gen> basis;
        std::map<long, std::vector<long>> sub;
        sub[id] = {};
        auto rebuild_sub = [&]() {
            sub.clear();
            sub[id] = std::vector<long>(basis.size(), 0);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                std::map<long, std::vector<long>> next;
                for (auto &[x, ex] : sub) {
                    long y = x;
                    for (long e = 0; e < basis[i].order; ++e) {
                        auto v2 = ex;
                        v2[i] = e;
                        next[y] = v2;
                        y = op(y, basis[i].idx);
                    }
                }
                sub = std::move(next);
            }
        };
        while (static_cast<long>(sub.size()) < pv) {
            long best = -1, best_t = 0;
            for (long x : sylow) {
                long t = 0, y = x;
                while (!sub.count(y)) {
                    y = elt_pow(y, p);
                    ++t;
                }
                if (t > best_t) {
                    best_t = t;
                    best = x;
                }
            }
            if (best < 0)
                throw std::logic_error("ClassGroup: Sylow basis search stalled");
            long pt = 1;
            for (long i = 0; i < best_t; ++i)
                pt *= p;
            long w = elt_pow(best, pt);
            const auto &t = sub.at(w);
            long adjusted = best;
            for (std::size_t i = 0; i < basis.size(); ++i) {
                if (t[i] % pt != 0)
                    throw std::logic_error("ClassGroup: basis adjustment not divisible");
                long corr = t[i] / pt;
                adjusted = op(adjusted, elt_pow(elt_inv(basis[i].idx), corr));
            }
            basis.push_back({adjusted, pt});
            rebuild_sub();
        }
        std::sort(basis.begin(), basis.end(), [](const Gen &x, const Gen &y) { return x.order > y.order; });
        per_prime.push_back(std::move(basis));
    }

    // align the per-prime chains (largest together) and combine
    std::size_t rank = 0;
    for (auto &b : per_prime)
        rank = std::max(rank, b.size());
    std::vector<long> gens_idx;
    for (std::size_t j = 0; j < rank; ++j) {
        long g = id, ord = 1;
        for (auto &b : per_prime)
            if (j < b.size()) {
                g = op(g, b[j].idx);
                ord *= b[j].order;
            }
        gens_idx.push_back(g);
        orders_.push_back(ord);
    }
    // ascending divisor chain d_1 | d_2 | ...
    std::reverse(gens_idx.begin(), gens_idx.end());
    std::reverse(orders_.begin(), orders_.end());
    for (long g : gens_idx)
        generators_.push_back(elements_[g]);

    // exponent table: enumerate all products and demand a bijection
    dlog_.assign(h_, {});
    std::vector<bool> hit(h_, false);
    std::vector<long> expo(rank, 0);
    for (;;) {
        long x = id;
        for (std::size_t i = 0; i < rank; ++i)
            x = op(x, elt_pow(gens_idx[i], expo[i]));
        if (hit[x])
            throw std::logic_error("ClassGroup: generators do not decompose the group");
        hit[x] = true;
        dlog_[x] = expo;
        std::size_t i = 0;
        for (; i < rank; ++i) {
            if (++expo[i] < orders_[i])
                break;
            expo[i] = 0;
        }
        if (i == rank)
            break;
    }
    for (long i = 0; i < h_; ++i)
        if (!hit[i])
            throw std::logic_error("ClassGroup: generators do not span the group");

    genus_ = 1;
    for (long d : orders_)
        if (d % 2 == 0)
            genus_ *= 2;
}

long ClassGroup::index_of(const QuadForm &f) const
{
    QuadForm r = f.reduced();
    auto it = std::lower_bound(elements_.begin(), elements_.end(), r);
    if (it == elements_.end() || !(*it == r))
        throw std::domain_error("ClassGroup: form not in this class group");
    return static_cast<long>(it - elements_.begin());
}

std::vector<long> ClassGroup::decompose(const QuadForm &f) const { return dlog_[index_of(f)]; }

long ClassGroup::order_of(const QuadForm &f) const
{
    auto e = decompose(f);
    long ord = 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
        long d = orders_[i];
        long o = d / gcd_ll(e[i], d);
        ord = lcm_ll(ord, o);
    }
    return ord;
}

PrimeSplitting prime_splitting(const ImagQuadField &K, long c, long q)
{
    if (!is_prime(q))
        throw std::domain_error("prime_splitting: q must be prime");
    if (c <= 0)
        throw std::domain_error("prime_splitting: conductor must be positive");
    if (c % q == 0)
        throw std::domain_error("prime_splitting: q divides the conductor");
    Int disc = -Int(K.D_K) * c * c;
    int k = kronecker_symbol(disc, Int(q));
    PrimeSplitting sp;
    sp.q = q;
    if (k == -1) {
        sp.kind = SplitKind::inert;
        return sp;
    }
    sp.kind = k == 1 ? SplitKind::split : SplitKind::ramified;
    for (long b = 0; b < 2 * q; ++b) {
        if (((Int(b) - disc) % 2) != 0)
            continue;
        Int num = Int(b) * b - disc;
        if (num % (4 * q) == 0) {
            sp.prime = QuadForm(q, b, num / (4 * q));
            break;
        }
    }
    if (sp.prime.a != q)
        throw std::logic_error("prime_splitting: no form with leading coefficient q");
    if (sp.kind == SplitKind::ramified)
        sp.conjugate = sp.prime;
    else
        sp.conjugate = QuadForm(sp.prime.a, -sp.prime.b, sp.prime.c);
    return sp;
}

Int FactoredIdeal::norm() const
{
    Int n = 1;
    for (const auto &p : parts)
        n *= int_pow(Int(p.q), p.e);
    return n;
}

FactoredIdeal FactoredIdeal::conj() const
{
    FactoredIdeal r = *this;
    for (auto &p : r.parts)
        if (p.kind == SplitKind::split)
            p.which = 1 - p.which;
    return r;
}

std::string FactoredIdeal::to_string() const
{
    if (parts.empty())
        return "(1)";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            os << "*";
        const auto &p = parts[i];
        if (p.kind == SplitKind::inert)
            os << "(" << p.q << ")^" << p.e / 2;
        else
            os << "P" << p.q << (p.which ? "'" : "") << "^" << p.e;
    }
    return os.str();
}

std::vector<FactoredIdeal> ideals_of_norm(const ImagQuadField &K, long c, long n)
{
    if (n <= 0)
        throw std::domain_error("ideals_of_norm: n must be positive");
    if (gcd_ll(n, c) != 1)
        throw std::domain_error("ideals_of_norm: n must be coprime to the conductor");
    std::vector<FactoredIdeal> result;
    result.push_back(FactoredIdeal{K.D_K, c, {}});
    for (auto [q, e] : factorize(n)) {
        PrimeSplitting sp = prime_splitting(K, c, q);
        std::vector<std::vector<PrimePowerIdeal>> options;
        if (sp.kind == SplitKind::split) {
            for (long i = 0; i <= e; ++i) {
                std::vector<PrimePowerIdeal> opt;
                if (e - i > 0)
                    opt.push_back({q, sp.kind, 0, e - i});
                if (i > 0)
                    opt.push_back({q, sp.kind, 1, i});
                options.push_back(opt);
            }
        } else if (sp.kind == SplitKind::inert) {
            if (e % 2 != 0)
                return {};
            options.push_back({{q, sp.kind, 0, static_cast<long>(e)}});
        } else {
            options.push_back({{q, sp.kind, 0, static_cast<long>(e)}});
        }
        std::vector<FactoredIdeal> next;
        for (const auto &base : result)
            for (const auto &opt : options) {
                FactoredIdeal ext = base;
                ext.parts.insert(ext.parts.end(), opt.begin(), opt.end());
                next.push_back(std::move(ext));
            }
        result = std::move(next);
    }
    return result;
}

QuadForm ideal_class(const ImagQuadField &K, long c, const FactoredIdeal &ideal)
{
    Int disc = -Int(K.D_K) * c * c;
    QuadForm cls = QuadForm::identity(disc);
    for (const auto &p : ideal.parts) {
        if (p.kind == SplitKind::inert)
            continue;
        PrimeSplitting sp = prime_splitting(K, c, p.q);
        QuadForm f = p.which == 0 ? sp.prime.reduced() : sp.prime.inverse();
        cls = QuadForm::compose(cls, f.pow(p.e));
    }
    return cls;
}

std::optional<FactoredIdeal> heegner_ideal(const ImagQuadField &K, long N_E)
{
    if (N_E <= 0)
        throw std::domain_error("heegner_ideal: N_E must be positive");
    FactoredIdeal ideal{K.D_K, 1, {}};
    for (auto [q, e] : factorize(N_E)) {
        PrimeSplitting sp = prime_splitting(K, 1, q);
        if (sp.kind == SplitKind::inert)
            return std::nullopt;
        if (sp.kind == SplitKind::ramified && e > 1)
            return std::nullopt;
        ideal.parts.push_back({q, sp.kind, 0, static_cast<long>(e)});
    }
    return ideal;
}

QuadRat QuadRat::operator*(const QuadRat &o) const
{
    if (D != o.D)
        throw std::domain_error("QuadRat: mixed fields");
    return QuadRat(x * o.x - Rat(D) * y * o.y, x * o.y + y * o.x, D);
}

QuadRat QuadRat::operator+(const QuadRat &o) const
{
    if (D != o.D)
        throw std::domain_error("QuadRat: mixed fields");
    return QuadRat(x + o.x, y + o.y, D);
}

QuadRat QuadRat::operator-(const QuadRat &o) const
{
    if (D != o.D)
        throw std::domain_error("QuadRat: mixed fields");
    return QuadRat(x - o.x, y - o.y, D);
}

QuadRat QuadRat::pow(long e) const
{
    if (e < 0) {
        Rat n = norm();
        if (n == 0)
            throw std::domain_error("QuadRat::pow: zero to negative power");
        return QuadRat(x / n, -y / n, D).pow(-e);
    }
    QuadRat acc(Rat(1), Rat(0), D), base = *this;
    while (e) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string QuadRat::to_string() const
{
    std::ostringstream os;
    os << x.get_str();
    if (y != 0)
        os << (y > 0 ? "+" : "") << y.get_str() << "*sqrt(-" << D << ")";
    return os.str();
}

QuadRat principal_generator(const ImagQuadField &K, long c, const QuadForm &prime_form, long h)
{
    Int disc = -Int(K.D_K) * c * c;
    Int Dbig = -disc;
    if (!Dbig.fits_slong_p())
        throw std::domain_error("principal_generator: discriminant too large");
    long D = Dbig.get_si();
    if (h < 1)
        throw std::domain_error("principal_generator: exponent must be positive");
    if (prime_form.a == 1)
        return QuadRat(Rat(1), Rat(0), D);
    if (prime_form.disc() != disc)
        throw std::domain_error("principal_generator: form discriminant mismatch");
    if (!prime_form.a.fits_slong_p())
        throw std::domain_error("principal_generator: prime too large");
    long q = prime_form.a.get_si();
    if (!is_prime(q))
        throw std::domain_error("principal_generator: form must have prime leading coefficient");

    Int qh = int_pow(Int(q), h);
    if (qh > 1000000000L)
        throw std::runtime_error("principal_generator: q^h exceeds the search bound");
    // b normalized into [0, 2q)
    Int b = prime_form.b % (2 * q);
    if (b < 0)
        b += 2 * q;
    // lift: bh = b (mod 2q), bh^2 = disc (mod 4 q^h)
    Int bh = -1;
    for (Int t = b; t < 2 * qh; t += 2 * q) {
        if ((t * t - disc) % (4 * qh) == 0) {
            bh = t;
            break;
        }
    }
    if (bh < 0)
        throw std::logic_error("principal_generator: no square-root lift modulo 4q^h");

    // gamma = (x + y sqrt(-D))/2 with x^2 + D y^2 = 4 q^h and x = bh*y (mod 2 q^h)
    Int target = 4 * qh;
    for (Int y = 0; D * y * y <= target; ++y) {
        Int x2 = target - D * y * y;
        if (mpz_perfect_square_p(x2.get_mpz_t()) == 0)
            continue;
        Int s;
        mpz_sqrt(s.get_mpz_t(), x2.get_mpz_t());
        for (Int x : {Int(s), Int(-s)}) {
            if ((x - bh * y) % (2 * qh) != 0)
                continue;
            if (y == 0 && x < 0)
                continue;
            return QuadRat(make_rat(x, 2), make_rat(y, 2), D);
        }
    }
    throw std::logic_error("principal_generator: the given ideal power is not principal");
}

} // namespace starkrankin
