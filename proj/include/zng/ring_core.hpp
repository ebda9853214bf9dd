#pragma once

/**
 * @file ring_core.hpp
 * @brief Arithmetic in Z/p^r, univariate polynomials over it, and the
 *        irreducibility machinery used to build Galois rings.
 *
 * Residues are stored as canonical std::int64_t values in [0, p^r) together
 * with a Zmod context. The modulus is capped at 2^31 so that every product of
 * two residues fits into 63 bits.
 */

#include <zng/error.hpp>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace zng {

// ---------------------------------------------------------------------------
// integer helpers

inline constexpr std::int64_t max_modulus = std::int64_t{1} << 31;

inline std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw error("integer overflow in multiplication");
    return out;
}

inline std::int64_t ipow(std::int64_t base, std::int64_t e) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i) out = mul_checked(out, base);
    return out;
}

/// True when base^e fits in a signed 64-bit integer.
inline bool ipow_fits(std::int64_t base, std::int64_t e) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < e; ++i)
        if (__builtin_mul_overflow(out, base, &out)) return false;
    return true;
}

inline std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (auto [q, e] : factorize(n)) out.push_back(q);
    return out;
}

inline std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::int64_t euler_phi(std::int64_t n) {
    std::int64_t out = n;
    for (auto [q, e] : factorize(n)) out = out / q * (q - 1);
    return out;
}

inline std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t mod) {
    if (mod == 1) return 0;
    std::int64_t result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (e > 0) {
        if (e & 1) result = static_cast<std::int64_t>((__int128)result * base % mod);
        base = static_cast<std::int64_t>((__int128)base * base % mod);
        e >>= 1;
    }
    return result;
}

/// Least e >= 1 with a^e = 1 (mod d); 1 when d = 1.
inline std::int64_t multiplicative_order(std::int64_t a, std::int64_t d) {
    if (d < 1) throw precondition_error("multiplicative_order: modulus must be >= 1");
    if (d == 1) return 1;
    a %= d;
    if (a < 0) a += d;
    if (gcd(a, d) != 1)
        throw precondition_error("multiplicative_order: gcd(" + std::to_string(a) + ", " +
                                 std::to_string(d) + ") != 1");
    std::int64_t order = euler_phi(d);
    for (auto [q, e] : factorize(order)) {
        for (int i = 0; i < e && order % q == 0 && powmod(a, order / q, d) == 1; ++i) order /= q;
    }
    return order;
}

// ---------------------------------------------------------------------------
// Z/p^r

/// The prime power p^r; primality of p is checked at construction.
struct PrimePower {
    std::int64_t p = 2;
    int r = 1;
    std::int64_t modulus = 2;

    PrimePower() = default;
    PrimePower(std::int64_t prime, int exponent) : p(prime), r(exponent) {
        if (!is_prime(prime)) throw precondition_error(std::to_string(prime) + " is not prime");
        if (exponent < 1) throw precondition_error("prime power exponent must be >= 1");
        modulus = 1;
        for (int i = 0; i < exponent; ++i) {
            modulus = mul_checked(modulus, prime);
            if (modulus > max_modulus) throw precondition_error("p^r exceeds 2^31");
        }
    }

    PrimePower residue() const { return PrimePower(p, 1); }
    bool operator==(const PrimePower&) const = default;
};

/// Ring context for Z/p^r. Values are canonical representatives in [0, p^r).
class Zmod {
public:
    using value_type = std::int64_t;

    Zmod() : Zmod(PrimePower(2, 1)) {}
    explicit Zmod(PrimePower pp) : pp_(pp) {}
    Zmod(std::int64_t p, int r) : pp_(p, r) {}

    const PrimePower& prime_power() const noexcept { return pp_; }
    std::int64_t p() const noexcept { return pp_.p; }
    int r() const noexcept { return pp_.r; }
    std::int64_t modulus() const noexcept { return pp_.modulus; }

    value_type reduce(std::int64_t v) const {
        v %= pp_.modulus;
        return v < 0 ? v + pp_.modulus : v;
    }
    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1 % pp_.modulus; }
    value_type from_int(std::int64_t v) const { return reduce(v); }

    value_type add(value_type a, value_type b) const {
        std::int64_t s = a + b;
        return s >= pp_.modulus ? s - pp_.modulus : s;
    }
    value_type sub(value_type a, value_type b) const {
        std::int64_t s = a - b;
        return s < 0 ? s + pp_.modulus : s;
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : pp_.modulus - a; }
    value_type mul(value_type a, value_type b) const { return (a * b) % pp_.modulus; }
    value_type pow(value_type a, std::int64_t e) const { return powmod(a, e, pp_.modulus); }

    bool is_zero(value_type a) const noexcept { return a == 0; }
    bool is_unit(value_type a) const noexcept { return a % pp_.p != 0; }
    bool equal(value_type a, value_type b) const noexcept { return a == b; }

    value_type inverse(value_type a) const {
        if (!is_unit(a)) throw not_a_unit(std::to_string(a) + " is not a unit mod " + std::to_string(pp_.modulus));
        // extended Euclid
        std::int64_t old_r = a, r = pp_.modulus, old_s = 1, s = 0;
        while (r != 0) {
            std::int64_t q = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        }
        return reduce(old_s);
    }

    /// p-adic valuation; returns r for zero.
    int valuation(value_type a) const noexcept {
        if (a == 0) return pp_.r;
        int v = 0;
        while (a % pp_.p == 0) {
            a /= pp_.p;
            ++v;
        }
        return v;
    }

    bool operator==(const Zmod& o) const { return pp_ == o.pp_; }

private:
    PrimePower pp_;
};

// ---------------------------------------------------------------------------
// polynomials over Z/p^r

/// Dense univariate polynomial over Z/p^r, lowest degree first, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(PrimePower ctx) : ctx_(ctx) {}
    Poly(PrimePower ctx, std::vector<std::int64_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
        Zmod z(ctx_);
        for (auto& v : c_) v = z.reduce(v);
        trim();
    }

    static Poly constant(PrimePower ctx, std::int64_t v) { return Poly(ctx, {v}); }
    static Poly x(PrimePower ctx) { return Poly(ctx, {0, 1}); }
    static Poly monomial(PrimePower ctx, int degree, std::int64_t coeff = 1) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
        c.back() = coeff;
        return Poly(ctx, std::move(c));
    }

    const PrimePower& context() const noexcept { return ctx_; }
    Zmod base() const { return Zmod(ctx_); }
    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::int64_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
    std::int64_t leading() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1 % ctx_.modulus; }

    std::int64_t eval(std::int64_t x) const {
        Zmod z(ctx_);
        std::int64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = z.add(z.mul(acc, z.reduce(x)), *it);
        return acc;
    }

    Poly derivative() const {
        std::vector<std::int64_t> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mul_checked(c_[i], static_cast<std::int64_t>(i)));
        return Poly(ctx_, std::move(d));
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        check(a, b);
        Zmod z(a.ctx_);
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = z.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return Poly(a.ctx_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        check(a, b);
        Zmod z(a.ctx_);
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = z.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
        return Poly(a.ctx_, std::move(c));
    }
    friend Poly operator-(const Poly& a) { return Poly(a.ctx_) - a; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        check(a, b);
        if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
        Zmod z(a.ctx_);
        std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = z.add(c[i + j], z.mul(a.c_[i], b.c_[j]));
        return Poly(a.ctx_, std::move(c));
    }
    Poly scaled(std::int64_t s) const {
        Zmod z(ctx_);
        std::vector<std::int64_t> c = c_;
        for (auto& v : c) v = z.mul(v, z.reduce(s));
        return Poly(ctx_, std::move(c));
    }

    std::string to_string(const std::string& var = "x") const {
        if (c_.empty()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            std::int64_t v = c_[static_cast<std::size_t>(i)];
            if (v == 0) continue;
            if (!out.empty()) out += " + ";
            if (i == 0 || v != 1) out += std::to_string(v);
            if (i > 0) {
                if (v != 1) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    static void check(const Poly& a, const Poly& b) {
        if (!(a.ctx_ == b.ctx_)) throw ring_mismatch("polynomials over different coefficient rings");
    }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    PrimePower ctx_;
    std::vector<std::int64_t> c_;
};

/// Division with remainder by a monic polynomial (valid over any Z/p^r).
inline std::pair<Poly, Poly> divmod_monic(const Poly& a, const Poly& b) {
    if (!b.is_monic()) throw precondition_error("divmod_monic: divisor must be monic");
    if (!(a.context() == b.context())) throw ring_mismatch("divmod_monic: context mismatch");
    Zmod z(a.context());
    std::vector<std::int64_t> rem = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly(a.context()), a};
    std::vector<std::int64_t> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
    for (int i = a.degree(); i >= db; --i) {
        std::int64_t lc = rem[static_cast<std::size_t>(i)];
        if (lc == 0) continue;
        q[static_cast<std::size_t>(i - db)] = lc;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = z.sub(slot, z.mul(lc, b.coeff(j)));
        }
    }
    return {Poly(a.context(), std::move(q)), Poly(a.context(), std::move(rem))};
}

inline Poly poly_mod(const Poly& a, const Poly& monic) { return divmod_monic(a, monic).second; }

inline Poly poly_powmod(Poly base, std::int64_t e, const Poly& monic) {
    Poly result = poly_mod(Poly::constant(base.context(), 1), monic);
    base = poly_mod(base, monic);
    while (e > 0) {
        if (e & 1) result = poly_mod(result * base, monic);
        base = poly_mod(base * base, monic);
        e >>= 1;
    }
    return result;
}

/// Make a polynomial over F_p monic (field case only).
inline Poly make_monic_fp(const Poly& f) {
    if (f.context().r != 1) throw precondition_error("make_monic_fp: requires a prime field");
    if (f.is_zero()) return f;
    Zmod z(f.context());
    return f.scaled(z.inverse(f.leading()));
}

/// gcd over F_p, normalized monic.
inline Poly gcd_fp(Poly a, Poly b) {
    if (a.context().r != 1) throw precondition_error("gcd_fp: requires a prime field");
    while (!b.is_zero()) {
        Poly bm = make_monic_fp(b);
        Poly r = divmod_monic(a, bm).second;
        a = std::move(bm);
        b = std::move(r);
    }
    return make_monic_fp(a);
}

/// Coefficient-wise reduction Z/p^r[x] -> F_p[x].
inline Poly reduce_mod_p(const Poly& f) {
    const PrimePower fp = f.context().residue();
    std::vector<std::int64_t> c;
    c.reserve(f.coeffs().size());
    for (auto v : f.coeffs()) c.push_back(v % fp.p);
    return Poly(fp, std::move(c));
}

/// Lift coefficients of an F_p polynomial verbatim (values in [0, p)) into Z/p^r.
inline Poly lift_poly(const Poly& f, PrimePower ctx) {
    if (f.context().p != ctx.p) throw ring_mismatch("lift_poly: different primes");
    return Poly(ctx, f.coeffs());
}

namespace detail {

/// Monic polynomial of the given degree whose lower coefficients are the base-p digits of code.
inline Poly monic_from_code(PrimePower fp, int degree, std::int64_t code) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
    for (int i = 0; i < degree; ++i) {
        c[static_cast<std::size_t>(i)] = code % fp.p;
        code /= fp.p;
    }
    c.back() = 1;
    return Poly(fp, std::move(c));
}

inline bool irreducible_by_factor_scan(const Poly& f) {
    const PrimePower fp = f.context();
    const int n = f.degree();
    for (int d = 1; 2 * d <= n; ++d) {
        const std::int64_t count = ipow(fp.p, d);
        for (std::int64_t code = 0; code < count; ++code) {
            if (divmod_monic(f, monic_from_code(fp, d, code)).second.is_zero()) return false;
        }
    }
    return true;
}

/// Rabin: f irreducible iff x^{p^n} = x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for primes q | n.
inline bool irreducible_rabin(const Poly& f) {
    const PrimePower fp = f.context();
    const int n = f.degree();
    const Poly x = Poly::x(fp);
    auto frob_power = [&](int k) {
        Poly acc = poly_mod(x, f);
        for (int i = 0; i < k; ++i) acc = poly_powmod(acc, fp.p, f);
        return acc;
    };
    if (!(poly_mod(frob_power(n) - x, f)).is_zero()) return false;
    for (auto q : prime_divisors(n)) {
        Poly g = gcd_fp(f, poly_mod(frob_power(n / static_cast<int>(q)) - x, f));
        if (g.degree() != 0) return false;
    }
    return true;
}

} // namespace detail

/// Irreducibility over F_p: exhaustive factor scan up to degree 6, Rabin's test above.
inline bool is_irreducible_fp(const Poly& f) {
    if (f.context().r != 1) throw precondition_error("is_irreducible_fp: polynomial must be over F_p");
    if (!f.is_monic()) throw precondition_error("is_irreducible_fp: polynomial must be monic");
    if (f.degree() < 1) throw precondition_error("is_irreducible_fp: degree must be >= 1");
    if (f.degree() == 1) return true;
    return f.degree() <= 6 ? detail::irreducible_by_factor_scan(f) : detail::irreducible_rabin(f);
}

/// Canonical monic basic irreducible of degree m over Z/p^r: the verbatim lift of the
/// lexicographically smallest monic irreducible over F_p, comparing x^{m-1} first.
inline Poly find_basic_irreducible(PrimePower ctx, int m) {
    if (m < 1) throw precondition_error("find_basic_irreducible: degree must be >= 1");
    const PrimePower fp = ctx.residue();
    // p^m may exceed 64 bits; an irreducible always appears long before the scan ends
    const std::int64_t count = ipow_fits(fp.p, m) ? ipow(fp.p, m) : std::numeric_limits<std::int64_t>::max();
    for (std::int64_t code = 0; code < count; ++code) {
        // digit of x^{m-1} is most significant in code order
        Poly f = detail::monic_from_code(fp, m, code);
        if (is_irreducible_fp(f)) return lift_poly(f, ctx);
    }
    throw error("no irreducible polynomial found (unreachable)");
}

/// Phi_k reduced modulo p.
inline Poly cyclotomic_poly_fp(int k, PrimePower fp) {
    if (k < 1) throw precondition_error("cyclotomic_poly_fp: k must be positive");
    Poly f = Poly::monomial(fp, k) - Poly::constant(fp, 1);
    for (auto d : divisors(k))
        if (d < k) f = divmod_monic(f, cyclotomic_poly_fp(static_cast<int>(d), fp)).first;
    return f;
}

/// Irreducible factors of a squarefree monic g over F_p whose factors all have degree d
/// (Cantor-Zassenhaus with trial polynomials in code order), sorted as in find_basic_irreducible.
inline std::vector<Poly> equal_degree_factors(const Poly& g, int d) {
    const PrimePower fp = g.context();
    if (fp.r != 1) throw precondition_error("equal_degree_factors: requires a prime field");
    if (d < 1 || g.degree() % d != 0) throw precondition_error("equal_degree_factors: degree mismatch");
    if (g.degree() == d) return {g};
    const Poly one = Poly::constant(fp, 1);
    for (int deg = 1; deg < g.degree(); ++deg) {
        const std::int64_t limit = ipow_fits(fp.p, deg) ? ipow(fp.p, deg) : std::numeric_limits<std::int64_t>::max();
        for (std::int64_t code = 0; code < limit; ++code) {
            const Poly a = poly_mod(detail::monic_from_code(fp, deg, code), g);
            Poly b;
            if (fp.p == 2) {
                Poly t = a;
                b = a;
                for (int i = 1; i < d; ++i) {
                    t = poly_powmod(t, 2, g);
                    b = b + t;
                }
            } else {
                Poly t = a, norm = a;
                for (int i = 1; i < d; ++i) {
                    t = poly_powmod(t, fp.p, g);
                    norm = poly_mod(norm * t, g);
                }
                b = poly_powmod(norm, (fp.p - 1) / 2, g) - one;
            }
            const Poly h = gcd_fp(g, poly_mod(b, g));
            if (h.degree() <= 0 || h.degree() >= g.degree()) continue;
            auto out = equal_degree_factors(h, d);
            auto rest = equal_degree_factors(divmod_monic(g, h).first, d);
            out.insert(out.end(), rest.begin(), rest.end());
            std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
                return std::lexicographical_compare(x.coeffs().rbegin(), x.coeffs().rend(), y.coeffs().rbegin(), y.coeffs().rend());
            });
            return out;
        }
    }
    throw error("equal_degree_factors: no splitting polynomial found (unreachable)");
}

} // namespace zng
