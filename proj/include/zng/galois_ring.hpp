#pragma once

/**
 * @file galois_ring.hpp
 * @brief Galois rings GR(p^r, m) = Z/p^r[x]/(h(x)) and their arithmetic.
 *
 * Beyond ring arithmetic this header provides the Teichmuller machinery
 * (lifts, p-adic digits, generators), the generalized Frobenius, relative
 * trace and norm over a Galois subring, normal elements, norm-equation
 * solving and a generating set of the unit group.
 *
 * Elements carry a handle to their ring, so mixing elements of different
 * rings raises ring_mismatch.
 */

#include <zng/error.hpp>
#include <zng/linalg.hpp>
#include <zng/ring_core.hpp>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zng {

namespace detail {
struct GaloisRingData {
    PrimePower pp;
    int m = 1;
    Poly h;
    std::vector<std::vector<std::int64_t>> reduction; ///< xi^{m+k} in the basis 1..xi^{m-1}, k < m-1
    std::vector<std::vector<std::int64_t>> frob_xi_pows; ///< sigma(xi)^i, i < m
};
} // namespace detail

class GaloisRing;
struct SubringDescriptor;

/// Element of a Galois ring: coordinates in the basis 1, xi, ..., xi^{m-1}.
class GrElem {
public:
    GrElem() = default;

    const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
    std::int64_t coeff(int i) const { return c_.at(static_cast<std::size_t>(i)); }
    inline GaloisRing ring() const;
    bool valid() const noexcept { return static_cast<bool>(data_); }

    friend inline GrElem operator+(const GrElem& a, const GrElem& b);
    friend inline GrElem operator-(const GrElem& a, const GrElem& b);
    friend inline GrElem operator*(const GrElem& a, const GrElem& b);
    friend inline GrElem operator-(const GrElem& a);
    friend bool operator==(const GrElem& a, const GrElem& b) { return a.c_ == b.c_ && same_ring(a, b); }

    std::string to_string(const std::string& var = "xi") const {
        return Poly(data_ ? data_->pp : PrimePower(), c_).to_string(var);
    }

private:
    friend class GaloisRing;
    friend struct SubringDescriptor;
    GrElem(std::shared_ptr<const detail::GaloisRingData> d, std::vector<std::int64_t> c)
        : data_(std::move(d)), c_(std::move(c)) {}

    static bool same_ring(const GrElem& a, const GrElem& b) {
        if (a.data_ == b.data_) return true;
        if (!a.data_ || !b.data_) return false;
        return a.data_->pp == b.data_->pp && a.data_->h == b.data_->h;
    }

    std::shared_ptr<const detail::GaloisRingData> data_;
    std::vector<std::int64_t> c_;
};

class GaloisRing;

/// S = GR(p^r, l) sitting inside R = GR(p^r, m), l | m, identified through a root of S's modulus.
struct SubringDescriptor {
    int l = 1;
    std::shared_ptr<const detail::GaloisRingData> sub_data;
    std::shared_ptr<const detail::GaloisRingData> parent_data;
    std::vector<std::vector<std::int64_t>> basis_images; ///< image in R of xi_S^j, j < l

    inline GaloisRing sub() const;
    inline GaloisRing parent() const;
    /// Image of an element of S in R.
    inline GrElem embed(const GrElem& s) const;
    /// Coordinates in S of an element of R lying in the image; nullopt otherwise.
    inline std::optional<GrElem> try_project(const GrElem& a) const;
    inline GrElem project(const GrElem& a) const;
    bool contains(const GrElem& a) const { return try_project(a).has_value(); }
};

class GaloisRing {
public:
    using value_type = GrElem;

    /// GR(p^r, m) with the canonical modulus from find_basic_irreducible.
    GaloisRing(PrimePower pp, int m) : GaloisRing(pp, find_basic_irreducible(pp, m)) {}

    /// GR(p^r, deg h) for an arbitrary monic basic irreducible h.
    GaloisRing(PrimePower pp, Poly h) {
        if (!(h.context() == pp)) throw ring_mismatch("GaloisRing: modulus over a different base ring");
        if (!h.is_monic() || h.degree() < 1) throw precondition_error("GaloisRing: modulus must be monic of degree >= 1");
        if (!is_irreducible_fp(reduce_mod_p(h)))
            throw precondition_error("GaloisRing: modulus " + h.to_string() + " is not basic irreducible");
        auto d = std::make_shared<detail::GaloisRingData>();
        d->pp = pp;
        d->m = h.degree();
        d->h = h;
        for (int k = 0; k + 1 < d->m; ++k) {
            auto rem = poly_mod(Poly::monomial(pp, d->m + k), h);
            d->reduction.push_back(padded(rem, d->m));
        }
        data_ = d;
        // sigma(xi) from the Teichmuller digits of xi; afterwards sigma is evaluated polynomially.
        GrElem fx = frobenius_by_digits(xi(), 1);
        std::vector<std::vector<std::int64_t>> pows;
        GrElem acc = one();
        for (int i = 0; i < d->m; ++i) {
            pows.push_back(acc.coeffs());
            acc = mul(acc, fx);
        }
        d->frob_xi_pows = std::move(pows);
    }

    const PrimePower& prime_power() const noexcept { return data_->pp; }
    std::int64_t p() const noexcept { return data_->pp.p; }
    int r() const noexcept { return data_->pp.r; }
    int degree() const noexcept { return data_->m; }
    const Poly& modulus_poly() const noexcept { return data_->h; }
    Zmod base() const { return Zmod(data_->pp); }
    /// p^m, the size of the residue field.
    std::int64_t residue_size() const { return ipow(p(), degree()); }
    std::int64_t cardinality() const { return ipow(data_->pp.modulus, degree()); }
    /// p^{(r-1)m} (p^m - 1)
    std::int64_t unit_count() const { return ipow(p(), (r() - 1) * degree()) * (residue_size() - 1); }

    bool operator==(const GaloisRing& o) const {
        return data_ == o.data_ || (data_->pp == o.data_->pp && data_->h == o.data_->h);
    }

    // --- construction -----------------------------------------------------

    GrElem element(std::vector<std::int64_t> c) const {
        if (static_cast<int>(c.size()) > degree()) {
            // reduce a longer coefficient list modulo h
            return GrElem(data_, padded(poly_mod(Poly(data_->pp, std::move(c)), data_->h), degree()));
        }
        c.resize(static_cast<std::size_t>(degree()), 0);
        Zmod z(data_->pp);
        for (auto& v : c) v = z.reduce(v);
        return GrElem(data_, std::move(c));
    }
    GrElem from_int(std::int64_t v) const { return element({v}); }
    GrElem zero() const { return element({}); }
    GrElem one() const { return element({1}); }
    GrElem xi() const { return degree() == 1 ? element({-data_->h.coeff(0)}) : element({0, 1}); }
    GrElem xi_power(int j) const { return pow(xi(), j); }

    /// Element whose coefficient digits (base p^r, c_0 least significant) encode index.
    GrElem element_at(std::int64_t index) const { return element(digits(index, data_->pp.modulus)); }
    /// Element with coefficients in [0, p) encoded by index (canonical residue representatives).
    GrElem residue_element_at(std::int64_t index) const { return element(digits(index, p())); }

    // --- arithmetic -------------------------------------------------------

    GrElem add(const GrElem& a, const GrElem& b) const {
        check(a);
        check(b);
        Zmod z(data_->pp);
        std::vector<std::int64_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = z.add(a.c_[i], b.c_[i]);
        return GrElem(data_, std::move(c));
    }
    GrElem sub(const GrElem& a, const GrElem& b) const {
        check(a);
        check(b);
        Zmod z(data_->pp);
        std::vector<std::int64_t> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = z.sub(a.c_[i], b.c_[i]);
        return GrElem(data_, std::move(c));
    }
    GrElem neg(const GrElem& a) const { return sub(zero(), a); }
    GrElem mul(const GrElem& a, const GrElem& b) const {
        check(a);
        check(b);
        return GrElem(data_, mul_raw(a.c_, b.c_));
    }
    GrElem scale(const GrElem& a, std::int64_t s) const {
        check(a);
        Zmod z(data_->pp);
        std::vector<std::int64_t> c = a.c_;
        for (auto& v : c) v = z.mul(v, z.reduce(s));
        return GrElem(data_, std::move(c));
    }
    GrElem pow(GrElem a, std::int64_t e) const {
        check(a);
        if (e < 0) {
            a = inverse(a);
            e = -e;
        }
        GrElem result = one();
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    bool is_zero(const GrElem& a) const {
        for (auto v : a.c_)
            if (v != 0) return false;
        return true;
    }
    bool equal(const GrElem& a, const GrElem& b) const { return a == b; }
    /// Unit iff the residue modulo p is nonzero.
    bool is_unit(const GrElem& a) const {
        check(a);
        for (auto v : a.c_)
            if (v % p() != 0) return true;
        return false;
    }
    /// Inverse via a^{|U|-1}.
    GrElem inverse(const GrElem& a) const {
        if (!is_unit(a)) throw not_a_unit("GaloisRing::inverse: " + a.to_string() + " is not a unit");
        return pow(a, unit_count() - 1);
    }

    /// Residue modulo p as a coefficient vector in [0, p).
    std::vector<std::int64_t> residue(const GrElem& a) const {
        check(a);
        std::vector<std::int64_t> c = a.c_;
        for (auto& v : c) v %= p();
        return c;
    }

    /// Multiplicative order of a unit.
    std::int64_t element_order(const GrElem& a) const {
        if (!is_unit(a)) throw not_a_unit("element_order: argument is not a unit");
        std::int64_t order = unit_count();
        for (auto q : prime_divisors(order))
            while (order % q == 0 && pow(a, order / q) == one()) order /= q;
        return order;
    }

    // --- Teichmuller and Frobenius ---------------------------------------

    /// tau(a) = a^{q^{r-1}}: the Teichmuller representative congruent to a mod p.
    GrElem teichmuller_lift(GrElem a) const {
        check(a);
        for (int i = 0; i < degree() * (r() - 1); ++i) a = pow(a, p());
        return a;
    }

    /// a = sum_i p^i t_i with every t_i in the Teichmuller set.
    std::vector<GrElem> teichmuller_digits(GrElem a) const {
        check(a);
        std::vector<GrElem> out;
        for (int i = 0; i < r(); ++i) {
            GrElem t = teichmuller_lift(a);
            out.push_back(t);
            GrElem diff = sub(a, t);
            std::vector<std::int64_t> c = diff.c_;
            for (auto& v : c) v /= p(); // exact: diff is divisible by p
            a = GrElem(data_, std::move(c));
        }
        return out;
    }

    /// sigma^k where sigma maps every Teichmuller digit t to t^p; definitional route.
    GrElem frobenius_by_digits(const GrElem& a, int k) const {
        auto ds = teichmuller_digits(a);
        GrElem out = zero();
        std::int64_t scale_by = 1;
        for (const auto& t : ds) {
            GrElem tk = t;
            for (int i = 0; i < k; ++i) tk = pow(tk, p());
            out = add(out, scale(tk, scale_by));
            scale_by = mul_checked(scale_by, p());
        }
        return out;
    }

    /// sigma^k evaluated through the cached image of xi.
    GrElem frobenius(GrElem a, int k = 1) const {
        check(a);
        k %= degree();
        if (k < 0) k += degree();
        Zmod z(data_->pp);
        for (int step = 0; step < k; ++step) {
            std::vector<std::int64_t> c(static_cast<std::size_t>(degree()), 0);
            for (int i = 0; i < degree(); ++i) {
                const auto ai = a.c_[static_cast<std::size_t>(i)];
                if (ai == 0) continue;
                const auto& row = data_->frob_xi_pows[static_cast<std::size_t>(i)];
                for (int j = 0; j < degree(); ++j)
                    c[static_cast<std::size_t>(j)] = z.add(c[static_cast<std::size_t>(j)], z.mul(ai, row[static_cast<std::size_t>(j)]));
            }
            a = GrElem(data_, std::move(c));
        }
        return a;
    }

    /// Frobenius over a subring: zeta -> zeta^{p^l}.
    GrElem frobenius(const GrElem& a, const SubringDescriptor& S) const {
        check_sub(S);
        return frobenius(a, S.l);
    }

    /// First Teichmuller lift (residues in coefficient order) of multiplicative order p^m - 1.
    GrElem teichmuller_generator() const {
        const std::int64_t q = residue_size();
        const auto primes = prime_divisors(q - 1);
        for (std::int64_t code = 1; code < q; ++code) {
            GrElem t = teichmuller_lift(residue_element_at(code));
            bool ok = true;
            for (auto s : primes)
                if (pow(t, (q - 1) / s) == one()) {
                    ok = false;
                    break;
                }
            if (ok) return t;
        }
        throw error("teichmuller_generator: none found (unreachable)");
    }

    /// zeta, 1 + p xi^j, and for p = 2, r >= 3 also -1 and 1 + 4 xi^j. Identity entries are dropped
    /// except for zeta itself.
    std::vector<GrElem> unit_group_generators() const {
        std::vector<GrElem> out{teichmuller_generator()};
        auto push = [&](const GrElem& g) {
            if (g == one()) return;
            for (const auto& h : out)
                if (h == g) return;
            out.push_back(g);
        };
        for (int j = 0; j < degree(); ++j) push(add(one(), scale(xi_power(j), p())));
        if (p() == 2 && r() >= 3) {
            push(neg(one()));
            for (int j = 0; j < degree(); ++j) push(add(one(), scale(xi_power(j), 4)));
        }
        return out;
    }

    // --- subrings ---------------------------------------------------------

    /// The unique Galois subring of degree l, identified with the canonical GR(p^r, l) through
    /// the first residue root of its modulus, Hensel-lifted into this ring.
    SubringDescriptor subring(int l) const {
        if (l < 1 || degree() % l != 0) throw precondition_error("subring: degree does not divide m");
        GaloisRing S(prime_power(), l);
        const Poly& hs = S.modulus_poly();
        // the residue roots lie in the subfield F_{p^l}: walk it through a primitive element and keep
        // the root with the least code, which is the first root a full scan would meet
        std::optional<GrElem> root;
        auto earlier = [](const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
            return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
        };
        auto consider = [&](const GrElem& a) {
            if (residue_is_zero(eval_poly(hs, a)) && (!root || earlier(a.coeffs(), root->coeffs()))) root = a;
        };
        consider(zero());
        const std::int64_t ql = ipow(p(), l);
        const GrElem h = pow(teichmuller_generator(), (residue_size() - 1) / (ql - 1));
        GrElem a = one();
        for (std::int64_t k = 0; k < ql - 1; ++k) {
            consider(a);
            a = element(residue(mul(a, h)));
        }
        if (!root) throw error("subring: modulus has no residue root (unreachable)");
        const Poly dh = hs.derivative();
        for (int it = 0; it < 64 && !is_zero(eval_poly(hs, *root)); ++it)
            *root = sub(*root, mul(eval_poly(hs, *root), inverse(eval_poly(dh, *root))));
        if (!is_zero(eval_poly(hs, *root))) throw error("subring: Hensel lifting failed");
        SubringDescriptor out;
        out.l = l;
        out.sub_data = S.data_;
        out.parent_data = data_;
        GrElem acc = one();
        for (int j = 0; j < l; ++j) {
            out.basis_images.push_back(acc.coeffs());
            acc = mul(acc, *root);
        }
        return out;
    }

    /// (trace, norm) of a relative to S, both as elements of S.
    std::pair<GrElem, GrElem> trace_and_norm(const GrElem& a, const SubringDescriptor& S) const {
        check_sub(S);
        const int d = degree() / S.l;
        GrElem tr = zero(), nm = one(), conj = a;
        for (int i = 0; i < d; ++i) {
            tr = add(tr, conj);
            nm = mul(nm, conj);
            conj = frobenius(conj, S.l);
        }
        return {S.project(tr), S.project(nm)};
    }
    GrElem norm_in_parent(const GrElem& a, const SubringDescriptor& S) const {
        const int d = degree() / S.l;
        GrElem nm = one(), conj = a;
        for (int i = 0; i < d; ++i) {
            nm = mul(nm, conj);
            conj = frobenius(conj, S.l);
        }
        return nm;
    }

    /// True when {s_j sigma^i(beta)} is a Z/p^r-basis of R, i.e. beta is normal over S.
    bool is_normal_over(const GrElem& beta, const SubringDescriptor& S) const {
        check_sub(S);
        const int d = degree() / S.l;
        Zmod z(data_->pp);
        Matrix<std::int64_t> M(static_cast<std::size_t>(degree()), static_cast<std::size_t>(degree()), 0);
        GrElem conj = beta;
        std::size_t col = 0;
        for (int i = 0; i < d; ++i) {
            for (int j = 0; j < S.l; ++j, ++col) {
                GrElem v = mul(GrElem(data_, S.basis_images[static_cast<std::size_t>(j)]), conj);
                for (int k = 0; k < degree(); ++k) M(static_cast<std::size_t>(k), col) = v.c_[static_cast<std::size_t>(k)];
            }
            conj = frobenius(conj, S.l);
        }
        return is_invertible(z, M);
    }

    /// First residue representative (coefficient order) that is normal over S.
    GrElem normal_element(const SubringDescriptor& S) const {
        check_sub(S);
        for (std::int64_t code = 1; code < residue_size(); ++code) {
            GrElem b = residue_element_at(code);
            if (is_normal_over(b, S)) return b;
        }
        throw error("normal_element: none found (unreachable)");
    }

    /// Some a in R with N_{R/S}(a) = target; Teichmuller component first, then the unipotent part.
    GrElem solve_norm_equation(const SubringDescriptor& S, const GrElem& target) const {
        check_sub(S);
        const GrElem t = S.embed(target);
        if (!is_unit(t)) throw not_a_unit("solve_norm_equation: target is not a unit");
        const GrElem t_teich = teichmuller_lift(t);
        const GrElem t_unip = mul(t, inverse(t_teich));
        // N(zeta^i) = N(zeta)^i: first i in the cyclic group of S
        const GrElem zeta = teichmuller_generator();
        const GrElem nz = norm_in_parent(zeta, S);
        const std::int64_t qs = ipow(p(), S.l);
        std::optional<std::int64_t> exponent;
        GrElem z = one();
        for (std::int64_t i = 0; i < std::max<std::int64_t>(qs - 1, 1); ++i) {
            if (z == t_teich) {
                exponent = i;
                break;
            }
            z = mul(z, nz);
        }
        if (!exponent) throw error("solve_norm_equation: Teichmuller part not reached");
        // unipotent part one p-adic digit at a time: N(1 + p^j x) = 1 + p^j Tr(x) mod p^{j+1}
        std::optional<GrElem> b;
        for (std::int64_t code = 1; code < residue_size() && !b; ++code) {
            auto a = residue_element_at(code);
            if (S.sub().is_unit(trace_and_norm(a, S).first)) b = a;
        }
        if (!b) throw error("solve_norm_equation: no element of unit trace (unreachable)");
        const GrElem tr_inv = inverse(S.embed(trace_and_norm(*b, S).first));
        Zmod zb(data_->pp);
        GrElem u = one();
        for (int j = 1; j < r(); ++j) {
            const GrElem w = mul(t_unip, inverse(norm_in_parent(u, S)));
            const std::int64_t pj = ipow(p(), j);
            std::vector<std::int64_t> y = w.c_;
            y.resize(static_cast<std::size_t>(degree()), 0);
            y[0] = zb.sub(y[0], 1);
            for (auto& v : y) {
                if (v % pj != 0) throw error("solve_norm_equation: layer not reached (unreachable)");
                v = (v / pj) % p();
            }
            const GrElem x = mul(mul(element(y), tr_inv), *b);
            u = mul(u, add(one(), scale(x, pj)));
        }
        if (!(norm_in_parent(u, S) == t_unip)) throw error("solve_norm_equation: unipotent part not reached");
        return mul(pow(zeta, *exponent), u);
    }

    /// All units, in element_at order.
    std::vector<GrElem> all_units() const {
        std::vector<GrElem> out;
        for (std::int64_t i = 0; i < cardinality(); ++i) {
            GrElem a = element_at(i);
            if (is_unit(a)) out.push_back(std::move(a));
        }
        return out;
    }

    GrElem eval_poly(const Poly& f, const GrElem& a) const {
        GrElem acc = zero();
        for (int i = f.degree(); i >= 0; --i) acc = add(mul(acc, a), from_int(f.coeff(i)));
        return acc;
    }

    std::string describe() const {
        return "GR(" + std::to_string(p()) + "^" + std::to_string(r()) + ", " + std::to_string(degree()) +
               "), h = " + data_->h.to_string();
    }

private:
    friend class GrElem;
    friend struct SubringDescriptor;
    explicit GaloisRing(std::shared_ptr<const detail::GaloisRingData> d) : data_(std::move(d)) {}

    static std::vector<std::int64_t> padded(const Poly& f, int m) {
        std::vector<std::int64_t> c = f.coeffs();
        c.resize(static_cast<std::size_t>(m), 0);
        return c;
    }
    std::vector<std::int64_t> digits(std::int64_t index, std::int64_t radix) const {
        std::vector<std::int64_t> c(static_cast<std::size_t>(degree()), 0);
        for (auto& v : c) {
            v = index % radix;
            index /= radix;
        }
        return c;
    }
    bool residue_is_zero(const GrElem& a) const {
        for (auto v : a.c_)
            if (v % p() != 0) return false;
        return true;
    }
    void check(const GrElem& a) const {
        if (!a.data_) throw ring_mismatch("uninitialized Galois ring element");
        if (a.data_ != data_ && !(a.data_->pp == data_->pp && a.data_->h == data_->h))
            throw ring_mismatch("element belongs to a different Galois ring");
    }
    void check_sub(const SubringDescriptor& S) const {
        if (!S.parent_data || !(GaloisRing(S.parent_data) == *this))
            throw ring_mismatch("subring descriptor belongs to a different ring");
    }

    std::vector<std::int64_t> mul_raw(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const {
        const int m = degree();
        Zmod z(data_->pp);
        const std::int64_t mod = data_->pp.modulus;
        std::vector<std::int64_t> prod(static_cast<std::size_t>(2 * m - 1), 0);
        for (int i = 0; i < m; ++i) {
            const auto ai = a[static_cast<std::size_t>(i)];
            if (ai == 0) continue;
            for (int j = 0; j < m; ++j) {
                auto& slot = prod[static_cast<std::size_t>(i + j)];
                slot = (slot + ai * b[static_cast<std::size_t>(j)]) % mod;
            }
        }
        std::vector<std::int64_t> out(prod.begin(), prod.begin() + m);
        for (int k = 0; k + 1 < m; ++k) {
            const auto v = prod[static_cast<std::size_t>(m + k)];
            if (v == 0) continue;
            const auto& row = data_->reduction[static_cast<std::size_t>(k)];
            for (int j = 0; j < m; ++j) out[static_cast<std::size_t>(j)] = z.add(out[static_cast<std::size_t>(j)], z.mul(v, row[static_cast<std::size_t>(j)]));
        }
        return out;
    }

    std::shared_ptr<const detail::GaloisRingData> data_;
};

inline GaloisRing GrElem::ring() const {
    if (!data_) throw ring_mismatch("uninitialized Galois ring element");
    return GaloisRing(data_);
}
inline GrElem operator+(const GrElem& a, const GrElem& b) { return a.ring().add(a, b); }
inline GrElem operator-(const GrElem& a, const GrElem& b) { return a.ring().sub(a, b); }
inline GrElem operator*(const GrElem& a, const GrElem& b) { return a.ring().mul(a, b); }
inline GrElem operator-(const GrElem& a) { return a.ring().neg(a); }

inline GaloisRing SubringDescriptor::sub() const { return GaloisRing(sub_data); }
inline GaloisRing SubringDescriptor::parent() const { return GaloisRing(parent_data); }

inline GrElem SubringDescriptor::embed(const GrElem& s) const {
    GaloisRing S = sub(), R = parent();
    S.check(s);
    GrElem out = R.zero();
    for (int j = 0; j < l; ++j)
        out = R.add(out, R.scale(GrElem(parent_data, basis_images[static_cast<std::size_t>(j)]), s.coeff(j)));
    return out;
}

inline std::optional<GrElem> SubringDescriptor::try_project(const GrElem& a) const {
    GaloisRing R = parent();
    R.check(a);
    const int m = R.degree();
    Matrix<std::int64_t> M(static_cast<std::size_t>(m), static_cast<std::size_t>(l), 0);
    for (int j = 0; j < l; ++j)
        for (int k = 0; k < m; ++k) M(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = basis_images[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    try {
        auto x = solve_unit_pivot(R.base(), M, a.coeffs());
        return sub().element(std::move(x));
    } catch (const precondition_error&) {
        return std::nullopt;
    }
}

inline GrElem SubringDescriptor::project(const GrElem& a) const {
    auto s = try_project(a);
    if (!s) throw precondition_error("SubringDescriptor::project: element is not in the subring");
    return *s;
}

} // namespace zng
