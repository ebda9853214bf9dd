#pragma once

/**
 * @file group_ring.hpp
 * @brief Group rings R[G] over Z/p^r (including F_p) and Galois rings.
 *
 * GroupRing<Ring> is a cheap handle on (group, coefficient ring); elements
 * carry the handle so the usual operators work and mismatches are caught.
 * Coefficients are stored densely, one per group element.
 */

#include <zng/error.hpp>
#include <zng/galois_ring.hpp>
#include <zng/group.hpp>
#include <zng/linalg.hpp>
#include <zng/ring_core.hpp>

#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace zng {

namespace detail {
template <class Ring>
struct GroupRingCtx {
    GroupPtr group;
    Ring ring;
};

inline std::string coeff_to_string(const Zmod&, std::int64_t v) { return std::to_string(v); }
inline std::string coeff_to_string(const GaloisRing&, const GrElem& v) {
    std::string s = v.to_string();
    return s.find_first_of("+-") != std::string::npos ? "(" + s + ")" : s;
}
inline bool coeff_is_one(const Zmod& R, std::int64_t v) { return v == R.one(); }
inline bool coeff_is_one(const GaloisRing& R, const GrElem& v) { return v == R.one(); }
} // namespace detail

template <class Ring>
class GroupRing;

template <class Ring>
class GroupRingElem {
public:
    using coeff_type = typename Ring::value_type;

    GroupRingElem() = default;

    const std::vector<coeff_type>& coeffs() const noexcept { return c_; }
    const coeff_type& coeff(int g) const { return c_.at(static_cast<std::size_t>(g)); }
    GroupRing<Ring> ring() const;
    const FiniteGroup& group() const { return *ctx_->group; }
    bool valid() const noexcept { return static_cast<bool>(ctx_); }

    /// Number of nonzero coefficients.
    int support_size() const {
        int n = 0;
        for (const auto& v : c_) n += !ctx_->ring.is_zero(v);
        return n;
    }

    friend GroupRingElem operator+(const GroupRingElem& a, const GroupRingElem& b) { return a.ring().add(a, b); }
    friend GroupRingElem operator-(const GroupRingElem& a, const GroupRingElem& b) { return a.ring().sub(a, b); }
    friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b) { return a.ring().mul(a, b); }
    friend GroupRingElem operator-(const GroupRingElem& a) { return a.ring().neg(a); }
    friend GroupRingElem operator*(const coeff_type& s, const GroupRingElem& a) { return a.ring().scale(a, s); }
    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b) {
        if (!same_ctx(a, b)) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.ctx_->ring.equal(a.c_[i], b.c_[i])) return false;
        return true;
    }

    std::string to_string() const;

private:
    friend class GroupRing<Ring>;
    GroupRingElem(std::shared_ptr<const detail::GroupRingCtx<Ring>> ctx, std::vector<coeff_type> c)
        : ctx_(std::move(ctx)), c_(std::move(c)) {}

    static bool same_ctx(const GroupRingElem& a, const GroupRingElem& b) {
        if (a.ctx_ == b.ctx_) return true;
        if (!a.ctx_ || !b.ctx_) return false;
        return a.ctx_->group == b.ctx_->group && a.ctx_->ring == b.ctx_->ring;
    }

    std::shared_ptr<const detail::GroupRingCtx<Ring>> ctx_;
    std::vector<coeff_type> c_;
};

template <class Ring>
class GroupRing {
public:
    using coeff_type = typename Ring::value_type;
    using Elem = GroupRingElem<Ring>;
    using value_type = Elem;

    GroupRing(GroupPtr G, Ring R) : ctx_(std::make_shared<detail::GroupRingCtx<Ring>>(detail::GroupRingCtx<Ring>{std::move(G), std::move(R)})) {}

    const FiniteGroup& group() const noexcept { return *ctx_->group; }
    const GroupPtr& group_ptr() const noexcept { return ctx_->group; }
    const Ring& base() const noexcept { return ctx_->ring; }
    int dimension() const noexcept { return group().order(); }

    bool operator==(const GroupRing& o) const {
        return ctx_ == o.ctx_ || (ctx_->group == o.ctx_->group && ctx_->ring == o.ctx_->ring);
    }

    Elem zero() const { return Elem(ctx_, std::vector<coeff_type>(static_cast<std::size_t>(dimension()), base().zero())); }
    Elem one() const { return basis(0); }
    Elem basis(int g) const {
        auto e = zero();
        e.c_.at(static_cast<std::size_t>(g)) = base().one();
        return e;
    }
    Elem from_coeffs(std::vector<coeff_type> c) const {
        if (static_cast<int>(c.size()) != dimension()) throw precondition_error("from_coeffs: wrong number of coefficients");
        return Elem(ctx_, std::move(c));
    }
    /// sum of c_g g for integer coefficients (reduced into the base ring)
    Elem from_ints(const std::vector<std::int64_t>& c) const
        requires std::is_same_v<Ring, Zmod>
    {
        std::vector<coeff_type> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) v[i] = base().reduce(c[i]);
        return from_coeffs(std::move(v));
    }
    Elem scalar(const coeff_type& s) const { return scale(one(), s); }
    /// sum over the elements of a set, each with coefficient 1
    Elem sum_of(const std::vector<int>& elems) const {
        auto e = zero();
        for (int g : elems) e.c_[static_cast<std::size_t>(g)] = base().add(e.c_[static_cast<std::size_t>(g)], base().one());
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        std::vector<coeff_type> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base().add(a.c_[i], b.c_[i]);
        return Elem(ctx_, std::move(c));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        std::vector<coeff_type> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base().sub(a.c_[i], b.c_[i]);
        return Elem(ctx_, std::move(c));
    }
    Elem neg(const Elem& a) const { return sub(zero(), a); }
    Elem scale(const Elem& a, const coeff_type& s) const {
        check(a);
        std::vector<coeff_type> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = base().mul(s, a.c_[i]);
        return Elem(ctx_, std::move(c));
    }
    /// Convolution: coefficient of g is sum over xy = g of a_x b_y.
    Elem mul(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        const FiniteGroup& G = group();
        const int n = dimension();
        std::vector<coeff_type> c(static_cast<std::size_t>(n), base().zero());
        if constexpr (std::is_same_v<Ring, Zmod>) {
            const std::int64_t mod = base().modulus();
            const auto& T = G.table();
            for (int x = 0; x < n; ++x) {
                const auto ax = a.c_[static_cast<std::size_t>(x)];
                if (ax == 0) continue;
                const auto& row = T[static_cast<std::size_t>(x)];
                for (int y = 0; y < n; ++y) {
                    const auto by = b.c_[static_cast<std::size_t>(y)];
                    if (by == 0) continue;
                    auto& slot = c[static_cast<std::size_t>(row[static_cast<std::size_t>(y)])];
                    slot = (slot + ax * by) % mod;
                }
            }
        } else {
            for (int x = 0; x < n; ++x) {
                if (base().is_zero(a.c_[static_cast<std::size_t>(x)])) continue;
                for (int y = 0; y < n; ++y) {
                    if (base().is_zero(b.c_[static_cast<std::size_t>(y)])) continue;
                    auto& slot = c[static_cast<std::size_t>(G.mul(x, y))];
                    slot = base().add(slot, base().mul(a.c_[static_cast<std::size_t>(x)], b.c_[static_cast<std::size_t>(y)]));
                }
            }
        }
        return Elem(ctx_, std::move(c));
    }
    Elem pow(Elem a, std::int64_t e) const {
        if (e < 0) {
            a = inverse(a);
            e = -e;
        }
        Elem result = one();
        while (e > 0) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }

    bool is_zero(const Elem& a) const {
        for (const auto& v : a.c_)
            if (!base().is_zero(v)) return false;
        return true;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    /// Matrix of x -> a x in the group basis (column y holds the coordinates of a y).
    Matrix<coeff_type> left_multiplication_matrix(const Elem& a) const {
        check(a);
        const int n = dimension();
        Matrix<coeff_type> M(static_cast<std::size_t>(n), static_cast<std::size_t>(n), base().zero());
        for (int x = 0; x < n; ++x) {
            if (base().is_zero(a.c_[static_cast<std::size_t>(x)])) continue;
            for (int y = 0; y < n; ++y)
                M(static_cast<std::size_t>(group().mul(x, y)), static_cast<std::size_t>(y)) = a.c_[static_cast<std::size_t>(x)];
        }
        return M;
    }
    /// a is a unit iff left multiplication by a is invertible over the local base ring.
    bool is_unit(const Elem& a) const { return is_invertible(base(), left_multiplication_matrix(a)); }
    Elem inverse(const Elem& a) const {
        auto M = left_multiplication_matrix(a);
        std::vector<coeff_type> e(static_cast<std::size_t>(dimension()), base().zero());
        e[0] = base().one();
        try {
            auto x = solve_unit_pivot(base(), std::move(M), std::move(e));
            return Elem(ctx_, std::move(x));
        } catch (const singular_system&) {
            throw not_a_unit("group ring element is not a unit");
        }
    }

    /// g^{-1} a g: the coefficient of x moves to g^{-1} x g.
    Elem conjugate(const Elem& a, int g) const {
        check(a);
        auto out = zero();
        for (int x = 0; x < dimension(); ++x) out.c_[static_cast<std::size_t>(group().conj(x, g))] = a.c_[static_cast<std::size_t>(x)];
        return out;
    }

    bool is_idempotent(const Elem& a) const { return mul(a, a) == a; }
    bool is_central(const Elem& a) const {
        for (int g = 0; g < dimension(); ++g)
            if (!(conjugate(a, g) == a)) return false;
        return true;
    }

    /// Hat of a subgroup: |H|^{-1} times the sum of its elements.
    Elem hat(const Subgroup& H) const {
        const auto size = base().from_int(H.size());
        if (!base().is_unit(size)) throw precondition_error("hat: |H| = " + std::to_string(H.size()) + " is not invertible in the base ring");
        return scale(sum_of(H.elements()), base().inverse(size));
    }

    /// Coefficient-wise image under a ring map of the coefficients into another group ring over the same group.
    template <class Ring2, class F>
    GroupRingElem<Ring2> map_to(const GroupRing<Ring2>& target, const Elem& a, F f) const {
        check(a);
        std::vector<typename Ring2::value_type> c;
        c.reserve(a.c_.size());
        for (const auto& v : a.c_) c.push_back(f(v));
        return target.from_coeffs(std::move(c));
    }

    std::string render(const Elem& a) const {
        check(a);
        std::string out;
        for (int g = 0; g < dimension(); ++g) {
            const auto& v = a.c_[static_cast<std::size_t>(g)];
            if (base().is_zero(v)) continue;
            if (!out.empty()) out += " + ";
            const bool unit_coeff = detail::coeff_is_one(base(), v);
            if (g == 0)
                out += detail::coeff_to_string(base(), v);
            else if (unit_coeff)
                out += group().name(g);
            else
                out += detail::coeff_to_string(base(), v) + "*" + group().name(g);
        }
        return out.empty() ? "0" : out;
    }

private:
    friend class GroupRingElem<Ring>;
    explicit GroupRing(std::shared_ptr<const detail::GroupRingCtx<Ring>> ctx) : ctx_(std::move(ctx)) {}

    void check(const Elem& a) const {
        if (!a.ctx_) throw ring_mismatch("uninitialized group ring element");
        if (a.ctx_ != ctx_ && !(a.ctx_->group == ctx_->group && a.ctx_->ring == ctx_->ring))
            throw ring_mismatch("group ring elements from different rings");
    }

    std::shared_ptr<const detail::GroupRingCtx<Ring>> ctx_;
};

template <class Ring>
GroupRing<Ring> GroupRingElem<Ring>::ring() const {
    if (!ctx_) throw ring_mismatch("uninitialized group ring element");
    return GroupRing<Ring>(ctx_);
}

template <class Ring>
std::string GroupRingElem<Ring>::to_string() const {
    return ring().render(*this);
}

using ZGRing = GroupRing<Zmod>;
using ZGElem = GroupRingElem<Zmod>;
using GRGRing = GroupRing<GaloisRing>;
using GRGElem = GroupRingElem<GaloisRing>;

// --- Z/p^r G specific operations --------------------------------------------

/// The group ring F_p G over the same group.
inline ZGRing residue_ring(const ZGRing& R) { return ZGRing(R.group_ptr(), Zmod(R.base().prime_power().residue())); }

/// Coefficient-wise reduction modulo p.
inline ZGElem reduce_mod_p(const ZGElem& a) {
    auto R = a.ring();
    auto F = residue_ring(R);
    const auto p = R.base().p();
    return R.map_to(F, a, [p](std::int64_t v) { return v % p; });
}

/// Lift from F_p G (coefficients taken in {0, ..., p-1}) into the target Z/p^r G.
inline ZGElem lift_coefficients(const ZGElem& a, const ZGRing& target) {
    auto R = a.ring();
    if (R.group_ptr() != target.group_ptr()) throw ring_mismatch("lift: different groups");
    if (R.base().r() != 1 || R.base().p() != target.base().p()) throw ring_mismatch("lift: source must be F_p G for the same p");
    return R.map_to(target, a, [](std::int64_t v) { return v; });
}

/// Least n >= 1 with (a - a^2)^n = 0, for a idempotent modulo p.
inline int nilpotency_index(const ZGElem& a) {
    auto R = a.ring();
    auto nu = a - a * a;
    if (!R.is_zero(reduce_mod_p(nu))) throw precondition_error("nilpotency_index: element is not idempotent modulo p");
    auto x = nu;
    int n = 1;
    while (!R.is_zero(x)) {
        x = x * nu;
        ++n;
        if (n > R.base().r()) throw error("nilpotency_index: exceeded r (unreachable)");
    }
    return n;
}

/// Multiplicative order of a unit, by iterating powers (at most `cap` steps).
template <class Ring>
std::int64_t naive_order(const GroupRingElem<Ring>& u, std::int64_t cap = std::int64_t{1} << 24) {
    auto R = u.ring();
    auto one = R.one();
    auto x = u;
    for (std::int64_t k = 1; k <= cap; ++k) {
        if (x == one) return k;
        x = x * u;
    }
    throw error("naive_order: iteration cap reached");
}

struct UnitOrder {
    std::int64_t order = 1;          ///< exact multiplicative order
    std::int64_t residue_order = 1;  ///< l = order of the reduction in F_p G
    int k = 0;                       ///< largest k with u^l - 1 in p^k (r when u^l = 1)
    std::int64_t estimate = 1;       ///< l p^{r-k}, or l when u^l = 1
};

/// Order of a unit u of Z/p^r G: l = order of u mod p, then the p-power order of u^l,
/// which is 1 + (element of pZ/p^r G).
inline UnitOrder unit_order_details(const ZGElem& u) {
    auto R = u.ring();
    auto ubar = reduce_mod_p(u);
    auto F = ubar.ring();
    if (!F.is_unit(ubar)) throw not_a_unit("unit_order: reduction modulo p is not a unit");
    UnitOrder out;
    out.residue_order = naive_order(ubar);
    auto v = R.pow(u, out.residue_order);
    const auto one = R.one();
    const Zmod& Z = R.base();
    auto diff = v - one;
    int k = Z.r();
    for (const auto& c : diff.coeffs()) k = std::min(k, Z.valuation(c));
    out.k = k;
    out.estimate = k >= Z.r() ? out.residue_order : out.residue_order * ipow(Z.p(), Z.r() - k);
    std::int64_t ppart = 1;
    while (!(v == one)) {
        v = R.pow(v, Z.p());
        ppart *= Z.p();
        if (ppart > ipow(Z.p(), Z.r())) throw error("unit_order: p-part did not terminate (unreachable)");
    }
    out.order = out.residue_order * ppart;
    return out;
}

inline std::int64_t unit_order(const ZGElem& u) { return unit_order_details(u).order; }

/// How an idempotent lift was obtained.
enum class LiftMethod { exact, binomial, binomial_r, newton };

inline const char* to_string(LiftMethod m) {
    switch (m) {
    case LiftMethod::exact: return "exact";
    case LiftMethod::binomial: return "binomial";
    case LiftMethod::binomial_r: return "binomial_r";
    case LiftMethod::newton: return "newton";
    }
    return "?";
}

struct IdempotentLift {
    ZGElem value;
    int nilpotency = 1;
    LiftMethod method = LiftMethod::exact;
};

/// (sum_{k=1}^{n} (-1)^{k-1} C(n,k) e^k)^n
inline ZGElem binomial_lift(const ZGElem& e, int n) {
    auto R = e.ring();
    const Zmod& Z = R.base();
    auto s = R.zero();
    auto ek = R.one();
    std::int64_t binom = 1;
    for (int k = 1; k <= n; ++k) {
        ek = ek * e;
        binom = binom * (n - k + 1) / k;
        const std::int64_t sign = (k % 2) ? 1 : -1;
        s = s + Z.reduce(sign * binom) * ek;
    }
    return R.pow(s, n);
}

/// Lift an idempotent of F_p G (or a mod-p idempotent of Z/p^r G) to an idempotent of target.
inline IdempotentLift lift_idempotent(const ZGElem& eps, const ZGRing& target) {
    ZGElem e = eps.ring().base().r() == 1 && target.base().r() != 1 ? lift_coefficients(eps, target) : eps;
    IdempotentLift out;
    out.nilpotency = nilpotency_index(e);
    if (out.nilpotency == 1) {
        out.value = e;
        out.method = LiftMethod::exact;
        return out;
    }
    auto w = binomial_lift(e, out.nilpotency);
    if (target.is_idempotent(w)) {
        out.value = w;
        out.method = LiftMethod::binomial;
        return out;
    }
    w = binomial_lift(e, target.base().r());
    if (target.is_idempotent(w)) {
        out.value = w;
        out.method = LiftMethod::binomial_r;
        return out;
    }
    w = e;
    for (int i = 0; i < 64 && !target.is_idempotent(w); ++i) {
        auto w2 = w * w;
        w = target.base().reduce(3) * w2 - target.base().reduce(2) * (w2 * w);
    }
    if (!target.is_idempotent(w)) throw error("lift_idempotent: no method produced an idempotent");
    out.value = w;
    out.method = LiftMethod::newton;
    return out;
}

} // namespace zng
