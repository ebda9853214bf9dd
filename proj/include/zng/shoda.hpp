#pragma once

/**
 * @file shoda.hpp
 * @brief Shoda and strong Shoda pairs, cyclotomic classes and the
 * idempotents epsilon(H,K), epsilon_C(H,K), omega_C(H,K) and w_C(G,H,K).
 *
 * Rational quantities (condition (iii) and the irredundancy key e(G,H,K))
 * are computed modulo the prime 2^31 - 1. Every such element is
 * sum_S (-1)^{|S|} hat(L_S) over at most three subgroups L_i, so its
 * coefficients have denominators dividing |H| and absolute value at most
 * 8; products of two of them stay far below the prime, which makes the
 * modular zero test and comparisons exact.
 */

#include <zng/error.hpp>
#include <zng/group.hpp>
#include <zng/group_ring.hpp>
#include <zng/ring_core.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zng {

inline constexpr std::int64_t rational_prime = 2147483647;

struct CyclotomicClass {
    int modulus = 1;
    std::vector<int> members; ///< representative first, then e p, e p^2, ... mod k
    int representative() const { return members.front(); }
    bool operator==(const CyclotomicClass&) const = default;
};

/// Orbits of the units mod k under e -> p e, each listed from its smallest member.
inline std::vector<CyclotomicClass> cyclotomic_classes(int k, std::int64_t p) {
    if (k < 1) throw precondition_error("cyclotomic_classes: modulus must be positive");
    if (std::gcd(static_cast<std::int64_t>(k), p) != 1) throw precondition_error("cyclotomic_classes: p divides the modulus");
    std::vector<CyclotomicClass> out;
    std::vector<char> done(static_cast<std::size_t>(k), 0);
    for (int e = 0; e < k; ++e) {
        if (std::gcd(e, k) != 1 && k != 1) continue;
        if (done[static_cast<std::size_t>(e)]) continue;
        CyclotomicClass c{k, {}};
        int x = e;
        while (!done[static_cast<std::size_t>(x)]) {
            done[static_cast<std::size_t>(x)] = 1;
            c.members.push_back(k == 1 ? 1 : x);
            x = static_cast<int>((static_cast<std::int64_t>(x) * p) % k);
        }
        out.push_back(std::move(c));
    }
    return out;
}

/// [H, g] inside H is contained in K only when g lies in H.
inline bool is_shoda_pair(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!cyclic_quotient_generator(G, H, K)) throw precondition_error("is_shoda_pair: H/K must be cyclic with K normal in H");
    for (int g = 0; g < G.order(); ++g) {
        if (H.contains(g)) continue;
        bool inside = true;
        for (int h : H.elements()) {
            const int c = G.commutator(h, g);
            if (H.contains(c) && !K.contains(c)) {
                inside = false;
                break;
            }
        }
        if (inside) return false;
    }
    return true;
}

namespace detail {

/// Subgroups L with K < L normal in H, minimal; fast path for cyclic H/K.
inline std::vector<Subgroup> minimal_normal_above(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (auto x = cyclic_quotient_generator(G, H, K)) {
        const int k = H.size() / K.size();
        std::vector<Subgroup> out;
        for (auto q : prime_divisors(k)) {
            std::vector<int> gens = K.elements();
            gens.push_back(G.pow(*x, k / q));
            out.push_back(generated_subgroup(G, gens));
        }
        return out;
    }
    return minimal_normal_over(G, H, K);
}

/// First irreducible factor of Phi_k over F_p, in find_basic_irreducible order.
inline Poly cyclotomic_factor(int k, PrimePower fp) {
    const int o = static_cast<int>(multiplicative_order(fp.p, k));
    return equal_degree_factors(cyclotomic_poly_fp(k, fp), o).front();
}

} // namespace detail

/// epsilon(H,K) = hat(K) if H = K, else the product of hat(K) - hat(L) over minimal normal
/// subgroups L of H properly containing K.
inline ZGElem epsilon_plain(const ZGRing& R, const Subgroup& H, const Subgroup& K) {
    const FiniteGroup& G = R.group();
    auto kh = R.hat(K);
    if (H.size() == K.size()) return kh;
    auto out = kh;
    for (const auto& L : detail::minimal_normal_above(G, H, K)) out = out * (kh - R.hat(L));
    return out;
}

/// The rational epsilon(H,K), reduced modulo 2^31 - 1.
inline ZGElem rational_epsilon(const GroupPtr& G, const Subgroup& H, const Subgroup& K) {
    return epsilon_plain(ZGRing(G, Zmod(rational_prime, 1)), H, K);
}

/// Sum of the distinct G-conjugates of an element.
inline ZGElem conjugate_sum(const ZGElem& a) {
    auto R = a.ring();
    std::set<std::vector<std::int64_t>> seen;
    auto out = R.zero();
    for (int g = 0; g < R.dimension(); ++g) {
        auto c = R.conjugate(a, g);
        if (seen.insert(c.coeffs()).second) out = out + c;
    }
    return out;
}

/// Conditions (i)-(iii) of a strong Shoda pair; (iii) is evaluated over Q.
inline bool is_strong_shoda_pair(const GroupPtr& Gp, const Subgroup& H, const Subgroup& K) {
    const FiniteGroup& G = *Gp;
    if (!H.contains(K)) return false;
    const Subgroup N = normalizer(G, K);
    // (i) K <= H normal in N_G(K)
    if (!N.contains(H) || !is_normal_in(G, H, N)) return false;
    // (ii) H/K cyclic and maximal abelian in N/K
    if (!cyclic_quotient_generator(G, H, K)) return false;
    for (int g : N.elements()) {
        if (H.contains(g)) continue;
        bool commutes_mod_k = true;
        for (int h : H.elements())
            if (!K.contains(G.commutator(h, g))) {
                commutes_mod_k = false;
                break;
            }
        if (commutes_mod_k) return false;
    }
    // (iii) eps g^{-1} eps g = 0 for g outside N; g only matters through its coset N g
    if (N.size() == G.order()) return true;
    ZGRing Q(Gp, Zmod(rational_prime, 1));
    const auto eps = epsilon_plain(Q, H, K);
    const auto T = right_transversal(G, N);
    for (std::size_t i = 1; i < T.reps.size(); ++i)
        if (!Q.is_zero(eps * Q.conjugate(eps, T.reps[i]))) return false;
    return true;
}

/// One strong Shoda pair per rational idempotent e(G,H,K); H by decreasing order, then K.
/// Throws not_strongly_monomial when the idempotents do not sum to 1.
struct ShodaPair {
    Subgroup H, K;
    ZGElem rational_e; ///< e(G,H,K) modulo 2^31 - 1
};

inline std::vector<ShodaPair> strong_shoda_pairs_partial(const GroupPtr& Gp) {
    const FiniteGroup& G = *Gp;
    auto subs = subgroups(G);
    std::vector<Subgroup> by_size_desc(subs.rbegin(), subs.rend());
    std::stable_sort(by_size_desc.begin(), by_size_desc.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() > b.size(); });
    std::vector<ShodaPair> out;
    std::set<std::vector<std::int64_t>> keys;
    ZGRing Q(Gp, Zmod(rational_prime, 1));
    for (const auto& H : by_size_desc)
        for (const auto& K : by_size_desc) {
            if (K.size() > H.size() || H.size() % K.size() || !H.contains(K)) continue;
            if (!cyclic_quotient_generator(G, H, K)) continue;
            if (!is_strong_shoda_pair(Gp, H, K)) continue;
            auto e = conjugate_sum(epsilon_plain(Q, H, K));
            if (keys.insert(e.coeffs()).second) out.push_back({H, K, e});
        }
    return out;
}

inline std::vector<ShodaPair> strong_shoda_pairs(const GroupPtr& Gp) {
    auto out = strong_shoda_pairs_partial(Gp);
    ZGRing Q(Gp, Zmod(rational_prime, 1));
    auto total = Q.zero();
    for (const auto& s : out) total = total + s.rational_e;
    if (!(total == Q.one()))
        throw not_strongly_monomial("group " + Gp->label() + " is not strongly monomial: strong Shoda idempotents do not sum to 1");
    return out;
}

/// epsilon_C(H,K) = |H|^{-1} sum_h tr(chi(hK)) h^{-1} in F_p G, where chi(x^j K) = zeta_k^{e j}
/// for the first generator xK of H/K and e the class representative.
inline ZGElem epsilon_C(const ZGRing& Fp, const Subgroup& H, const Subgroup& K, const CyclotomicClass& C) {
    if (Fp.base().r() != 1) throw precondition_error("epsilon_C: base ring must be F_p");
    const FiniteGroup& G = Fp.group();
    const auto p = Fp.base().p();
    const int k = H.size() / K.size();
    if (C.modulus != k) throw precondition_error("epsilon_C: class modulus differs from [H:K]");
    if (std::gcd(static_cast<std::int64_t>(H.size()), p) != 1) throw precondition_error("epsilon_C: p divides |H|");
    if (k == 1) return Fp.hat(H);
    const auto x = cyclic_quotient_generator(G, H, K);
    if (!x) throw precondition_error("epsilon_C: H/K is not cyclic");
    const int o = static_cast<int>(multiplicative_order(p, k));
    // F_{p^o} = F_p[X]/(f) for the first irreducible factor f of Phi_k; zeta = X
    const PrimePower fp(p, 1);
    const Poly f = detail::cyclotomic_factor(k, fp);
    std::vector<Poly> xpow;
    for (int m = 0; m < k; ++m) xpow.push_back(poly_mod(Poly::monomial(fp, m), f));
    std::vector<std::int64_t> tr(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        Poly t(fp);
        std::int64_t e = static_cast<std::int64_t>(C.representative()) * j % k;
        for (int i = 0; i < o; ++i) {
            t = t + xpow[static_cast<std::size_t>(e)];
            e = e * p % k;
        }
        if (t.degree() > 0) throw error("epsilon_C: trace left F_p (unreachable)");
        tr[static_cast<std::size_t>(j)] = t.coeff(0);
    }
    // exponent of hK with respect to xK
    std::vector<int> expo(static_cast<std::size_t>(G.order()), -1);
    {
        int y = 0;
        for (int j = 0; j < k; ++j) {
            for (int kk : K.elements()) expo[static_cast<std::size_t>(G.mul(y, kk))] = j;
            y = G.mul(y, *x);
        }
    }
    const Zmod& Z = Fp.base();
    const auto inv_h = Z.inverse(Z.reduce(H.size()));
    std::vector<std::int64_t> c(static_cast<std::size_t>(G.order()), 0);
    for (int h : H.elements())
        c[static_cast<std::size_t>(G.inv(h))] = Z.mul(inv_h, tr[static_cast<std::size_t>(expo[static_cast<std::size_t>(h)])]);
    return Fp.from_coeffs(std::move(c));
}

/// Everything attached to a strong Shoda pair and one cyclotomic class at a prime power.
struct ShodaData {
    Subgroup H, K;
    CyclotomicClass cls;
    int k = 1;                 ///< [H:K]
    int generator = 0;         ///< x with xK generating H/K
    int o = 1;                 ///< multiplicative order of p mod k
    int l = 1;                 ///< o / [C:H]
    ZGElem epsilon;            ///< epsilon_C(H,K) over F_p
    ZGElem omega;              ///< its idempotent lift over Z/p^r
    int nilpotency = 1;
    LiftMethod lift_method = LiftMethod::exact;
    Subgroup C;                ///< Cen_G(omega)
    Transversal T;             ///< right transversal of C in G
    ZGElem w;                  ///< sum of distinct conjugates of omega
    ZGElem e;                  ///< sum of distinct conjugates of epsilon, over F_p

    int matrix_size(const FiniteGroup& G) const { return G.order() / H.size(); }
    int centralizer_index() const { return C.size() / H.size(); }
};

inline Subgroup element_centralizer(const ZGElem& a) {
    auto R = a.ring();
    std::vector<int> out;
    for (int g = 0; g < R.dimension(); ++g)
        if (R.conjugate(a, g) == a) out.push_back(g);
    return Subgroup(R.dimension(), std::move(out));
}

inline ShodaData shoda_data(const ZGRing& R, const Subgroup& H, const Subgroup& K, const CyclotomicClass& cls) {
    const FiniteGroup& G = R.group();
    const auto p = R.base().p();
    if (std::gcd(static_cast<std::int64_t>(G.order()), p) != 1)
        throw coprimality_error("p = " + std::to_string(p) + " divides |G| = " + std::to_string(G.order()), p);
    ShodaData d;
    d.H = H;
    d.K = K;
    d.cls = cls;
    d.k = H.size() / K.size();
    auto x = cyclic_quotient_generator(G, H, K);
    if (!x) throw precondition_error("shoda_data: H/K is not cyclic");
    d.generator = *x;
    d.o = static_cast<int>(multiplicative_order(p, d.k));
    auto F = residue_ring(R);
    d.epsilon = epsilon_C(F, H, K, cls);
    auto lift = lift_idempotent(d.epsilon, R);
    d.omega = lift.value;
    d.nilpotency = lift.nilpotency;
    d.lift_method = lift.method;
    d.C = element_centralizer(d.omega);
    if (d.o % d.centralizer_index() != 0) throw error("shoda_data: [C:H] does not divide o (unreachable for strong Shoda pairs)");
    d.l = d.o / d.centralizer_index();
    d.T = right_transversal(G, d.C);
    d.w = R.zero();
    d.e = F.zero();
    for (int t : d.T.reps) {
        d.w = d.w + R.conjugate(d.omega, t);
        d.e = d.e + F.conjugate(d.epsilon, t);
    }
    return d;
}

/// ShodaData for every strong Shoda pair and every cyclotomic class of generators, keeping one
/// entry per distinct w_C. Throws not_strongly_monomial unless the w_C sum to 1.
inline std::vector<ShodaData> shoda_components(const ZGRing& R, const std::vector<ShodaPair>& pairs) {
    std::vector<ShodaData> out;
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& pr : pairs) {
        const int k = pr.H.size() / pr.K.size();
        for (const auto& cls : cyclotomic_classes(k, R.base().p())) {
            auto d = shoda_data(R, pr.H, pr.K, cls);
            if (seen.insert(d.w.coeffs()).second) out.push_back(std::move(d));
        }
    }
    auto total = R.zero();
    for (const auto& d : out) total = total + d.w;
    if (!(total == R.one())) throw not_strongly_monomial("the idempotents w_C do not sum to 1");
    return out;
}

inline std::vector<ShodaData> shoda_components(const ZGRing& R) { return shoda_components(R, strong_shoda_pairs(R.group_ptr())); }

} // namespace zng
