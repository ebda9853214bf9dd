#pragma once

/**
 * @file group.hpp
 * @brief Finite groups given by Cayley tables, and the subgroup machinery
 * needed for strong Shoda pairs: closures, enumeration, normalizers,
 * centralizers, quotients and transversals.
 *
 * Element 0 is always the identity.
 */

#include <zng/error.hpp>
#include <zng/ring_core.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace zng {

inline constexpr int max_group_order = 200;

class FiniteGroup {
public:
    /// Validates the table: square, Latin, row/column 0 is the identity, associative
    /// (exhaustively up to order 64, on random triples above).
    explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names = {},
                         std::string label = "")
        : table_(std::move(table)), names_(std::move(names)), label_(std::move(label)) {
        const int n = static_cast<int>(table_.size());
        if (n < 1) throw invalid_group("empty Cayley table");
        if (n > max_group_order)
            throw invalid_group("group order " + std::to_string(n) + " exceeds the cap of " + std::to_string(max_group_order));
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n) throw invalid_group("Cayley table is not square");
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            for (int v : row) {
                if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) throw invalid_group("Cayley table row is not a permutation");
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
        for (int j = 0; j < n; ++j) {
            std::vector<char> seen(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                int v = table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                if (seen[static_cast<std::size_t>(v)]) throw invalid_group("Cayley table column is not a permutation");
                seen[static_cast<std::size_t>(v)] = 1;
            }
        }
        for (int i = 0; i < n; ++i)
            if (mul(0, i) != i || mul(i, 0) != i) throw invalid_group("element 0 is not the identity");
        auto assoc = [&](int a, int b, int c) { return mul(mul(a, b), c) == mul(a, mul(b, c)); };
        if (n <= 64) {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        if (!assoc(a, b, c)) throw invalid_group("Cayley table is not associative");
        } else {
            std::mt19937 rng(12345);
            std::uniform_int_distribution<int> d(0, n - 1);
            for (int t = 0; t < 20000; ++t)
                if (!assoc(d(rng), d(rng), d(rng))) throw invalid_group("Cayley table is not associative");
        }
        inv_.assign(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (mul(i, j) == 0) inv_[static_cast<std::size_t>(i)] = j;
        if (names_.size() != static_cast<std::size_t>(n)) {
            names_.assign(static_cast<std::size_t>(n), "");
            names_[0] = "1";
            for (int i = 1; i < n; ++i) names_[static_cast<std::size_t>(i)] = "g" + std::to_string(i);
        }
        order_.assign(static_cast<std::size_t>(n), 1);
        for (int i = 0; i < n; ++i) {
            int x = i, k = 1;
            while (x != 0) {
                x = mul(x, i);
                ++k;
            }
            order_[static_cast<std::size_t>(i)] = k;
        }
    }

    int order() const noexcept { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
    int pow(int a, std::int64_t k) const {
        const int o = element_order(a);
        k %= o;
        if (k < 0) k += o;
        int x = 0;
        for (std::int64_t i = 0; i < k; ++i) x = mul(x, a);
        return x;
    }
    int element_order(int a) const { return order_[static_cast<std::size_t>(a)]; }
    /// g^{-1} x g
    int conj(int x, int g) const { return mul(inv(g), mul(x, g)); }
    /// h^{-1} g^{-1} h g
    int commutator(int h, int g) const { return mul(mul(inv(h), inv(g)), mul(h, g)); }

    const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& label() const noexcept { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }
    const std::vector<std::vector<int>>& table() const noexcept { return table_; }

    std::optional<int> find(const std::string& nm) const {
        for (int i = 0; i < order(); ++i)
            if (names_[static_cast<std::size_t>(i)] == nm) return i;
        return std::nullopt;
    }

    bool is_abelian() const {
        for (int a = 0; a < order(); ++a)
            for (int b = a + 1; b < order(); ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }
    int exponent() const {
        std::int64_t e = 1;
        for (int a = 0; a < order(); ++a) e = std::lcm(e, static_cast<std::int64_t>(element_order(a)));
        return static_cast<int>(e);
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::string label_;
    std::vector<int> inv_;
    std::vector<int> order_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup as a sorted index set with a membership mask.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(int parent_order, std::vector<int> elems) : elems_(std::move(elems)), mask_(static_cast<std::size_t>(parent_order), 0) {
        std::sort(elems_.begin(), elems_.end());
        for (int e : elems_) mask_[static_cast<std::size_t>(e)] = 1;
    }
    const std::vector<int>& elements() const noexcept { return elems_; }
    int size() const noexcept { return static_cast<int>(elems_.size()); }
    bool contains(int g) const { return mask_[static_cast<std::size_t>(g)] != 0; }
    bool contains(const Subgroup& o) const {
        for (int g : o.elems_)
            if (!contains(g)) return false;
        return true;
    }
    bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
    bool operator<(const Subgroup& o) const { return elems_ < o.elems_; }

private:
    std::vector<int> elems_;
    std::vector<char> mask_;
};

inline Subgroup whole_group(const FiniteGroup& G) {
    std::vector<int> all(static_cast<std::size_t>(G.order()));
    for (int i = 0; i < G.order(); ++i) all[static_cast<std::size_t>(i)] = i;
    return Subgroup(G.order(), std::move(all));
}
inline Subgroup trivial_subgroup(const FiniteGroup& G) { return Subgroup(G.order(), {0}); }

/// Subgroup generated by a set of elements.
inline Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (int g : gens) {
            int y = G.mul(elems[i], g);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                elems.push_back(y);
            }
        }
    return Subgroup(G.order(), std::move(elems));
}

inline bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    Subgroup S(G.order(), elems);
    if (!S.contains(0)) return false;
    for (int a : S.elements())
        for (int b : S.elements())
            if (!S.contains(G.mul(a, G.inv(b)))) return false;
    return true;
}

/// All subgroups by the cyclic-extension method, sorted by order then by elements.
inline std::vector<Subgroup> subgroups(const FiniteGroup& G) {
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    auto add = [&](Subgroup s) {
        if (seen.insert(s.elements()).second) out.push_back(std::move(s));
    };
    std::vector<Subgroup> cyclic;
    {
        std::set<std::vector<int>> cseen;
        for (int g = 0; g < G.order(); ++g) {
            auto z = generated_subgroup(G, {g});
            if (cseen.insert(z.elements()).second) cyclic.push_back(z);
        }
    }
    for (const auto& z : cyclic) add(z);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& z : cyclic) {
            if (out[i].contains(z)) continue;
            std::vector<int> gens = {z.elements().size() > 1 ? z.elements()[1] : 0};
            // a generator of z: any element of maximal order
            for (int g : z.elements())
                if (G.element_order(g) == z.size()) gens[0] = g;
            for (int g : out[i].elements()) gens.push_back(g);
            add(generated_subgroup(G, gens));
        }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.elements() < b.elements();
    });
    return out;
}

/// N_G(K) = {g : g^{-1} K g = K}.
inline Subgroup normalizer(const FiniteGroup& G, const Subgroup& K) {
    std::vector<int> out;
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int k : K.elements())
            if (!K.contains(G.conj(k, g))) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return Subgroup(G.order(), std::move(out));
}

/// K normal in H (both subgroups of G, K <= H).
inline bool is_normal_in(const FiniteGroup& G, const Subgroup& K, const Subgroup& H) {
    if (!H.contains(K)) return false;
    for (int h : H.elements())
        for (int k : K.elements())
            if (!K.contains(G.conj(k, h))) return false;
    return true;
}

/// Elements of G commuting with every element of the given set.
inline Subgroup centralizer(const FiniteGroup& G, const std::vector<int>& set) {
    std::vector<int> out;
    for (int g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (int x : set)
            if (G.mul(g, x) != G.mul(x, g)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(g);
    }
    return Subgroup(G.order(), std::move(out));
}

inline Subgroup center(const FiniteGroup& G) { return centralizer(G, whole_group(G).elements()); }

inline Subgroup derived_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int a = 0; a < G.order(); ++a)
        for (int b = 0; b < G.order(); ++b) gens.push_back(G.commutator(a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generated_subgroup(G, gens);
}

inline std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
    std::vector<char> done(static_cast<std::size_t>(G.order()), 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < G.order(); ++x) {
        if (done[static_cast<std::size_t>(x)]) continue;
        std::vector<int> cls;
        for (int g = 0; g < G.order(); ++g) {
            int y = G.conj(x, g);
            if (!done[static_cast<std::size_t>(y)]) {
                done[static_cast<std::size_t>(y)] = 1;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        out.push_back(std::move(cls));
    }
    return out;
}

/// Right transversal: representatives t with G = disjoint union of C t; reps[0] = identity.
struct Transversal {
    Subgroup subgroup;
    std::vector<int> reps;
    std::vector<int> coset_of; ///< index into reps of the coset C g containing g
};

inline Transversal right_transversal(const FiniteGroup& G, const Subgroup& C) {
    Transversal T;
    T.subgroup = C;
    T.coset_of.assign(static_cast<std::size_t>(G.order()), -1);
    for (int g = 0; g < G.order(); ++g) {
        if (T.coset_of[static_cast<std::size_t>(g)] >= 0) continue;
        const int idx = static_cast<int>(T.reps.size());
        T.reps.push_back(g);
        for (int c : C.elements()) T.coset_of[static_cast<std::size_t>(G.mul(c, g))] = idx;
    }
    return T;
}

/// The quotient H/K together with the projection H -> H/K and coset representatives.
struct Quotient {
    GroupPtr group;
    std::vector<int> projection; ///< per element of G; -1 outside H
    std::vector<int> lift;       ///< representative in H of each coset
};

inline Quotient quotient(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!is_normal_in(G, K, H)) throw precondition_error("quotient: K is not normal in H");
    Quotient Q;
    Q.projection.assign(static_cast<std::size_t>(G.order()), -1);
    for (int h : H.elements()) {
        if (Q.projection[static_cast<std::size_t>(h)] >= 0) continue;
        const int idx = static_cast<int>(Q.lift.size());
        Q.lift.push_back(h);
        for (int k : K.elements()) Q.projection[static_cast<std::size_t>(G.mul(h, k))] = idx;
    }
    const std::size_t m = Q.lift.size();
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (std::size_t i = 0; i < m; ++i) {
        names[i] = i == 0 ? "1" : G.name(Q.lift[i]) + "K";
        for (std::size_t j = 0; j < m; ++j)
            table[i][j] = Q.projection[static_cast<std::size_t>(G.mul(Q.lift[i], Q.lift[j]))];
    }
    Q.group = std::make_shared<FiniteGroup>(std::move(table), std::move(names));
    return Q;
}

/// Some h in H whose coset generates H/K, when H/K is cyclic.
inline std::optional<int> cyclic_quotient_generator(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    if (!is_normal_in(G, K, H)) return std::nullopt;
    const int k = H.size() / K.size();
    for (int h : H.elements()) {
        int x = h, j = 1;
        while (!K.contains(x)) {
            x = G.mul(x, h);
            ++j;
        }
        if (j == k) return h;
    }
    return std::nullopt;
}

inline std::optional<int> cyclic_generator(const FiniteGroup& G) {
    return cyclic_quotient_generator(G, whole_group(G), trivial_subgroup(G));
}

/// Subgroups L with K < L, L normal in H, minimal with these properties.
inline std::vector<Subgroup> minimal_normal_over(const FiniteGroup& G, const Subgroup& H, const Subgroup& K,
                                                 const std::vector<Subgroup>& all_subgroups) {
    std::vector<Subgroup> cands;
    for (const auto& L : all_subgroups)
        if (L.size() > K.size() && H.contains(L) && L.contains(K) && is_normal_in(G, L, H)) cands.push_back(L);
    std::vector<Subgroup> out;
    for (const auto& L : cands) {
        bool minimal = true;
        for (const auto& M : cands)
            if (M.size() < L.size() && L.contains(M)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(L);
    }
    return out;
}

inline std::vector<Subgroup> minimal_normal_over(const FiniteGroup& G, const Subgroup& H, const Subgroup& K) {
    return minimal_normal_over(G, H, K, subgroups(G));
}

} // namespace zng
