#pragma once

/**
 * @file group_library.hpp
 * @brief Group constructors (cyclic, abelian, products, extensions,
 * permutation and matrix groups), the order <= 24 corpus, and a name registry.
 */

#include <zng/group.hpp>

#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace zng {

namespace detail {

inline std::string power_name(const std::string& letter, int e) {
    if (e == 0) return "";
    if (e == 1) return letter;
    return letter + "^" + std::to_string(e);
}

inline std::string join_word(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += p;
    return out.empty() ? "1" : out;
}

inline std::string strip_identity(const std::string& s) { return s == "1" ? "" : s; }

} // namespace detail

/// Group generated by elements of type T under mul; element 0 is the identity.
template <class T, class Mul, class Name>
GroupPtr closure_group(const std::vector<T>& gens, const T& identity, Mul mul, Name name, std::string label) {
    std::map<T, int> index{{identity, 0}};
    std::vector<T> elems{identity};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            T y = mul(elems[i], g);
            if (index.emplace(y, static_cast<int>(elems.size())).second) {
                elems.push_back(y);
                if (elems.size() > static_cast<std::size_t>(max_group_order))
                    throw invalid_group("generated group exceeds the order cap of " + std::to_string(max_group_order));
            }
        }
    const std::size_t n = elems.size();
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[i] = i == 0 ? "1" : name(elems[i]);
        for (std::size_t j = 0; j < n; ++j) table[i][j] = index.at(mul(elems[i], elems[j]));
    }
    return std::make_shared<FiniteGroup>(std::move(table), std::move(names), std::move(label));
}

inline GroupPtr cyclic_group(int n, const std::string& letter = "g") {
    if (n < 1) throw invalid_group("cyclic group order must be positive");
    if (n > max_group_order) throw invalid_group("cyclic group order exceeds the cap");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        names[static_cast<std::size_t>(i)] = i == 0 ? "1" : detail::power_name(letter, i);
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    }
    return std::make_shared<FiniteGroup>(std::move(t), std::move(names), "C" + std::to_string(n));
}

/// Direct product; element (g, h) has index g + |G| h.
inline GroupPtr direct_product(const FiniteGroup& G, const FiniteGroup& H, std::string label = "") {
    const int a = G.order(), b = H.order(), n = a * b;
    if (n > max_group_order) throw invalid_group("direct product exceeds the order cap");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        names[static_cast<std::size_t>(x)] =
            detail::join_word({detail::strip_identity(G.name(x % a)), detail::strip_identity(H.name(x / a))});
        for (int y = 0; y < n; ++y)
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = G.mul(x % a, y % a) + a * H.mul(x / a, y / a);
    }
    if (label.empty()) label = G.label() + "x" + H.label();
    return std::make_shared<FiniteGroup>(std::move(t), std::move(names), std::move(label));
}

/// Abelian group C_{n1} x C_{n2} x ... with generators named a, b, c, ...
inline GroupPtr abelian_group(const std::vector<int>& invariants) {
    if (invariants.empty()) return cyclic_group(1);
    const std::string letters = "abcdefgh";
    if (invariants.size() > letters.size()) throw invalid_group("too many abelian invariants");
    GroupPtr G = cyclic_group(invariants[0], std::string(1, letters[0]));
    std::string label = "C" + std::to_string(invariants[0]);
    for (std::size_t i = 1; i < invariants.size(); ++i) {
        label += "xC" + std::to_string(invariants[i]);
        G = direct_product(*G, *cyclic_group(invariants[i], std::string(1, letters[i])), label);
    }
    auto out = std::make_shared<FiniteGroup>(*G);
    out->set_label(label);
    return out;
}

/// N extended by b with b n b^{-1} = phi(n), b^m = z; phi fixes z and phi^m is conjugation by z.
/// Element n b^i has index n + |N| i.
inline GroupPtr cyclic_extension(const FiniteGroup& N, const std::vector<int>& phi, int m, int z, std::string label,
                                 const std::string& letter = "b") {
    const int a = N.order(), n = a * m;
    if (n > max_group_order) throw invalid_group("extension exceeds the order cap");
    std::vector<std::vector<int>> phis{std::vector<int>(static_cast<std::size_t>(a))};
    for (int x = 0; x < a; ++x) phis[0][static_cast<std::size_t>(x)] = x;
    for (int i = 1; i < m; ++i) {
        std::vector<int> next(static_cast<std::size_t>(a));
        for (int x = 0; x < a; ++x) next[static_cast<std::size_t>(x)] = phi[static_cast<std::size_t>(phis.back()[static_cast<std::size_t>(x)])];
        phis.push_back(std::move(next));
    }
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const int n1 = x % a, i = x / a;
        names[static_cast<std::size_t>(x)] = detail::join_word({detail::strip_identity(N.name(n1)), detail::power_name(letter, i)});
        for (int y = 0; y < n; ++y) {
            const int n2 = y % a, j = y / a;
            int prod = N.mul(n1, phis[static_cast<std::size_t>(i)][static_cast<std::size_t>(n2)]);
            int e = i + j;
            if (e >= m) {
                prod = N.mul(prod, z);
                e -= m;
            }
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = prod + a * e;
        }
    }
    return std::make_shared<FiniteGroup>(std::move(t), std::move(names), std::move(label));
}

/// Automorphism x -> x^k of a cyclic group built by cyclic_group (index = exponent).
inline std::vector<int> cyclic_power_map(int n, int k) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) out[static_cast<std::size_t>(x)] = static_cast<int>(((static_cast<long long>(x) * k) % n + n) % n);
    return out;
}

/// Inversion map of an abelian group.
inline std::vector<int> inversion_map(const FiniteGroup& N) {
    std::vector<int> out(static_cast<std::size_t>(N.order()));
    for (int x = 0; x < N.order(); ++x) out[static_cast<std::size_t>(x)] = N.inv(x);
    return out;
}

/// N x| H with h n h^{-1} = action(h)[n]; element (n, h) has index n + |N| h.
inline GroupPtr semidirect_product(const FiniteGroup& N, const FiniteGroup& H,
                                   const std::function<std::vector<int>(int)>& action, std::string label) {
    const int a = N.order(), b = H.order(), n = a * b;
    if (n > max_group_order) throw invalid_group("semidirect product exceeds the order cap");
    std::vector<std::vector<int>> acts;
    for (int h = 0; h < b; ++h) acts.push_back(action(h));
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<std::string> names(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        const int n1 = x % a, h1 = x / a;
        names[static_cast<std::size_t>(x)] = detail::join_word({detail::strip_identity(N.name(n1)), detail::strip_identity(H.name(h1))});
        for (int y = 0; y < n; ++y) {
            const int n2 = y % a, h2 = y / a;
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] =
                N.mul(n1, acts[static_cast<std::size_t>(h1)][static_cast<std::size_t>(n2)]) + a * H.mul(h1, h2);
        }
    }
    return std::make_shared<FiniteGroup>(std::move(t), std::move(names), std::move(label));
}

/// Dihedral group of the given (even) order, elements r^i s^j.
inline GroupPtr dihedral_group(int order) {
    if (order < 2 || order % 2) throw invalid_group("dihedral group order must be even");
    const int k = order / 2;
    return cyclic_extension(*cyclic_group(k, "r"), cyclic_power_map(k, -1), 2, 0, "D" + std::to_string(order), "s");
}

/// Dicyclic group of order 4k: <x, y | x^{2k}, y^2 = x^k, y x y^{-1} = x^{-1}>.
inline GroupPtr dicyclic_group(int k, std::string label) {
    return cyclic_extension(*cyclic_group(2 * k, "x"), cyclic_power_map(2 * k, -1), 2, k, std::move(label), "y");
}

inline GroupPtr quaternion_group() {
    auto q = dicyclic_group(2, "Q8");
    return q;
}

/// The order-27 exponent-3 group <a, b, c | a^3 = b^3 = c^3 = 1, ac = ca, bc = cb, b^{-1} a b = a c^{-1}>.
/// Normal form a^i b^j c^k at index 9i + 3j + k.
inline GroupPtr extraspecial27() {
    std::vector<std::vector<int>> t(27, std::vector<int>(27));
    std::vector<std::string> names(27);
    for (int x = 0; x < 27; ++x) {
        const int i1 = x / 9, j1 = (x / 3) % 3, k1 = x % 3;
        names[static_cast<std::size_t>(x)] =
            detail::join_word({detail::power_name("a", i1), detail::power_name("b", j1), detail::power_name("c", k1)});
        for (int y = 0; y < 27; ++y) {
            const int i2 = y / 9, j2 = (y / 3) % 3, k2 = y % 3;
            // b^j a^i = a^i b^j c^{ij}
            const int i = (i1 + i2) % 3, j = (j1 + j2) % 3, k = (k1 + k2 + j1 * i2) % 3;
            t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 9 * i + 3 * j + k;
        }
    }
    return std::make_shared<FiniteGroup>(std::move(t), std::move(names), "ES27");
}

// --- permutation groups ------------------------------------------------------

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& a, const Perm& b) {
    // apply a first, then b (left-to-right, as in cycle notation products)
    Perm out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
    return out;
}

inline std::string perm_to_cycles(const Perm& p) {
    std::vector<char> done(p.size(), 0);
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i)) continue;
        out += "(";
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
            done[j] = 1;
            if (!first) out += " ";
            out += std::to_string(j + 1);
            first = false;
            j = static_cast<std::size_t>(p[j]);
        }
        out += ")";
    }
    return out.empty() ? "1" : out;
}

/// Parses "(1 2 3)(4 5)" (1-based points; commas also accepted as separators).
inline Perm parse_cycles(const std::string& text, int degree) {
    Perm p(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) p[static_cast<std::size_t>(i)] = i;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw invalid_group("permutation syntax: expected '(' in \"" + text + "\"");
        const auto close = text.find(')', pos);
        if (close == std::string::npos) throw invalid_group("permutation syntax: unclosed cycle in \"" + text + "\"");
        std::string body = text.substr(pos + 1, close - pos - 1);
        for (auto& ch : body)
            if (ch == ',') ch = ' ';
        std::istringstream in(body);
        std::vector<int> cyc;
        int v;
        while (in >> v) {
            if (v < 1 || v > degree) throw invalid_group("permutation point " + std::to_string(v) + " out of range");
            cyc.push_back(v - 1);
        }
        if (!in.eof()) throw invalid_group("permutation syntax: bad point in \"" + text + "\"");
        // compose this cycle after what has been read so far
        Perm c(static_cast<std::size_t>(degree));
        for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = i;
        for (std::size_t k = 0; k < cyc.size(); ++k) c[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
        p = perm_compose(p, c);
        pos = close + 1;
    }
    return p;
}

inline GroupPtr permutation_group(const std::vector<Perm>& gens, int degree, std::string label) {
    Perm id(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) id[static_cast<std::size_t>(i)] = i;
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != degree) throw invalid_group("permutation of wrong degree");
    return closure_group(gens, id, perm_compose, perm_to_cycles, std::move(label));
}

/// Generators in cycle notation, one per string.
inline GroupPtr permutation_group_from_text(const std::vector<std::string>& lines, std::string label = "perm") {
    int degree = 1;
    for (const auto& l : lines) {
        std::string digits;
        for (char ch : l) digits += std::isdigit(static_cast<unsigned char>(ch)) ? ch : ' ';
        std::istringstream in(digits);
        int v;
        while (in >> v) degree = std::max(degree, v);
    }
    std::vector<Perm> gens;
    for (const auto& l : lines) gens.push_back(parse_cycles(l, degree));
    return permutation_group(gens, degree, std::move(label));
}

inline GroupPtr symmetric_group(int n) {
    if (n < 1) throw invalid_group("symmetric group degree must be positive");
    if (n == 1) {
        auto g = cyclic_group(1);
        auto out = std::make_shared<FiniteGroup>(*g);
        out->set_label("S1");
        return out;
    }
    Perm t(static_cast<std::size_t>(n)), c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        t[static_cast<std::size_t>(i)] = i;
        c[static_cast<std::size_t>(i)] = (i + 1) % n;
    }
    std::swap(t[0], t[1]);
    return permutation_group({t, c}, n, "S" + std::to_string(n));
}

inline GroupPtr alternating_group(int n) {
    if (n < 3) {
        auto g = cyclic_group(1);
        auto out = std::make_shared<FiniteGroup>(*g);
        out->set_label("A" + std::to_string(n));
        return out;
    }
    std::vector<Perm> gens;
    for (int k = 2; k < n; ++k) {
        Perm p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
        p[0] = 1;
        p[1] = k;
        p[static_cast<std::size_t>(k)] = 0;
        gens.push_back(p);
    }
    return permutation_group(gens, n, "A" + std::to_string(n));
}

// --- matrix groups ------------------------------------------------------------

/// Group generated by 2x2 matrices over Z/q (row-major a, b, c, d).
inline GroupPtr matrix_group_2x2(const std::vector<std::array<int, 4>>& gens, int q, std::string label) {
    auto mul = [q](const std::array<int, 4>& x, const std::array<int, 4>& y) {
        return std::array<int, 4>{(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
                                  (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
    };
    auto name = [](const std::array<int, 4>& x) {
        return "[" + std::to_string(x[0]) + " " + std::to_string(x[1]) + ";" + std::to_string(x[2]) + " " +
               std::to_string(x[3]) + "]";
    };
    return closure_group(gens, std::array<int, 4>{1, 0, 0, 1}, mul, name, std::move(label));
}

inline GroupPtr sl23() { return matrix_group_2x2({{1, 1, 0, 1}, {0, 2, 1, 0}}, 3, "SL(2,3)"); }

/// Central product C4 o D8, realized by X, Z and iI with i = 2 in Z/5.
inline GroupPtr pauli_group() { return matrix_group_2x2({{0, 1, 1, 0}, {1, 0, 0, 4}, {2, 0, 0, 2}}, 5, "C4oD8"); }

// --- corpus and registry ----------------------------------------------------

struct CorpusEntry {
    std::string key;
    std::function<GroupPtr()> build;
};

inline GroupPtr relabel(GroupPtr g, std::string label) {
    auto out = std::make_shared<FiniteGroup>(*g);
    out->set_label(std::move(label));
    return out;
}

/// All 74 groups of order <= 24 (one representative per isomorphism class), plus C5xC5 and ES27.
inline const std::vector<CorpusEntry>& group_corpus() {
    static const std::vector<CorpusEntry> corpus = [] {
        std::vector<CorpusEntry> c;
        auto cyc = [](int n) { return [n] { return cyclic_group(n); }; };
        auto ab = [](std::vector<int> inv) { return [inv] { return abelian_group(inv); }; };
        auto dih = [](int n) { return [n] { return dihedral_group(n); }; };
        for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24})
            c.push_back({"c" + std::to_string(n), cyc(n)});
        c.push_back({"c2xc2", ab({2, 2})});
        c.push_back({"s3", [] { return symmetric_group(3); }});
        c.push_back({"c4xc2", ab({4, 2})});
        c.push_back({"c2xc2xc2", ab({2, 2, 2})});
        c.push_back({"d8", dih(8)});
        c.push_back({"q8", quaternion_group});
        c.push_back({"c3xc3", ab({3, 3})});
        c.push_back({"d10", dih(10)});
        c.push_back({"c6xc2", ab({6, 2})});
        c.push_back({"d12", dih(12)});
        c.push_back({"a4", [] { return alternating_group(4); }});
        c.push_back({"dic3", [] { return cyclic_extension(*cyclic_group(3, "x"), cyclic_power_map(3, -1), 4, 0, "Dic3", "y"); }});
        c.push_back({"d14", dih(14)});
        // order 16
        c.push_back({"c4xc4", ab({4, 4})});
        c.push_back({"c8xc2", ab({8, 2})});
        c.push_back({"c4xc2xc2", ab({4, 2, 2})});
        c.push_back({"c2xc2xc2xc2", ab({2, 2, 2, 2})});
        c.push_back({"d16", dih(16)});
        c.push_back({"q16", [] { return dicyclic_group(4, "Q16"); }});
        c.push_back({"sd16", [] { return cyclic_extension(*cyclic_group(8, "x"), cyclic_power_map(8, 3), 2, 0, "SD16", "y"); }});
        c.push_back({"m16", [] { return cyclic_extension(*cyclic_group(8, "x"), cyclic_power_map(8, 5), 2, 0, "M16", "y"); }});
        c.push_back({"c4:c4", [] { return cyclic_extension(*cyclic_group(4, "x"), cyclic_power_map(4, -1), 4, 0, "C4:C4", "y"); }});
        c.push_back({"c2xc2:c4", [] {
                         auto N = abelian_group({2, 2});
                         auto H = cyclic_group(4, "y");
                         // the generator of C4 swaps the two C2 factors (a <-> b)
                         std::vector<int> swap{0, 2, 1, 3};
                         return semidirect_product(*N, *H, [swap](int h) {
                             std::vector<int> p{0, 1, 2, 3};
                             for (int i = 0; i < h; ++i) p = {swap[static_cast<std::size_t>(p[0])], swap[static_cast<std::size_t>(p[1])], swap[static_cast<std::size_t>(p[2])], swap[static_cast<std::size_t>(p[3])]};
                             return p;
                         }, "C2xC2:C4");
                     }});
        c.push_back({"c4od8", pauli_group});
        c.push_back({"d8xc2", [] { return direct_product(*dihedral_group(8), *cyclic_group(2, "z"), "D8xC2"); }});
        c.push_back({"q8xc2", [] { return direct_product(*quaternion_group(), *cyclic_group(2, "z"), "Q8xC2"); }});
        // order 18
        c.push_back({"c6xc3", ab({6, 3})});
        c.push_back({"d18", dih(18)});
        c.push_back({"s3xc3", [] { return direct_product(*symmetric_group(3), *cyclic_group(3, "z"), "S3xC3"); }});
        c.push_back({"c3xc3:c2", [] {
                         auto N = abelian_group({3, 3});
                         auto inv = inversion_map(*N);
                         return cyclic_extension(*N, inv, 2, 0, "(C3xC3):C2", "s");
                     }});
        // order 20
        c.push_back({"c10xc2", ab({10, 2})});
        c.push_back({"d20", dih(20)});
        c.push_back({"dic5", [] { return dicyclic_group(5, "Dic5"); }});
        c.push_back({"f20", [] { return cyclic_extension(*cyclic_group(5, "x"), cyclic_power_map(5, 2), 4, 0, "F20", "y"); }});
        // order 21, 22
        c.push_back({"c7:c3", [] { return cyclic_extension(*cyclic_group(7, "x"), cyclic_power_map(7, 2), 3, 0, "C7:C3", "y"); }});
        c.push_back({"d22", dih(22)});
        // order 24
        c.push_back({"c12xc2", ab({12, 2})});
        c.push_back({"c6xc2xc2", ab({6, 2, 2})});
        c.push_back({"s4", [] { return symmetric_group(4); }});
        c.push_back({"sl23", sl23});
        c.push_back({"c3:c8", [] { return cyclic_extension(*cyclic_group(3, "x"), cyclic_power_map(3, -1), 8, 0, "C3:C8", "y"); }});
        c.push_back({"dic6", [] { return dicyclic_group(6, "Dic6"); }});
        c.push_back({"c4xs3", [] { return direct_product(*symmetric_group(3), *cyclic_group(4, "z"), "C4xS3"); }});
        c.push_back({"d24", dih(24)});
        c.push_back({"c2xdic3", [] {
                         auto d = cyclic_extension(*cyclic_group(3, "x"), cyclic_power_map(3, -1), 4, 0, "Dic3", "y");
                         return direct_product(*d, *cyclic_group(2, "z"), "C2xDic3");
                     }});
        c.push_back({"c3:d8", [] {
                         auto N = cyclic_group(3, "x");
                         auto H = dihedral_group(8); // index i + 4 j for r^i s^j
                         return semidirect_product(*N, *H, [](int h) {
                             return (h % 4) % 2 ? cyclic_power_map(3, -1) : cyclic_power_map(3, 1);
                         }, "C3:D8");
                     }});
        c.push_back({"c3xd8", [] { return direct_product(*dihedral_group(8), *cyclic_group(3, "z"), "C3xD8"); }});
        c.push_back({"c3xq8", [] { return direct_product(*quaternion_group(), *cyclic_group(3, "z"), "C3xQ8"); }});
        c.push_back({"c2xa4", [] { return direct_product(*alternating_group(4), *cyclic_group(2, "z"), "C2xA4"); }});
        c.push_back({"c2xc2xs3", [] { return direct_product(*dihedral_group(12), *cyclic_group(2, "z"), "C2xC2xS3"); }});
        // beyond order 24
        c.push_back({"c5xc5", ab({5, 5})});
        c.push_back({"es27", extraspecial27});
        return c;
    }();
    return corpus;
}

inline std::string lowercase(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return s;
}

/// Looks up a group by short name: corpus keys, cN, sN, aN, dN (order N) and abelian
/// products such as c4xc2xc2.
inline GroupPtr group_by_name(const std::string& raw) {
    const std::string key = lowercase(raw);
    for (const auto& e : group_corpus())
        if (e.key == key) return relabel(e.build(), key);
    auto number_after = [&](char prefix) -> std::optional<int> {
        if (key.size() < 2 || key[0] != prefix) return std::nullopt;
        for (std::size_t i = 1; i < key.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(key[i]))) return std::nullopt;
        if (key.size() > 5) return std::nullopt;
        return std::stoi(key.substr(1));
    };
    if (auto n = number_after('c')) return relabel(cyclic_group(*n), key);
    if (auto n = number_after('s')) {
        if (*n > 5) throw invalid_group("symmetric group S" + std::to_string(*n) + " exceeds the order cap");
        return relabel(symmetric_group(*n), key);
    }
    if (auto n = number_after('a')) {
        if (*n > 5) throw invalid_group("alternating group A" + std::to_string(*n) + " exceeds the order cap");
        return relabel(alternating_group(*n), key);
    }
    if (auto n = number_after('d')) return relabel(dihedral_group(*n), key);
    // abelian product cN1xcN2x...
    std::vector<int> inv;
    std::istringstream in(key);
    std::string part;
    bool ok = true;
    while (std::getline(in, part, 'x')) {
        if (part.size() < 2 || part[0] != 'c') {
            ok = false;
            break;
        }
        for (std::size_t i = 1; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) ok = false;
        if (!ok || part.size() > 5) {
            ok = false;
            break;
        }
        inv.push_back(std::stoi(part.substr(1)));
    }
    if (ok && inv.size() >= 2) {
        long long prod = 1;
        for (int v : inv) prod *= v;
        if (prod > max_group_order) throw invalid_group("group order exceeds the cap");
        return relabel(abelian_group(inv), key);
    }
    throw invalid_group("unknown group name \"" + raw + "\"");
}

/// Cayley-table text: first line n, then n rows of n 0-based indices.
inline GroupPtr group_from_cayley_text(const std::string& text, std::string label = "table") {
    std::istringstream in(text);
    long long n;
    if (!(in >> n)) throw invalid_group("Cayley table: missing order");
    if (n < 1 || n > max_group_order) throw invalid_group("Cayley table: order out of range");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& row : t)
        for (auto& v : row)
            if (!(in >> v)) throw invalid_group("Cayley table: expected " + std::to_string(n * n) + " entries");
    std::string extra;
    if (in >> extra) throw invalid_group("Cayley table: trailing data");
    return std::make_shared<FiniteGroup>(std::move(t), std::vector<std::string>{}, std::move(label));
}

} // namespace zng
