#include <zng/group_library.hpp>
#include <zng/group_ring.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace zng;

namespace {

ZGElem random_elem(const ZGRing& R, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> d(0, R.base().modulus() - 1);
    std::vector<std::int64_t> c(static_cast<std::size_t>(R.dimension()));
    for (auto& v : c) v = d(rng);
    return R.from_ints(c);
}

int el(const FiniteGroup& G, const std::string& name) { return G.find(name).value(); }

} // namespace

TEST(GroupRing, BasicArithmetic) {
    auto C2 = cyclic_group(2);
    ZGRing R(C2, Zmod(3, 2));
    auto g = R.basis(1);
    EXPECT_TRUE(R.is_zero((R.one() + g) * (R.one() - g)));
    auto a = R.from_ints({4, 7});
    EXPECT_EQ(a * R.one(), a);
    EXPECT_EQ(R.render(a), "4 + 7*g");
    EXPECT_EQ(R.render(R.zero()), "0");

    auto C5 = cyclic_group(5);
    ZGRing F(C5, Zmod(2, 1));
    auto u = F.from_ints({1, 1, 1, 0, 0});
    EXPECT_EQ(F.pow(u, 3), F.basis(3));
}

TEST(GroupRing, Mismatch) {
    auto C5 = cyclic_group(5);
    ZGRing A(C5, Zmod(2, 2)), B(C5, Zmod(2, 3)), C(cyclic_group(5), Zmod(2, 2));
    EXPECT_THROW(A.one() + B.one(), ring_mismatch);
    EXPECT_THROW(A.one() * C.one(), ring_mismatch);
    EXPECT_NO_THROW(A.one() + ZGRing(C5, Zmod(2, 2)).one());
}

TEST(GroupRing, Hat) {
    auto C2 = cyclic_group(2);
    ZGRing R(C2, Zmod(3, 2));
    auto h = R.hat(whole_group(*C2));
    EXPECT_EQ(h, R.from_ints({5, 5}));
    EXPECT_TRUE(R.is_idempotent(h));
    EXPECT_EQ(R.hat(trivial_subgroup(*C2)), R.one());
    EXPECT_THROW(ZGRing(C2, Zmod(2, 3)).hat(whole_group(*C2)), precondition_error);

    auto G = extraspecial27();
    ZGRing F(G, Zmod(2, 1));
    const int a = el(*G, "a");
    auto K = generated_subgroup(*G, {a});
    EXPECT_EQ(F.hat(K), F.one() + F.basis(a) + F.basis(G->mul(a, a)));

    for (const auto& key : {"s4", "es27", "d10"}) {
        auto H = group_by_name(key);
        ZGRing Z(H, Zmod(7, 1));
        for (const auto& S : subgroups(*H)) {
            auto hs = Z.hat(S);
            EXPECT_TRUE(Z.is_idempotent(hs));
            for (int s : S.elements()) EXPECT_EQ(Z.basis(s) * hs, hs);
        }
    }
}

TEST(GroupRing, Conjugation) {
    auto G = extraspecial27();
    ZGRing F(G, Zmod(2, 1));
    const int a = el(*G, "a"), b = el(*G, "b"), c = el(*G, "c");
    auto khat = F.one() + F.basis(a) + F.basis(G->pow(a, 2));
    const int ac2 = G->mul(a, G->inv(c));
    EXPECT_EQ(F.conjugate(khat, b), F.one() + F.basis(ac2) + F.basis(G->mul(ac2, ac2)));
    auto central = F.basis(c);
    for (int g = 0; g < 27; ++g) EXPECT_EQ(F.conjugate(central, g), central);

    std::mt19937_64 rng(1);
    ZGRing R(group_by_name("s4"), Zmod(5, 2));
    for (int i = 0; i < 30; ++i) {
        auto x = random_elem(R, rng), y = random_elem(R, rng);
        const int g = static_cast<int>(rng() % 24);
        EXPECT_EQ(R.conjugate(R.conjugate(x, g), R.group().inv(g)), x);
        EXPECT_EQ(R.conjugate(x * y, g), R.conjugate(x, g) * R.conjugate(y, g));
        EXPECT_EQ(R.conjugate(x + y, g), R.conjugate(x, g) + R.conjugate(y, g));
    }
}

TEST(GroupRing, ReduceLift) {
    auto G = extraspecial27();
    ZGRing Z8(G, Zmod(2, 3));
    const int a = el(*G, "a"), c = el(*G, "c");
    auto khat = Z8.one() + Z8.basis(a) + Z8.basis(G->pow(a, 2));
    auto C = Z8.basis(c), C2 = Z8.basis(G->pow(c, 2));
    auto omega = (Z8.scalar(2) - C - C2) * khat;
    auto F = residue_ring(Z8);
    auto fk = reduce_mod_p(khat);
    auto expected = (F.basis(c) + F.basis(G->pow(c, 2))) * fk;
    EXPECT_EQ(reduce_mod_p(omega), expected);
    EXPECT_TRUE(Z8.is_zero(lift_coefficients(F.zero(), Z8)));

    std::mt19937_64 rng(3);
    ZGRing F2(G, Zmod(2, 1));
    for (int i = 0; i < 100; ++i) {
        auto x = random_elem(F2, rng);
        EXPECT_EQ(reduce_mod_p(lift_coefficients(x, Z8)), x);
    }
    ZGRing R9(group_by_name("d8"), Zmod(3, 2));
    for (int i = 0; i < 50; ++i) {
        auto x = random_elem(R9, rng), y = random_elem(R9, rng);
        EXPECT_EQ(reduce_mod_p(x * y), reduce_mod_p(x) * reduce_mod_p(y));
        EXPECT_EQ(reduce_mod_p(x + y), reduce_mod_p(x) + reduce_mod_p(y));
    }
}

TEST(GroupRing, NilpotencyIndex) {
    auto G = extraspecial27();
    ZGRing Z8(G, Zmod(2, 3));
    const int a = el(*G, "a"), c = el(*G, "c");
    auto F = residue_ring(Z8);
    auto eps = (F.basis(c) + F.basis(G->pow(c, 2))) * (F.one() + F.basis(a) + F.basis(G->pow(a, 2)));
    EXPECT_TRUE(F.is_idempotent(eps));
    auto lifted = lift_coefficients(eps, Z8);
    EXPECT_EQ(nilpotency_index(lifted), 3);
    EXPECT_EQ(nilpotency_index(Z8.one()), 1);
    EXPECT_THROW(nilpotency_index(Z8.basis(a)), precondition_error);

    ZGRing Z4(G, Zmod(2, 2));
    EXPECT_LE(nilpotency_index(lift_coefficients(eps, Z4)), 2);
}

TEST(GroupRing, IdempotentLift) {
    auto G = extraspecial27();
    ZGRing Z8(G, Zmod(2, 3));
    const int a = el(*G, "a"), c = el(*G, "c");
    auto F = residue_ring(Z8);
    auto eps = (F.basis(c) + F.basis(G->pow(c, 2))) * (F.one() + F.basis(a) + F.basis(G->pow(a, 2)));
    auto lift = lift_idempotent(eps, Z8);
    auto khat = Z8.one() + Z8.basis(a) + Z8.basis(G->pow(a, 2));
    EXPECT_EQ(lift.value, (Z8.scalar(2) - Z8.basis(c) - Z8.basis(G->pow(c, 2))) * khat);
    EXPECT_EQ(lift.nilpotency, 3);
    EXPECT_EQ(lift.method, LiftMethod::binomial);
    EXPECT_EQ(reduce_mod_p(lift.value), eps);
}

TEST(GroupRing, InverseAndUnits) {
    std::mt19937_64 rng(5);
    ZGRing R(group_by_name("s3"), Zmod(5, 2));
    int units = 0;
    for (int i = 0; i < 40; ++i) {
        auto x = random_elem(R, rng);
        if (R.is_unit(x)) {
            ++units;
            auto y = R.inverse(x);
            EXPECT_EQ(x * y, R.one());
            EXPECT_EQ(y * x, R.one());
        } else {
            EXPECT_THROW(R.inverse(x), not_a_unit);
        }
    }
    EXPECT_GT(units, 10);
    EXPECT_FALSE(R.is_unit(R.one() + R.basis(1)));
}

TEST(UnitOrder, KnownValues) {
    auto C5 = cyclic_group(5);
    for (int r = 1; r <= 5; ++r) {
        ZGRing R(C5, Zmod(2, r));
        auto u = R.from_ints({1, 1, 1, 0, 0});
        EXPECT_EQ(unit_order(u), 15 * ipow(2, r - 1)) << r;
        EXPECT_EQ(unit_order_details(u).k, 1);
    }
    ZGRing Z8(C5, Zmod(2, 3));
    EXPECT_EQ(unit_order(Z8.from_ints({1, 2, 0, 0, 0})), 4);
    EXPECT_EQ(unit_order(Z8.one()), 1);
    // -1 = 1 + 2(...): one factor of 2, yet its order is 2, not 2^{r-1}
    auto minus = unit_order_details(Z8.scalar(7));
    EXPECT_EQ(minus.order, 2);
    EXPECT_EQ(minus.k, 1);
    EXPECT_EQ(minus.estimate, 4);
    EXPECT_THROW(unit_order(Z8.scalar(2)), not_a_unit);
}

TEST(UnitOrder, AgreesWithNaive) {
    std::mt19937_64 rng(7);
    for (auto [key, p, r] : std::vector<std::tuple<std::string, int, int>>{{"c5", 2, 3}, {"s3", 5, 2}, {"d8", 3, 2}, {"c7", 2, 2}}) {
        ZGRing R(group_by_name(key), Zmod(p, r));
        int tested = 0;
        while (tested < 13) {
            auto x = random_elem(R, rng);
            if (!R.is_unit(x)) continue;
            ++tested;
            auto o = unit_order(x);
            EXPECT_EQ(o, naive_order(x));
            EXPECT_EQ(R.pow(x, o), R.one());
            for (auto q : prime_divisors(o)) EXPECT_NE(R.pow(x, o / q), R.one());
        }
    }
}

TEST(GroupRingOverGaloisRing, Arithmetic) {
    GaloisRing S(PrimePower(2, 2), 2);
    GRGRing R(cyclic_group(3), S);
    // 1 + xi g vanishes at a character (xi^3 = 1 mod 2); xi + g + g^2 does not
    EXPECT_FALSE(R.is_unit(R.scale(R.basis(1), S.xi()) + R.one()));
    auto x = R.scalar(S.xi()) + R.basis(1) + R.basis(2);
    auto y = R.inverse(x);
    EXPECT_EQ(x * y, R.one());
    EXPECT_NE(R.render(x).find("xi"), std::string::npos);
}
