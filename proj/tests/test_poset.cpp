#include "helpers.hpp"

#include <doctest.h>

using namespace th;

TEST_CASE("down and up sets in Div(12)")
{
    auto p = div_poset(12);
    CHECK(p->down_set(S(*p, {"12"})) == p->all());
    CHECK(p->down_set(p->none()).none());
    CHECK(p->down_set(S(*p, {"6"})) == S(*p, {"1", "2", "3", "6"}));
    CHECK(p->up_set(S(*p, {"1"})) == p->all());
    CHECK(p->up_set(S(*p, {"4"})) == S(*p, {"4", "12"}));
    CHECK(p->up_set(p->none()).none());
}

TEST_CASE("joins and meets")
{
    auto p = div_poset(12);
    CHECK(p->join(S(*p, {"4", "3"})) == p->at("12"));
    CHECK(p->join(p->none()) == p->at("1"));
    CHECK(p->meet(S(*p, {"4", "6"})) == p->at("2"));
    CHECK(p->meet(p->none()) == p->at("12"));
    auto a = antichain2();
    CHECK_FALSE(a->join(a->all()));
    CHECK_FALSE(a->meet(a->all()));
}

TEST_CASE("join agrees with the least-upper-bound oracle on random posets")
{
    std::mt19937_64 g(11);
    for (int round = 0; round < 60; ++round) {
        Poset p = random_poset(2 + g() % 7, g);
        for (Id a = 0; a < p.size(); ++a)
            for (Id b = 0; b < p.size(); ++b) {
                CHECK(p.join(p.single(a) | p.single(b)) == oracle::lub(p, {a, b}));
                CHECK(p.join2(a, b) == oracle::lub(p, {a, b}));
            }
    }
}

TEST_CASE("irreducibility examples")
{
    auto p = div_poset(12);
    CHECK(irreducible(*p, p->at("4"), Side::Join, Strength::Strong, Arity::Finite));
    CHECK_FALSE(irreducible(*p, p->at("6"), Side::Join, Strength::Plain, Arity::Finite));
    CHECK_FALSE(irreducible(*p, p->at("1"), Side::Join, Strength::Strong, Arity::Finite));
    CHECK_FALSE(irreducible(*p, p->at("1"), Side::Join, Strength::Plain, Arity::Complete));
    auto m = m3();
    CHECK(irreducible(*m, m->at("a"), Side::Join, Strength::Plain, Arity::Finite));
    CHECK_FALSE(irreducible(*m, m->at("a"), Side::Join, Strength::Strong, Arity::Finite));
}

// a <= b v c forces a <= b or a <= c, bottom excluded; plain: a = b v c forces a in {b,c}
TEST_CASE("finite irreducibility matches its definition on random lattices")
{
    std::mt19937_64 g(5);
    int seen = 0;
    for (int round = 0; round < 200 && seen < 40; ++round) {
        auto lp = random_lattice(1 + g() % 5, g);
        if (!lp)
            continue;
        ++seen;
        const Poset& p = *lp;
        Id bot = *p.bottom();
        for (Id a = 0; a < p.size(); ++a) {
            bool strong = a != bot, plain = a != bot;
            for (Id b = 0; b < p.size(); ++b)
                for (Id c = 0; c < p.size(); ++c) {
                    Id j = *oracle::lub(p, {b, c});
                    if (p.leq(a, j) && !p.leq(a, b) && !p.leq(a, c))
                        strong = false;
                    if (j == a && a != b && a != c)
                        plain = false;
                }
            CHECK(irreducible(p, a, Side::Join, Strength::Strong, Arity::Finite) == strong);
            CHECK(irreducible(p, a, Side::Join, Strength::Plain, Arity::Finite) == plain);
            // on a finite lattice the complete forms coincide with the finite ones
            CHECK(irreducible(p, a, Side::Join, Strength::Strong, Arity::Complete) == strong);
            CHECK(irreducible(p, a, Side::Join, Strength::Plain, Arity::Complete) == plain);
        }
    }
    CHECK(seen > 10);
}

TEST_CASE("lattice classification")
{
    auto d = lattice_class(*div_poset(12));
    CHECK(d.join_semilattice);
    CHECK(d.meet_semilattice);
    CHECK(d.lattice);
    CHECK(d.complete);
    CHECK(d.distributive);
    CHECK(d.completely_distributive == Verdict::True);
    auto m = lattice_class(*m3());
    CHECK(m.lattice);
    CHECK_FALSE(m.distributive);
    CHECK(m.completely_distributive == Verdict::False);
    CHECK_FALSE(lattice_class(*n5()).distributive);
    CHECK_FALSE(lattice_class(*antichain2()).lattice);
}

TEST_CASE("distributivity matches the brute-force identity on random lattices")
{
    std::mt19937_64 g(9);
    for (int round = 0; round < 150; ++round) {
        auto lp = random_lattice(1 + g() % 5, g);
        if (!lp)
            continue;
        const Poset& p = *lp;
        bool dist = true;
        for (Id x = 0; x < p.size(); ++x)
            for (Id y = 0; y < p.size(); ++y)
                for (Id z = 0; z < p.size(); ++z) {
                    Id l = *p.meet2(x, *oracle::lub(p, {y, z}));
                    Id r = *oracle::lub(p, {*p.meet2(x, y), *p.meet2(x, z)});
                    dist = dist && l == r;
                }
        auto lc = lattice_class(p);
        CHECK(lc.distributive == dist);
        // finite distributive lattices are completely distributive
        CHECK((lc.completely_distributive == Verdict::True) == dist);
    }
}

TEST_CASE("order isomorphism search")
{
    auto d12 = div_poset(12);
    auto id = order_isomorphism(*d12, *d12);
    REQUIRE(id);
    CHECK(is_order_isomorphism(*d12, *d12, *id));
    auto f = order_isomorphism(*d12, *div_poset(18));
    REQUIRE(f);
    CHECK(is_order_isomorphism(*d12, *div_poset(18), *f));
    CHECK_FALSE(order_isomorphism(*d12, *div_poset(16)));
    CHECK_FALSE(order_isomorphism(*m3(), *n5()));
    CHECK_THROWS_AS(order_isomorphism(*div_poset(360), *div_poset(360)), CapExceeded);
}

TEST_CASE("construction rejects non-orders")
{
    std::vector<Bits> rows(2, Bits(2));
    rows[0].set(0).set(1);
    rows[1].set(0).set(1);
    CHECK_THROWS_AS(Poset(rows, {"a", "b"}), InputError);
    rows[1].reset(0);
    CHECK_THROWS_AS(Poset(rows, {"a", "a"}), InputError);
}

TEST_CASE("antichain enumeration counts every antichain once")
{
    std::mt19937_64 g(3);
    for (int round = 0; round < 30; ++round) {
        Poset p = random_poset(1 + g() % 8, g);
        std::size_t brute = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t(1) << p.size()); ++m) {
            Bits A(p.size());
            for (Id i = 0; i < p.size(); ++i)
                if (m >> i & 1)
                    A.set(i);
            brute += p.is_antichain(A);
        }
        std::size_t count = 0;
        for_each_antichain(p, [&](const Bits&) {
            ++count;
            return true;
        });
        CHECK(count == brute);
    }
}
