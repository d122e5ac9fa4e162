#include "doctest.h"

#include <set>

#include "cwcell/group_ops.hpp"
#include "oracle.hpp"

using namespace cwcell;

namespace {

PermGroup s4() {
    return PermGroup(4, {Perm::parse_cycles(4, "(1 2 3 4)"), Perm::parse_cycles(4, "(1 2)")});
}

std::set<Perm> as_set(const PermGroup& g) {
    std::set<Perm> out;
    for (auto it = g.elements(); !it.done(); it.next()) out.insert(it.current());
    return out;
}

}  // namespace

TEST_CASE("normal closure against the exhaustive oracle") {
    PermGroup g = s4();
    auto elems = oracle::closure(4, g.generators());
    struct Case {
        const char* seed;
        std::uint64_t order;
    };
    for (auto [seed, order] : {Case{"(1 2)(3 4)", 4}, Case{"(1 2 3)", 12}, Case{"(1 2)", 24}}) {
        Perm s = Perm::parse_cycles(4, seed);
        SubgroupHandle h = normal_closure(g, {s});
        CHECK(h.group.order() == order);
        auto expect = oracle::normal_closure(4, elems, {s});
        CHECK(expect.size() == order);
        for (const Perm& e : expect) CHECK(h.group.contains(e));
    }
    CHECK(normal_closure(g, {Perm::parse_cycles(4, "()")}).group.order() == 1);
}

TEST_CASE("normal closure rejects outside seeds") {
    PermGroup a4(4, {Perm::parse_cycles(4, "(1 2 3)"), Perm::parse_cycles(4, "(2 3 4)")});
    CHECK_THROWS_AS(normal_closure(a4, {Perm::parse_cycles(4, "(1 2)")}), NonMember);
}

TEST_CASE("centralizer against the exhaustive oracle") {
    PermGroup g = s4();
    auto elems = oracle::closure(4, g.generators());
    for (const char* pivot : {"(1 2)", "(1 2)(3 4)", "(1 2 3)", "(1 2 3 4)"}) {
        Perm x = Perm::parse_cycles(4, pivot);
        auto expect = oracle::centralizer(elems, x);
        SubgroupHandle c = centralizer(g, x);
        CHECK(c.group.order() == expect.size());
        for (const Perm& e : expect) CHECK(c.group.contains(e));
    }
}

TEST_CASE("normalizer against the exhaustive oracle") {
    PermGroup g = s4();
    auto elems = oracle::closure(4, g.generators());

    PermGroup d8(4, {Perm::parse_cycles(4, "(1 2 3 4)"), Perm::parse_cycles(4, "(1 3)")});
    CHECK(d8.order() == 8);
    SubgroupHandle n1 = normalizer(g, d8);
    CHECK(n1.group.order() == oracle::normalizer(elems, oracle::closure(4, d8.generators())).size());
    CHECK(n1.group.order() == 8);  // Sylow 2-subgroups of S4 are self-normalizing

    PermGroup v4(4, {Perm::parse_cycles(4, "(1 2)(3 4)"), Perm::parse_cycles(4, "(1 3)(2 4)")});
    CHECK(normalizer(g, v4).group.order() == 24);
}

TEST_CASE("quotient by the Klein subgroup of S4") {
    PermGroup g = s4();
    PermGroup v4(4, {Perm::parse_cycles(4, "(1 2)(3 4)"), Perm::parse_cycles(4, "(1 3)(2 4)")});
    QuotientMap q(g, v4);
    CHECK(q.index() == 6);
    CHECK(q.quotient().order() == 6);
    // S4 / V4 is the symmetric group on three letters, so nonabelian.
    const auto& qg = q.quotient().generators();
    bool abelian = true;
    for (const Perm& a : qg)
        for (const Perm& b : qg)
            if (!(a * b == b * a)) abelian = false;
    CHECK_FALSE(abelian);
}

TEST_CASE("coset canonicalization is constant on cosets") {
    PermGroup g = s4();
    PermGroup a4(4, {Perm::parse_cycles(4, "(1 2 3)"), Perm::parse_cycles(4, "(2 3 4)")});
    QuotientMap q(g, a4);
    CHECK(q.index() == 2);
    for (auto it = g.elements(); !it.done(); it.next()) {
        const Perm& x = it.current();
        for (auto jt = a4.elements(); !jt.done(); jt.next())
            CHECK(q.canonical_rep(x * jt.current()) == q.canonical_rep(x));
    }
}

TEST_CASE("quotient image is a homomorphism with the right kernel") {
    PermGroup g = s4();
    PermGroup v4(4, {Perm::parse_cycles(4, "(1 2)(3 4)"), Perm::parse_cycles(4, "(1 3)(2 4)")});
    QuotientMap q(g, v4);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Perm a = g.random_element(rng), b = g.random_element(rng);
        CHECK(q.image(a * b) == q.image(a) * q.image(b));
    }
    for (auto it = v4.elements(); !it.done(); it.next())
        CHECK(q.image(it.current()).is_identity());
    std::size_t killed = 0;
    for (auto it = g.elements(); !it.done(); it.next())
        if (q.image(it.current()).is_identity()) ++killed;
    CHECK(killed == 4);
}

TEST_CASE("quotient construction rejects bad input") {
    PermGroup g = s4();
    PermGroup c2(4, {Perm::parse_cycles(4, "(1 2)")});
    CHECK_THROWS_AS(QuotientMap(g, c2), NotNormal);
    PermGroup a4(4, {Perm::parse_cycles(4, "(1 2 3)"), Perm::parse_cycles(4, "(2 3 4)")});
    Limits tight;
    tight.index_limit = 1;
    CHECK_THROWS_AS(QuotientMap(g, a4, tight), IndexExceedsLimit);
    PermGroup other(5, {Perm::parse_cycles(5, "(1 2 3 4 5)")});
    CHECK_THROWS_AS(QuotientMap(g, other, Limits{}), error);
}

TEST_CASE("quotient by the trivial subgroup is the regular action") {
    PermGroup a4(4, {Perm::parse_cycles(4, "(1 2 3)"), Perm::parse_cycles(4, "(2 3 4)")});
    QuotientMap q(a4, PermGroup(4));
    CHECK(q.index() == 12);
    CHECK(q.quotient().order() == 12);
    CHECK(as_set(q.quotient()).size() == 12);
}

TEST_CASE("extend_subgroup grows within the parent") {
    PermGroup g = s4();
    SubgroupHandle h(g, {Perm::parse_cycles(4, "(1 2)(3 4)")});
    CHECK(h.group.order() == 2);
    SubgroupHandle h2 = extend_subgroup(h, {Perm::parse_cycles(4, "(1 3)(2 4)")});
    CHECK(h2.group.order() == 4);
    CHECK(h2.parent.order() == 24);
}
