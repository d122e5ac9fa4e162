#include "doctest.h"

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "cwcell/conjugacy.hpp"
#include "cwcell/errors.hpp"
#include "cwcell/families.hpp"
#include "cwcell/unitary.hpp"

using namespace cwcell;

namespace {

using Cvec = std::vector<std::complex<double>>;

Cvec dense_mul(std::uint32_t d, const Cvec& a, const Cvec& b) {
    Cvec c(static_cast<std::size_t>(d) * d, 0.0);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t k = 0; k < d; ++k)
            for (std::uint32_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
    return c;
}

Cvec dense_adjoint(std::uint32_t d, const Cvec& a) {
    Cvec c(static_cast<std::size_t>(d) * d);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) c[i * d + j] = std::conj(a[j * d + i]);
    return c;
}

double dense_dist(const Cvec& a, const Cvec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

Monomial random_monomial(std::uint32_t d, std::uint32_t order, std::mt19937_64& rng) {
    std::vector<std::uint32_t> rows(d), phases(d);
    std::iota(rows.begin(), rows.end(), 0u);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (auto& p : phases) p = static_cast<std::uint32_t>(rng() % order);
    return Monomial(order, std::move(rows), std::move(phases));
}

// Standard test source: (Z/2)^3 with a Singer 7-cycle on top, the
// companion action of x^3 = x + 1.
PermGroup singer_extension() {
    PermGroup h = elem_abelian_group(2, 3);
    const auto& hg = h.generators();
    return semidirect_product(h, cyclic_group(7), {{hg[1], hg[2], hg[0] * hg[1]}});
}

}  // namespace

TEST_CASE("monomial algebra matches dense arithmetic") {
    std::mt19937_64 rng(20260823);
    for (std::uint32_t d : {1u, 2u, 5u, 8u})
        for (std::uint32_t order : {1u, 2u, 4u, 6u, 12u}) {
            Monomial a = random_monomial(d, order, rng);
            Monomial b = random_monomial(d, order, rng);
            Monomial c = random_monomial(d, order, rng);

            CHECK(dense_dist((a * b).dense(), dense_mul(d, a.dense(), b.dense())) < 1e-12);
            CHECK(dense_dist(a.adjoint().dense(), dense_adjoint(d, a.dense())) < 1e-12);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * a.adjoint() == Monomial(d, order));
            CHECK(unitary_defect(a) < 1e-12);
            CHECK(a.rescaled(order * 3).root_order() == order * 3);
            CHECK(dense_dist(a.rescaled(order * 3).dense(), a.dense()) < 1e-12);
            CHECK(frobenius_distance(a, b) ==
                  doctest::Approx(dense_dist(a.dense(), b.dense())).epsilon(1e-9));

            std::complex<double> tr = 0.0;
            Cvec da = a.dense();
            for (std::uint32_t i = 0; i < d; ++i) tr += da[i * d + i];
            CHECK(std::abs(a.trace() - tr) < 1e-12);
        }

    Monomial id(4, 6);
    CHECK(id.is_identity());
    CHECK(id.trace() == std::complex<double>(4.0, 0.0));
}

TEST_CASE("monomial validation") {
    CHECK_THROWS_AS(Monomial(2, {0, 0}, {0, 0}), BadParams);
    CHECK_THROWS_AS(Monomial(2, {0, 1}, {0}), BadParams);
    CHECK_THROWS_AS(Monomial(0, {0u, 1u}, {0u, 0u}), BadParams);

    Monomial a(2, 4);
    Monomial b(3, 4);
    CHECK_THROWS_AS(a * b, DegreeMismatch);
    Monomial c(2, std::vector<std::uint32_t>{0, 1}, std::vector<std::uint32_t>{1, 0});
    CHECK_THROWS_AS(a * c, BadParams);
    CHECK_THROWS_AS(c.rescaled(3), BadParams);
    CHECK(c.rescaled(2) == c);

    // Phases reduce modulo the root order at construction.
    Monomial d(2, std::vector<std::uint32_t>{0, 1}, std::vector<std::uint32_t>{3, 2});
    CHECK(d.phase(0) == 1);
    CHECK(d.phase(1) == 0);
}

TEST_CASE("linear characters") {
    PermGroup c4 = cyclic_group(4);
    LinearCharacter chi(c4, 4, {1});
    Perm r = c4.generators()[0];
    CHECK(chi.exponent(Perm::identity(4)) == 0);
    CHECK(chi.exponent(r) == 1);
    CHECK(chi.exponent(r * r) == 2);
    CHECK(chi.exponent(r * r * r) == 3);
    CHECK(std::abs(chi.value(r) - std::complex<double>(0.0, 1.0)) < 1e-12);
    CHECK_FALSE(chi.trivial());
    CHECK(LinearCharacter(c4, 4, {0}).trivial());
    CHECK(LinearCharacter(c4, 1, {0}).trivial());

    // Order-4 value on an order-2 generator cannot close up.
    PermGroup v4 = elem_abelian_group(2, 2);
    CHECK_THROWS_AS(LinearCharacter(v4, 4, {1, 0}), NotCharacter);
    LinearCharacter eta(v4, 2, {1, 1});
    const auto& vg = v4.generators();
    CHECK(eta.exponent(vg[0] * vg[1]) == 0);

    CHECK_THROWS_AS(chi.exponent(Perm::parse_cycles(4, "(1 2)")), NonMember);
    CHECK_FALSE(chi.try_exponent(Perm::parse_cycles(4, "(1 2)")).has_value());
    CHECK_THROWS_AS(LinearCharacter(symmetric_group(8), 2, {1, 1}), SizeExceeded);
    CHECK_THROWS_AS(LinearCharacter(c4, 4, {1, 1}), BadParams);
    CHECK_THROWS_AS(LinearCharacter(c4, 0, {1}), BadParams);

    // Multiplicativity over random pairs.
    PermGroup c6 = cyclic_group(6);
    LinearCharacter zeta(c6, 6, {1});
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Perm x = c6.random_element(rng);
        Perm y = c6.random_element(rng);
        CHECK(zeta.exponent(x * y) == (zeta.exponent(x) + zeta.exponent(y)) % 6);
    }
}

TEST_CASE("unitary rep tables") {
    PermGroup c4 = cyclic_group(4);
    UnitaryRep rep(c4, {Monomial(4, std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{1})});
    CHECK(rep.table_mode());
    CHECK(rep.dimension() == 1);
    CHECK(rep.root_order() == 4);
    CHECK(rep.faithful());
    bool complete = false;
    CHECK(rep.homomorphism_defect({}, &complete) == 0.0);
    CHECK(complete);
    CHECK(rep.max_unitary_defect() < 1e-12);

    // Factoring through C2 is a valid homomorphism but not faithful.
    UnitaryRep sq(c4, {Monomial(2, std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{1})});
    CHECK_FALSE(sq.faithful());
    CHECK(sq.homomorphism_defect() == 0.0);

    // An order-3 value on an order-2 generator is not a homomorphism
    // and the defect must say so.
    PermGroup v4 = elem_abelian_group(2, 2);
    UnitaryRep bad(
        v4, {Monomial(3, std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{1}),
             Monomial(3, std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{0})});
    CHECK(bad.homomorphism_defect() > 0.5);

    CHECK_THROWS_AS(UnitaryRep(c4, std::vector<Monomial>{}), BadParams);
    CHECK_THROWS_AS(
        UnitaryRep(symmetric_group(8), {Monomial(1, 2), Monomial(1, 2)}), SizeExceeded);
    CHECK_THROWS_AS(rep.image(Perm::parse_cycles(4, "(1 2)")), NonMember);
    CHECK_THROWS_AS(rep.image(Perm::identity(5)), DegreeMismatch);

    // Root orders unify to the lcm.
    PermGroup c2 = cyclic_group(2);
    UnitaryRep mix(
        elem_abelian_group(2, 2),
        {Monomial(2, std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{1}),
         Monomial(1, 1)});
    CHECK(mix.root_order() == 2);
    (void)c2;
}

TEST_CASE("unitary rep evaluator mode") {
    PermGroup c4 = cyclic_group(4);
    auto eval = [](const Perm& u) {
        return Monomial(4, std::vector<std::uint32_t>{0},
                        std::vector<std::uint32_t>{u(0)});
    };
    std::vector<Monomial> gens{eval(c4.generators()[0])};
    UnitaryRep rep(c4, gens, eval);
    CHECK_FALSE(rep.table_mode());
    Perm r = c4.generators()[0];
    CHECK(rep.image(r * r).phase(0) == 2);
    bool complete = false;
    CHECK(rep.homomorphism_defect({}, &complete) == 0.0);
    CHECK(complete);
    CHECK_THROWS_AS(rep.image(Perm::parse_cycles(4, "(1 2)")), NonMember);
    CHECK_THROWS_AS(rep.faithful(), SizeExceeded);

    std::vector<Monomial> wrong{
        Monomial(4, std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{2})};
    CHECK_THROWS_AS(UnitaryRep(c4, wrong, eval), BadParams);
}

TEST_CASE("induced representation golden") {
    PermGroup n = singer_extension();
    REQUIRE(n.order() == 56);
    std::vector<Perm> agens(n.generators().begin(), n.generators().begin() + 3);
    SubgroupHandle a(n, agens);
    REQUIRE(a.group.order() == 8);

    LinearCharacter chi(a.group, 2, {1, 0, 0});
    UnitaryRep rep = induced_rep(n, a, chi);
    CHECK(rep.dimension() == 7);
    CHECK(rep.root_order() == 2);
    CHECK(rep.table_mode());

    // First translation generator: a diagonal sign matrix whose
    // diagonal runs over the character at all seven nonzero vectors,
    // so three +1 and four -1 entries.
    Monomial m0 = rep.generator_images()[0];
    int plus = 0, minus = 0;
    for (std::uint32_t j = 0; j < 7; ++j) {
        CHECK(m0.row(j) == j);
        (m0.phase(j) == 0 ? plus : minus) += 1;
    }
    CHECK(plus == 3);
    CHECK(minus == 4);

    // The order-7 generator: the cyclic permutation matrix, exactly.
    Monomial m7 = rep.generator_images()[3];
    for (std::uint32_t j = 0; j < 7; ++j) {
        CHECK(m7.row(j) == (j + 1) % 7);
        CHECK(m7.phase(j) == 0);
    }

    CHECK(rep.faithful());
    CHECK(rep.max_unitary_defect() < 1e-12);
    bool complete = false;
    CHECK(rep.homomorphism_defect({}, &complete) == 0.0);
    CHECK(complete);

    // Induced-character formula, transversal-free form: chi_ind(x) =
    // (1/|A|) * sum over u in N with u^-1 x u in A of chi(u^-1 x u).
    auto elems = n.element_list(100);
    for (const Perm& x : elems) {
        std::complex<double> acc = 0.0;
        for (const Perm& u : elems) {
            Perm conj = u.inverse() * x * u;
            auto e = chi.try_exponent(conj);
            if (e) acc += chi.value(conj);
        }
        acc /= 8.0;
        CHECK(std::abs(rep.image(x).trace() - acc) < 1e-9);
    }
}

TEST_CASE("induced representation edge cases") {
    PermGroup n = singer_extension();
    std::vector<Perm> agens(n.generators().begin(), n.generators().begin() + 3);
    SubgroupHandle a(n, agens);

    // Trivial character induces the coset permutation representation.
    LinearCharacter triv(a.group, 2, {0, 0, 0});
    UnitaryRep perm_rep = induced_rep(n, a, triv);
    CHECK(perm_rep.generator_images()[0].is_identity());
    for (std::uint32_t j = 0; j < 7; ++j) CHECK(perm_rep.generator_images()[3].phase(j) == 0);
    CHECK_FALSE(perm_rep.faithful());

    // Index 1: the representation is the character itself.
    PermGroup c6 = cyclic_group(6);
    SubgroupHandle full(c6, c6.generators());
    LinearCharacter zeta(full.group, 6, {1});
    UnitaryRep one = induced_rep(c6, full, zeta);
    CHECK(one.dimension() == 1);
    Perm r = c6.generators()[0];
    CHECK(one.image(r * r).phase(0) == 2);

    // Non-normal subgroup rejected.
    PermGroup s3 = symmetric_group(3);
    SubgroupHandle flip(s3, {Perm::parse_cycles(3, "(1 2)")});
    LinearCharacter sgn(flip.group, 2, {1});
    CHECK_THROWS_AS(induced_rep(s3, flip, sgn), NotNormal);

    // Character on the wrong group rejected.
    PermGroup v4 = elem_abelian_group(2, 2);
    LinearCharacter other(v4, 2, {1, 0});
    CHECK_THROWS_AS(induced_rep(n, a, other), SourceMismatch);

    // Index beyond 64 rejected.
    PermGroup s6 = symmetric_group(6);
    SubgroupHandle trivial_sub(s6, {});
    LinearCharacter unit(trivial_sub.group, 1, {});
    CHECK_THROWS_AS(induced_rep(s6, trivial_sub, unit), SizeExceeded);
}

TEST_CASE("characters") {
    PermGroup n = singer_extension();
    std::vector<Perm> agens(n.generators().begin(), n.generators().begin() + 3);
    SubgroupHandle a(n, agens);
    LinearCharacter chi(a.group, 2, {1, 0, 0});
    UnitaryRep rep = induced_rep(n, a, chi);

    ConjugacyClasses classes = ConjugacyClasses::exact(n);
    Character ch = character(rep, classes);
    CHECK(ch.dimension == 7);
    CHECK(ch.values.size() == classes.count());

    // Constant on classes: three random members each.
    std::mt19937_64 rng(11);
    for (std::size_t i = 0; i < classes.count(); ++i) {
        CHECK(std::abs(ch.values[i]) <= 7.0 + 1e-9);
        for (int k = 0; k < 3; ++k) {
            Perm member = classes.representative(i).conjugated_by(n.random_element(rng));
            CHECK(std::abs(rep.image(member).trace() - ch.values[i]) < 1e-9);
        }
    }

    // Regular representation of C5: dimension 5 at the identity, zero
    // elsewhere.
    PermGroup c5 = cyclic_group(5);
    std::vector<std::uint32_t> rows(5);
    for (std::uint32_t j = 0; j < 5; ++j) rows[j] = (j + 1) % 5;
    UnitaryRep reg(c5, {Monomial(1, std::move(rows), std::vector<std::uint32_t>(5, 0))});
    Character rch = character(reg, ConjugacyClasses::exact(c5));
    int at_identity = 0;
    for (std::size_t i = 0; i < rch.values.size(); ++i) {
        if (std::abs(rch.values[i] - 5.0) < 1e-9)
            ++at_identity;
        else
            CHECK(std::abs(rch.values[i]) < 1e-9);
    }
    CHECK(at_identity == 1);

    // Classes of a different group are rejected.
    CHECK_THROWS_AS(character(reg, ConjugacyClasses::exact(symmetric_group(5))), SourceMismatch);
}
