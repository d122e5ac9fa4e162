#include "doctest.h"

#include <complex>
#include <random>
#include <vector>

#include "cwcell/errors.hpp"
#include "cwcell/families.hpp"
#include "cwcell/gf.hpp"
#include "cwcell/local.hpp"
#include "cwcell/matrix_group.hpp"
#include "cwcell/witness.hpp"

using namespace cwcell;

namespace {

// Sign of a permutation, from the cycle structure.
std::uint32_t parity(const Perm& p) {
    std::uint32_t s = 0;
    for (Point len : p.cycle_type()) s += len - 1;
    return s % 2;
}

}  // namespace

TEST_CASE("sigma golden values at n = 3") {
    UnitaryRep sigma = suzuki_sigma(3);
    CHECK(sigma.dimension() == 7);
    CHECK(sigma.root_order() == 2);
    CHECK(sigma.table_mode());
    CHECK(sigma.source().order() == 56);

    // Translation generator: diagonal, three +1 and four -1.
    Monomial t = sigma.generator_images()[0];
    int plus = 0, minus = 0;
    for (std::uint32_t j = 0; j < 7; ++j) {
        CHECK(t.row(j) == j);
        (t.phase(j) == 0 ? plus : minus) += 1;
    }
    CHECK(plus == 3);
    CHECK(minus == 4);

    // Multiplication generator: the cyclic permutation matrix.
    Monomial m = sigma.generator_images()[1];
    for (std::uint32_t j = 0; j < 7; ++j) {
        CHECK(m.row(j) == (j + 1) % 7);
        CHECK(m.phase(j) == 0);
    }

    // Faithful: all 56 images distinct.
    CHECK(sigma.faithful());
    CHECK(sigma.max_unitary_defect() < 1e-12);
    bool complete = false;
    CHECK(sigma.homomorphism_defect({}, &complete) == 0.0);
    CHECK(complete);
}

TEST_CASE("sigma n = 5 matches the closed form") {
    UnitaryRep sigma = suzuki_sigma(5);
    CHECK(sigma.dimension() == 31);
    CHECK(sigma.source().order() == 992);
    CHECK(sigma.faithful());
    bool complete = false;
    CHECK(sigma.homomorphism_defect({}, &complete) == 0.0);
    CHECK(complete);

    // Independent formula: u(x) = lam*x + c with lam = prim^e maps to
    // the monomial with row e+j and sign trace(prim^(-(e+j)) * c) in
    // column j.
    Field f(2, 5);
    std::uint32_t prim = f.primitive();
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Perm u = sigma.source().random_element(rng);
        std::uint32_t c = u(0);
        std::uint32_t e = f.dlog(f.add(u(1), c));
        std::vector<std::uint32_t> rows(31), phases(31);
        for (std::uint32_t j = 0; j < 31; ++j) {
            std::uint32_t i = (e + j) % 31;
            rows[j] = i;
            phases[j] = f.trace(f.mul(f.pow(prim, -static_cast<std::int64_t>(i)), c));
        }
        CHECK(sigma.image(u) == Monomial(2, std::move(rows), std::move(phases)));
    }
}

TEST_CASE("sigma evaluator tier at n = 7") {
    UnitaryRep sigma = suzuki_sigma(7);
    CHECK(sigma.dimension() == 127);
    CHECK_FALSE(sigma.table_mode());
    CHECK(sigma.source().order() == 128 * 127);

    Field f(2, 7);
    Monomial t = sigma.generator_images()[0];
    for (std::uint32_t j = 0; j < 127; ++j) {
        CHECK(t.row(j) == j);
        CHECK(t.phase(j) == f.trace(f.pow(f.primitive(), -static_cast<std::int64_t>(j))));
    }
    Monomial m = sigma.generator_images()[1];
    for (std::uint32_t j = 0; j < 127; ++j) {
        CHECK(m.row(j) == (j + 1) % 127);
        CHECK(m.phase(j) == 0);
    }

    // Full generator-edge sweep still fits the exact tier here.
    bool complete = false;
    CHECK(sigma.homomorphism_defect({}, &complete) == 0.0);
    CHECK(complete);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Perm x = sigma.source().random_element(rng);
        Perm y = sigma.source().random_element(rng);
        CHECK(sigma.image(x * y) == sigma.image(x) * sigma.image(y));
    }
}

TEST_CASE("sigma n = 13 smoke") {
    UnitaryRep sigma = suzuki_sigma(13);
    CHECK(sigma.dimension() == 8191);
    CHECK(sigma.source().order() == std::uint64_t{8192} * 8191);

    Monomial m = sigma.generator_images()[1];
    for (std::uint32_t j = 0; j < 8191; ++j) REQUIRE(m.row(j) == (j + 1) % 8191);

    // Beyond the exact tier only spot checks run.
    bool complete = true;
    CHECK(sigma.homomorphism_defect({}, &complete) == 0.0);
    CHECK_FALSE(complete);
}

TEST_CASE("sigma parameter validation") {
    CHECK_THROWS_AS(suzuki_sigma(1), BadParams);
    CHECK_THROWS_AS(suzuki_sigma(2), BadParams);
    CHECK_THROWS_AS(suzuki_sigma(4), BadParams);
    CHECK_THROWS_AS(suzuki_sigma(15), BadParams);
}

TEST_CASE("suzuki witness at q = 8") {
    WitnessCertificate cert = suzuki_witness(8);
    CHECK(cert.p == 2);
    CHECK(cert.provenance == "suzuki_witness");
    CHECK(cert.tolerance == 1e-9);
    CHECK(cert.group.order() == 29120);
    CHECK(cert.sylow.group.order() == 64);
    CHECK(cert.normalizer.group.order() == 448);
    CHECK(cert.rep.dimension() == 7);
    CHECK(cert.rep.table_mode());

    CHECK(cert.checks.nontrivial_on_sylow);
    CHECK(cert.checks.trivial_on_order_p);
    CHECK(cert.checks.fusion_invariant_character);
    CHECK(cert.checks.unitary);
    CHECK(cert.checks.homomorphism_verified);

    // Involutions land exactly at the identity, so their character
    // value is the dimension; order-4 elements of S trace to -1.
    Monomial ident(7, cert.rep.root_order());
    int involutions = 0, order4 = 0;
    for (auto it = cert.sylow.group.elements(); !it.done(); it.next()) {
        const Perm& x = it.current();
        if (x.order() == 2) {
            CHECK(frobenius_distance(cert.rep.image(x), ident) < 1e-9);
            ++involutions;
        } else if (x.order() == 4) {
            CHECK(std::abs(cert.rep.image(x).trace() - std::complex<double>(-1.0, 0.0)) < 1e-9);
            ++order4;
        }
    }
    CHECK(involutions == 7);
    CHECK(order4 == 56);

    // Re-running the checks from the stored data reproduces them.
    WitnessChecks again = run_checks(cert);
    CHECK(again.all());

    // The representation cannot come from any homomorphism of the
    // ambient group into U(7): the ambient group is generated by its
    // involutions (certified via the order-2 radical), the
    // representation kills every involution, yet it is nontrivial.
    MaybeCertified rad = omega1_radical(cert.group, 2);
    CHECK(rad.certified);
    CHECK(rad.sub.group.order() == cert.group.order());
}

TEST_CASE("suzuki witness at q = 32 exercises the evaluator tier") {
    WitnessCertificate cert = suzuki_witness(32);
    CHECK(cert.group.order() == 32537600);
    CHECK(cert.sylow.group.order() == 1024);
    CHECK(cert.normalizer.group.order() == 31744);
    CHECK(cert.rep.dimension() == 31);
    CHECK_FALSE(cert.rep.table_mode());
    CHECK(cert.checks.all());

    Monomial ident(31, cert.rep.root_order());
    std::mt19937_64 rng(17);
    for (int i = 0; i < 5; ++i) {
        Perm x = cert.sylow.group.random_element(rng);
        if (x.order() == 2) CHECK(frobenius_distance(cert.rep.image(x), ident) < 1e-9);
        if (x.order() == 4)
            CHECK(std::abs(cert.rep.image(x).trace() - std::complex<double>(-1.0, 0.0)) < 1e-9);
    }
}

TEST_CASE("suzuki witness parameter validation") {
    CHECK_THROWS_AS(suzuki_witness(16), BadParams);
    CHECK_THROWS_AS(suzuki_witness(7), BadParams);
    CHECK_THROWS_AS(suzuki_witness(128), SizeExceeded);
}

TEST_CASE("psl2 witness at q = 19") {
    WitnessCertificate cert = psl2_witness(3, 2, 2);
    CHECK(cert.p == 3);
    CHECK(cert.provenance == "psl2_witness");
    CHECK(cert.group.order() == 3420);
    CHECK(cert.sylow.group.order() == 9);
    CHECK(cert.normalizer.group.order() == 18);
    CHECK(cert.rep.dimension() == 2);
    CHECK(cert.rep.root_order() == 3);
    CHECK(cert.checks.all());

    // Order-3 elements of the normalizer map to the identity; the
    // order-9 generator does not.
    Monomial ident(2, 3);
    int order3 = 0;
    for (auto it = cert.normalizer.group.elements(); !it.done(); it.next()) {
        const Perm& x = it.current();
        if (x.order() == 3) {
            CHECK(frobenius_distance(cert.rep.image(x), ident) < 1e-9);
            ++order3;
        }
        if (x.order() == 9) CHECK(frobenius_distance(cert.rep.image(x), ident) > 1e-9);
    }
    CHECK(order3 == 2);

    WitnessChecks again = run_checks(cert);
    CHECK(again.all());
}

TEST_CASE("psl2 witness parameter validation") {
    CHECK_THROWS_AS(psl2_witness(3, 1, 2), BadParams);  // order-p elements would survive
    CHECK_THROWS_AS(psl2_witness(2, 2, 2), BadParams);
    CHECK_THROWS_AS(psl2_witness(4, 2, 2), BadParams);
    CHECK_THROWS_AS(psl2_witness(3, 2, 6), BadParams);  // m divisible by p
    CHECK_THROWS_AS(psl2_witness(3, 2, 3), BadParams);  // q = 28 not a prime power
    // q = 37 works as a group but the normalizer is too big: m = 4.
    CHECK_THROWS_AS(psl2_witness(3, 2, 4), BadParams);
}

TEST_CASE("generic quotient witness on the suzuki group") {
    PermGroup g = suzuki_group(8);
    SubgroupHandle s = sylow_subgroup(g, 2);
    auto cert = generic_quotient_witness(g, s, 2);
    REQUIRE(cert.has_value());
    CHECK(cert->provenance == "generic_quotient_witness");
    CHECK(cert->rep.dimension() == 56);
    CHECK(cert->rep.root_order() == 1);
    CHECK(cert->normalizer.group.order() == 448);
    CHECK(cert->checks.all());

    // Consistent with the family construction: both witness the same
    // prime on the same group.
    WitnessCertificate family = suzuki_witness(8);
    CHECK(family.checks.all());
    CHECK(family.p == cert->p);
    CHECK(family.sylow.group.order() == cert->sylow.group.order());

    WitnessChecks again = run_checks(*cert);
    CHECK(again.all());
}

TEST_CASE("generic quotient witness not-found cases") {
    PermGroup thev = thevenaz_group();
    SubgroupHandle s = sylow_subgroup(thev, 2);
    CHECK_FALSE(generic_quotient_witness(thev, s, 2).has_value());

    PermGroup l33 = psl3_3_group();
    SubgroupHandle s2 = sylow_subgroup(l33, 2);
    CHECK_FALSE(generic_quotient_witness(l33, s2, 2).has_value());
}

TEST_CASE("generic quotient witness needs fusion control") {
    // SL2(7) in its regular action: the Sylow 2-subgroup is
    // quaternion of order 16, fusion is not controlled by its
    // normalizer, and the closure of the involution subgroup stays
    // proper, so the construction must refuse rather than return.
    Field f7(7, 1);
    MatrixGroupSpec spec{f7, 2, {Mat{1, 1, 0, 1}, Mat{1, 0, 1, 1}}};
    PermGroup g = matrix_to_perm(spec, MatrixAction::Cosets);
    REQUIRE(g.order() == 336);
    SubgroupHandle s = sylow_subgroup(g, 2);
    REQUIRE(s.group.order() == 16);
    CHECK_THROWS_AS(generic_quotient_witness(g, s, 2), FusionNotControlled);
}

TEST_CASE("witness checks fail for the wrong representation") {
    // The sign character of the dihedral normalizer inside Sigma_4 is
    // nontrivial on involutions, so the order-p check must reject it.
    PermGroup g = symmetric_group(4);
    SubgroupHandle s = sylow_subgroup(g, 2);
    SubgroupHandle n = normalizer(g, s.group);
    REQUIRE(n.group.order() == 8);

    std::vector<Monomial> signs;
    for (const Perm& gen : n.group.generators())
        signs.push_back(Monomial(2, std::vector<std::uint32_t>{0},
                                 std::vector<std::uint32_t>{parity(gen)}));
    UnitaryRep sign_rep(n.group, signs);
    WitnessChecks checks = run_checks(g, s, n, sign_rep, 2, 1e-9);
    CHECK(checks.nontrivial_on_sylow);
    CHECK_FALSE(checks.trivial_on_order_p);
    CHECK(checks.fusion_invariant_character);
    CHECK(checks.unitary);
    CHECK(checks.homomorphism_verified);
    CHECK_FALSE(checks.all());

    // A representation presented on the wrong generator list is
    // rejected outright.
    UnitaryRep wrong(cyclic_group(4), {Monomial(1, 2)});
    CHECK_THROWS_AS(run_checks(g, s, n, wrong, 2, 1e-9), SourceMismatch);
}
