#include "doctest.h"

#include "cwcell/perm.hpp"

using namespace cwcell;

TEST_CASE("composition follows function application") {
    // a = (1 2), b = (2 3) on three points, 0-based internally.
    Perm a = Perm::parse_cycles(3, "(1 2)");
    Perm b = Perm::parse_cycles(3, "(2 3)");
    Perm ab = a * b;
    for (Point x = 0; x < 3; ++x) CHECK(ab(x) == a(b(x)));
    CHECK(ab.cycle_string() == "(1 2 3)");
    CHECK((b * a).cycle_string() == "(1 3 2)");
}

TEST_CASE("inverse and identity") {
    Perm g = Perm::parse_cycles(6, "(1 4 2)(3 6)");
    CHECK((g * g.inverse()).is_identity());
    CHECK((g.inverse() * g).is_identity());
    CHECK(Perm::identity(6).is_identity());
    CHECK(g.order() == 6);
}

TEST_CASE("conjugation relabels cycles") {
    Perm g = Perm::parse_cycles(5, "(1 2 3)");
    Perm c = Perm::parse_cycles(5, "(1 4)(2 5)");
    Perm conj = g.conjugated_by(c);
    CHECK(conj == c * g * c.inverse());
    CHECK(conj.cycle_type() == g.cycle_type());
    // c maps the cycle (1 2 3) onto its images (4 5 3).
    CHECK(conj.cycle_string() == "(3 4 5)");
}

TEST_CASE("cycle round trip") {
    Perm g = Perm::parse_cycles(7, "(1 3)(2 5 7)");
    CHECK(Perm::parse_cycles(7, g.cycle_string()) == g);
    CHECK(Perm::parse_cycles(4, "()").is_identity());
    CHECK(Perm::parse_cycles(4, "(3)").is_identity());
}

TEST_CASE("malformed cycles are rejected") {
    CHECK_THROWS_AS(Perm::parse_cycles(3, "(1 2"), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles(3, "(1 4)"), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles(3, "(0 1)"), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles(3, "(1 2)(2 3)"), ParseError);
    CHECK_THROWS_AS(Perm::parse_cycles(3, "x"), ParseError);
    CHECK_THROWS_AS(Perm(std::vector<Point>{0, 0, 1}), BadParams);
}

TEST_CASE("degree mismatch is rejected") {
    CHECK_THROWS_AS(Perm::identity(3) * Perm::identity(4), DegreeMismatch);
}
