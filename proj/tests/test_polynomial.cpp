#include <doctest.h>

#include "helpers.hpp"

using namespace m0nbar;
using testutil::x;

TEST_CASE("addition basics") {
    CHECK((x(1) - x(2)) + (x(2) - x(1)) == Polynomial{});
    Polynomial p = testutil::Rng(7).polynomial();
    CHECK(p + Polynomial{} == p);
    CHECK(x(1) + x(1) == Integer(2) * x(1));
}

TEST_CASE("multiplication basics") {
    CHECK((x(1) - x(2)) * (x(1) + x(2)) == x(1) * x(1) - x(2) * x(2));
    Polynomial p = testutil::Rng(8).polynomial();
    CHECK(p * Polynomial(1) == p);
    CHECK(p * Polynomial{} == Polynomial{});
}

TEST_CASE("substitute") {
    const Polynomial t = Polynomial::variable(t_var);
    CHECK(substitute(x(1) - x(2), {{1, x(1) + t}}) == x(1) - x(2) + t);
    CHECK(substitute(x(1) * x(1), {{1, Polynomial{}}}) == Polynomial{});
    CHECK(substitute(x(1) * x(2), {{1, x(2)}}) == x(2) * x(2));

    SUBCASE("substitution is simultaneous, not sequential") {
        Polynomial p = substitute(x(1) * x(2), {{1, x(2)}, {2, x(1)}});
        CHECK(p == x(1) * x(2));
    }
}

TEST_CASE("exact_divide") {
    CHECK(exact_divide(x(1) * x(1) - x(2) * x(2), x(1) - x(2)) == x(1) + x(2));
    Polynomial p = testutil::Rng(9).polynomial();
    CHECK(exact_divide(p, Polynomial(1)) == p);
    CHECK_THROWS_AS(exact_divide(x(1) * x(1) + 1, x(1) - x(2)), not_divisible);
    CHECK_THROWS_AS(exact_divide(x(1), Polynomial{}), division_by_zero);
    CHECK(exact_divide(Polynomial{}, x(1)) == Polynomial{});
    // coefficient divisibility matters over the integers
    CHECK_THROWS_AS(exact_divide(x(1), Polynomial(2)), not_divisible);
}

TEST_CASE("min_total_degree_in") {
    const Polynomial t = Polynomial::variable(t_var);
    const Polynomial b3 = Polynomial::variable(b_var(3));
    CHECK(min_total_degree_in((t - b3) * x(1) * x(1) + x(1) * x(2) * x(3), {1, 2, 3}) == 2);
    CHECK(min_total_degree_in(Polynomial(5), {1}) == 0);
    CHECK(min_total_degree_in(x(1) * t * t * t, {1}) == 1);
    CHECK_THROWS_AS(min_total_degree_in(Polynomial{}, {1}), zero_polynomial);
}

TEST_CASE("primitive_normalize") {
    CHECK(primitive_normalize(Integer(-2) * x(1) + Integer(2) * x(2)) == x(1) - x(2));
    CHECK(primitive_normalize(Polynomial(7)) == Polynomial(1));
    CHECK(primitive_normalize(x(2) - x(1)) == x(1) - x(2)); // x1 > x2 in graded lex
    CHECK_THROWS_AS(primitive_normalize(Polynomial{}), zero_polynomial);

    testutil::Rng rng(10);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial p = rng.nonzero_polynomial();
        Polynomial normalized = primitive_normalize(p);
        CHECK(primitive_normalize(normalized) == normalized);
        Integer c(rng.uniform(1, 40));
        CHECK(primitive_normalize(c * p) == normalized);
        CHECK(primitive_normalize(-c * p) == normalized);
    }
}

TEST_CASE("ring laws on random inputs") {
    testutil::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = rng.polynomial(), b = rng.polynomial(), c = rng.polynomial();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact_divide round trip") {
    testutil::Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = rng.polynomial();
        Polynomial q = rng.nonzero_polynomial();
        CHECK(exact_divide(p * q, q) == p);
    }
}

TEST_CASE("canonical equality across operation orders") {
    testutil::Rng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial a = rng.polynomial(), b = rng.polynomial(), c = rng.polynomial();
        Polynomial left = (a + b) * c + a * a;
        Polynomial right = a * a + c * b + c * a;
        CHECK(left == right);
        CHECK((a - b) + (b - a) == Polynomial{});
    }
}

TEST_CASE("rendering and parsing") {
    Polynomial p = x(1) * x(1) * x(2) - Integer(3) * x(3);
    CHECK(to_string(p) == "x1^2*x2 - 3*x3");
    CHECK(parse_polynomial("x1^2*x2 - 3*x3") == p);
    CHECK(parse_polynomial("(x1-x2)*(x1+x2)") == x(1) * x(1) - x(2) * x(2));
    CHECK(parse_polynomial("-x1 + 2*t - b2") ==
          -x(1) + Integer(2) * Polynomial::variable(t_var) - Polynomial::variable(b_var(2)));
    CHECK(to_string(Polynomial{}) == "0");
    CHECK(parse_polynomial("0") == Polynomial{});
    CHECK_THROWS_AS(parse_polynomial("x1 +"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("q3"), parse_error);

    testutil::Rng rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial q = rng.polynomial();
        CHECK(parse_polynomial(to_string(q)) == q);
    }
}

TEST_CASE("graded lex term order puts x1 first") {
    Polynomial p = x(3) + x(1) + x(2);
    CHECK(to_string(p) == "x1 + x2 + x3");
    // degree dominates
    CHECK(to_string(x(5) * x(5) + x(1)) == "x5^2 + x1");
}

TEST_CASE("parser rejects zero variable indices and negative exponents") {
    CHECK_THROWS_AS(parse_polynomial("x0"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("b0"), parse_error);
    CHECK_THROWS_AS(Monomial::make({{1, -2}}), error);
    CHECK(Monomial::make({{1, 2}, {1, -2}}).is_one());
}
