#include <doctest.h>

#include <cmath>

#include "suspec/spectrum.hpp"

using namespace suspec;

TEST_CASE("parameter validation") {
    HCParam a({3, 2, 1});
    ParamFlags fa = validate(a);
    CHECK(a.tau_last() == -6);
    CHECK(fa.regular_dominant);
    CHECK(fa.integrable);
    CHECK(fa.cohomological);

    HCParam b({2, 1, 0});
    CHECK(b.tau_last() == -3);
    CHECK(validate(b).regular_dominant);
    CHECK(!validate(b).integrable);

    HCParam c({10, 9, 8});
    CHECK(validate(c).integrable);

    CHECK_THROWS(HCParam({1, 2, 3}));
    CHECK_THROWS(HCParam({3, 3, 1}));
    CHECK_THROWS(HCParam({1, 0}));
    CHECK_THROWS(a.tau(0));
    CHECK(a.tau(4) == -6);
}

TEST_CASE("integrable implies regular dominant") {
    for (long long t1 = -3; t1 <= 6; ++t1)
        for (long long t2 = t1 - 3; t2 < t1; ++t2)
            for (long long t3 = t2 - 3; t3 < t2; ++t3) {
                ParamFlags f = validate(HCParam({t1, t2, t3}));
                if (f.integrable) CHECK(f.regular_dominant);
                if (f.cohomological) CHECK(f.integrable);
            }
}

TEST_CASE("formal degree") {
    CHECK(formal_degree(HCParam({3, 2, 1})) == SymbolicReal(Rational(63, 8), -3, 0));
    CHECK(formal_degree(HCParam({2, 1, 0})) == SymbolicReal(Rational(15, 16), -3, 0));
    CHECK(formal_degree(HCParam({10, 4, 1, -2})).coeff() > 0);
}

TEST_CASE("Weyl dimension formula") {
    CHECK(weyl_dim({Rational(0), Rational(0), Rational(0)}) == 1);
    CHECK(weyl_dim({Rational(1), Rational(0)}) == 2);
    CHECK(weyl_dim({Rational(1), Rational(0), Rational(0)}) == 3);
    CHECK(weyl_dim({Rational(1), Rational(0), Rational(-1)}) == 8); // adjoint of sl3
    CHECK(weyl_dim({Rational(2), Rational(0)}) == 3); // sym^2 of the standard rep
    CHECK_THROWS(weyl_dim({Rational(0), Rational(1)}));
    CHECK_THROWS(weyl_dim({Rational(1, 2), Rational(0)}));
    // half-integer weights with integral differences are legal
    CHECK(weyl_dim({Rational(3, 2), Rational(1, 2)}) == 2);
}

TEST_CASE("discriminant exponent") {
    CHECK(s_exponent(3) == Rational(5, 2));
    CHECK(s_exponent(4) == 7);
    CHECK(s_exponent(5) == 7);
    CHECK_THROWS(s_exponent(2));
}

TEST_CASE("covolume") {
    QuadraticField f1 = make_field(1);
    SymbolicReal v = covolume(f1, 3);
    CHECK(v.pi_exp() == 3);
    CHECK(v.fold_sqrtd() == SymbolicReal(Rational(1, 27648), 3, 0));
    for (long long k : {1, 2, 3, 5, 7, 11})
        for (int n = 3; n <= 8; ++n) {
            SymbolicReal c = covolume(make_field(k), n);
            CHECK(c.pi_exp() == n);
            CHECK(c.coeff() > 0);
            CHECK(c.sqrtd_exp() % 2 == 0);
        }
}

TEST_CASE("multiplicity") {
    QuadraticField f1 = make_field(1);
    HCParam tau({3, 2, 1});
    MultiplicityResult one = multiplicity(f1, 3, tau, 1);
    REQUIRE(one.exact);
    CHECK(*one.exact == Rational(7, 24576));
    CHECK(one.integral_warning);

    MultiplicityResult big = multiplicity(f1, 3, tau, 24576);
    REQUIRE(big.exact);
    CHECK(*big.exact == 7);
    CHECK(!big.integral_warning);
    CHECK(big.main_term == one.main_term * SymbolicReal(Rational(24576)));

    CHECK_THROWS(multiplicity(f1, 3, HCParam({2, 1, 0}), 1));
    CHECK_THROWS(multiplicity(f1, 4, tau, 1));

    // even n carries no exact value; error bound only with inputs
    HCParam tau4({9, 6, 3, 1});
    REQUIRE(validate(tau4).integrable);
    MultiplicityResult even = multiplicity(f1, 4, tau4, 10);
    CHECK(!even.exact);
    CHECK(!even.error_bound);
    ErrorInputs err{1.0, 0, 1.0, 3};
    MultiplicityResult withb = multiplicity(f1, 4, tau4, 10, err);
    REQUIRE(withb.error_bound);
    CHECK(*withb.error_bound > 0);
}

TEST_CASE("degenerate limit of the multiplicity ratio") {
    // for odd n the multiplicity over vol times h is exactly the formal degree
    QuadraticField f = make_field(3);
    HCParam tau({5, 3, 1});
    for (long long h : {1, 7, 360}) {
        MultiplicityResult m = multiplicity(f, 3, tau, h);
        SymbolicReal ratio = formal_degree(tau) * covolume(f, 3) * SymbolicReal(Rational(h));
        CHECK(m.main_term == ratio);
    }
}

TEST_CASE("error constant") {
    CHECK(error_constant(4, 1, 1.0, 1, 1.0) == doctest::Approx(1600.0));
    CHECK(error_constant(4, 1, 1.0, 1, 2.0) == doctest::Approx(3200.0));
    CHECK(error_constant(4, 1, 0.0, 1, 1.0) == 0); // kappa 0 is allowed as a bound
    CHECK_THROWS(error_constant(3, 1, 1.0, 1, 1.0));
}

TEST_CASE("cusp volume lower bound") {
    SqrtBound b = n2_volume_lower_bound(2, 3, 3);
    REQUIRE(b.exact());
    CHECK(*b.exact() == Rational(3, 4));
    SqrtBound b4 = n2_volume_lower_bound(2, 3, 4);
    CHECK(*b4.exact() == 1);
    SqrtBound nb = n2_volume_lower_bound(1, 3, 3);
    CHECK(!nb.exact());
    CHECK(nb.to_double() == doctest::Approx(3.0 * std::sqrt(1.0 / 32)));
    CHECK_THROWS(n2_volume_lower_bound(1, 3, 2));
}

TEST_CASE("positivity threshold") {
    QuadraticField f1 = make_field(1);
    HCParam tau({3, 2, 1});
    CHECK(positivity_threshold(f1, 3, tau, 0) == 0);
    double c = 7.0 / 24576;
    CHECK(positivity_threshold(f1, 3, tau, c) == doctest::Approx(1.0));
    CHECK(positivity_threshold(f1, 3, tau, 8 * c) == doctest::Approx(2.0));
}

TEST_CASE("half sum and coefficient dimension") {
    auto d = delta_k(3);
    CHECK(d == std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
    CHECK(dim_e_from_tau(HCParam({3, 2, 1})) ==
          weyl_dim({Rational(2), Rational(2), Rational(2)}));
}
