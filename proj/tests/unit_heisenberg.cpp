#include <doctest.h>

#include <random>

#include "suspec/heisenberg.hpp"

using namespace suspec;

namespace {

HeisenbergElement random_element(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    HeisenbergElement e;
    for (int i = 0; i < n - 1; ++i)
        e.x.push_back({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    e.mu = Rational(num(rng), den(rng));
    return e;
}

HeisenbergElement central(int n, Rational mu) {
    HeisenbergElement e;
    e.x.assign(n - 1, CRational());
    e.mu = std::move(mu);
    return e;
}

} // namespace

TEST_CASE("group law") {
    // central elements add in mu
    HeisenbergElement c = heisenberg_mul(central(3, Rational(1, 2)), central(3, Rational(1, 3)));
    CHECK(c.mu == Rational(5, 6));
    for (const auto& xi : c.x) CHECK(xi == CRational());

    // x1 = (i, 0), x2 = (1, 0): mu picks up Im(i * conj(1)) = 1
    HeisenbergElement a, b;
    a.x = {CRational(Rational(0), Rational(1)), CRational()};
    b.x = {CRational(Rational(1)), CRational()};
    HeisenbergElement p = heisenberg_mul(a, b);
    CHECK(p.mu == 1);

    // inverse
    HeisenbergElement inv = heisenberg_inverse(a);
    HeisenbergElement id = heisenberg_mul(a, inv);
    CHECK(id.mu == 0);
    for (const auto& xi : id.x) CHECK(xi == CRational());

    CHECK_THROWS(heisenberg_mul(a, central(4, Rational(0))));
}

TEST_CASE("associativity") {
    std::mt19937 rng(7);
    for (int n : {3, 4, 5})
        for (int trial = 0; trial < 30; ++trial) {
            HeisenbergElement a = random_element(n, rng);
            HeisenbergElement b = random_element(n, rng);
            HeisenbergElement c = random_element(n, rng);
            HeisenbergElement lhs = heisenberg_mul(heisenberg_mul(a, b), c);
            HeisenbergElement rhs = heisenberg_mul(a, heisenberg_mul(b, c));
            CHECK(lhs.mu == rhs.mu);
            CHECK(lhs.x == rhs.x);
        }
}

TEST_CASE("matrix model") {
    // identity element maps to the identity matrix
    CMatrix id = heisenberg_matrix(central(3, Rational(0)));
    for (size_t i = 0; i < id.size(); ++i)
        for (size_t j = 0; j < id.size(); ++j)
            CHECK(id[i][j] == (i == j ? CRational(Rational(1)) : CRational()));

    // u_2(1) has lower-right entry 1 + i
    CMatrix u2 = heisenberg_matrix(central(3, Rational(1)));
    CHECK(u2[3][3] == CRational(Rational(1), Rational(1)));

    CHECK_THROWS(matrix_mul(id, CMatrix(3, std::vector<CRational>(3))));
}

TEST_CASE("matrix homomorphism and form preservation") {
    std::mt19937 rng(11);
    for (int n : {3, 4, 5})
        for (int trial = 0; trial < 40; ++trial) {
            HeisenbergElement a = random_element(n, rng);
            HeisenbergElement b = random_element(n, rng);
            CHECK(matrix_mul(heisenberg_matrix(a), heisenberg_matrix(b)) ==
                  heisenberg_matrix(heisenberg_mul(a, b)));
            CHECK(preserves_signature_form(heisenberg_matrix(a)));
        }
}
