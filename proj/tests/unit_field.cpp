#include <doctest.h>

#include <cmath>

#include "suspec/field.hpp"
#include "suspec/gauss.hpp"
#include "suspec/local.hpp"

using namespace suspec;

namespace {

// Euler's criterion oracle for odd primes not dividing a.
int legendre_brute(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    for (long long x = 1; x < p; ++x)
        if (x * x % p == a) return 1;
    return -1;
}

// Primitive solution of z^2 = a x^2 + b y^2 modulo p^depth.
bool conic_solvable_brute(long long a, long long b, long long p, long long mod) {
    for (long long z = 0; z < mod; ++z)
        for (long long x = 0; x < mod; ++x)
            for (long long y = 0; y < mod; ++y) {
                if (x % p == 0 && y % p == 0 && z % p == 0) continue;
                long long lhs = z * z % mod;
                long long rhs = ((a * x % mod) * x + (b * y % mod) * y) % mod;
                if ((lhs - rhs) % mod == 0) return true;
            }
    return false;
}

} // namespace

TEST_CASE("primality") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(97)));
    CHECK(is_prime(Int(2147483647)));
    CHECK(!is_prime(Int(1)));
    CHECK(!is_prime(Int(561))); // Carmichael
    CHECK(!is_prime(Int(1000000016000000063LL)));
    CHECK(is_prime(Int("9223372036854775783")));
    CHECK_THROWS(is_prime(pow_int(Int(2), 70)));
}

TEST_CASE("field construction") {
    CHECK(make_field(3).discriminant() == -3);
    CHECK(make_field(1).discriminant() == -4);
    CHECK(make_field(1).conductor() == 4);
    CHECK(make_field(5).discriminant() == -20);
    CHECK(make_field(7).discriminant() == -7);
    CHECK_THROWS(make_field(12));
    CHECK_THROWS(make_field(0));
}

TEST_CASE("kronecker symbol") {
    QuadraticField f1 = make_field(1);
    CHECK(f1.chi(Int(3)) == -1);
    CHECK(make_field(3).chi(Int(2)) == -1);
    CHECK(f1.chi(Int(2)) == 0);
    CHECK(kronecker_symbol(Int(-4), Int(0)) == 0);
    for (long long k : {1, 2, 3, 5, 7, 11}) {
        QuadraticField f = make_field(k);
        for (long long p : {3, 5, 7, 11, 13}) {
            if (f.discriminant() % p == 0) continue;
            CHECK(f.chi(Int(p)) == legendre_brute(f.discriminant(), p));
        }
    }
}

TEST_CASE("prime classification") {
    QuadraticField f1 = make_field(1);
    CHECK(f1.classify_prime(2) == PrimeClass::Ramified);
    CHECK(f1.classify_prime(5) == PrimeClass::Split);
    CHECK(f1.classify_prime(3) == PrimeClass::Inert);
    CHECK_THROWS(f1.classify_prime(6));
    for (long long k : {1, 2, 3, 5, 7, 11})
        for (long long p : {2, 3, 5, 7, 11, 13}) {
            QuadraticField f = make_field(k);
            CHECK((f.classify_prime(p) == PrimeClass::Ramified) ==
                  (f.discriminant() % p == 0));
        }
    CHECK(make_field(5).ramified_primes() == std::vector<long long>{2, 5});
    CHECK(make_field(7).ramified_primes() == std::vector<long long>{7});
}

TEST_CASE("hilbert symbol examples") {
    CHECK(hilbert_symbol(Int(-1), Int(-1), 2) == -1);
    CHECK(hilbert_symbol(Int(1), Int(-5), 2) == 1);
    CHECK(hilbert_symbol(Int(1), Int(7), 3) == 1);
    CHECK(hilbert_symbol(Int(-1), Int(-1), 5) == 1);
}

TEST_CASE("hilbert symbol vs brute-force solvability") {
    for (long long a : {-1, 1, 2, -2, 3, -3}) {
        for (long long b : {-1, 1, 2, -2, 3, -3}) {
            CHECK((hilbert_symbol(Int(a), Int(b), 2) == 1) ==
                  conic_solvable_brute(a, b, 2, 128));
            CHECK((hilbert_symbol(Int(a), Int(b), 3) == 1) ==
                  conic_solvable_brute(a, b, 3, 81));
        }
    }
    CHECK((hilbert_symbol(Int(5), Int(-5), 5) == 1) == conic_solvable_brute(5, -5, 5, 125));
    CHECK((hilbert_symbol(Int(2), Int(5), 5) == 1) == conic_solvable_brute(2, 5, 5, 125));
}

TEST_CASE("local norms") {
    CHECK(!is_local_norm(make_field(1), 2, -1));
    CHECK(is_local_norm(make_field(1), 2, 1));
    CHECK(is_local_norm(make_field(5), 5, -1));
    // odd unramified primes: every unit is a norm
    for (long long k : {1, 2, 3, 5, 7, 11}) {
        QuadraticField f = make_field(k);
        for (long long p : {3, 5, 7, 11, 13}) {
            if (f.classify_prime(p) == PrimeClass::Ramified) continue;
            CHECK(is_local_norm(f, p, -1));
            CHECK(is_local_norm(f, p, 1));
        }
    }
}

TEST_CASE("non-quasi-split primes") {
    CHECK(t_ell(make_field(1), 3) == std::vector<long long>{2});
    CHECK(t_ell(make_field(5), 3) == std::vector<long long>{2});
    for (long long k : {1, 2, 3, 5, 7, 11}) {
        CHECK(t_ell(make_field(k), 5).empty());
        CHECK(t_ell(make_field(k), 4).empty());
        CHECK(t_ell(make_field(k), 6).empty());
    }
}

TEST_CASE("gauss sums") {
    Complex g1 = gauss_sum_numeric(make_field(1), 128);
    CHECK(std::fabs(g1.abs2().convert_to<double>() - 4) < 1e-12);
    CHECK(std::fabs(g1.re.convert_to<double>()) < 1e-12);
    Complex g3 = gauss_sum_numeric(make_field(3), 128);
    CHECK(std::fabs(g3.abs2().convert_to<double>() - 3) < 1e-12);
    for (long long k : {1, 2, 3, 5, 7, 11, 13}) {
        QuadraticField f = make_field(k);
        Complex g = gauss_sum_numeric(f, 128);
        double ratio = (g.im / sqrt(Float(f.conductor()))).convert_to<double>();
        CHECK(std::fabs(std::fabs(ratio) - 1) < 1e-9);
        CHECK(gauss_sum_sign(f) == (ratio > 0 ? 1 : -1));
    }
}
