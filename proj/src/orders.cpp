#include "suspec/orders.hpp"

#include <algorithm>

namespace suspec {

GroupKind GroupKind::sp(int m) {
    if (m % 2 != 0) throw std::domain_error("Sp_m needs even m");
    return {Sp, m};
}

GroupKind GroupKind::so_odd(int m) {
    if (m % 2 != 1) throw std::domain_error("SO_m (odd family) needs odd m");
    return {SO_odd, m};
}

Int group_order(const GroupKind& kind, long long p) {
    if (!is_prime(Int(p))) throw std::invalid_argument("group_order: p is not prime");
    Int pp(p);
    switch (kind.family) {
        case GroupKind::SL: {
            int m = kind.m;
            Int r = pow_int(pp, static_cast<unsigned long>(m) * (m - 1) / 2);
            for (int i = 2; i <= m; ++i) r *= pow_int(pp, i) - 1;
            return r;
        }
        case GroupKind::SU: {
            int m = kind.m;
            Int r = pow_int(pp, static_cast<unsigned long>(m) * (m - 1) / 2);
            for (int i = 2; i <= m; ++i) r *= pow_int(pp, i) - (i % 2 == 0 ? 1 : -1);
            return r;
        }
        case GroupKind::Sp: {
            int r2 = kind.m / 2;
            Int r = pow_int(pp, static_cast<unsigned long>(r2) * r2);
            for (int i = 1; i <= r2; ++i) r *= pow_int(pp, 2 * i) - 1;
            return r;
        }
        case GroupKind::SO_odd: {
            if (p == 2) throw std::domain_error("SO_odd order formula needs p odd");
            int r2 = (kind.m - 1) / 2;
            Int r = pow_int(pp, static_cast<unsigned long>(r2) * r2);
            for (int i = 1; i <= r2; ++i) r *= pow_int(pp, 2 * i) - 1;
            return r;
        }
        case GroupKind::SO2minus:
            return pp + 1;
    }
    throw std::logic_error("group_order: unreachable");
}

long group_dimension(const GroupKind& kind) {
    switch (kind.family) {
        case GroupKind::SL:
        case GroupKind::SU:
            return static_cast<long>(kind.m) * kind.m - 1;
        case GroupKind::Sp:
            return static_cast<long>(kind.m / 2) * (kind.m + 1);
        case GroupKind::SO_odd:
            return static_cast<long>(kind.m) * (kind.m - 1) / 2;
        case GroupKind::SO2minus:
            return 1;
    }
    throw std::logic_error("group_dimension: unreachable");
}

namespace {

Rational order_route_factor(const GroupKind& kind, long long p) {
    return Rational(pow_int(Int(p), static_cast<unsigned long>(group_dimension(kind)))) /
           Rational(group_order(kind, p));
}

} // namespace

Rational euler_factor(const QuadraticField& field, long long p, int n) {
    if (n < 3) throw std::invalid_argument("euler_factor: n must be >= 3");
    switch (field.classify_prime(p)) {
        case PrimeClass::Split:
            return order_route_factor(GroupKind::sl(n + 1), p);
        case PrimeClass::Inert:
            return order_route_factor(GroupKind::su(n + 1), p);
        case PrimeClass::Ramified:
            if (n % 2 == 1) return order_route_factor(GroupKind::sp(n + 1), p);
            if (p != 2) return order_route_factor(GroupKind::so_odd(n + 1), p);
            return euler_factor_closed(field, p, n);
    }
    throw std::logic_error("euler_factor: unreachable");
}

Rational euler_factor_closed(const QuadraticField& field, long long p, int n) {
    if (n < 3) throw std::invalid_argument("euler_factor_closed: n must be >= 3");
    Rational r = 1;
    Rational pr(p);
    switch (field.classify_prime(p)) {
        case PrimeClass::Split:
            for (int i = 2; i <= n + 1; ++i)
                r /= 1 - pow_rational(pr, -i);
            return r;
        case PrimeClass::Inert:
            for (int i = 2; i <= n + 1; ++i)
                r /= 1 - (i % 2 == 0 ? 1 : -1) * pow_rational(pr, -i);
            return r;
        case PrimeClass::Ramified: {
            int top = n % 2 == 1 ? (n + 1) / 2 : n / 2;
            for (int i = 1; i <= top; ++i)
                r /= 1 - pow_rational(pr, -2 * i);
            return r;
        }
    }
    throw std::logic_error("euler_factor_closed: unreachable");
}

Rational lambda_p(const QuadraticField& field, long long p, int n) {
    auto t = t_ell(field, n);
    if (std::find(t.begin(), t.end(), p) == t.end())
        throw std::domain_error("lambda_p: p is not in T_ell");
    return Rational(pow_int(Int(p), static_cast<unsigned long>(n) + 1) - 1, Int(p) + 1);
}

Rational lambda_p_order_route(const QuadraticField& field, long long p, int n) {
    auto t = t_ell(field, n);
    if (std::find(t.begin(), t.end(), p) == t.end())
        throw std::domain_error("lambda_p_order_route: p is not in T_ell");
    GroupKind levi_sp = GroupKind::sp(n - 1);
    GroupKind quasi = GroupKind::sp(n + 1);
    long dim_m = group_dimension(levi_sp) + group_dimension(GroupKind::so2_minus());
    long dim_q = group_dimension(quasi);
    long half = (dim_m - dim_q) / 2; // always -n
    Rational r = pow_rational(Rational(p), half);
    r *= Rational(group_order(quasi, p));
    r /= Rational(group_order(levi_sp, p) * group_order(GroupKind::so2_minus(), p));
    return r;
}

} // namespace suspec
