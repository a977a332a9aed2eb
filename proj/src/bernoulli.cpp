#include "suspec/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace suspec {

namespace {
std::shared_mutex cache_mutex;
std::vector<Rational> cache; // cache[k] = B_k
}

Rational bernoulli(unsigned n) {
    {
        std::shared_lock lock(cache_mutex);
        if (n < cache.size()) return cache[n];
    }
    std::unique_lock lock(cache_mutex);
    if (cache.empty()) cache.push_back(Rational(1));
    // sum_{k=0}^{m} C(m+1,k) B_k = 0  =>  B_m = -1/(m+1) sum_{k<m} C(m+1,k) B_k
    while (cache.size() <= n) {
        unsigned m = static_cast<unsigned>(cache.size());
        Rational sum = 0;
        for (unsigned k = 0; k < m; ++k)
            sum += Rational(binomial(m + 1, k)) * cache[k];
        cache.push_back(-sum / Rational(m + 1));
    }
    return cache[n];
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
    Rational sum = 0;
    Rational xpow = 1; // x^(n-k), built from the k=n end down
    for (unsigned k = n + 1; k-- > 0;) {
        sum += Rational(binomial(n, k)) * bernoulli(k) * xpow;
        if (k > 0) xpow *= x;
    }
    return sum;
}

} // namespace suspec
