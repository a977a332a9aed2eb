#include "suspec/heisenberg.hpp"

#include <stdexcept>

namespace suspec {

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
    if (a.x.size() != b.x.size())
        throw std::invalid_argument("heisenberg_mul: dimension mismatch");
    HeisenbergElement r;
    r.x.reserve(a.x.size());
    CRational herm; // <x1, x2>
    for (size_t i = 0; i < a.x.size(); ++i) {
        r.x.push_back(a.x[i] + b.x[i]);
        herm = herm + a.x[i] * b.x[i].conj();
    }
    r.mu = a.mu + b.mu + herm.im;
    return r;
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& a) {
    HeisenbergElement r;
    r.x.reserve(a.x.size());
    for (const auto& xi : a.x) r.x.push_back(-xi);
    r.mu = -a.mu;
    return r;
}

CMatrix heisenberg_matrix(const HeisenbergElement& e) {
    int n = e.n();
    CMatrix m(n + 1, std::vector<CRational>(n + 1));
    for (int i = 0; i <= n; ++i) m[i][i] = CRational(Rational(1));
    // u_2(mu) corner entries
    m[0][0] = m[0][0] + CRational(Rational(0), -e.mu);
    m[0][n] = m[0][n] + CRational(Rational(0), e.mu);
    m[n][0] = m[n][0] + CRational(Rational(0), -e.mu);
    m[n][n] = m[n][n] + CRational(Rational(0), e.mu);
    // g_1 part
    CRational norm2;
    for (const auto& xi : e.x) norm2 = norm2 + xi * xi.conj();
    Rational half = norm2.re / 2; // |x|^2 / 2, real
    m[0][0] = m[0][0] + CRational(-half);
    m[0][n] = m[0][n] + CRational(half);
    m[n][0] = m[n][0] + CRational(-half);
    m[n][n] = m[n][n] + CRational(half);
    for (int i = 1; i < n; ++i) {
        m[0][i] = m[0][i] + e.x[i - 1];
        m[n][i] = m[n][i] + e.x[i - 1];
        m[i][0] = m[i][0] - e.x[i - 1].conj();
        m[i][n] = m[i][n] + e.x[i - 1].conj();
    }
    return m;
}

CMatrix matrix_mul(const CMatrix& a, const CMatrix& b) {
    size_t n = a.size();
    if (n == 0 || b.size() != n)
        throw std::invalid_argument("matrix_mul: dimension mismatch");
    CMatrix c(n, std::vector<CRational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
    return c;
}

bool preserves_signature_form(const CMatrix& m) {
    size_t n1 = m.size();
    // (M^dagger S M)[i][j] = sum_k conj(m[k][i]) s_k m[k][j], s = (1,..,1,-1)
    for (size_t i = 0; i < n1; ++i) {
        for (size_t j = 0; j < n1; ++j) {
            CRational acc;
            for (size_t k = 0; k < n1; ++k) {
                CRational term = m[k][i].conj() * m[k][j];
                if (k == n1 - 1) term = -term;
                acc = acc + term;
            }
            CRational expected;
            if (i == j) expected = CRational(Rational(i == n1 - 1 ? -1 : 1));
            if (!(acc == expected)) return false;
        }
    }
    return true;
}

} // namespace suspec
