#include "hyperrig/exactla.hpp"

namespace hyperrig {

int rank(const ExactMatrix<RationalField>& m, int limit)
{
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<mpz_class> a(static_cast<std::size_t>(rows) * cols);
    auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<std::size_t>(i) * cols + j]; };
    for (int i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (int j = 0; j < cols; ++j) at(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        if (limit >= 0 && r >= limit) break;
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(at(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                mpz_class t = at(r, c) * at(i, j) - at(i, c) * at(r, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

}  // namespace hyperrig
