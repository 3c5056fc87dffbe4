#include "supermac/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace supermac {

namespace {

struct Echelon {
    std::vector<std::vector<IntPoly>> rows;
    std::vector<int> pivot_col;  // per pivot row
};

// Clears denominators row-wise, then runs one-step Bareiss elimination with
// row pivoting on the sparsest candidate.
Echelon echelonize(const ScalarMatrix& m) {
    size_t nr = m.size();
    size_t nc = nr ? m[0].size() : 0;
    std::vector<std::vector<IntPoly>> a(nr, std::vector<IntPoly>(nc));
    for (size_t i = 0; i < nr; ++i) {
        IntPoly lcm(1);
        for (size_t j = 0; j < nc; ++j) {
            const IntPoly& d = m[i][j].den();
            IntPoly g = poly_gcd(lcm, d);
            lcm = exact_divide(lcm, g) * d;
        }
        for (size_t j = 0; j < nc; ++j)
            a[i][j] = m[i][j].num() * exact_divide(lcm, m[i][j].den());
    }

    Echelon e;
    IntPoly prev(1);
    size_t r = 0;
    for (size_t col = 0; col < nc && r < nr; ++col) {
        size_t pr = nr;
        size_t best = SIZE_MAX;
        for (size_t i = r; i < nr; ++i)
            if (!a[i][col].is_zero() && a[i][col].terms().size() < best) {
                best = a[i][col].terms().size();
                pr = i;
            }
        if (pr == nr) continue;
        std::swap(a[r], a[pr]);
        for (size_t i = r + 1; i < nr; ++i) {
            for (size_t j = col + 1; j < nc; ++j)
                a[i][j] = exact_divide(a[i][j] * a[r][col] - a[i][col] * a[r][j], prev);
            a[i][col] = IntPoly();
        }
        prev = a[r][col];
        e.pivot_col.push_back((int)col);
        ++r;
    }
    a.resize(r);
    e.rows = std::move(a);
    return e;
}

}  // namespace

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& m) {
    if (m.empty()) return {};
    size_t nc = m[0].size();
    Echelon e = echelonize(m);
    std::vector<bool> is_pivot(nc, false);
    for (int c : e.pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (size_t fc = 0; fc < nc; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> x(nc);
        x[fc] = Scalar(1);
        for (int pr = (int)e.pivot_col.size() - 1; pr >= 0; --pr) {
            int pc = e.pivot_col[pr];
            Scalar acc;
            for (size_t j = pc + 1; j < nc; ++j)
                if (!e.rows[pr][j].is_zero() && !x[j].is_zero())
                    acc += Scalar(e.rows[pr][j]) * x[j];
            x[pc] = -acc / Scalar(e.rows[pr][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<Scalar> solve(const ScalarMatrix& m, const std::vector<Scalar>& rhs) {
    size_t n = m.size();
    if (n == 0 || m[0].size() != n || rhs.size() != n)
        throw std::invalid_argument("solve: need a square system");
    ScalarMatrix aug(n, std::vector<Scalar>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n] = -rhs[i];
    }
    Echelon e = echelonize(aug);
    // The kernel of [M | -rhs] with last coordinate 1 is the solution.
    for (int c : e.pivot_col)
        if (c == (int)n) throw std::domain_error("solve: inconsistent system");
    if (e.pivot_col.size() != n) throw std::domain_error("solve: singular matrix");
    std::vector<Scalar> x(n + 1);
    x[n] = Scalar(1);
    for (int pr = (int)n - 1; pr >= 0; --pr) {
        int pc = e.pivot_col[pr];
        Scalar acc;
        for (size_t j = pc + 1; j <= n; ++j)
            if (!e.rows[pr][j].is_zero() && !x[j].is_zero())
                acc += Scalar(e.rows[pr][j]) * x[j];
        x[pc] = -acc / Scalar(e.rows[pr][pc]);
    }
    x.pop_back();
    return x;
}

}  // namespace supermac
