#include "firetree/simplex.hpp"

#include "firetree/errors.hpp"

namespace firetree {

LpResult solve_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                      const std::vector<Rat>& c) {
    size_t m = a.size(), n = c.size();
    for (const Rat& bi : b)
        if (bi < 0) throw InvalidInstance("simplex expects b >= 0");
    for (const auto& row : a)
        if (row.size() != n) throw InvalidInstance("ragged constraint matrix");
    if (b.size() != m) throw InvalidInstance("b size mismatch");

    // Tableau rows 0..m-1 are constraints over (x | slack | rhs); row m holds
    // reduced costs of the maximisation.
    size_t cols = n + m + 1;
    std::vector<std::vector<Rat>> tab(m + 1, std::vector<Rat>(cols, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = 1;
        tab[i][cols - 1] = b[i];
    }
    for (size_t j = 0; j < n; ++j) tab[m][j] = c[j];

    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    LpResult res;
    while (true) {
        // Bland: entering variable is the lowest index with positive reduced cost.
        size_t enter = cols;
        for (size_t j = 0; j + 1 < cols; ++j)
            if (tab[m][j] > 0) {
                enter = j;
                break;
            }
        if (enter == cols) break;
        // Ratio test, ties by lowest basis index.
        size_t leave = m;
        Rat best;
        for (size_t i = 0; i < m; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = tab[i][cols - 1] / tab[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) throw InvalidInstance("unbounded linear program");
        Rat piv = tab[leave][enter];
        for (Rat& x : tab[leave]) x /= piv;
        for (size_t i = 0; i <= m; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat factor = tab[i][enter];
            for (size_t j = 0; j < cols; ++j) tab[i][j] -= factor * tab[leave][j];
        }
        basis[leave] = enter;
        ++res.pivots;
    }

    res.x.assign(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) res.x[basis[i]] = tab[i][cols - 1];
    res.value = 0;
    for (size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
    return res;
}

}  // namespace firetree
