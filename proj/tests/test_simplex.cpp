#include <doctest.h>

#include <functional>
#include <random>

#include "firetree/simplex.hpp"

using namespace firetree;

namespace {

// Independent LP oracle: enumerate basic points (all square subsystems of
// tight constraints among Ax = b rows and x_j = 0 planes), keep the feasible
// ones, take the best objective. Exact Gaussian elimination.
bool solve_square(std::vector<std::vector<Rat>> m, std::vector<Rat>& rhs) {
    size_t n = rhs.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat k = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= k * m[col][c];
            rhs[r] -= k * rhs[col];
        }
    }
    for (size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
    return true;
}

Rat brute_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                 const std::vector<Rat>& c) {
    size_t m = a.size(), n = c.size();
    size_t total = m + n;  // constraint rows plus coordinate planes
    std::vector<size_t> idx(total);
    for (size_t i = 0; i < total; ++i) idx[i] = i;
    Rat best = 0;  // x = 0 is feasible in all our programs
    std::vector<size_t> pick;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (pick.size() == n) {
            std::vector<std::vector<Rat>> sys;
            std::vector<Rat> rhs;
            for (size_t k : pick) {
                if (k < m) {
                    sys.push_back(a[k]);
                    rhs.push_back(b[k]);
                } else {
                    std::vector<Rat> row(n, Rat(0));
                    row[k - m] = 1;
                    sys.push_back(row);
                    rhs.push_back(Rat(0));
                }
            }
            if (!solve_square(sys, rhs)) return;
            for (const Rat& x : rhs)
                if (x < 0) return;
            for (size_t i = 0; i < m; ++i) {
                Rat lhs = 0;
                for (size_t j = 0; j < n; ++j) lhs += a[i][j] * rhs[j];
                if (lhs > b[i]) return;
            }
            Rat val = 0;
            for (size_t j = 0; j < n; ++j) val += c[j] * rhs[j];
            if (val > best) best = val;
            return;
        }
        for (size_t k = start; k < total; ++k) {
            pick.push_back(k);
            rec(k + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

}  // namespace

TEST_SUITE("simplex") {

TEST_CASE("tiny programs solve exactly") {
    // max x + y, x <= 1, y <= 1/2, x + y <= 5/4
    std::vector<std::vector<Rat>> a{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    std::vector<Rat> b{Rat(1), Rat(1, 2), Rat(5, 4)};
    std::vector<Rat> c{Rat(1), Rat(1)};
    LpResult r = solve_lp_max(a, b, c);
    CHECK(r.value == Rat(5, 4));
}

TEST_CASE("degenerate programs terminate under Bland") {
    // classic degeneracy: redundant constraints through the origin
    std::vector<std::vector<Rat>> a{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}, {Rat(1), Rat(0)}};
    std::vector<Rat> b{Rat(1), Rat(1), Rat(0)};
    std::vector<Rat> c{Rat(2), Rat(1)};
    LpResult r = solve_lp_max(a, b, c);
    CHECK(r.value == Rat(1));
}

TEST_CASE("matches the basic-point enumeration oracle on random programs") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 60; ++rep) {
        size_t n = 2 + rng() % 2, m = 2 + rng() % 3;
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
        std::vector<Rat> b(m), c(n);
        for (auto& row : a)
            for (auto& x : row) x = Rat(static_cast<long>(rng() % 4));
        for (auto& x : b) x = Rat(static_cast<long>(1 + rng() % 5)) / 2;
        for (auto& x : c) x = Rat(static_cast<long>(rng() % 5));
        // keep the region bounded
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rat> row(n, Rat(0));
            row[j] = 1;
            a.push_back(row);
            b.push_back(Rat(3));
        }
        m = a.size();
        LpResult r = solve_lp_max(a, b, c);
        CHECK(r.value == brute_lp_max(a, b, c));
    }
}

}  // TEST_SUITE
