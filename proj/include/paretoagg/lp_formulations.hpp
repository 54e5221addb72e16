#pragma once

// LP formulations shared by the float operations and the exact-rational
// recheck. Utilities are passed as plain scalar vectors so the same builders
// serve both scalar types.

#include <cstddef>
#include <vector>

#include "paretoagg/lp.hpp"

namespace paretoagg::lps {

// Pareto-gap LP over a pair of lotteries (x, y) on the M-simplex:
//   maximize v0.y - v0.x  s.t.  vi.x >= vi.y (or == for the indifference
//   antecedent), encoded as minimize v0.x - v0.y. Variables: x then y.
template <class S>
LinearProgram<S> gap_lp(const std::vector<S>& v0, const std::vector<std::vector<S>>& vs,
                        bool equality_antecedent) {
    const std::size_t m = v0.size();
    LinearProgram<S> lp(2 * m);
    for (std::size_t o = 0; o < m; ++o) {
        lp.objective[o] = v0[o];
        lp.objective[m + o] = -v0[o];
    }
    for (const auto& v : vs) {
        std::vector<S> row(2 * m, S(0));
        for (std::size_t o = 0; o < m; ++o) {
            row[o] = v[o];
            row[m + o] = -v[o];
        }
        lp.add_row(std::move(row), equality_antecedent ? RowSense::eq : RowSense::ge, S(0));
    }
    std::vector<S> sx(2 * m, S(0)), sy(2 * m, S(0));
    for (std::size_t o = 0; o < m; ++o) {
        sx[o] = S(1);
        sy[m + o] = S(1);
    }
    lp.add_row(std::move(sx), RowSense::eq, S(1));
    lp.add_row(std::move(sy), RowSense::eq, S(1));
    return lp;
}

// Minimum-oscillation LP: minimize t_hi - t_lo over weights a (nonnegative or
// free) with t_lo <= v0(o) - sum_i a_i vi(o) <= t_hi per prize. Variables:
// a[0..N-1], t_hi, t_lo.
template <class S>
LinearProgram<S> min_oscillation_lp(const std::vector<S>& v0,
                                    const std::vector<std::vector<S>>& vs, bool nonneg) {
    const std::size_t m = v0.size();
    const std::size_t n = vs.size();
    LinearProgram<S> lp(n + 2);
    lp.objective[n] = S(1);
    lp.objective[n + 1] = S(-1);
    lp.set_free(n);
    lp.set_free(n + 1);
    if (!nonneg)
        for (std::size_t i = 0; i < n; ++i) lp.set_free(i);
    for (std::size_t o = 0; o < m; ++o) {
        std::vector<S> hi(n + 2, S(0)), lo(n + 2, S(0));
        for (std::size_t i = 0; i < n; ++i) hi[i] = lo[i] = vs[i][o];
        hi[n] = S(1);
        lp.add_row(std::move(hi), RowSense::ge, v0[o]); // sum a v + t_hi >= v0
        lo[n + 1] = S(1);
        lp.add_row(std::move(lo), RowSense::le, v0[o]); // sum a v + t_lo <= v0
    }
    return lp;
}

// Positive-weight margin LP: maximize mu subject to a_i >= mu, a >= 0, the
// oscillation rows, t_hi - t_lo <= eps and the boundedness cap mu <= 1.
// Variables: a[0..N-1], mu, t_hi, t_lo.
template <class S>
LinearProgram<S> margin_lp(const std::vector<S>& v0, const std::vector<std::vector<S>>& vs,
                           const S& eps) {
    const std::size_t m = v0.size();
    const std::size_t n = vs.size();
    LinearProgram<S> lp(n + 3);
    lp.objective[n] = S(-1);
    lp.set_bounds(n, std::nullopt, S(1));
    lp.set_free(n + 1);
    lp.set_free(n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<S> row(n + 3, S(0));
        row[i] = S(1);
        row[n] = S(-1);
        lp.add_row(std::move(row), RowSense::ge, S(0));
    }
    for (std::size_t o = 0; o < m; ++o) {
        std::vector<S> hi(n + 3, S(0)), lo(n + 3, S(0));
        for (std::size_t i = 0; i < n; ++i) hi[i] = lo[i] = vs[i][o];
        hi[n + 1] = S(1);
        lp.add_row(std::move(hi), RowSense::ge, v0[o]);
        lo[n + 2] = S(1);
        lp.add_row(std::move(lo), RowSense::le, v0[o]);
    }
    std::vector<S> span(n + 3, S(0));
    span[n + 1] = S(1);
    span[n + 2] = S(-1);
    lp.add_row(std::move(span), RowSense::le, eps);
    return lp;
}

// Per-individual strict-improvement search backing the strong-Pareto check:
//   maximize vk.x - vk.y  s.t.  vi.x >= vi.y for all i,
//   v0.y - v0.x >= eps (the DM loses at least eps), x, y lotteries.
template <class S>
LinearProgram<S> strict_improvement_lp(const std::vector<S>& v0,
                                       const std::vector<std::vector<S>>& vs, std::size_t k,
                                       const S& eps) {
    LinearProgram<S> lp = gap_lp<S>(v0, vs, /*equality_antecedent=*/false);
    const std::size_t m = v0.size();
    for (std::size_t o = 0; o < m; ++o) {
        lp.objective[o] = -vs[k][o];
        lp.objective[m + o] = vs[k][o];
    }
    std::vector<S> row(2 * m, S(0));
    for (std::size_t o = 0; o < m; ++o) {
        row[o] = v0[o];
        row[m + o] = -v0[o];
    }
    lp.add_row(std::move(row), RowSense::le, S(-eps)); // v0.x - v0.y <= -eps
    return lp;
}

} // namespace paretoagg::lps
