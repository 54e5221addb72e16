#pragma once

// Self-contained dense linear-program solver: two-phase primal simplex on a
// dense tableau. Bland's rule is engaged after a stall (anti-cycling), which
// also makes the exact-rational instantiation terminate on degenerate inputs.
//
// The same template serves double (tolerance-based) and Rational (exact)
// scalars; the numeric policy lives in ScalarOps.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "paretoagg/errors.hpp"
#include "paretoagg/rational.hpp"

namespace paretoagg {

enum class LpStatus { optimal, infeasible, unbounded, breakdown };

inline const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
        case LpStatus::breakdown: return "breakdown";
    }
    return "unknown";
}

enum class RowSense { le, eq, ge };

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<double> {
    static constexpr bool exact = false;
    static double abs(double v) { return std::fabs(v); }
    static bool finite(double v) { return std::isfinite(v); }
    static double feas_tol() { return 1e-9; }
    static double opt_tol() { return 1e-9; }
    static double pivot_tol() { return 1e-10; }
    static double to_double(double v) { return v; }
};

template <>
struct ScalarOps<Rational> {
    static constexpr bool exact = true;
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
    static bool finite(const Rational&) { return true; }
    static Rational feas_tol() { return 0; }
    static Rational opt_tol() { return 0; }
    static Rational pivot_tol() { return 0; }
    static double to_double(const Rational& v) { return rational_to_double(v); }
};

// minimize objective.z  subject to  rows[i].z (sense[i]) rhs[i],  lower <= z <= upper.
// Bounds default to z >= 0; nullopt means the side is unbounded.
template <class S>
struct LinearProgram {
    std::vector<S> objective;
    std::vector<std::vector<S>> rows;
    std::vector<RowSense> senses;
    std::vector<S> rhs;
    std::vector<std::optional<S>> lower;
    std::vector<std::optional<S>> upper;

    explicit LinearProgram(std::size_t nvars)
        : objective(nvars, S(0)),
          lower(nvars, std::optional<S>(S(0))),
          upper(nvars, std::nullopt) {}

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }

    void add_row(std::vector<S> coeffs, RowSense sense, S rhs_value) {
        if (coeffs.size() != num_vars()) throw InputError("lp row width does not match variable count");
        rows.push_back(std::move(coeffs));
        senses.push_back(sense);
        rhs.push_back(std::move(rhs_value));
    }

    void set_bounds(std::size_t j, std::optional<S> lo, std::optional<S> up) {
        lower.at(j) = std::move(lo);
        upper.at(j) = std::move(up);
    }
    void set_free(std::size_t j) { set_bounds(j, std::nullopt, std::nullopt); }
};

template <class S>
struct LpCertificate {
    S primal_infeasibility = S(0);   // max row/bound violation, row-scaled units
    S dual_infeasibility = S(0);     // most negative reduced cost, magnitude
    S complementary_slackness = S(0); // max |y_i slack_i|, |x_j redcost_j|, scaled
    S duality_gap = S(0);            // |primal - dual objective| / (1 + |primal|)
};

template <class S>
struct LpSolution {
    LpStatus status = LpStatus::breakdown;
    std::vector<S> z;      // primal point in the original variables
    S objective = S(0);
    std::vector<S> dual;   // per original row; >= rows: y >= 0, <= rows: y <= 0, = rows free
    std::vector<S> ray;    // nonempty iff unbounded: feasible improving direction
    LpCertificate<S> cert;
    long iterations = 0;
};

template <class S>
struct SimplexOptions {
    S feas_tol = ScalarOps<S>::feas_tol();
    S opt_tol = ScalarOps<S>::opt_tol();
    S pivot_tol = ScalarOps<S>::pivot_tol();
    long max_iterations = 0; // 0 = derive from problem size
};

template <class S>
class DenseSimplex {
public:
    DenseSimplex() = default;
    explicit DenseSimplex(SimplexOptions<S> opts) : opts_(std::move(opts)) {}

    LpSolution<S> solve(const LinearProgram<S>& lp) const {
        validate(lp);
        Work w;
        canonicalize(lp, w);
        LpSolution<S> out;

        if (!run_phase1(w, out)) return out;   // infeasible or breakdown
        if (!run_phase2(w, out)) {             // unbounded or breakdown
            if (out.status == LpStatus::unbounded) extract_ray(lp, w, out);
            return out;
        }
        extract_solution(lp, w, out);
        out.status = LpStatus::optimal;
        return out;
    }

private:
    using Ops = ScalarOps<S>;

    SimplexOptions<S> opts_;

    enum class VarKind { shifted, mirrored, split };
    struct VarMap {
        VarKind kind;
        std::size_t col;  // first canonical column
        S offset;         // lower bound (shifted) or upper bound (mirrored)
    };

    // Canonical system: min c.x, A x (sense) b, x >= 0, with slack/artificial
    // columns appended. Everything below refers to this system.
    struct Work {
        std::size_t n_struct = 0, n_slack = 0, n_art = 0, n_cols = 0;
        std::size_t m = 0;              // canonical rows (original + upper-bound rows)
        std::size_t m_orig = 0;
        std::vector<VarMap> vmap;
        std::vector<std::vector<S>> a;  // m x n_cols, canonical matrix (kept pristine)
        std::vector<S> b;               // >= 0 after flips
        std::vector<S> c;               // canonical objective
        std::vector<RowSense> sense;
        std::vector<S> row_scale;       // original row i was divided by row_scale[i]
        std::vector<int> row_flip;      // +1/-1: row was negated to make b >= 0
        std::vector<std::size_t> price_col; // slack or artificial column of row i
        std::vector<bool> is_art;

        std::vector<std::vector<S>> t;  // tableau: m rows x (n_cols + 1)
        std::vector<S> cost1, cost2;    // phase cost rows, length n_cols + 1
        std::vector<std::size_t> basis; // basis[i] = column basic in row i
        long iterations = 0;
        std::size_t entering_col = 0;   // set when unbounded
    };

    void validate(const LinearProgram<S>& lp) const {
        const std::size_t n = lp.num_vars();
        if (n == 0) throw InputError("lp has no variables");
        if (lp.rows.size() != lp.senses.size() || lp.rows.size() != lp.rhs.size())
            throw InputError("lp row arrays are inconsistent");
        if (lp.lower.size() != n || lp.upper.size() != n)
            throw InputError("lp bound arrays do not match variable count");
        for (const S& v : lp.objective)
            if (!Ops::finite(v)) throw InputError("lp objective has a non-finite entry");
        for (const auto& row : lp.rows) {
            if (row.size() != n) throw InputError("lp row width does not match variable count");
            for (const S& v : row)
                if (!Ops::finite(v)) throw InputError("lp matrix has a non-finite entry");
        }
        for (const S& v : lp.rhs)
            if (!Ops::finite(v)) throw InputError("lp rhs has a non-finite entry");
        for (std::size_t j = 0; j < n; ++j) {
            if (lp.lower[j] && !Ops::finite(*lp.lower[j])) throw InputError("non-finite lower bound");
            if (lp.upper[j] && !Ops::finite(*lp.upper[j])) throw InputError("non-finite upper bound");
            if (lp.lower[j] && lp.upper[j] && *lp.upper[j] < *lp.lower[j])
                throw InputError("variable bounds are crossed");
        }
    }

    void canonicalize(const LinearProgram<S>& lp, Work& w) const {
        const std::size_t n = lp.num_vars();
        w.m_orig = lp.num_rows();

        // Variable substitutions to reach x >= 0.
        w.vmap.resize(n);
        struct UpperRow { std::size_t col; S rhs; };
        std::vector<UpperRow> upper_rows;
        std::size_t col = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const auto& lo = lp.lower[j];
            const auto& up = lp.upper[j];
            if (lo) {
                w.vmap[j] = {VarKind::shifted, col, *lo};
                if (up) upper_rows.push_back({col, S(*up - *lo)});
                ++col;
            } else if (up) {
                w.vmap[j] = {VarKind::mirrored, col, *up};
                ++col;
            } else {
                w.vmap[j] = {VarKind::split, col, S(0)};
                col += 2;
            }
        }
        w.n_struct = col;
        w.m = w.m_orig + upper_rows.size();

        w.a.assign(w.m, std::vector<S>(w.n_struct, S(0)));
        w.b.assign(w.m, S(0));
        w.sense.resize(w.m);
        w.c.assign(w.n_struct, S(0));

        auto place = [&](std::vector<S>& dst, S& shift, std::size_t j, const S& coef) {
            const VarMap& vm = w.vmap[j];
            switch (vm.kind) {
                case VarKind::shifted:
                    dst[vm.col] += coef;
                    shift += coef * vm.offset;
                    break;
                case VarKind::mirrored:
                    dst[vm.col] -= coef;
                    shift += coef * vm.offset;
                    break;
                case VarKind::split:
                    dst[vm.col] += coef;
                    dst[vm.col + 1] -= coef;
                    break;
            }
        };

        for (std::size_t i = 0; i < w.m_orig; ++i) {
            S shift(0);
            for (std::size_t j = 0; j < n; ++j) {
                const S& coef = lp.rows[i][j];
                if (coef == S(0)) continue;
                place(w.a[i], shift, j, coef);
            }
            w.b[i] = lp.rhs[i] - shift;
            w.sense[i] = lp.senses[i];
        }
        for (std::size_t k = 0; k < upper_rows.size(); ++k) {
            const std::size_t i = w.m_orig + k;
            w.a[i][upper_rows[k].col] = S(1);
            w.b[i] = upper_rows[k].rhs;
            w.sense[i] = RowSense::le;
        }
        {
            S shift(0); // objective constant drops out of the argmin
            for (std::size_t j = 0; j < n; ++j)
                if (lp.objective[j] != S(0)) place(w.c, shift, j, lp.objective[j]);
        }

        // Row equilibration (skipped in exact mode) and b >= 0 normalization.
        w.row_scale.assign(w.m, S(1));
        w.row_flip.assign(w.m, 1);
        for (std::size_t i = 0; i < w.m; ++i) {
            if (!Ops::exact) {
                S mx(1);
                for (const S& v : w.a[i]) mx = std::max(mx, Ops::abs(v));
                mx = std::max(mx, Ops::abs(w.b[i]));
                if (mx > S(1)) {
                    for (S& v : w.a[i]) v = v / mx;
                    w.b[i] = w.b[i] / mx;
                    w.row_scale[i] = mx;
                }
            }
            if (w.b[i] < S(0)) {
                for (S& v : w.a[i]) v = -v;
                w.b[i] = -w.b[i];
                w.row_flip[i] = -1;
                w.sense[i] = w.sense[i] == RowSense::le   ? RowSense::ge
                             : w.sense[i] == RowSense::ge ? RowSense::le
                                                          : RowSense::eq;
            }
        }

        // Slack, surplus and artificial columns.
        w.n_slack = 0;
        w.n_art = 0;
        for (std::size_t i = 0; i < w.m; ++i) {
            if (w.sense[i] != RowSense::eq) ++w.n_slack;
            if (w.sense[i] != RowSense::le) ++w.n_art;
        }
        w.n_cols = w.n_struct + w.n_slack + w.n_art;
        w.is_art.assign(w.n_cols, false);
        w.price_col.assign(w.m, 0);
        for (auto& row : w.a) row.resize(w.n_cols, S(0));
        w.c.resize(w.n_cols, S(0));

        std::size_t slack = w.n_struct;
        std::size_t art = w.n_struct + w.n_slack;
        w.basis.assign(w.m, 0);
        for (std::size_t i = 0; i < w.m; ++i) {
            switch (w.sense[i]) {
                case RowSense::le:
                    w.a[i][slack] = S(1);
                    w.basis[i] = slack;
                    w.price_col[i] = slack;
                    ++slack;
                    break;
                case RowSense::ge:
                    w.a[i][slack] = S(-1);
                    ++slack;
                    w.a[i][art] = S(1);
                    w.is_art[art] = true;
                    w.basis[i] = art;
                    w.price_col[i] = art;
                    ++art;
                    break;
                case RowSense::eq:
                    w.a[i][art] = S(1);
                    w.is_art[art] = true;
                    w.basis[i] = art;
                    w.price_col[i] = art;
                    ++art;
                    break;
            }
        }

        // Tableau copies; w.a stays pristine for certificate recomputation.
        w.t.assign(w.m, std::vector<S>(w.n_cols + 1, S(0)));
        for (std::size_t i = 0; i < w.m; ++i) {
            std::copy(w.a[i].begin(), w.a[i].end(), w.t[i].begin());
            w.t[i][w.n_cols] = w.b[i];
        }
    }

    void pivot(Work& w, std::size_t r, std::size_t s) const {
        std::vector<S>& prow = w.t[r];
        const S inv_seed = prow[s];
        for (std::size_t j = 0; j <= w.n_cols; ++j)
            if (j != s) prow[j] = prow[j] / inv_seed;
        prow[s] = S(1);
        auto eliminate = [&](std::vector<S>& row) {
            const S f = row[s];
            if (f == S(0)) return;
            for (std::size_t j = 0; j <= w.n_cols; ++j)
                if (j != s) row[j] -= f * prow[j];
            row[s] = S(0);
        };
        for (std::size_t i = 0; i < w.m; ++i)
            if (i != r) eliminate(w.t[i]);
        eliminate(w.cost1);
        eliminate(w.cost2);
        w.basis[r] = s;
    }

    // Dantzig entering rule until a stall, then Bland. Returns n_cols when no
    // entering column exists (phase optimum reached).
    std::size_t choose_entering(const Work& w, const std::vector<S>& cost,
                                const std::vector<bool>& allowed, bool bland) const {
        std::size_t best = w.n_cols;
        S best_val(0);
        for (std::size_t j = 0; j < w.n_cols; ++j) {
            if (!allowed[j]) continue;
            const S& cj = cost[j];
            if (!(cj < -opts_.opt_tol)) continue;
            if (bland) return j;
            if (best == w.n_cols || cj < best_val) {
                best = j;
                best_val = cj;
            }
        }
        return best;
    }

    // Min-ratio row; ties broken toward the smallest basic index. Returns m if
    // the column is unbounded.
    std::size_t choose_leaving(const Work& w, std::size_t s) const {
        std::size_t best = w.m;
        S best_ratio(0);
        for (std::size_t i = 0; i < w.m; ++i) {
            const S& coef = w.t[i][s];
            if (!(coef > opts_.pivot_tol)) continue;
            S num = w.t[i][w.n_cols];
            if (num < S(0)) num = S(0);
            const S ratio = num / coef;
            if (best == w.m || ratio < best_ratio ||
                (ratio == best_ratio && w.basis[i] < w.basis[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    // Core loop for one phase; cost is w.cost1 or w.cost2.
    // Returns status: optimal (phase done), unbounded, breakdown.
    LpStatus iterate(Work& w, std::vector<S>& cost, const std::vector<bool>& allowed) const {
        const long stall_limit = 2 * static_cast<long>(w.m + w.n_cols);
        long cap = opts_.max_iterations;
        if (cap <= 0) cap = 200 * static_cast<long>(w.m + w.n_cols) + 5000;

        bool bland = false;
        long stall = 0;
        S prev_obj = cost[w.n_cols];
        while (true) {
            const std::size_t s = choose_entering(w, cost, allowed, bland);
            if (s == w.n_cols) return LpStatus::optimal;
            const std::size_t r = choose_leaving(w, s);
            if (r == w.m) {
                w.entering_col = s;
                return LpStatus::unbounded;
            }
            pivot(w, r, s);
            ++w.iterations;
            if (w.iterations > cap) return LpStatus::breakdown;

            const S cur = cost[w.n_cols];
            bool improved;
            if (Ops::exact) {
                improved = cur > prev_obj; // cost rhs = -objective, which decreases
            } else {
                improved = cur - prev_obj > S(1e-12) * (S(1) + Ops::abs(prev_obj));
            }
            if (improved) {
                stall = 0;
                prev_obj = cur;
            } else if (!bland && ++stall > stall_limit) {
                bland = true;
            }
        }
    }

    bool run_phase1(Work& w, LpSolution<S>& out) const {
        w.cost1.assign(w.n_cols + 1, S(0));
        w.cost2.assign(w.n_cols + 1, S(0));
        if (w.n_art == 0) return true;

        // Phase-1 cost: sum of artificials, reduced against the initial basis.
        for (std::size_t j = 0; j < w.n_cols; ++j)
            if (w.is_art[j]) w.cost1[j] = S(1);
        for (std::size_t i = 0; i < w.m; ++i) {
            if (!w.is_art[w.basis[i]]) continue;
            for (std::size_t j = 0; j <= w.n_cols; ++j) w.cost1[j] -= w.t[i][j];
        }

        std::vector<bool> allowed(w.n_cols, true);
        const LpStatus st = iterate(w, w.cost1, allowed);
        if (st == LpStatus::breakdown || st == LpStatus::unbounded) {
            // Phase 1 is bounded below by zero; a missing ratio is numeric trouble.
            out.status = LpStatus::breakdown;
            out.iterations = w.iterations;
            return false;
        }
        S infeas = -w.cost1[w.n_cols];
        if (infeas < S(0)) infeas = S(0);
        S gate = opts_.feas_tol;
        for (std::size_t i = 0; i < w.m; ++i) gate += opts_.feas_tol * Ops::abs(w.b[i]);
        if (infeas > gate) {
            out.status = LpStatus::infeasible;
            out.iterations = w.iterations;
            out.cert.primal_infeasibility = infeas;
            return false;
        }

        // Drive residual artificials out of the basis where the row has any
        // usable entry; rows without one are redundant and stay inert.
        for (std::size_t i = 0; i < w.m; ++i) {
            if (!w.is_art[w.basis[i]]) continue;
            for (std::size_t j = 0; j < w.n_cols; ++j) {
                if (w.is_art[j]) continue;
                if (Ops::abs(w.t[i][j]) > opts_.pivot_tol) {
                    pivot(w, i, j);
                    ++w.iterations;
                    break;
                }
            }
        }
        return true;
    }

    bool run_phase2(Work& w, LpSolution<S>& out) const {
        w.cost2.assign(w.n_cols + 1, S(0));
        for (std::size_t j = 0; j < w.n_cols; ++j) w.cost2[j] = w.c[j];
        for (std::size_t i = 0; i < w.m; ++i) {
            const S cb = w.c[w.basis[i]];
            if (cb == S(0)) continue;
            for (std::size_t j = 0; j <= w.n_cols; ++j) w.cost2[j] -= cb * w.t[i][j];
        }
        std::vector<bool> allowed(w.n_cols, true);
        for (std::size_t j = 0; j < w.n_cols; ++j)
            if (w.is_art[j]) allowed[j] = false;

        const LpStatus st = iterate(w, w.cost2, allowed);
        out.iterations = w.iterations;
        if (st != LpStatus::optimal) {
            out.status = st;
            return false;
        }
        return true;
    }

    std::vector<S> canonical_primal(const Work& w) const {
        std::vector<S> x(w.n_cols, S(0));
        for (std::size_t i = 0; i < w.m; ++i) {
            S v = w.t[i][w.n_cols];
            if (v < S(0)) v = S(0);
            x[w.basis[i]] = v;
        }
        return x;
    }

    std::vector<S> map_to_original(const LinearProgram<S>& lp, const Work& w,
                                   const std::vector<S>& x, bool homogeneous) const {
        std::vector<S> z(lp.num_vars(), S(0));
        for (std::size_t j = 0; j < z.size(); ++j) {
            const VarMap& vm = w.vmap[j];
            switch (vm.kind) {
                case VarKind::shifted:
                    z[j] = homogeneous ? x[vm.col] : S(x[vm.col] + vm.offset);
                    break;
                case VarKind::mirrored:
                    z[j] = homogeneous ? S(-x[vm.col]) : S(vm.offset - x[vm.col]);
                    break;
                case VarKind::split:
                    z[j] = x[vm.col] - x[vm.col + 1];
                    break;
            }
        }
        return z;
    }

    void extract_ray(const LinearProgram<S>& lp, const Work& w, LpSolution<S>& out) const {
        std::vector<S> d(w.n_cols, S(0));
        d[w.entering_col] = S(1);
        for (std::size_t i = 0; i < w.m; ++i) d[w.basis[i]] = -w.t[i][w.entering_col];
        out.ray = map_to_original(lp, w, d, /*homogeneous=*/true);
        out.z = map_to_original(lp, w, canonical_primal(w), false);
        out.iterations = w.iterations;
    }

    void extract_solution(const LinearProgram<S>& lp, const Work& w, LpSolution<S>& out) const {
        const std::vector<S> x = canonical_primal(w);
        out.z = map_to_original(lp, w, x, false);
        out.iterations = w.iterations;

        S obj(0);
        for (std::size_t j = 0; j < lp.num_vars(); ++j) obj += lp.objective[j] * out.z[j];
        out.objective = obj;

        // Row multipliers from the price columns (slack for <=, artificial
        // otherwise): redcost = -y. Undo scaling/flips for the public vector.
        std::vector<S> y(w.m, S(0));
        for (std::size_t i = 0; i < w.m; ++i) y[i] = -w.cost2[w.price_col[i]];
        out.dual.assign(w.m_orig, S(0));
        for (std::size_t i = 0; i < w.m_orig; ++i) {
            S v = y[i] / w.row_scale[i];
            if (w.row_flip[i] < 0) v = -v;
            out.dual[i] = v;
        }

        // Certificate, recomputed from the pristine canonical data.
        auto& cert = out.cert;
        S canon_obj(0);
        for (std::size_t j = 0; j < w.n_cols; ++j) canon_obj += w.c[j] * x[j];
        S dual_obj(0);
        for (std::size_t i = 0; i < w.m; ++i) dual_obj += y[i] * w.b[i];

        for (std::size_t i = 0; i < w.m; ++i) {
            S lhs(0);
            for (std::size_t j = 0; j < w.n_cols; ++j)
                if (w.a[i][j] != S(0)) lhs += w.a[i][j] * x[j];
            S viol(0);
            const S diff = lhs - w.b[i];
            switch (w.sense[i]) {
                case RowSense::le: viol = diff; break;
                case RowSense::ge: viol = -diff; break;
                case RowSense::eq: viol = Ops::abs(diff); break;
            }
            if (viol > cert.primal_infeasibility) cert.primal_infeasibility = viol;
            S slack = Ops::abs(diff);
            const S cs = Ops::abs(y[i]) * slack;
            if (w.sense[i] != RowSense::eq && cs > cert.complementary_slackness)
                cert.complementary_slackness = cs;
        }
        for (std::size_t j = 0; j < w.n_cols; ++j) {
            if (w.is_art[j]) continue;
            S red = w.c[j];
            for (std::size_t i = 0; i < w.m; ++i)
                if (w.a[i][j] != S(0)) red -= y[i] * w.a[i][j];
            if (-red > cert.dual_infeasibility) cert.dual_infeasibility = -red;
            const S cs = Ops::abs(x[j]) * Ops::abs(red);
            if (cs > cert.complementary_slackness) cert.complementary_slackness = cs;
        }
        const S denom = S(1) + Ops::abs(canon_obj);
        cert.duality_gap = Ops::abs(canon_obj - dual_obj) / denom;
        cert.complementary_slackness = cert.complementary_slackness / denom;
    }
};

template <class S>
LpSolution<S> solve_lp(const LinearProgram<S>& lp, SimplexOptions<S> opts = {}) {
    return DenseSimplex<S>(std::move(opts)).solve(lp);
}

using LinearProgramD = LinearProgram<double>;
using LpSolutionD = LpSolution<double>;
using LinearProgramQ = LinearProgram<Rational>;
using LpSolutionQ = LpSolution<Rational>;

// Exact optimum in rational arithmetic; arbitrates tolerance disputes.
inline LpSolutionQ solve_exact(const LinearProgramQ& lp) { return solve_lp<Rational>(lp); }

} // namespace paretoagg
