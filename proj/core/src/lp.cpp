#include "hn/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace hn {

namespace {

// Full-tableau simplex over the rationals.  Columns [0, n) are structural,
// [n, n+m) artificial; row i of T holds the constraint coefficients plus the
// right-hand side in the last column.
class Simplex {
  public:
    Simplex(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b, size_t n)
        : m_(A.size()), n_(n), T_(A.size()), basis_(A.size()) {
        for (size_t i = 0; i < m_; ++i) {
            T_[i].assign(n_ + m_ + 1, Rat(0));
            bool neg = b[i] < 0;
            for (size_t j = 0; j < n_; ++j) T_[i][j] = neg ? -A[i][j] : A[i][j];
            T_[i][n_ + i] = 1;
            T_[i].back() = neg ? -b[i] : b[i];
            basis_[i] = n_ + i;
        }
    }

    // Bland's rule: entering = lowest eligible structural column, leaving =
    // lowest basic column among the ratio-test minima.  Returns false when
    // no entering column exists (optimum reached).  Artificial columns never
    // enter, so they stay out of the basis once purged.
    bool iterate(const std::vector<Rat>& cost, bool& unbounded) {
        unbounded = false;
        std::vector<Rat> y = reduced_costs(cost);
        size_t enter = n_;
        for (size_t j = 0; j < n_; ++j)
            if (y[j] < 0) {
                enter = j;
                break;
            }
        if (enter == n_) return false;
        size_t leave = m_;
        Rat best;
        for (size_t i = 0; i < m_; ++i) {
            if (T_[i][enter] <= 0) continue;
            Rat ratio = T_[i].back() / T_[i][enter];
            if (leave == m_ || ratio < best ||
                (ratio == best && basis_[i] < basis_[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m_) {
            unbounded = true;
            return false;
        }
        pivot(leave, enter);
        return true;
    }

    void pivot(size_t row, size_t col) {
        Rat inv = Rat(1) / T_[row][col];
        for (Rat& v : T_[row]) v *= inv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == row || T_[i][col] == 0) continue;
            Rat f = T_[i][col];
            for (size_t j = 0; j <= n_ + m_; ++j) T_[i][j] -= f * T_[row][j];
        }
        basis_[row] = col;
    }

    std::vector<Rat> reduced_costs(const std::vector<Rat>& cost) const {
        // y_j = c_j - sum_i c_basis(i) T[i][j], artificial columns priced at
        // their given cost as well (cost has n_ + m_ entries).
        std::vector<Rat> y(n_ + m_, Rat(0));
        for (size_t j = 0; j < y.size(); ++j) {
            Rat v = cost[j];
            for (size_t i = 0; i < m_; ++i)
                if (cost[basis_[i]] != 0) v -= cost[basis_[i]] * T_[i][j];
            y[j] = v;
        }
        return y;
    }

    Rat objective(const std::vector<Rat>& cost) const {
        Rat v(0);
        for (size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * T_[i].back();
        return v;
    }

    // Pivot artificial variables out of the basis; drop rows that are
    // linearly dependent (all structural coefficients zero).
    void purge_artificials() {
        for (size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            size_t col = n_;
            for (size_t j = 0; j < n_; ++j)
                if (T_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col < n_) {
                pivot(i, col);
            } else {
                T_.erase(T_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                --m_;
                --i;
            }
        }
    }

    std::vector<Rat> solution() const {
        std::vector<Rat> x(n_, Rat(0));
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = T_[i].back();
        return x;
    }

    size_t m_, n_;
    std::vector<std::vector<Rat>> T_;
    std::vector<size_t> basis_;
};

}  // namespace

LPResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c) {
    size_t m = A.size();
    size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("solve_lp: row count mismatch");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("solve_lp: column count mismatch");

    Simplex s(A, b, n);
    std::vector<Rat> phase1(n + m, Rat(0));
    for (size_t j = n; j < n + m; ++j) phase1[j] = 1;
    bool unbounded = false;
    while (s.iterate(phase1, unbounded)) {
    }
    if (s.objective(phase1) != 0) return {LPStatus::Infeasible, Rat(0), {}};
    s.purge_artificials();

    std::vector<Rat> phase2(n + m, Rat(0));
    for (size_t j = 0; j < n; ++j) phase2[j] = c[j];
    while (s.iterate(phase2, unbounded)) {
    }
    if (unbounded) return {LPStatus::Unbounded, Rat(0), {}};
    return {LPStatus::Optimal, s.objective(phase2), s.solution()};
}

std::optional<std::vector<Rat>> convex_weights(const std::vector<RatVec>& pts, const RatVec& p,
                                               const Rat& eps) {
    if (pts.empty()) return std::nullopt;
    size_t d = p.size();
    size_t k = pts.size();
    for (const RatVec& v : pts)
        if (v.size() != d) throw std::invalid_argument("convex_weights: dimension mismatch");
    if (eps < 0) throw std::invalid_argument("convex_weights: negative tolerance");

    // Variables: lambda (k), then per coordinate u_j, w_j >= 0 splitting the
    // deviation, and their cap slacks (u_j + uc_j = eps, w_j + wc_j = eps).
    bool slack = eps > 0;
    size_t n = k + (slack ? 4 * d : 0);
    size_t rows = 1 + d + (slack ? 2 * d : 0);
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(rows, Rat(0));
    for (size_t i = 0; i < k; ++i) A[0][i] = 1;
    b[0] = 1;
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < k; ++i) A[1 + j][i] = pts[i][j];
        if (slack) {
            A[1 + j][k + j] = 1;        // + u_j
            A[1 + j][k + d + j] = -1;   // - w_j
        }
        b[1 + j] = p[j];
    }
    if (slack)
        for (size_t j = 0; j < d; ++j) {
            A[1 + d + j][k + j] = 1;
            A[1 + d + j][k + 2 * d + j] = 1;
            b[1 + d + j] = eps;
            A[1 + 2 * d + j][k + d + j] = 1;
            A[1 + 2 * d + j][k + 3 * d + j] = 1;
            b[1 + 2 * d + j] = eps;
        }
    std::vector<Rat> c(n, Rat(0));
    LPResult r = solve_lp(A, b, c);
    if (r.status != LPStatus::Optimal) return std::nullopt;
    return std::vector<Rat>(r.x.begin(), r.x.begin() + static_cast<std::ptrdiff_t>(k));
}

bool in_convex_hull(const std::vector<RatVec>& pts, const RatVec& p) {
    return convex_weights(pts, p, Rat(0)).has_value();
}

bool in_relative_interior(const std::vector<RatVec>& pts, const RatVec& p) {
    if (pts.empty()) return false;
    size_t d = p.size();
    size_t k = pts.size();
    for (const RatVec& v : pts)
        if (v.size() != d) throw std::invalid_argument("in_relative_interior: dimension mismatch");

    // lambda_i = mu_i + t with mu >= 0, t >= 0; maximize t.  p is in the
    // relative interior iff the optimum is strictly positive.
    size_t n = k + 1;
    std::vector<std::vector<Rat>> A(1 + d, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> b(1 + d, Rat(0));
    for (size_t i = 0; i < k; ++i) A[0][i] = 1;
    A[0][k] = Rat(static_cast<long long>(k));
    b[0] = 1;
    for (size_t j = 0; j < d; ++j) {
        Rat colsum(0);
        for (size_t i = 0; i < k; ++i) {
            A[1 + j][i] = pts[i][j];
            colsum += pts[i][j];
        }
        A[1 + j][k] = colsum;
        b[1 + j] = p[j];
    }
    std::vector<Rat> c(n, Rat(0));
    c[k] = -1;
    LPResult r = solve_lp(A, b, c);
    return r.status == LPStatus::Optimal && r.objective < 0;
}

Rat dist_inf_to_segment(const RatVec& a, const RatVec& b, const RatVec& p) {
    size_t d = p.size();
    if (a.size() != d || b.size() != d)
        throw std::invalid_argument("dist_inf_to_segment: dimension mismatch");
    // f(s) = max_j |c_j + s e_j| is piecewise linear convex on [0,1]; the
    // minimum is at an endpoint or where two active pieces cross.
    std::vector<Rat> cs(d), es(d);
    for (size_t j = 0; j < d; ++j) {
        cs[j] = a[j] - p[j];
        es[j] = b[j] - a[j];
    }
    std::vector<Rat> cand{Rat(0), Rat(1)};
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            // c_i + s e_i = +-(c_j + s e_j)
            Rat de1 = es[i] - es[j];
            if (de1 != 0) cand.push_back((cs[j] - cs[i]) / de1);
            Rat de2 = es[i] + es[j];
            if (de2 != 0) cand.push_back((-cs[j] - cs[i]) / de2);
        }
    std::optional<Rat> best;
    for (const Rat& s : cand) {
        if (s < 0 || s > 1) continue;
        Rat val(0);
        for (size_t j = 0; j < d; ++j) val = std::max(val, rat_abs(cs[j] + s * es[j]));
        if (!best || val < *best) best = val;
    }
    return *best;
}

}  // namespace hn
