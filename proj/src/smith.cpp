#include "shape/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include <omp.h>

namespace shape {

namespace {

// Below this many entries the OpenMP regions are skipped.
constexpr std::size_t kParallelThreshold = 4096;

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct Pivot {
    std::size_t row = 0;
    std::size_t col = 0;
    bool found = false;
};

// Least nonzero absolute value in the trailing block starting at (t, t).
Pivot smallest_entry(const IntegerMatrix& a, std::size_t t) {
    Pivot best;
    const Integer* best_val = nullptr;
    for (std::size_t r = t; r < a.rows(); ++r) {
        for (std::size_t c = t; c < a.cols(); ++c) {
            const Integer& x = a(r, c);
            if (x == 0) continue;
            if (!best_val || cmpabs(x, *best_val) < 0) {
                best_val = &x;
                best = {r, c, true};
                if (mpz_cmpabs_ui(x.get_mpz_t(), 1) == 0) return best;
            }
        }
    }
    return best;
}

// Index of the least nonzero |a(i, t)|, i > t, in column t; rows() if none.
std::size_t smallest_in_column(const IntegerMatrix& a, std::size_t t) {
    std::size_t best = a.rows();
    for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        if (best == a.rows() || cmpabs(a(r, t), a(best, t)) < 0) best = r;
    }
    return best;
}

std::size_t smallest_in_row(const IntegerMatrix& a, std::size_t t) {
    std::size_t best = a.cols();
    for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        if (best == a.cols() || cmpabs(a(t, c), a(t, best)) < 0) best = c;
    }
    return best;
}

void place_pivot(SmithDecomposition& s, std::size_t t, std::size_t r, std::size_t c) {
    s.D.swap_rows(t, r);
    s.U.swap_rows(t, r);
    s.D.swap_cols(t, c);
    s.V.swap_cols(t, c);
    s.V_inverse.swap_rows(t, c);
}

// Clears column t below the pivot: row_i -= q_i * row_t for every i > t.
void eliminate_column(SmithDecomposition& s, std::size_t t) {
    IntegerMatrix& a = s.D;
    IntegerMatrix& u = s.U;
    const std::size_t n = a.rows();
    const Integer pivot = a(t, t);
    const bool par = a.rows() * (a.cols() + u.cols()) >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic, 4) if (par)
    for (std::size_t i = t + 1; i < n; ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), pivot.get_mpz_t());
        if (q == 0) continue;
        for (std::size_t c = t; c < a.cols(); ++c)
            if (a(t, c) != 0) a(i, c) -= q * a(t, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            if (u(t, c) != 0) u(i, c) -= q * u(t, c);
    }
}

// Clears row t right of the pivot: col_j -= q_j * col_t for every j > t.
void eliminate_row(SmithDecomposition& s, std::size_t t) {
    IntegerMatrix& a = s.D;
    IntegerMatrix& v = s.V;
    IntegerMatrix& vinv = s.V_inverse;
    const std::size_t m = a.cols();
    const Integer pivot = a(t, t);

    std::vector<Integer> q(m);
    bool any = false;
    for (std::size_t j = t + 1; j < m; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q[j].get_mpz_t(), a(t, j).get_mpz_t(), pivot.get_mpz_t());
        any = any || q[j] != 0;
    }
    if (!any) return;

    const bool par = (a.rows() + v.rows()) * m >= kParallelThreshold;
    // Column updates touch every row independently.
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        for (std::size_t j = t + 1; j < m; ++j)
            if (q[j] != 0) a(r, j) -= q[j] * a(r, t);
    }
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t r = 0; r < v.rows(); ++r) {
        if (v(r, t) == 0) continue;
        for (std::size_t j = t + 1; j < m; ++j)
            if (q[j] != 0) v(r, j) -= q[j] * v(r, t);
    }
    // Inverse operations: row_t(V^-1) += q_j * row_j(V^-1).
#pragma omp parallel for schedule(static) if (par)
    for (std::size_t c = 0; c < vinv.cols(); ++c) {
        Integer acc = vinv(t, c);
        for (std::size_t j = t + 1; j < m; ++j)
            if (q[j] != 0 && vinv(j, c) != 0) acc += q[j] * vinv(j, c);
        vinv(t, c) = std::move(acc);
    }
}

// First (i, j) in the trailing block not divisible by the pivot; rows() if none.
std::size_t find_nondivisible_row(const IntegerMatrix& a, std::size_t t) {
    const Integer& p = a(t, t);
    for (std::size_t i = t + 1; i < a.rows(); ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
            if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), p.get_mpz_t())) return i;
    return a.rows();
}

SmithDecomposition start(const IntegerMatrix& m) {
    return {IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols()),
            IntegerMatrix::identity(m.cols())};
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    while (r < D.rows() && r < D.cols() && D(r, r) != 0) ++r;
    return r;
}

std::vector<Integer> SmithDecomposition::invariant_factors() const {
    std::vector<Integer> out;
    for (std::size_t i = 0; i < rank(); ++i) out.push_back(D(i, i));
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
    SmithDecomposition s = start(m);
    IntegerMatrix& a = s.D;
    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t) {
        Pivot p = smallest_entry(a, t);
        if (!p.found) break;
        place_pivot(s, t, p.row, p.col);
        for (;;) {
            eliminate_column(s, t);
            if (std::size_t r = smallest_in_column(a, t); r != a.rows()) {
                place_pivot(s, t, r, t);
                continue;
            }
            eliminate_row(s, t);
            if (std::size_t c = smallest_in_row(a, t); c != a.cols()) {
                place_pivot(s, t, t, c);
                continue;
            }
            if (std::size_t r = find_nondivisible_row(a, t); r != a.rows()) {
                a.add_row_multiple(t, r, 1);
                s.U.add_row_multiple(t, r, 1);
                continue;
            }
            break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

SmithDecomposition smith_normal_form_reference(const IntegerMatrix& m) {
    SmithDecomposition s = start(m);
    IntegerMatrix& a = s.D;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        Pivot p = smallest_entry(a, t);
        if (!p.found) break;
        place_pivot(s, t, p.row, p.col);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                Integer q = a(i, t) / a(t, t);
                a.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                Integer q = a(t, j) / a(t, t);
                a.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                s.V_inverse.add_row_multiple(t, j, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                Pivot q = smallest_entry(a, t);
                place_pivot(s, t, q.row, q.col);
                continue;
            }
            for (std::size_t i = t + 1; i < rows && clean; ++i) {
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        s.U.add_row_multiple(t, i, 1);
                        clean = false;
                        break;
                    }
                }
            }
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            s.U.negate_row(t);
        }
    }
    return s;
}

std::size_t rank(const IntegerMatrix& m) { return smith_normal_form(m).rank(); }

IntegerMatrix kernel_basis(const IntegerMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    const std::size_t r = s.rank();
    return s.V.select_cols(r, m.cols() - r);
}

std::optional<std::vector<Integer>> solve_integer(const IntegerMatrix& m, const std::vector<Integer>& b) {
    return IntegerSolver(m).solve(b);
}

IntegerSolver::IntegerSolver(const IntegerMatrix& m) : snf_(smith_normal_form(m)), rank_(snf_.rank()) {}

std::optional<std::vector<Integer>> IntegerSolver::solve(const std::vector<Integer>& b) const {
    if (b.size() != snf_.U.cols()) throw std::invalid_argument("IntegerSolver: right-hand side length mismatch");
    // D (V^-1 x) = U b
    std::vector<Integer> ub = snf_.U.apply(b);
    std::vector<Integer> y(snf_.V.rows());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < rank_) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), snf_.D(i, i).get_mpz_t())) return std::nullopt;
            mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), snf_.D(i, i).get_mpz_t());
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.V.apply(y);
}

}  // namespace shape
