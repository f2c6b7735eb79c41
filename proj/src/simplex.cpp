#include "minfill/simplex.hpp"

#include <stdexcept>

namespace minfill {
namespace simplex {

std::vector<Rat> VariableMap::recover(const std::vector<Rat>& x) const {
    std::vector<Rat> out(static_cast<std::size_t>(original_count));
    for (int v = 0; v < original_count; ++v) {
        out[static_cast<std::size_t>(v)] = x[static_cast<std::size_t>(plus_col[static_cast<std::size_t>(v)])];
        if (minus_col[static_cast<std::size_t>(v)] >= 0)
            out[static_cast<std::size_t>(v)] -=
                x[static_cast<std::size_t>(minus_col[static_cast<std::size_t>(v)])];
    }
    return out;
}

std::pair<StandardLP, VariableMap> to_standard_form(const GeneralLP& lp) {
    const int nv = lp.num_vars();
    if (lp.nonneg.size() != static_cast<std::size_t>(nv))
        throw std::invalid_argument("nonneg flags must match the variable count");
    for (const auto& con : lp.constraints)
        if (con.coeffs.size() != static_cast<std::size_t>(nv))
            throw std::invalid_argument("constraint dimension mismatch");

    VariableMap map;
    map.original_count = nv;
    map.plus_col.resize(static_cast<std::size_t>(nv));
    map.minus_col.assign(static_cast<std::size_t>(nv), -1);
    int col = 0;
    for (int v = 0; v < nv; ++v) {
        map.plus_col[static_cast<std::size_t>(v)] = col++;
        if (!lp.nonneg[static_cast<std::size_t>(v)]) map.minus_col[static_cast<std::size_t>(v)] = col++;
    }
    int slack_cols = 0;
    for (const auto& con : lp.constraints)
        if (con.rel != Relation::Equal) ++slack_cols;

    StandardLP std_lp;
    const int m = static_cast<int>(lp.constraints.size());
    const int n = col + slack_cols;
    std_lp.A.assign(static_cast<std::size_t>(m), std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
    std_lp.b.resize(static_cast<std::size_t>(m));
    std_lp.c.assign(static_cast<std::size_t>(n), Rat(0));

    for (int v = 0; v < nv; ++v) {
        std_lp.c[static_cast<std::size_t>(map.plus_col[static_cast<std::size_t>(v)])] =
            lp.objective[static_cast<std::size_t>(v)];
        if (map.minus_col[static_cast<std::size_t>(v)] >= 0)
            std_lp.c[static_cast<std::size_t>(map.minus_col[static_cast<std::size_t>(v)])] =
                -lp.objective[static_cast<std::size_t>(v)];
    }
    int next_slack = col;
    for (int r = 0; r < m; ++r) {
        const auto& con = lp.constraints[static_cast<std::size_t>(r)];
        auto& row = std_lp.A[static_cast<std::size_t>(r)];
        for (int v = 0; v < nv; ++v) {
            row[static_cast<std::size_t>(map.plus_col[static_cast<std::size_t>(v)])] =
                con.coeffs[static_cast<std::size_t>(v)];
            if (map.minus_col[static_cast<std::size_t>(v)] >= 0)
                row[static_cast<std::size_t>(map.minus_col[static_cast<std::size_t>(v)])] =
                    -con.coeffs[static_cast<std::size_t>(v)];
        }
        if (con.rel == Relation::LessEq)
            row[static_cast<std::size_t>(next_slack++)] = 1;
        else if (con.rel == Relation::GreaterEq)
            row[static_cast<std::size_t>(next_slack++)] = -1;
        std_lp.b[static_cast<std::size_t>(r)] = con.rhs;
    }
    return {std::move(std_lp), std::move(map)};
}

namespace {

// Tableau state: rows() x (num_cols + 1), last column is the basic solution;
// `objective` is the reduced-cost row with the negated objective value in
// its last slot.
struct Tableau {
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> objective;
    std::vector<int> basis;
    int num_cols = 0;

    Rat& at(int r, int c) { return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Rat& at(int r, int c) const {
        return rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    int num_rows() const { return static_cast<int>(rows.size()); }

    void pivot(int pr, int pc) {
        Rat p = at(pr, pc);
        for (int c = 0; c <= num_cols; ++c) at(pr, c) /= p;
        for (int r = 0; r < num_rows(); ++r) {
            if (r == pr || at(r, pc) == 0) continue;
            Rat factor = at(r, pc);
            for (int c = 0; c <= num_cols; ++c) at(r, c) -= factor * at(pr, c);
        }
        if (objective[static_cast<std::size_t>(pc)] != 0) {
            Rat factor = objective[static_cast<std::size_t>(pc)];
            for (int c = 0; c <= num_cols; ++c)
                objective[static_cast<std::size_t>(c)] -= factor * at(pr, c);
        }
        basis[static_cast<std::size_t>(pr)] = pc;
    }

    // Reduced costs for cost vector c (zero beyond its length).
    void load_objective(const std::vector<Rat>& c) {
        objective.assign(static_cast<std::size_t>(num_cols) + 1, Rat(0));
        for (std::size_t j = 0; j < c.size(); ++j) objective[j] = c[j];
        for (int r = 0; r < num_rows(); ++r) {
            int bv = basis[static_cast<std::size_t>(r)];
            Rat cb = bv < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(bv)] : Rat(0);
            if (cb == 0) continue;
            for (int c2 = 0; c2 <= num_cols; ++c2)
                objective[static_cast<std::size_t>(c2)] -= cb * at(r, c2);
        }
    }

    // Bland's rule: smallest eligible entering column, then the min-ratio
    // row breaking ties by smallest basic variable. Returns false when the
    // current basis is optimal; throws Unbounded via the out-flag.
    bool bland_step(int allowed_cols, bool& unbounded) {
        int entering = -1;
        for (int j = 0; j < allowed_cols; ++j)
            if (objective[static_cast<std::size_t>(j)] < 0) {
                entering = j;
                break;
            }
        if (entering < 0) return false;

        int leaving = -1;
        Rat best_ratio;
        for (int r = 0; r < num_rows(); ++r) {
            if (at(r, entering) <= 0) continue;
            Rat ratio = at(r, num_cols) / at(r, entering);
            if (leaving < 0 || ratio < best_ratio ||
                (ratio == best_ratio &&
                 basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(leaving)])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving < 0) {
            unbounded = true;
            return false;
        }
        pivot(leaving, entering);
        return true;
    }
};

}  // namespace

SolveResult solve(const StandardLP& lp) {
    const int m = lp.rows();
    const int n = lp.cols();
    for (const auto& row : lp.A)
        if (row.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument("A row length does not match c");

    Tableau t;
    t.num_cols = n + m;  // artificial column n+r for row r
    t.rows.assign(static_cast<std::size_t>(m),
                  std::vector<Rat>(static_cast<std::size_t>(t.num_cols) + 1, Rat(0)));
    t.basis.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        bool flip = lp.b[static_cast<std::size_t>(r)] < 0;
        for (int c = 0; c < n; ++c)
            t.at(r, c) = flip ? -lp.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]
                              : lp.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        t.at(r, t.num_cols) =
            flip ? -lp.b[static_cast<std::size_t>(r)] : lp.b[static_cast<std::size_t>(r)];
        t.at(r, n + r) = 1;
        t.basis[static_cast<std::size_t>(r)] = n + r;
    }

    // Phase I: minimize the sum of artificials.
    {
        std::vector<Rat> phase1(static_cast<std::size_t>(t.num_cols), Rat(0));
        for (int r = 0; r < m; ++r) phase1[static_cast<std::size_t>(n + r)] = 1;
        t.load_objective(phase1);
        bool unbounded = false;
        while (t.bland_step(n, unbounded)) {
        }
        if (unbounded) throw std::logic_error("phase I cannot be unbounded");
        // Artificials never re-enter: with all original columns priced >= 0,
        // a positive phase-I value certifies infeasibility.
        Rat infeasibility = -t.objective[static_cast<std::size_t>(t.num_cols)];
        if (infeasibility != 0) return {SolveStatus::Infeasible, Rat(0), {}};
    }

    // Drive remaining zero-level artificials out of the basis.
    for (int r = t.num_rows() - 1; r >= 0; --r) {
        if (t.basis[static_cast<std::size_t>(r)] < n) continue;
        int pc = -1;
        for (int j = 0; j < n; ++j)
            if (t.at(r, j) != 0) {
                pc = j;
                break;
            }
        if (pc >= 0) {
            t.pivot(r, pc);
        } else {
            // Redundant constraint: the row is zero over the original columns.
            t.rows.erase(t.rows.begin() + r);
            t.basis.erase(t.basis.begin() + r);
        }
    }

    // Phase II on the original columns.
    t.load_objective(lp.c);
    bool unbounded = false;
    while (t.bland_step(n, unbounded)) {
    }
    if (unbounded) return {SolveStatus::Unbounded, Rat(0), {}};

    SolveResult result;
    result.status = SolveStatus::Optimal;
    result.x.assign(static_cast<std::size_t>(n), Rat(0));
    for (int r = 0; r < t.num_rows(); ++r)
        if (t.basis[static_cast<std::size_t>(r)] < n)
            result.x[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])] =
                t.at(r, t.num_cols);
    result.value = 0;
    for (int j = 0; j < n; ++j)
        result.value += lp.c[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
    verify_solution(lp, result.x);
    return result;
}

void verify_solution(const StandardLP& lp, const std::vector<Rat>& x) {
    if (x.size() != static_cast<std::size_t>(lp.cols()))
        throw std::logic_error("solution dimension mismatch");
    for (const Rat& xi : x)
        if (xi < 0) throw std::logic_error("simplex returned a negative component");
    for (int r = 0; r < lp.rows(); ++r) {
        Rat lhs = 0;
        for (int c = 0; c < lp.cols(); ++c)
            lhs += lp.A[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] *
                   x[static_cast<std::size_t>(c)];
        if (lhs != lp.b[static_cast<std::size_t>(r)])
            throw std::logic_error("simplex returned an infeasible point (row " +
                                   std::to_string(r) + ")");
    }
}

}  // namespace simplex
}  // namespace minfill
