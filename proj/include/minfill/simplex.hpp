#pragma once

#include "minfill/rational.hpp"

#include <utility>
#include <vector>

namespace minfill {
namespace simplex {

enum class Relation { LessEq, GreaterEq, Equal };

struct LinearConstraint {
    std::vector<Rat> coeffs;
    Relation rel = Relation::Equal;
    Rat rhs;
};

/// minimize objective . x subject to the constraints; variables with
/// nonneg[v] == false are sign-free.
struct GeneralLP {
    std::vector<Rat> objective;
    std::vector<bool> nonneg;
    std::vector<LinearConstraint> constraints;

    int num_vars() const { return static_cast<int>(objective.size()); }
};

/// Canonical form: minimize c . x subject to A x = b, x >= 0.
struct StandardLP {
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    std::vector<Rat> c;

    int rows() const { return static_cast<int>(b.size()); }
    int cols() const { return static_cast<int>(c.size()); }
};

/// Tracks how general variables map into standard-form columns: sign-free
/// variables are split into adjacent (plus, minus) columns, then one
/// slack/surplus column is appended per inequality in constraint order.
struct VariableMap {
    int original_count = 0;
    std::vector<int> plus_col;
    std::vector<int> minus_col;  // -1 when the variable was not split

    std::vector<Rat> recover(const std::vector<Rat>& x) const;
};

std::pair<StandardLP, VariableMap> to_standard_form(const GeneralLP& lp);

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct SolveResult {
    SolveStatus status = SolveStatus::Optimal;
    Rat value;
    std::vector<Rat> x;
};

/// Two-phase tableau simplex in exact rational arithmetic, Bland's rule
/// throughout (guaranteed termination, no tolerances). Optimal solutions
/// are basic feasible and verified against A x = b, x >= 0 before return.
SolveResult solve(const StandardLP& lp);

/// Exact post-hoc feasibility check; throws std::logic_error on violation.
void verify_solution(const StandardLP& lp, const std::vector<Rat>& x);

}  // namespace simplex
}  // namespace minfill
