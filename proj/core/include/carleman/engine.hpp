#pragma once

#include <vector>

#include "carleman/term.hpp"
#include "carleman/weight_model.hpp"

namespace carleman {

// A row is terminal when it is zero, already a divergence, or its derivative
// orders balance (bt + bx == cx, the energy/cross shapes).
bool is_terminal(const Term& term);

// Well-founded measure driving reduce: 2*|cx - bx - bt| + [bx != cx]. Every
// non-terminal child of rewrite_step has a strictly smaller measure.
int gap_measure(const Term& term);

// Applies exactly one integration-by-parts rule to a non-terminal row and
// returns its replacement rows (canonicalized, unmerged). Throws
// ContractError on terminal input. The identity "input = sum of outputs
// after removing flags by differentiation" holds exactly.
TermList rewrite_step(const Term& term, const WeightModel& model);

// Per-loop snapshots of the worklist, for reproducing printed traces.
struct ReduceTrace {
    std::vector<TermList> loops;
};

// Breadth-first fixpoint of rewrite_step. Output rows are all terminal,
// zero rows dropped, sorted by term_order but *not* merged: like rows from
// different parents stay separate, matching the printed matrices. Callers
// wanting collected coefficients apply merge().
TermList reduce(const TermList& input, const WeightModel& model, ReduceTrace* trace = nullptr);

}  // namespace carleman
