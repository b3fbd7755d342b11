#include "carleman/engine.hpp"

#include <cassert>
#include <cstdlib>

namespace carleman {

bool is_terminal(const Term& term) {
    if (term.coeff == 0) return true;
    if (term.flags.d_t == 1 || term.flags.d_x == 1) return true;
    return term.bilinear.first.t + term.bilinear.first.x == term.bilinear.second.x;
}

int gap_measure(const Term& term) {
    int bt = term.bilinear.first.t, bx = term.bilinear.first.x, cx = term.bilinear.second.x;
    return 2 * std::abs(cx - bx - bt) + (bx != cx ? 1 : 0);
}

namespace {

// Rows of -scale * d(W) * (payload bilinear), one per product-rule monomial.
void emit_weight_diff(TermList& out, const Term& base, Direction d, const Rational& scale_by,
                      const WeightModel& model) {
    for (const auto& mono : diff_factor_product(base.factors, base.scalars, d, model)) {
        Term t = base;
        t.coeff = scale_by * mono.coeff;
        t.scalars = mono.scalars;
        t.factors = mono.factors;
        out.push_back(canonicalize(std::move(t)));
    }
}

}  // namespace

TermList rewrite_step(const Term& input, const WeightModel& model) {
    Term term = canonicalize(input);
    if (term.schema != model.schema()) throw SchemaError("term schema does not match model");
    if (is_terminal(term)) throw ContractError("rewrite_step on a terminal term");

    const int bt = term.bilinear.first.t;
    const int bx = term.bilinear.first.x;
    const int cx = term.bilinear.second.x;
    TermList out;

    if (bx == cx) {
        // diagonal time rule: a W w_{t x^k} w_{x^k} = (a/2) (W w_{x^k}^2)_t - (a/2) W_t w_{x^k}^2
        assert(bt == 1);
        Term flagged = term;
        flagged.coeff = term.coeff / 2;
        flagged.bilinear.first.t = bt - 1;
        flagged.flags.d_t = 1;
        out.push_back(canonicalize(std::move(flagged)));
        Term payload = term;
        payload.bilinear.first.t = bt - 1;
        emit_weight_diff(out, payload, Direction::T, -term.coeff / 2, model);
        return out;
    }

    const bool reduce_second = bx < cx;  // else the first slot holds the higher x-order
    if (reduce_second && bt == 0 && cx == bx + 1) {
        // adjacent halving: a W w_{x^k} w_{x^{k+1}} = (a/2)(W w_{x^k}^2)_x - (a/2) W_x w_{x^k}^2
        Term flagged = term;
        flagged.coeff = term.coeff / 2;
        flagged.bilinear.second.x = cx - 1;
        flagged.flags.d_x = 1;
        out.push_back(canonicalize(std::move(flagged)));
        Term payload = term;
        payload.bilinear.second.x = cx - 1;
        emit_weight_diff(out, payload, Direction::X, -term.coeff / 2, model);
        return out;
    }
    if (!reduce_second && bt == 0 && bx == cx + 1) {
        // mirrored adjacent rule; only reachable on non-canonical input
        Term flagged = term;
        flagged.coeff = term.coeff / 2;
        flagged.bilinear.first.x = bx - 1;
        flagged.flags.d_x = 1;
        out.push_back(canonicalize(std::move(flagged)));
        Term payload = term;
        payload.bilinear.first.x = bx - 1;
        emit_weight_diff(out, payload, Direction::X, -term.coeff / 2, model);
        return out;
    }

    // general x-rule: peel one derivative off the higher slot
    Term flagged = term;
    Term moved = term;
    moved.coeff = -term.coeff;
    Term payload = term;
    if (reduce_second) {
        flagged.bilinear.second.x = cx - 1;
        moved.bilinear.first.x = bx + 1;
        moved.bilinear.second.x = cx - 1;
        payload.bilinear.second.x = cx - 1;
    } else {
        flagged.bilinear.first.x = bx - 1;
        moved.bilinear.first.x = bx - 1;
        moved.bilinear.second.x = cx + 1;
        payload.bilinear.first.x = bx - 1;
    }
    flagged.flags.d_x = 1;
    out.push_back(canonicalize(std::move(flagged)));
    out.push_back(canonicalize(std::move(moved)));
    emit_weight_diff(out, payload, Direction::X, -term.coeff, model);
    return out;
}

TermList reduce(const TermList& input, const WeightModel& model, ReduceTrace* trace) {
    TermList current;
    current.reserve(input.size());
    for (const auto& t : input) {
        Term c = canonicalize(t);
        if (c.coeff != 0) current.push_back(std::move(c));
    }
    sort_terms(current);

    bool any = true;
    while (any) {
        any = false;
        TermList next;
        next.reserve(current.size());
        for (const auto& t : current) {
            if (is_terminal(t)) {
                next.push_back(t);
                continue;
            }
            any = true;
            const int parent_gap = gap_measure(t);
            for (auto& child : rewrite_step(t, model)) {
                if (child.coeff == 0) continue;
                // rewrite children must shrink the measure or terminate
                assert(is_terminal(child) || gap_measure(child) < parent_gap);
                next.push_back(std::move(child));
            }
        }
        sort_terms(next);
        current = std::move(next);
        if (any && trace) trace->loops.push_back(current);
    }
    return current;
}

}  // namespace carleman
