#pragma once

#include "carleman/term.hpp"
#include "carleman/weight_model.hpp"

namespace carleman {

enum class OperatorOrder : std::uint8_t { Second, Fourth };

// Second is the warm-up d^2/dx^2 (no time part); Fourth is gamma*dt + dx^4.
struct OperatorSpec {
    OperatorOrder order = OperatorOrder::Fourth;
    bool gamma_present = true;
};

// theta P(theta^{-1} w) as unary terms. The zeroth-order ell_t piece is not
// representable in either schema (psi_t / rho_t have no column); it is
// carried as the `omitted_ell_t` marker instead of as terms.
struct Conjugation {
    Schema schema = Schema::Poly;
    UnaryList expansion;
    bool omitted_ell_t = false;
};

Conjugation conjugate(OperatorSpec op, const WeightModel& model);

// The multiplier grouping I1..I4 / J1..J4. Groups one to three are the
// paper-fixed shapes; `residual` is whatever of the expansion they do not
// cover (zeroth-order rho_xxxx rows in the EXP case) and belongs to the
// discarded fourth group together with the ell_t marker.
struct MultiplierSplit {
    Schema schema = Schema::Poly;
    UnaryList i1, i2, i3;
    UnaryList residual;
    bool omitted_ell_t = false;
};

// Throws ContractError when a residual term carries a derivative (that would
// mean the hardcoded grouping no longer matches the expansion).
MultiplierSplit split_multiplier(const Conjugation& conj, const WeightModel& model);

// Bilinear product of two unary lists: coefficients multiply, exponents add,
// the derivative orders fill the bilinear pair; canonicalized and merged.
// skip_diagonal excludes index-equal pairs (the |I1|^2 products when a list
// is multiplied with itself).
TermList multiply(const UnaryList& left, const UnaryList& right, bool skip_diagonal = false);

}  // namespace carleman
