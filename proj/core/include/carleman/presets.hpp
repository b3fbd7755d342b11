#pragma once

#include <string>
#include <vector>

#include "carleman/classify.hpp"
#include "carleman/term.hpp"

namespace carleman {

// End-to-end scenarios wiring conjugation -> multiply -> reduce -> classify,
// each checked against its expected output rows.
//
//   prop1-second-order   second-order warm-up, full decomposition
//   thm1-poly            I1(I2+I3), gamma=1, leading energies
//   thm2-exp-clamped     J1(J2+J3), clamped boundary filter
//   thm2-exp-hinged      J1(J2+J3), hinged boundary filter
//   thm2-cross-reduction B u_x times the J1 tail, degree pattern only
struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // empty when passing
};

struct PresetResult {
    std::string name;
    Report report;
    TermList reduced;           // engine output (unmerged)
    TermList product;           // engine input
    std::vector<GoldenCheck> checks;
    bool all_pass() const;
};

std::vector<std::string> preset_names();

// Throws Error on an unknown name.
PresetResult run_preset(const std::string& name);

}  // namespace carleman
