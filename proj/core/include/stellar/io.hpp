#pragma once

#include <string>
#include <string_view>

#include "stellar/dicke_vector.hpp"
#include "stellar/entanglement.hpp"
#include "stellar/majorana_set.hpp"

namespace stellar {

// {"n": N, "re": [...], "im": [...]}
DickeVector parse_dicke_json(std::string_view text);
std::string format_dicke_json(const DickeVector& d);

// N lines "theta phi" in radians, 17 significant digits. '#' comments and
// blank lines are skipped when parsing.
MajoranaSet parse_majorana_text(std::string_view text);
std::string format_majorana_text(const MajoranaSet& m);

// {"e_g": x, "overlap_sq": y, "maximizers": [{"theta": .., "phi": ..}, ..]}
std::string format_entanglement_json(const EntanglementResult& r);

// Prints a double with 17 significant digits.
std::string format_double(double v);

}  // namespace stellar
