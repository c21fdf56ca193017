#pragma once

#include <string>

#include "recoh/states.hpp"

namespace recoh {

/// State file format, shared with the CLI:
///   {"dims": [dA, 2, dE], "amplitudes": [[re, im], ...]}
/// with the amplitude index convention (iA*2 + iB)*dE + iE. Loading
/// validates dims and the norm precondition of from_amplitudes; any problem
/// throws std::runtime_error with a diagnostic naming the offending field.
PureState load_state(const std::string& path);
PureState parse_state_json(const std::string& text);

std::string state_to_json(const PureState& psi);
void save_state(const PureState& psi, const std::string& path);

/// Formats a double with 15 significant digits, '.' decimal separator,
/// locale-independent.
std::string format_double(double v);

}  // namespace recoh
