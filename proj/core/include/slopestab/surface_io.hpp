#pragma once
// Text format for surface models and the class-expression syntax shared with
// the CLI ("3H-E", "1/2A+C", "K" for the canonical class; configurations as
// "2*C+E"). Parsing is strict: every diagnostic carries a line number, and a
// parsed model must pass the full validate() battery before it is returned.

#include <string>
#include <utility>
#include <vector>

#include "slopestab/lattice.hpp"

namespace slopestab {

// Signed rational combinations of basis labels; "K" stands for the model's
// canonical class; "0" is the zero class. Errors cite the offending token.
DivClass parse_class_expr(const SurfaceModel& s, const std::string& expr);

// "2*C+E" or "2C+E": positive integer multiples of roster labels joined
// by '+'.
std::vector<std::pair<std::string, int>> parse_config_expr(const std::string& expr);

// Line-oriented document: name, basis, gram (one line per row), canonical,
// curve <label> <expr> [genus <n>], curves_complete, kodaira_nonneg,
// reference_positive_class, effective_generator, polarisation <label>
// <expr>, divisor <label> <config>. '#' starts a comment. Round-trips
// byte-identically through serialize_surface on canonical form.
SurfaceModel parse_surface(const std::string& text);
SurfaceModel read_surface_file(const std::string& path);
std::string serialize_surface(const SurfaceModel& s);

}  // namespace slopestab
