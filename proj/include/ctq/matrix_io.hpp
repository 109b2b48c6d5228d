#pragma once

#include "ctq/matrix.hpp"
#include "ctq/tableau.hpp"

#include <json.hpp>

#include <string>

namespace ctq {

/// Rows separated by newlines, entries by whitespace. Blank lines are
/// ignored. Throws std::invalid_argument on ragged or negative input.
NonnegMatrix parse_matrix_text(const std::string &text);
std::string format_matrix_text(const NonnegMatrix &a);

/// {"rows": k, "cols": p, "entries": [[...], ...]}
NonnegMatrix parse_matrix_json(const nlohmann::json &j);
nlohmann::json matrix_to_json(const NonnegMatrix &a);

/// Accepts either format, guessing JSON from a leading '{' or '['.
NonnegMatrix parse_matrix(const std::string &text);

nlohmann::json tableau_to_json(const Tableau &t);
nlohmann::json qpoly_to_json(const QPoly &p);

} // namespace ctq
