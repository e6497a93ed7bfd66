#pragma once

#include <json.hpp>

#include "relkit/generators.hpp"
#include "relkit/relation.hpp"
#include "relkit/schatten.hpp"

namespace relkit {

/// Matrices travel as {rows, cols, re: [[...]], im: [[...]]}, row-major
/// IEEE-754 doubles; the same format everywhere, including the CLI.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// Relations travel as {dim_x, dim_y, graph_basis: <matrix>}.
nlohmann::json relation_to_json(const LinearRelation& t);
LinearRelation relation_from_json(const nlohmann::json& j, const Tolerances& tol = {});

/// {values: [...], op_norm, trace_norm}.
nlohmann::json spectrum_to_json(const SingularSpectrum& s);

/// {check_id, paper_ref, status, residual, slack, details}.
nlohmann::json check_to_json(const CheckResult& r);

nlohmann::json config_to_json(const GeneratorConfig& cfg);
nlohmann::json tolerances_to_json(const Tolerances& tol);

}  // namespace relkit
