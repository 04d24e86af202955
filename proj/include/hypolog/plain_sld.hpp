#pragma once

#include <optional>
#include <vector>

#include "hypolog/answer.hpp"
#include "hypolog/program.hpp"

namespace hypolog {

/// Textbook SLD resolution over syntax terms with explicit substitutions.
/// Used as an independent oracle for implication-free crisp programs.
/// Throws std::invalid_argument on implications and BudgetExceeded past
/// `step_limit`.
std::vector<Answer> plain_sld(const Program& program, const Query& query,
                              std::optional<uint32_t> depth_budget = std::nullopt, uint64_t step_limit = 1000000);

}  // namespace hypolog
