#pragma once

#include "smckit/algebra.hpp"

namespace smckit::fixtures {

/// 1 -> 2 with arrow "a"; no relations.
Quiver a2_quiver();
AlgebraPtr a2(const Field& f = Field());

/// beta: 1 -> 2, alpha: 2 -> 1, with the path beta.alpha (1 -> 2 -> 1) zero.
Quiver beta_alpha_quiver();
std::vector<Path> beta_alpha_relations();
AlgebraPtr beta_alpha(const Field& f = Field());

} // namespace smckit::fixtures
