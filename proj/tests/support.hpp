#pragma once

#include "smckit/smc.hpp"

#include <memory>
#include <random>
#include <string>

namespace smckit::testing {

/// Linear A_n (1 -> 2 -> ... -> n) with random monomial relations.
AlgebraPtr random_linear(std::mt19937_64& rng, std::size_t n, const Field& f = Field());

struct RandomRecollement {
    AlgebraPtr alg;
    std::vector<int> e;
    std::unique_ptr<Recollement> rec;
    std::string label;
    /// Idempotents drawn and rejected before this one validated.
    std::size_t rejected = 0;
};

/// Random linear A_n (2 <= n <= max_n) with a random idempotent whose
/// recollement validates. Both sides are nonzero.
RandomRecollement random_recollement(std::mt19937_64& rng, std::size_t max_n = 4, const Field& f = Field());

/// A random collection reached from the simples by rigid mutations and a shift.
SMC random_smc(std::mt19937_64& rng, const AlgebraPtr& a, std::size_t steps = 2);

/// A collection S' with s >= S' (one left mutation or a shift).
SMC random_lower(std::mt19937_64& rng, const SMC& s);

/// Cone of a random map between shifted simples, projectives and injectives.
ProjComplex random_object(std::mt19937_64& rng, const AlgebraPtr& a);

} // namespace smckit::testing
