#pragma once

#include "smckit/smc.hpp"

#include <string>
#include <vector>

namespace smckit {

/// HypothesisFailed: the statement does not apply, nothing was asserted.
enum class Status { Pass, Fail, HypothesisFailed, Skipped };

std::string to_string(Status s);

struct CheckReport {
    std::string name;
    std::string inputs;
    Status status = Status::Pass;
    /// Offending Hom entries or failed iso tests; never empty on Fail.
    std::vector<std::string> witness;
    /// Evaluated hypotheses, e.g. "Hom(i_*X_1, W_1[1]) = 0: true".
    std::vector<std::string> conditions;
    double seconds = 0.0;

    bool ok() const { return status != Status::Fail; }
};

/// Side of the recollement an index refers to.
enum class Side { X, Y };

/// S^1 >= S^2 >= S^4 and S^1 >= S^3 >= S^4 for the four gluings.
CheckReport check_order_preservation(const SMC& sx, const SMC& sx2, const SMC& sy, const SMC& sy2,
                                     const Recollement& r, const Options& opts = {});

/// S[-1] >= mu^-_i(S) >= S >= mu^+_i(S) >= S[1].
CheckReport check_mutation_order_chain(const SMC& s, std::size_t i, const Options& opts = {});

/// Both clauses, each asserted only when its vanishing hypothesis holds.
CheckReport check_conditional_order(const SMC& s, const SMC& s2, std::size_t i, std::size_t j,
                                    const Options& opts = {});

/// glue after mutating one side against mutating the glued collection.
CheckReport check_glue_mutation_commute(const SMC& sx, const SMC& sy, const Recollement& r, Side side,
                                        std::size_t index, Direction d, const Options& opts = {});

/// S^-_* >= S_T >= S^+_* together with mu^+(S_T) >= S^+_* (or S^-_* >= mu^-(S_T)).
CheckReport check_intermediate_order(const SMC& sx, const SMC& sy, const Recollement& r, Side side,
                                     std::size_t index, Direction d, const Options& opts = {});

/// The vanishing condition holds iff the glued and mutated collections agree in their first m terms.
CheckReport check_first_m_terms(const SMC& sx, const SMC& sy, const Recollement& r, std::size_t j, Direction d,
                                const Options& opts = {});

/// Validation, image identities, Hom transport, orthogonality, rigidity transfer,
/// generator-level t-structure compatibility and primal/dual agreement.
std::vector<CheckReport> check_gluing(const SMC& sx, const SMC& sy, const Recollement& r, const Options& opts = {});

/// No bijection of objects survives the certified NO answers of is_iso.
bool certified_distinct(const SMC& s, const SMC& s2, const Options& opts = {});

/// The built-in A2 and beta alpha examples.
std::vector<CheckReport> run_paper_examples(const Field& f = Field(), const Options& opts = {});

} // namespace smckit
