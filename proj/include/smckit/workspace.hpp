#pragma once

#include "smckit/smc.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace smckit {

inline constexpr const char* kWorkspaceSchema = "smc-kit/workspace@1";

/// A complex over "A", "X" (A/AeA) or "Y" (eAe). Either a shorthand such as
/// "S2[1]", "P1", "I1", "eA" or "0", or explicit terms and differentials.
/// diffs[n] has one row per summand of degree n+1 and one column per summand
/// of degree n; entries are algebra elements like "2*beta + alpha.beta".
struct ObjectSpec {
    std::string algebra = "A";
    std::optional<std::string> shorthand;
    std::map<int, std::vector<std::string>> terms;
    std::map<int, std::vector<std::vector<std::string>>> diffs;
};

/// Members are object names or shorthands over `algebra`.
struct SmcSpec {
    std::string algebra = "A";
    std::vector<std::string> members;
};

struct CommandSpec {
    std::string op;
    std::vector<std::string> args;
};

struct WorkspaceDoc {
    std::string schema = kWorkspaceSchema;
    /// A prime, or 0 for the rationals.
    std::uint32_t characteristic = 32003;
    Quiver quiver;
    /// Zero paths as dot-separated arrow labels, e.g. "beta.alpha".
    std::vector<std::string> relations;
    /// Vertex labels; empty when no recollement is needed.
    std::optional<std::vector<std::string>> idempotent;
    std::map<std::string, ObjectSpec> objects;
    std::map<std::string, SmcSpec> smcs;
    std::vector<CommandSpec> commands;
};

/// Throws InputError with line and column on malformed input.
WorkspaceDoc parse_workspace(const std::string& text);
WorkspaceDoc load_workspace(const std::string& path);
std::string serialize_workspace(const WorkspaceDoc& doc);

/// Explicit terms and differentials of x.
ObjectSpec object_spec(const ProjComplex& x, const std::string& algebra);

/// A parsed document with its algebra, recollement and complexes built.
/// Every object is checked for d^2 = 0 on construction.
class Workspace {
public:
    explicit Workspace(WorkspaceDoc doc, Options opts = {});

    const WorkspaceDoc& doc() const { return doc_; }
    const Options& options() const { return opts_; }
    /// "A", "X" or "Y"; X and Y need an idempotent.
    AlgebraPtr algebra(const std::string& which) const;
    bool has_recollement() const { return doc_.idempotent.has_value(); }
    /// Built on first use; throws InputError without an idempotent.
    const Recollement& recollement() const;

    /// A named object or a shorthand over `alg`.
    ProjComplex object(const std::string& name, const std::string& alg = "A") const;
    SMC smc(const std::string& name) const;
    /// Algebra tag of a named smc.
    std::string smc_algebra(const std::string& name) const;

private:
    ProjComplex build(const std::string& name, const ObjectSpec& s) const;
    ProjComplex shorthand(const std::string& text, const std::string& alg) const;

    WorkspaceDoc doc_;
    Options opts_;
    AlgebraPtr a_;
    mutable std::unique_ptr<Recollement> rec_;
    std::map<std::string, ProjComplex> built_;
};

} // namespace smckit
