#pragma once

#include "smckit/homotopy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace smckit {

/// Outcome of the sample-based validation of an idempotent recollement.
struct RecollementReport {
    bool validated = false;
    std::optional<std::size_t> gldim_a, gldim_corner, gldim_quotient;
    std::size_t samples = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

/// Both canonical triangles of an object T:
///   i_*i^!T -> T -> j_*j^!T -> ,   j_!j^!T -> T -> i_*i^*T -> .
struct CanonicalTriangles {
    ChainMap unit;     // T -> j_*j^!T
    ChainMap counit;   // j_!j^!T -> T
    Cocone upper;      // i_*i^!T with its map to T
    Triangle lower;    // cone(counit), z = i_*i^*T
};

/// Recollement of K^b(proj A) along K^b(proj A/AeA) and K^b(proj eAe).
/// X-side objects live over the quotient, Y-side objects over the corner.
class Recollement {
public:
    Recollement(AlgebraPtr a, std::vector<int> e, Options opts = {});

    const AlgebraPtr& algebra() const { return a_; }
    const std::vector<int>& idempotent() const { return e_; }
    const AlgebraPtr& x_algebra() const { return quotient_.algebra; }
    const AlgebraPtr& y_algebra() const { return corner_.algebra; }
    const CornerAlgebra& corner() const { return corner_; }
    const QuotientAlgebra& quotient() const { return quotient_; }
    const Options& options() const { return opts_; }
    const RecollementReport& report() const { return report_; }

    ProjComplex i_star(const ProjComplex& x) const;
    ProjComplex j_lower_shriek(const ProjComplex& y) const;
    ProjComplex j_upper_shriek(const ProjComplex& t) const;
    ProjComplex j_lower_star(const ProjComplex& y) const;

    /// A map j_!Y -> j_*Y whose image under j^! is an isomorphism.
    ChainMap canonical_theta(const ProjComplex& y) const;
    CanonicalTriangles canonical_triangles(const ProjComplex& t) const;
    /// i_*i^*T and i_*i^!T (minimal).
    ProjComplex i_star_i_upper_star(const ProjComplex& t) const;
    ProjComplex i_star_i_upper_shriek(const ProjComplex& t) const;

    /// Whether j^! sends f to a quasi-isomorphism.
    bool restricts_to_iso(const ChainMap& f) const;

private:
    ChainMap search(const ProjComplex& x, const ProjComplex& y, const char* what) const;
    void validate();

    AlgebraPtr a_;
    std::vector<int> e_;
    Options opts_;
    CornerAlgebra corner_;
    CornerAlgebra corner_op_;
    QuotientAlgebra quotient_;
    AlgebraPtr op_;
    RecollementReport report_;
};

/// Builds and validates; throws BoundExceeded when a global dimension is
/// beyond opts.pd_bound.
Recollement build_recollement(const AlgebraPtr& a, const std::vector<int>& e, const Options& opts = {});

} // namespace smckit
