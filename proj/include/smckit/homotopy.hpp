#pragma once

#include "smckit/complex.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace smckit {

/// Resource bounds and randomness shared by the higher layers.
struct Options {
    std::size_t pd_bound = 32;
    std::size_t strip_cap = 10000;
    std::size_t iso_trials = 40;
    /// Exhaustive grid search in is_iso when (D+1)^k stays below certify_cap.
    bool certify = false;
    std::size_t certify_cap = 200000;
    /// Attempts when searching for the canonical maps of a recollement.
    std::size_t canonical_trials = 64;
    /// Re-verify isomorphism witnesses by a null-homotopy test.
    bool verify_witness = true;
    std::uint64_t seed = 0x5eed5eedULL;
};

/// X[n]: X[n]^p = X^{p+n}, differential multiplied by (-1)^n.
ProjComplex shift(const ProjComplex& x, int n);
/// f[n] with the same components, reindexed.
ChainMap shift(const ChainMap& f, int n);

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);
/// X^{(k)}.
ProjComplex power(const ProjComplex& x, std::size_t k);

/// f then g (requires f.target == g.source termwise).
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const ChainMap& f, const Scalar& s);

/// X -u-> Y -v-> Z -w-> X[1].
struct Triangle {
    ProjComplex x, y, z;
    ChainMap u, v, w;
};

/// Standard triangle on f: cone^p = X^{p+1} (+) Y^p with differential
/// [[-d_X, 0], [f, d_Y]].
Triangle cone(const ChainMap& f);

/// cocone(f) = cone(f)[-1] together with its map to the source of f.
struct Cocone {
    ProjComplex c;
    ChainMap to_source;
};
Cocone cocone(const ChainMap& f);

/// Total Hom complex Hom^n(X, Y) = prod_p Hom(X^p, Y^{p+n}) with
/// D(phi) = d_Y phi - (-1)^n phi d_X. A cocycle of degree n is a chain map
/// X -> Y[n] with the same components.
class HomComplex {
public:
    HomComplex(const ProjComplex& x, const ProjComplex& y);

    const ProjComplex& source() const { return x_; }
    const ProjComplex& target() const { return y_; }
    /// Degrees where Hom^n can be nonzero; empty window when either side is zero.
    int min_degree() const { return min_deg_; }
    int max_degree() const { return max_deg_; }
    std::size_t dim(int n) const;
    /// D^n: Hom^n -> Hom^{n+1} as a column-convention matrix.
    Mat differential(int n) const;

    Vec to_vector(int n, const ChainMap& f) const;
    /// The chain map X -> Y[n] with the given coordinates.
    ChainMap to_map(int n, const Vec& v) const;

private:
    struct Block {
        int p;
        std::size_t t, s;
        std::size_t offset;
        const std::vector<std::uint32_t>* corner;
    };
    const std::vector<Block>& blocks(int n) const;

    ProjComplex x_, y_;
    int min_deg_ = 0, max_deg_ = -1;
    mutable std::map<int, std::vector<Block>> blocks_;
    mutable std::map<int, std::size_t> dims_;
};

/// H^n of a Hom complex: cocycles, boundaries and cohomology representatives.
struct HomSpace {
    int degree = 0;
    std::vector<Vec> cocycles;
    std::vector<Vec> representatives;
    std::size_t dim() const { return representatives.size(); }
};

HomSpace hom_space(const HomComplex& h, int n);

/// Dimensions of Hom(X, Y[n]) for every n in the support window.
struct HomTable {
    int min_degree = 0, max_degree = -1;
    std::map<int, std::size_t> dims;
    std::map<int, std::vector<ChainMap>> bases; // maps X -> Y[n]
    std::size_t dim(int n) const;
};

HomTable hom_table(const ProjComplex& x, const ProjComplex& y, bool with_bases = false);
std::size_t hom_dim(const ProjComplex& x, const ProjComplex& y, int n);
/// Basis of Hom(X, Y[n]) as chain maps X -> Y[n].
std::vector<ChainMap> hom_basis(const ProjComplex& x, const ProjComplex& y, int n);
bool is_null_homotopic(const ChainMap& f);

struct Minimal {
    ProjComplex complex;
    ChainMap to;   // X -> minimal
    ChainMap from; // minimal -> X
};

/// Gaussian elimination of invertible differential entries.
Minimal minimalize(const ProjComplex& x);
bool is_contractible(const ProjComplex& x);
bool is_minimal(const ProjComplex& x);

/// Inverse of an element c e_v + r of e_v A e_v with c != 0.
Elem local_inverse(const Algebra& a, int v, const Elem& x);

struct IsoResult {
    bool iso = false;
    /// YES answers are always certified; NO answers are certified by the
    /// term criterion, a zero Hom space or an exhaustive grid search.
    bool certified = false;
    /// Upper bound on the probability of a wrong NO (0 when certified).
    double error_bound = 0.0;
    std::string reason;
    std::optional<ChainMap> f, g;
};

IsoResult is_iso(const ProjComplex& x, const ProjComplex& y, const Options& opts = {});

/// Degreewise inverse of an isomorphism between complexes (nullopt if some
/// component is not invertible).
std::optional<ChainMap> invert_components(const ChainMap& f);

/// Quasi-isomorphic ProjComplex (minimal) together with a quasi-isomorphism
/// to the input at module level.
struct Resolved {
    ProjComplex complex;
    ModuleChainMap augmentation;
};

Resolved resolve_complex(const ModuleComplex& c, const Options& opts = {});
/// Minimal projective resolution, as a complex in degrees <= 0.
Resolved projective_resolution(const Module& m, std::size_t max_len = 32);
/// Max projective dimension of the simples, or nullopt beyond `bound`.
std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t bound = 32);

/// Stalk of the simple S_i in degree `degree` (resolved).
ProjComplex simple_complex(const AlgebraPtr& a, int i, int degree = 0, const Options& opts = {});
ProjComplex module_complex(const Module& m, int degree = 0, const Options& opts = {});

} // namespace smckit
