#pragma once

#include "smckit/algebra.hpp"
#include "smckit/matrix.hpp"

#include <vector>

namespace smckit {

/// Finite-dimensional right module with a vertex-adapted basis: every basis
/// vector m_k satisfies m_k e_{vertex(k)} = m_k. Row-vector convention: the
/// action of a basis element b sends the row vector x to x * action(b).
class Module {
public:
    Module(AlgebraPtr alg, std::vector<int> vertex, std::vector<Mat> action);

    static Module zero(AlgebraPtr alg);
    /// One-dimensional top of e_i A.
    static Module simple(AlgebraPtr alg, int i);
    /// e_i A with basis row_basis(i).
    static Module projective(AlgebraPtr alg, int i);
    /// D(A e_i), basis dual to the paths ending at i.
    static Module injective(AlgebraPtr alg, int i);

    const AlgebraPtr& algebra() const { return alg_; }
    std::size_t dim() const { return vertex_.size(); }
    int vertex(std::size_t k) const { return vertex_[k]; }
    const std::vector<int>& vertices() const { return vertex_; }
    const Mat& action(std::size_t b) const { return action_[b]; }
    /// dim M e_v for each vertex.
    std::vector<std::size_t> dim_vector() const;

    /// Throws InputError naming the first violated identity.
    void check() const;

private:
    AlgebraPtr alg_;
    std::vector<int> vertex_;
    std::vector<Mat> action_;
};

Module direct_sum(const Module& a, const Module& b);

/// Basis of Hom_A(m, n); each map is a dim(m) x dim(n) matrix (row convention).
std::vector<Mat> module_hom_space(const Module& m, const Module& n);

/// D(m) over `opposite` (which must share the basis indexing of m.algebra()).
Module dual(const Module& m, const AlgebraPtr& opposite);

/// Restriction of an A/AeA-module to A.
Module restrict_along(const Module& n, const QuotientAlgebra& q, const AlgebraPtr& a);

/// M e as an eAe-module. `kept` receives the basis indices of M retained.
Module restrict_to_corner(const Module& m, const CornerAlgebra& c, std::vector<std::size_t>* kept = nullptr);

/// Bounded complex of modules; diffs[k] maps terms[k] -> terms[k+1] and the
/// term at index k sits in degree low + k.
struct ModuleComplex {
    AlgebraPtr alg;
    int low = 0;
    std::vector<Module> terms;
    std::vector<Mat> diffs;

    int high() const { return low + static_cast<int>(terms.size()) - 1; }
    bool empty() const { return terms.empty(); }
    /// Term in degree n (the zero module outside the support).
    Module term(int n) const;
    /// Differential out of degree n (a zero matrix outside the support).
    Mat diff(int n) const;

    /// Checks module structures, linearity of the differentials and d^2 = 0.
    void check() const;
};

ModuleComplex stalk(const Module& m, int degree);

/// Dimension of H^n for each degree of the support.
std::vector<std::size_t> cohomology_dims(const ModuleComplex& c);
bool is_acyclic(const ModuleComplex& c);

/// D(C) with D(C)^n = D(C^{-n}).
ModuleComplex dual(const ModuleComplex& c, const AlgebraPtr& opposite);
ModuleComplex restrict_along(const ModuleComplex& c, const QuotientAlgebra& q, const AlgebraPtr& a);
ModuleComplex restrict_to_corner(const ModuleComplex& c, const CornerAlgebra& corner);

/// Degreewise linear maps; components[k] acts in degree low + k, anything
/// outside is zero.
struct ModuleChainMap {
    int low = 0;
    std::vector<Mat> components;
};

/// Whether f: c -> d induces an isomorphism on cohomology (ranks of the
/// mapping cone).
bool is_quasi_iso(const ModuleComplex& c, const ModuleComplex& d, const ModuleChainMap& f);

} // namespace smckit
