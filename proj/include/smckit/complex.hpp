#pragma once

#include "smckit/algebra.hpp"
#include "smckit/module.hpp"

#include <map>
#include <string>
#include <vector>

namespace smckit {

/// Matrix with entries in an algebra. An entry (t, s) of a map between sums
/// of indecomposable projectives is an element of e_t A e_s describing
/// P_s -> P_t by left multiplication, so the composite "g after f" is the
/// ordinary matrix product g * f with entries multiplied in the algebra.
class ElemMatrix {
public:
    ElemMatrix() = default;
    ElemMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ElemMatrix identity(const Algebra& a, const std::vector<int>& vertices);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    ElemMatrix operator+(const ElemMatrix& o) const;
    ElemMatrix operator-(const ElemMatrix& o) const;
    ElemMatrix operator-() const;
    ElemMatrix scaled(const Scalar& s) const;
    bool operator==(const ElemMatrix& o) const;

    ElemMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const ElemMatrix& b);
    ElemMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

ElemMatrix mul(const Algebra& a, const ElemMatrix& x, const ElemMatrix& y);
ElemMatrix hstack(const ElemMatrix& a, const ElemMatrix& b);
ElemMatrix vstack(const ElemMatrix& a, const ElemMatrix& b);
ElemMatrix block_diag(const ElemMatrix& a, const ElemMatrix& b);

/// Bounded complex of finitely generated projectives. The term in degree n
/// is the sum of P_v over the listed vertices v; diff(n): term(n) -> term(n+1)
/// has size |term(n+1)| x |term(n)|.
struct ProjComplex {
    AlgebraPtr alg;
    int low = 0;
    std::vector<std::vector<int>> terms;  // degree low + k
    std::vector<ElemMatrix> diffs;        // degree low + k -> low + k + 1

    ProjComplex() = default;
    explicit ProjComplex(AlgebraPtr a) : alg(std::move(a)) {}

    int high() const { return low + static_cast<int>(terms.size()) - 1; }
    bool is_zero() const { return terms.empty(); }
    const std::vector<int>& term(int n) const;
    ElemMatrix diff(int n) const;
    std::size_t total_summands() const;

    /// Places `vertices` in degree n (growing the support as needed).
    void set_term(int n, std::vector<int> vertices);
    void set_diff(int n, ElemMatrix d);
    /// Drops empty terms at both ends.
    void trim();
    /// Entries lie in the right corners and d^2 = 0; throws InputError.
    void check() const;

    /// Sorted summand list per degree, e.g. for multiset comparisons.
    std::map<int, std::vector<int>> signature() const;
    /// Alternating dimension-vector class in the free group on vertices.
    std::vector<long> euler_class() const;
    std::string describe() const;
};

ProjComplex stalk_projective(const AlgebraPtr& a, int vertex, int degree);

/// Morphism of complexes given by per-degree components.
struct ChainMap {
    ProjComplex source, target;
    std::map<int, ElemMatrix> comps;

    ChainMap() = default;
    ChainMap(ProjComplex s, ProjComplex t) : source(std::move(s)), target(std::move(t)) {}

    /// Component in degree n, zero if not stored.
    ElemMatrix comp(int n) const;
    void set(int n, ElemMatrix m);
    bool is_chain_map() const;
    bool is_zero() const;
};

ChainMap identity_map(const ProjComplex& x);
ChainMap zero_map(const ProjComplex& x, const ProjComplex& y);

/// Module of the sum of projectives P_v (v in vertices).
Module projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices);
/// Offsets of each summand in the module basis of projective_sum.
std::vector<std::size_t> summand_offsets(const Algebra& a, const std::vector<int>& vertices);
/// Module-level matrix (row convention) of a map between projective sums.
Mat module_map(const Algebra& a, const std::vector<int>& source, const std::vector<int>& target,
               const ElemMatrix& m);

ModuleComplex to_modules(const ProjComplex& x);
ModuleChainMap to_modules(const ChainMap& f);

} // namespace smckit
