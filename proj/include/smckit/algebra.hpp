#pragma once

#include "smckit/field.hpp"
#include "smckit/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smckit {

/// Sparse linear combination of algebra basis elements, sorted by index,
/// with no zero coefficients. The default value is zero.
class Elem {
public:
    using Term = std::pair<std::uint32_t, Scalar>;

    Elem() = default;
    Elem(std::uint32_t basis_index, Scalar coeff);
    /// Terms in any order; merged and cleaned.
    static Elem from_terms(const std::vector<Term>& terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<Scalar> coeff(std::uint32_t basis_index) const;

    void add_term(std::uint32_t basis_index, const Scalar& c);
    Elem& operator+=(const Elem& o);
    Elem& operator-=(const Elem& o);
    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator-() const;
    Elem scaled(const Scalar& s) const;

    bool operator==(const Elem& o) const { return terms_ == o.terms_; }
    bool operator!=(const Elem& o) const { return !(*this == o); }

private:
    std::vector<Term> terms_;
};

struct Arrow {
    std::string label;
    int source;
    int target;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    /// Throws InputError if absent.
    int vertex_index(const std::string& label) const;
    int arrow_index(const std::string& label) const;
    void validate() const;
};

/// Arrow indices, traversed left to right.
using Path = std::vector<int>;

/// A basis element b with e_source b e_target = b.
struct BasisElement {
    std::string label;
    int source;
    int target;
};

/// Finite-dimensional basic algebra with a complete set of primitive
/// orthogonal idempotents that are themselves basis elements; every other
/// basis element lies in the Jacobson radical and in a single corner
/// e_i A e_j.
///
/// Paths compose left to right: if a: i -> j and b: j -> k then a*b is the
/// path traversing a then b, and e_i A e_j is spanned by paths from i to j.
/// Right modules: the indecomposable projective P_i is e_i A.
class Algebra {
public:
    using StructureConstants = std::vector<std::vector<std::vector<Elem::Term>>>;

    /// Validates associativity, idempotents, homogeneity and nilpotency of
    /// the radical. `idempotents[v]` is the basis index of e_v.
    Algebra(Field field, std::vector<std::string> vertices, std::vector<BasisElement> basis,
            std::vector<std::uint32_t> idempotents, StructureConstants mult);

    const Field& field() const { return field_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t num_vertices() const { return vertices_.size(); }
    const std::vector<std::string>& vertex_labels() const { return vertices_; }
    const BasisElement& basis(std::size_t i) const { return basis_[i]; }
    std::uint32_t idempotent(int v) const { return idempotents_[static_cast<std::size_t>(v)]; }
    bool is_idempotent(std::size_t b) const { return idempotent_vertex_[b] >= 0; }
    /// Vertex v if basis element b is e_v, else -1.
    int idempotent_vertex(std::size_t b) const { return idempotent_vertex_[b]; }

    /// Basis indices spanning e_from A e_to.
    const std::vector<std::uint32_t>& corner(int from, int to) const;
    /// Position of basis element b inside corner(source(b), target(b)).
    std::size_t corner_position(std::size_t b) const { return corner_pos_[b]; }
    /// Basis indices spanning e_v A (the projective P_v).
    const std::vector<std::uint32_t>& row_basis(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    /// Position of basis element b inside row_basis(source(b)).
    std::size_t row_position(std::size_t b) const { return row_pos_[b]; }
    std::vector<std::uint32_t> radical_basis() const;

    const std::vector<Elem::Term>& product(std::size_t a, std::size_t b) const { return mult_[a][b]; }
    Elem multiply(const Elem& x, const Elem& y) const;
    Elem unit_elem(int v) const { return Elem(idempotent(v), field_.one()); }
    Elem basis_elem(std::size_t b) const { return Elem(static_cast<std::uint32_t>(b), field_.one()); }

    /// Label lookup; throws InputError.
    std::size_t basis_index(const std::string& label) const;
    std::string format(const Elem& x) const;
    /// Parses "2*a.b - e1 + 1/2*c".
    Elem parse(const std::string& text) const;

    /// Opposite algebra on the same basis (corners transposed).
    std::shared_ptr<const Algebra> opposite() const;

    /// Loewy length of the radical (smallest k with rad^k = 0).
    std::size_t loewy_length() const;

    /// Path interpretation, present when built from a quiver.
    const std::optional<std::vector<Path>>& paths() const { return paths_; }
    void set_paths(std::vector<Path> p) { paths_ = std::move(p); }

private:
    void index_corners();
    void validate() const;

    Field field_;
    std::vector<std::string> vertices_;
    std::vector<BasisElement> basis_;
    std::vector<std::uint32_t> idempotents_;
    std::vector<int> idempotent_vertex_;
    StructureConstants mult_;
    std::vector<std::vector<std::vector<std::uint32_t>>> corners_;
    std::vector<std::size_t> corner_pos_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> row_pos_;
    std::map<std::string, std::size_t> label_index_;
    std::optional<std::vector<Path>> paths_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Builds kQ/I for a monomial admissible ideal I generated by `relations`.
/// Throws InputError for relations of length < 2 or non-composable arrows,
/// BoundExceeded if more than `path_cap` paths survive.
AlgebraPtr build_path_algebra(const Field& field, const Quiver& q, const std::vector<Path>& relations,
                              std::size_t path_cap = 5000);

/// Sorted, deduplicated vertex subset defining e = sum of e_v. Throws
/// InputError for vertices out of range.
std::vector<int> normalize_idempotent(const Algebra& a, std::vector<int> vertices);

/// eAe together with its inclusion into A.
struct CornerAlgebra {
    AlgebraPtr algebra;
    std::vector<int> vertex_map;             // corner vertex -> vertex of A
    std::vector<std::uint32_t> embedding;    // corner basis index -> basis index of A
};

CornerAlgebra corner_algebra(const AlgebraPtr& a, const std::vector<int>& e);

/// A/AeA together with the projection from A.
struct QuotientAlgebra {
    AlgebraPtr algebra;
    std::vector<int> vertex_map;             // quotient vertex -> vertex of A
    std::vector<std::uint32_t> lift;         // quotient basis index -> representative basis index of A
    std::vector<Elem> projection;            // image of each basis element of A
};

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const std::vector<int>& e);

/// Transports an element along a corner embedding.
Elem embed(const CornerAlgebra& c, const Elem& x);

} // namespace smckit
