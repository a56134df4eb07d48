#pragma once

#include "smckit/field.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace smckit {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero(const Vec& v);

/// Dense row-major matrix over a Field.
class Mat {
public:
    Mat(Field f, std::size_t rows, std::size_t cols);
    static Mat identity(Field f, std::size_t n);
    /// Rows given as vectors of equal length (cols needed for the empty case).
    static Mat from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);
    static Mat from_columns(Field f, const std::vector<Vec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat scaled(const Scalar& s) const;
    Mat transpose() const;
    /// Column vector product m * v.
    Vec apply(const Vec& v) const;
    /// Row vector product v * m.
    Vec apply_left(const Vec& v) const;

    bool is_zero() const;
    bool operator==(const Mat& o) const;

    /// Copies `block` into this matrix with its top-left corner at (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Mat& block);
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);

std::size_t rank(const Mat& m);

/// Basis of the right null space {v : m v = 0}.
std::vector<Vec> kernel_basis(const Mat& m);

/// Basis of the left null space {v : v m = 0}.
std::vector<Vec> left_kernel_basis(const Mat& m);

struct SolveResult {
    std::optional<Vec> particular;
    std::vector<Vec> kernel;
};

/// Solves m x = b. Throws InputError on dimension mismatch.
SolveResult solve(const Mat& m, const Vec& b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Mat> inverse(const Mat& m);

/// Row space kept in reduced row echelon form; supports incremental insertion,
/// membership and coordinates with respect to the echelon basis.
class Subspace {
public:
    Subspace(Field f, std::size_t ambient_dim);

    /// Inserts v; returns true when the dimension grew.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    /// Residue of v after reducing against the basis (zero iff v is in the span).
    Vec reduce(const Vec& v) const;
    /// Coordinates of v (which must lie in the span) in terms of basis().
    Vec coordinates(const Vec& v) const;

    std::size_t dim() const { return basis_.size(); }
    std::size_t ambient_dim() const { return n_; }
    const std::vector<Vec>& basis() const { return basis_; }
    const Field& field() const { return field_; }

private:
    Field field_;
    std::size_t n_;
    std::vector<Vec> basis_;          // RREF rows
    std::vector<std::size_t> pivots_; // pivot column of each row
};

} // namespace smckit
