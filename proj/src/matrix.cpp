#include "smckit/matrix.hpp"

#include "smckit/errors.hpp"

#include <stdexcept>

namespace smckit {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero())
{
}

Mat Mat::identity(Field f, std::size_t n)
{
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = f.one();
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols)
{
    Mat m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw InputError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Mat Mat::from_columns(Field f, const std::vector<Vec>& cols, std::size_t rows)
{
    Mat m(f, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw InputError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

Vec Mat::row(std::size_t r) const
{
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const
{
    Vec v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.push_back((*this)(r, c));
    return v;
}

Mat Mat::operator*(const Mat& o) const
{
    if (cols_ != o.rows_)
        throw InputError("matrix product dimension mismatch");
    Mat out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero())
                    out(i, j) += a * b;
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw InputError("matrix sum dimension mismatch");
    Mat out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += o.data_[i];
    return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const
{
    Mat out = *this;
    for (auto& x : out.data_)
        x = -x;
    return out;
}

Mat Mat::scaled(const Scalar& s) const
{
    Mat out = *this;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

Mat Mat::transpose() const
{
    Mat out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out(j, i) = (*this)(i, j);
    return out;
}

Vec Mat::apply(const Vec& v) const
{
    if (v.size() != cols_)
        throw InputError("matrix-vector dimension mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero())
                out[i] += (*this)(i, j) * v[j];
    return out;
}

Vec Mat::apply_left(const Vec& v) const
{
    if (v.size() != rows_)
        throw InputError("vector-matrix dimension mismatch");
    Vec out = zero_vec(field_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].is_zero())
            continue;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero())
                out[j] += v[i] * (*this)(i, j);
    }
    return out;
}

bool Mat::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Mat::operator==(const Mat& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& block)
{
    if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_)
        throw std::out_of_range("set_block out of range");
    for (std::size_t i = 0; i < block.rows_; ++i)
        for (std::size_t j = 0; j < block.cols_; ++j)
            (*this)(r0 + i, c0 + j) = block(i, j);
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw std::out_of_range("block out of range");
    Mat out(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

Mat hstack(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows())
        throw InputError("hstack row mismatch");
    Mat out(a.field(), a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Mat vstack(const Mat& a, const Mat& b)
{
    if (a.cols() != b.cols())
        throw InputError("vstack column mismatch");
    Mat out(a.field(), a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

Mat block_diag(const Mat& a, const Mat& b)
{
    Mat out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Mat& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero())
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(piv, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            Scalar factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const Mat& m)
{
    Mat copy = m;
    return rref(copy).size();
}

std::vector<Vec> kernel_basis(const Mat& m)
{
    Mat r = m;
    auto pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[free] = m.field().one();
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, free);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<Vec> left_kernel_basis(const Mat& m) { return kernel_basis(m.transpose()); }

SolveResult solve(const Mat& m, const Vec& b)
{
    if (b.size() != m.rows())
        throw InputError("solve: right-hand side has wrong length");
    Mat aug = hstack(m, Mat::from_columns(m.field(), {b}, m.rows()));
    auto pivots = rref(aug);
    SolveResult res;
    res.kernel = kernel_basis(m);
    if (!pivots.empty() && pivots.back() == m.cols())
        return res; // inconsistent
    Vec x = zero_vec(m.field(), m.cols());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        x[pivots[k]] = aug(k, m.cols());
    res.particular = std::move(x);
    return res;
}

std::optional<Mat> inverse(const Mat& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    std::size_t n = m.rows();
    Mat aug = hstack(m, Mat::identity(m.field(), n));
    auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
        return std::nullopt;
    return aug.block(0, n, n, n);
}

Subspace::Subspace(Field f, std::size_t ambient_dim) : field_(f), n_(ambient_dim) {}

Vec Subspace::reduce(const Vec& v) const
{
    if (v.size() != n_)
        throw InputError("subspace: vector has wrong length");
    Vec r = v;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        Scalar c = r[pivots_[k]];
        if (c.is_zero())
            continue;
        const Vec& b = basis_[k];
        for (std::size_t j = 0; j < n_; ++j)
            if (!b[j].is_zero())
                r[j] -= c * b[j];
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return smckit::is_zero(reduce(v)); }

bool Subspace::add(const Vec& v)
{
    Vec r = reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && r[piv].is_zero())
        ++piv;
    if (piv == n_)
        return false;
    Scalar inv = r[piv].inverse();
    for (auto& x : r)
        x *= inv;
    for (auto& b : basis_) {
        Scalar c = b[piv];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < n_; ++j)
            if (!r[j].is_zero())
                b[j] -= c * r[j];
    }
    basis_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
}

Vec Subspace::coordinates(const Vec& v) const
{
    Vec out;
    out.reserve(basis_.size());
    for (auto p : pivots_)
        out.push_back(v[p]);
    return out;
}

} // namespace smckit
