#include "smckit/complex.hpp"

#include "smckit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace smckit {

ElemMatrix ElemMatrix::identity(const Algebra& a, const std::vector<int>& vertices)
{
    ElemMatrix m(vertices.size(), vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        m(i, i) = a.unit_elem(vertices[i]);
    return m;
}

bool ElemMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Elem& e) { return e.is_zero(); });
}

ElemMatrix ElemMatrix::operator+(const ElemMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::logic_error("ElemMatrix sum dimension mismatch");
    ElemMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += o.data_[i];
    return r;
}

ElemMatrix ElemMatrix::operator-(const ElemMatrix& o) const { return *this + (-o); }

ElemMatrix ElemMatrix::operator-() const
{
    ElemMatrix r = *this;
    for (auto& e : r.data_)
        e = -e;
    return r;
}

ElemMatrix ElemMatrix::scaled(const Scalar& s) const
{
    ElemMatrix r = *this;
    for (auto& e : r.data_)
        e = e.scaled(s);
    return r;
}

bool ElemMatrix::operator==(const ElemMatrix& o) const
{
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

ElemMatrix ElemMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    ElemMatrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
}

void ElemMatrix::set_block(std::size_t r0, std::size_t c0, const ElemMatrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("ElemMatrix::set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            (*this)(r0 + i, c0 + j) = b(i, j);
}

ElemMatrix ElemMatrix::select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const
{
    ElemMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out(i, j) = (*this)(rows[i], cols[j]);
    return out;
}

ElemMatrix mul(const Algebra& a, const ElemMatrix& x, const ElemMatrix& y)
{
    if (x.cols() != y.rows())
        throw std::logic_error("ElemMatrix product dimension mismatch");
    ElemMatrix out(x.rows(), y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const Elem& xe = x(i, k);
            if (xe.is_zero())
                continue;
            for (std::size_t j = 0; j < y.cols(); ++j) {
                const Elem& ye = y(k, j);
                if (!ye.is_zero())
                    out(i, j) += a.multiply(xe, ye);
            }
        }
    return out;
}

ElemMatrix hstack(const ElemMatrix& a, const ElemMatrix& b)
{
    if (a.rows() != b.rows())
        throw std::logic_error("ElemMatrix hstack mismatch");
    ElemMatrix out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

ElemMatrix vstack(const ElemMatrix& a, const ElemMatrix& b)
{
    if (a.cols() != b.cols())
        throw std::logic_error("ElemMatrix vstack mismatch");
    ElemMatrix out(a.rows() + b.rows(), a.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), 0, b);
    return out;
}

ElemMatrix block_diag(const ElemMatrix& a, const ElemMatrix& b)
{
    ElemMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

// ---------------------------------------------------------------- ProjComplex

const std::vector<int>& ProjComplex::term(int n) const
{
    static const std::vector<int> empty;
    if (n < low || n > high())
        return empty;
    return terms[static_cast<std::size_t>(n - low)];
}

ElemMatrix ProjComplex::diff(int n) const
{
    if (n >= low && n < high())
        return diffs[static_cast<std::size_t>(n - low)];
    return ElemMatrix(term(n + 1).size(), term(n).size());
}

std::size_t ProjComplex::total_summands() const
{
    std::size_t s = 0;
    for (const auto& t : terms)
        s += t.size();
    return s;
}

void ProjComplex::set_term(int n, std::vector<int> vertices)
{
    if (terms.empty()) {
        low = n;
        terms.push_back({});
    }
    while (n < low) {
        terms.insert(terms.begin(), std::vector<int>{});
        diffs.insert(diffs.begin(), ElemMatrix(terms[1].size(), 0));
        --low;
    }
    while (n > high()) {
        diffs.emplace_back(0, terms.back().size());
        terms.push_back({});
    }
    auto k = static_cast<std::size_t>(n - low);
    terms[k] = std::move(vertices);
    // keep adjacent differentials size-consistent
    if (k > 0)
        diffs[k - 1] = ElemMatrix(terms[k].size(), terms[k - 1].size());
    if (k + 1 < terms.size())
        diffs[k] = ElemMatrix(terms[k + 1].size(), terms[k].size());
}

void ProjComplex::set_diff(int n, ElemMatrix d)
{
    if (n < low || n >= high()) {
        if (!d.is_zero() || d.rows() != term(n + 1).size() || d.cols() != term(n).size())
            throw std::logic_error("set_diff outside the support");
        return;
    }
    auto k = static_cast<std::size_t>(n - low);
    if (d.rows() != terms[k + 1].size() || d.cols() != terms[k].size())
        throw std::logic_error("set_diff size mismatch");
    diffs[k] = std::move(d);
}

void ProjComplex::trim()
{
    while (!terms.empty() && terms.front().empty()) {
        terms.erase(terms.begin());
        if (!diffs.empty())
            diffs.erase(diffs.begin());
        ++low;
    }
    while (!terms.empty() && terms.back().empty()) {
        terms.pop_back();
        if (!diffs.empty())
            diffs.pop_back();
    }
    if (terms.empty()) {
        low = 0;
        diffs.clear();
    }
}

void ProjComplex::check() const
{
    if (!terms.empty() && diffs.size() + 1 != terms.size())
        throw InputError("complex needs one differential between consecutive terms");
    for (const auto& t : terms)
        for (int v : t)
            if (v < 0 || v >= static_cast<int>(alg->num_vertices()))
                throw InputError("complex term refers to an unknown vertex");
    for (int n = low; n < high(); ++n) {
        const ElemMatrix& d = diffs[static_cast<std::size_t>(n - low)];
        const auto& s = term(n);
        const auto& t = term(n + 1);
        if (d.rows() != t.size() || d.cols() != s.size())
            throw InputError("differential in degree " + std::to_string(n) + " has the wrong size");
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j)
                for (const auto& [b, c] : d(i, j).terms()) {
                    (void)c;
                    const auto& be = alg->basis(b);
                    if (be.source != t[i] || be.target != s[j])
                        throw InputError("differential entry in degree " + std::to_string(n) + " at (" +
                                         std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                         ") is not in the corner e_t A e_s");
                }
    }
    for (int n = low; n + 1 < high(); ++n)
        if (!mul(*alg, diff(n + 1), diff(n)).is_zero())
            throw InputError("d^2 != 0 at degree " + std::to_string(n));
}

std::map<int, std::vector<int>> ProjComplex::signature() const
{
    std::map<int, std::vector<int>> out;
    for (int n = low; n <= high(); ++n) {
        auto t = term(n);
        if (t.empty())
            continue;
        std::sort(t.begin(), t.end());
        out[n] = t;
    }
    return out;
}

std::vector<long> ProjComplex::euler_class() const
{
    std::vector<long> out(alg->num_vertices(), 0);
    for (int n = low; n <= high(); ++n)
        for (int v : term(n))
            out[static_cast<std::size_t>(v)] += (n % 2 == 0) ? 1 : -1;
    return out;
}

std::string ProjComplex::describe() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int n = low; n <= high(); ++n) {
        if (!first)
            os << " -> ";
        first = false;
        const auto& t = term(n);
        if (t.empty())
            os << "0";
        for (std::size_t i = 0; i < t.size(); ++i)
            os << (i ? "+" : "") << "P" << alg->vertex_labels()[static_cast<std::size_t>(t[i])];
        os << "@" << n;
    }
    return os.str();
}

ProjComplex stalk_projective(const AlgebraPtr& a, int vertex, int degree)
{
    ProjComplex x(a);
    x.set_term(degree, {vertex});
    return x;
}

// ---------------------------------------------------------------- ChainMap

ElemMatrix ChainMap::comp(int n) const
{
    auto it = comps.find(n);
    if (it != comps.end())
        return it->second;
    return ElemMatrix(target.term(n).size(), source.term(n).size());
}

void ChainMap::set(int n, ElemMatrix m)
{
    if (m.rows() != target.term(n).size() || m.cols() != source.term(n).size())
        throw std::logic_error("chain map component size mismatch");
    if (m.is_zero())
        comps.erase(n);
    else
        comps[n] = std::move(m);
}

bool ChainMap::is_chain_map() const
{
    if (source.is_zero() || target.is_zero())
        return true;
    const Algebra& a = *source.alg;
    int lo = std::min(source.low, target.low) - 1;
    int hi = std::max(source.high(), target.high());
    for (int n = lo; n <= hi; ++n)
        if (!(mul(a, target.diff(n), comp(n)) == mul(a, comp(n + 1), source.diff(n))))
            return false;
    return true;
}

bool ChainMap::is_zero() const
{
    for (const auto& [n, m] : comps)
        if (!m.is_zero())
            return false;
    return true;
}

ChainMap identity_map(const ProjComplex& x)
{
    ChainMap f(x, x);
    for (int n = x.low; n <= x.high(); ++n)
        if (!x.term(n).empty())
            f.set(n, ElemMatrix::identity(*x.alg, x.term(n)));
    return f;
}

ChainMap zero_map(const ProjComplex& x, const ProjComplex& y) { return ChainMap(x, y); }

// ---------------------------------------------------------------- modules

std::vector<std::size_t> summand_offsets(const Algebra& a, const std::vector<int>& vertices)
{
    std::vector<std::size_t> off;
    std::size_t o = 0;
    for (int v : vertices) {
        off.push_back(o);
        o += a.row_basis(v).size();
    }
    off.push_back(o);
    return off;
}

Module projective_sum(const AlgebraPtr& a, const std::vector<int>& vertices)
{
    Module m = Module::zero(a);
    for (int v : vertices)
        m = direct_sum(m, Module::projective(a, v));
    return m;
}

Mat module_map(const Algebra& a, const std::vector<int>& source, const std::vector<int>& target,
               const ElemMatrix& m)
{
    auto so = summand_offsets(a, source);
    auto to = summand_offsets(a, target);
    Mat out(a.field(), so.back(), to.back());
    for (std::size_t s = 0; s < source.size(); ++s) {
        const auto& rows = a.row_basis(source[s]);
        for (std::size_t t = 0; t < target.size(); ++t) {
            const Elem& entry = m(t, s);
            if (entry.is_zero())
                continue;
            for (std::size_t k = 0; k < rows.size(); ++k) {
                Elem img = a.multiply(entry, a.basis_elem(rows[k]));
                for (const auto& [b, c] : img.terms())
                    out(so[s] + k, to[t] + a.row_position(b)) += c;
            }
        }
    }
    return out;
}

ModuleComplex to_modules(const ProjComplex& x)
{
    ModuleComplex c;
    c.alg = x.alg;
    c.low = x.low;
    for (const auto& t : x.terms)
        c.terms.push_back(projective_sum(x.alg, t));
    for (int n = x.low; n < x.high(); ++n)
        c.diffs.push_back(module_map(*x.alg, x.term(n), x.term(n + 1), x.diff(n)));
    return c;
}

ModuleChainMap to_modules(const ChainMap& f)
{
    ModuleChainMap out;
    const auto& s = f.source;
    const auto& t = f.target;
    if (s.is_zero() && t.is_zero())
        return out;
    int lo = s.is_zero() ? t.low : (t.is_zero() ? s.low : std::min(s.low, t.low));
    int hi = s.is_zero() ? t.high() : (t.is_zero() ? s.high() : std::max(s.high(), t.high()));
    out.low = lo;
    const Algebra& a = s.alg ? *s.alg : *t.alg;
    for (int n = lo; n <= hi; ++n)
        out.components.push_back(module_map(a, s.term(n), t.term(n), f.comp(n)));
    return out;
}

} // namespace smckit
