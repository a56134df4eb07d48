#include "smckit/module.hpp"

#include "smckit/errors.hpp"

#include <algorithm>

namespace smckit {

Module::Module(AlgebraPtr alg, std::vector<int> vertex, std::vector<Mat> action)
    : alg_(std::move(alg)), vertex_(std::move(vertex)), action_(std::move(action))
{
    if (action_.size() != alg_->dim())
        throw InputError("module needs one action matrix per basis element");
    for (const auto& m : action_)
        if (m.rows() != vertex_.size() || m.cols() != vertex_.size())
            throw InputError("module action matrix has the wrong size");
}

Module Module::zero(AlgebraPtr alg)
{
    std::vector<Mat> action(alg->dim(), Mat(alg->field(), 0, 0));
    return Module(std::move(alg), {}, std::move(action));
}

Module Module::simple(AlgebraPtr alg, int i)
{
    const Field& f = alg->field();
    std::vector<Mat> action(alg->dim(), Mat(f, 1, 1));
    action[alg->idempotent(i)](0, 0) = f.one();
    return Module(std::move(alg), {i}, std::move(action));
}

Module Module::projective(AlgebraPtr alg, int i)
{
    const Field& f = alg->field();
    const auto& rows = alg->row_basis(i);
    const std::size_t n = rows.size();
    std::vector<int> vertex;
    for (auto b : rows)
        vertex.push_back(alg->basis(b).target);
    std::vector<Mat> action(alg->dim(), Mat(f, n, n));
    for (std::size_t c = 0; c < alg->dim(); ++c)
        for (std::size_t k = 0; k < n; ++k)
            for (const auto& [idx, coeff] : alg->product(rows[k], c))
                action[c](k, alg->row_position(idx)) = coeff;
    return Module(std::move(alg), std::move(vertex), std::move(action));
}

Module Module::injective(AlgebraPtr alg, int i)
{
    const Field& f = alg->field();
    std::vector<std::uint32_t> left; // basis of A e_i
    std::vector<int> pos(alg->dim(), -1);
    for (std::uint32_t b = 0; b < alg->dim(); ++b)
        if (alg->basis(b).target == i) {
            pos[b] = static_cast<int>(left.size());
            left.push_back(b);
        }
    const std::size_t n = left.size();
    std::vector<int> vertex;
    for (auto b : left)
        vertex.push_back(alg->basis(b).source);
    std::vector<Mat> action(alg->dim(), Mat(f, n, n));
    // (phi_b . a)(x) = coefficient of b in a * x
    for (std::size_t a = 0; a < alg->dim(); ++a)
        for (std::size_t x = 0; x < n; ++x)
            for (const auto& [idx, coeff] : alg->product(a, left[x]))
                action[a](static_cast<std::size_t>(pos[idx]), x) = coeff;
    return Module(std::move(alg), std::move(vertex), std::move(action));
}

std::vector<std::size_t> Module::dim_vector() const
{
    std::vector<std::size_t> out(alg_->num_vertices(), 0);
    for (int v : vertex_)
        ++out[static_cast<std::size_t>(v)];
    return out;
}

void Module::check() const
{
    const auto& a = *alg_;
    const Field& f = a.field();
    const std::size_t n = dim();
    for (int v : vertex_)
        if (v < 0 || v >= static_cast<int>(a.num_vertices()))
            throw InputError("module basis vector has an unknown vertex");
    for (std::size_t v = 0; v < a.num_vertices(); ++v) {
        Mat expect(f, n, n);
        for (std::size_t k = 0; k < n; ++k)
            if (vertex_[k] == static_cast<int>(v))
                expect(k, k) = f.one();
        if (!(action_[a.idempotent(static_cast<int>(v))] == expect))
            throw InputError("module basis is not adapted to the idempotent e_" + a.vertex_labels()[v]);
    }
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y) {
            Mat expect(f, n, n);
            for (const auto& [k, c] : a.product(x, y))
                expect = expect + action_[k].scaled(c);
            if (!(action_[x] * action_[y] == expect))
                throw InputError("module action does not respect the product " + a.basis(x).label + "*" +
                                 a.basis(y).label);
        }
}

Module direct_sum(const Module& a, const Module& b)
{
    std::vector<int> vertex = a.vertices();
    vertex.insert(vertex.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Mat> action;
    for (std::size_t k = 0; k < a.algebra()->dim(); ++k)
        action.push_back(block_diag(a.action(k), b.action(k)));
    return Module(a.algebra(), std::move(vertex), std::move(action));
}

std::vector<Mat> module_hom_space(const Module& m, const Module& n)
{
    const auto& alg = *m.algebra();
    const Field& f = alg.field();
    std::vector<std::pair<std::size_t, std::size_t>> unknowns;
    std::vector<std::vector<int>> index(m.dim(), std::vector<int>(n.dim(), -1));
    for (std::size_t k = 0; k < m.dim(); ++k)
        for (std::size_t l = 0; l < n.dim(); ++l)
            if (m.vertex(k) == n.vertex(l)) {
                index[k][l] = static_cast<int>(unknowns.size());
                unknowns.emplace_back(k, l);
            }
    std::vector<Vec> equations;
    for (auto r : alg.radical_basis()) {
        const Mat& rm = m.action(r);
        const Mat& rn = n.action(r);
        // (f rn)(k, l2) - (rm f)(k, l2) = 0
        for (std::size_t k = 0; k < m.dim(); ++k)
            for (std::size_t l2 = 0; l2 < n.dim(); ++l2) {
                Vec eq = zero_vec(f, unknowns.size());
                bool any = false;
                for (std::size_t l = 0; l < n.dim(); ++l)
                    if (index[k][l] >= 0 && !rn(l, l2).is_zero()) {
                        eq[static_cast<std::size_t>(index[k][l])] += rn(l, l2);
                        any = true;
                    }
                for (std::size_t k2 = 0; k2 < m.dim(); ++k2)
                    if (index[k2][l2] >= 0 && !rm(k, k2).is_zero()) {
                        eq[static_cast<std::size_t>(index[k2][l2])] -= rm(k, k2);
                        any = true;
                    }
                if (any)
                    equations.push_back(std::move(eq));
            }
    }
    Mat sys = Mat::from_rows(f, equations, unknowns.size());
    std::vector<Mat> out;
    for (const auto& v : kernel_basis(sys)) {
        Mat h(f, m.dim(), n.dim());
        for (std::size_t u = 0; u < unknowns.size(); ++u)
            h(unknowns[u].first, unknowns[u].second) = v[u];
        out.push_back(std::move(h));
    }
    return out;
}

Module dual(const Module& m, const AlgebraPtr& opposite)
{
    if (opposite->dim() != m.algebra()->dim())
        throw std::logic_error("dual: opposite algebra does not match");
    std::vector<Mat> action;
    for (std::size_t b = 0; b < m.algebra()->dim(); ++b)
        action.push_back(m.action(b).transpose());
    return Module(opposite, m.vertices(), std::move(action));
}

Module restrict_along(const Module& n, const QuotientAlgebra& q, const AlgebraPtr& a)
{
    const Field& f = a->field();
    std::vector<int> vertex;
    for (int v : n.vertices())
        vertex.push_back(q.vertex_map[static_cast<std::size_t>(v)]);
    std::vector<Mat> action;
    for (std::size_t b = 0; b < a->dim(); ++b) {
        Mat m(f, n.dim(), n.dim());
        for (const auto& [k, c] : q.projection[b].terms())
            m = m + n.action(k).scaled(c);
        action.push_back(std::move(m));
    }
    return Module(a, std::move(vertex), std::move(action));
}

Module restrict_to_corner(const Module& m, const CornerAlgebra& c, std::vector<std::size_t>* kept_out)
{
    const auto& alg = *m.algebra();
    std::vector<int> new_vertex(alg.num_vertices(), -1);
    for (std::size_t k = 0; k < c.vertex_map.size(); ++k)
        new_vertex[static_cast<std::size_t>(c.vertex_map[k])] = static_cast<int>(k);
    std::vector<std::size_t> kept;
    std::vector<int> vertex;
    for (std::size_t k = 0; k < m.dim(); ++k) {
        int v = new_vertex[static_cast<std::size_t>(m.vertex(k))];
        if (v >= 0) {
            kept.push_back(k);
            vertex.push_back(v);
        }
    }
    std::vector<Mat> action;
    const Field& f = alg.field();
    for (auto b : c.embedding) {
        Mat s(f, kept.size(), kept.size());
        const Mat& full = m.action(b);
        for (std::size_t i = 0; i < kept.size(); ++i)
            for (std::size_t j = 0; j < kept.size(); ++j)
                s(i, j) = full(kept[i], kept[j]);
        action.push_back(std::move(s));
    }
    if (kept_out)
        *kept_out = kept;
    return Module(c.algebra, std::move(vertex), std::move(action));
}

Module ModuleComplex::term(int n) const
{
    if (n < low || n > high())
        return Module::zero(alg);
    return terms[static_cast<std::size_t>(n - low)];
}

Mat ModuleComplex::diff(int n) const
{
    if (n >= low && n < high())
        return diffs[static_cast<std::size_t>(n - low)];
    return Mat(alg->field(), term(n).dim(), term(n + 1).dim());
}

void ModuleComplex::check() const
{
    if (!terms.empty() && diffs.size() + 1 != terms.size())
        throw InputError("module complex needs one differential between consecutive terms");
    for (const auto& t : terms)
        t.check();
    for (int n = low; n < high(); ++n) {
        const Mat& d = diffs[static_cast<std::size_t>(n - low)];
        const Module& s = terms[static_cast<std::size_t>(n - low)];
        const Module& t = terms[static_cast<std::size_t>(n - low + 1)];
        if (d.rows() != s.dim() || d.cols() != t.dim())
            throw InputError("module differential in degree " + std::to_string(n) + " has the wrong size");
        for (std::size_t b = 0; b < alg->dim(); ++b)
            if (!(d * t.action(b) == s.action(b) * d))
                throw InputError("module differential in degree " + std::to_string(n) + " is not A-linear");
        if (n + 1 < high() && !(d * diffs[static_cast<std::size_t>(n - low + 1)]).is_zero())
            throw InputError("d^2 != 0 at degree " + std::to_string(n));
    }
}

ModuleComplex stalk(const Module& m, int degree)
{
    ModuleComplex c;
    c.alg = m.algebra();
    c.low = degree;
    c.terms = {m};
    return c;
}

std::vector<std::size_t> cohomology_dims(const ModuleComplex& c)
{
    std::vector<std::size_t> out;
    for (int n = c.low; n <= c.high(); ++n) {
        std::size_t r_out = rank(c.diff(n));
        std::size_t r_in = rank(c.diff(n - 1));
        out.push_back(c.term(n).dim() - r_out - r_in);
    }
    return out;
}

bool is_acyclic(const ModuleComplex& c)
{
    for (auto d : cohomology_dims(c))
        if (d != 0)
            return false;
    return true;
}

ModuleComplex dual(const ModuleComplex& c, const AlgebraPtr& opposite)
{
    ModuleComplex out;
    out.alg = opposite;
    if (c.empty())
        return out;
    out.low = -c.high();
    for (int n = out.low; n <= -c.low; ++n)
        out.terms.push_back(dual(c.term(-n), opposite));
    for (int n = out.low; n < -c.low; ++n)
        out.diffs.push_back(c.diff(-n - 1).transpose());
    return out;
}

ModuleComplex restrict_along(const ModuleComplex& c, const QuotientAlgebra& q, const AlgebraPtr& a)
{
    ModuleComplex out;
    out.alg = a;
    out.low = c.low;
    for (const auto& t : c.terms)
        out.terms.push_back(restrict_along(t, q, a));
    out.diffs = c.diffs;
    return out;
}

ModuleComplex restrict_to_corner(const ModuleComplex& c, const CornerAlgebra& corner)
{
    ModuleComplex out;
    out.alg = corner.algebra;
    out.low = c.low;
    std::vector<std::vector<std::size_t>> kept(c.terms.size());
    for (std::size_t k = 0; k < c.terms.size(); ++k)
        out.terms.push_back(restrict_to_corner(c.terms[k], corner, &kept[k]));
    const Field& f = c.alg->field();
    for (std::size_t k = 0; k < c.diffs.size(); ++k) {
        Mat d(f, kept[k].size(), kept[k + 1].size());
        for (std::size_t i = 0; i < kept[k].size(); ++i)
            for (std::size_t j = 0; j < kept[k + 1].size(); ++j)
                d(i, j) = c.diffs[k](kept[k][i], kept[k + 1][j]);
        out.diffs.push_back(std::move(d));
    }
    return out;
}

bool is_quasi_iso(const ModuleComplex& c, const ModuleComplex& d, const ModuleChainMap& f)
{
    const Field& fld = c.alg->field();
    auto comp = [&](int n) {
        std::size_t k = static_cast<std::size_t>(n - f.low);
        if (n >= f.low && k < f.components.size())
            return f.components[k];
        return Mat(fld, c.term(n).dim(), d.term(n).dim());
    };
    if (c.empty() && d.empty())
        return true;
    int lo = std::min(c.empty() ? d.low : c.low - 1, d.empty() ? c.low - 1 : d.low);
    int hi = std::max(c.empty() ? d.high() : c.high() - 1, d.empty() ? c.high() - 1 : d.high());
    // cone^n = C^{n+1} (+) D^n with row matrix [[-dC, f], [0, dD]]
    auto cone_diff = [&](int n) {
        Mat top = hstack(-c.diff(n + 1), comp(n + 1));
        Mat bottom = hstack(Mat(fld, d.term(n).dim(), c.term(n + 2).dim()), d.diff(n));
        return vstack(top, bottom);
    };
    for (int n = lo; n <= hi; ++n) {
        std::size_t dim = c.term(n + 1).dim() + d.term(n).dim();
        if (dim != rank(cone_diff(n)) + rank(cone_diff(n - 1)))
            return false;
    }
    return true;
}

} // namespace smckit
