#include "smckit/homotopy.hpp"

#include "smckit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace smckit {

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (i != skip)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> iota_vec(std::size_t n)
{
    std::vector<std::size_t> out(n);
    std::iota(out.begin(), out.end(), 0);
    return out;
}

const AlgebraPtr& algebra_of(const ChainMap& f)
{
    if (f.source.alg)
        return f.source.alg;
    if (!f.target.alg)
        throw std::logic_error("chain map without an algebra");
    return f.target.alg;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

// ---------------------------------------------------------------- shifts and sums

ProjComplex shift(const ProjComplex& x, int n)
{
    ProjComplex y = x;
    if (y.is_zero())
        return y;
    y.low = x.low - n;
    if (n % 2 != 0)
        for (auto& d : y.diffs)
            d = -d;
    return y;
}

ChainMap shift(const ChainMap& f, int n)
{
    ChainMap g(shift(f.source, n), shift(f.target, n));
    for (const auto& [p, m] : f.comps)
        g.comps[p - n] = m;
    return g;
}

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y)
{
    if (x.is_zero())
        return y;
    if (y.is_zero())
        return x;
    ProjComplex s(x.alg);
    int lo = std::min(x.low, y.low), hi = std::max(x.high(), y.high());
    for (int n = lo; n <= hi; ++n)
        s.set_term(n, concat(x.term(n), y.term(n)));
    for (int n = lo; n < hi; ++n)
        s.set_diff(n, block_diag(x.diff(n), y.diff(n)));
    s.trim();
    return s;
}

ProjComplex power(const ProjComplex& x, std::size_t k)
{
    ProjComplex out(x.alg);
    for (std::size_t i = 0; i < k; ++i)
        out = direct_sum(out, x);
    return out;
}

ChainMap compose(const ChainMap& f, const ChainMap& g)
{
    ChainMap h(f.source, g.target);
    const Algebra& a = *algebra_of(f);
    for (const auto& [n, fm] : f.comps) {
        auto it = g.comps.find(n);
        if (it == g.comps.end())
            continue;
        if (fm.rows() != it->second.cols())
            throw std::logic_error("compose: intermediate complexes differ");
        h.set(n, mul(a, it->second, fm));
    }
    return h;
}

ChainMap add(const ChainMap& f, const ChainMap& g)
{
    ChainMap h = f;
    for (const auto& [n, gm] : g.comps)
        h.set(n, h.comp(n) + gm);
    return h;
}

ChainMap scale(const ChainMap& f, const Scalar& s)
{
    ChainMap h(f.source, f.target);
    for (const auto& [n, m] : f.comps)
        h.set(n, m.scaled(s));
    return h;
}

// ---------------------------------------------------------------- cones

Triangle cone(const ChainMap& f)
{
    const ProjComplex& x = f.source;
    const ProjComplex& y = f.target;
    Triangle t;
    t.x = x;
    t.y = y;
    t.u = f;
    ProjComplex c(algebra_of(f));
    if (!x.is_zero() || !y.is_zero()) {
        int lo = x.is_zero() ? y.low : (y.is_zero() ? x.low - 1 : std::min(x.low - 1, y.low));
        int hi = x.is_zero() ? y.high() : (y.is_zero() ? x.high() - 1 : std::max(x.high() - 1, y.high()));
        for (int p = lo; p <= hi; ++p)
            c.set_term(p, concat(x.term(p + 1), y.term(p)));
        for (int p = lo; p < hi; ++p) {
            ElemMatrix top = hstack(-x.diff(p + 1), ElemMatrix(x.term(p + 2).size(), y.term(p).size()));
            ElemMatrix bottom = hstack(f.comp(p + 1), y.diff(p));
            c.set_diff(p, vstack(top, bottom));
        }
        c.trim();
    }
    t.z = c;
    t.v = ChainMap(y, c);
    t.w = ChainMap(c, shift(x, 1));
    for (int p = c.low; p <= c.high() && !c.is_zero(); ++p) {
        std::size_t nx = x.term(p + 1).size(), ny = y.term(p).size();
        if (ny > 0)
            t.v.set(p, vstack(ElemMatrix(nx, ny), ElemMatrix::identity(*c.alg, y.term(p))));
        if (nx > 0)
            t.w.set(p, hstack(ElemMatrix::identity(*c.alg, x.term(p + 1)), ElemMatrix(nx, ny)));
    }
    return t;
}

Cocone cocone(const ChainMap& f)
{
    Triangle t = cone(f);
    Cocone out;
    out.c = shift(t.z, -1);
    ChainMap w = shift(t.w, -1);
    out.to_source = ChainMap(out.c, f.source);
    for (const auto& [n, m] : w.comps)
        out.to_source.set(n, m);
    return out;
}

// ---------------------------------------------------------------- Hom complex

HomComplex::HomComplex(const ProjComplex& x, const ProjComplex& y) : x_(x), y_(y)
{
    if (!x.is_zero() && !y.is_zero()) {
        min_deg_ = y.low - x.high();
        max_deg_ = y.high() - x.low;
    }
}

const std::vector<HomComplex::Block>& HomComplex::blocks(int n) const
{
    auto it = blocks_.find(n);
    if (it != blocks_.end())
        return it->second;
    std::vector<Block> out;
    std::size_t off = 0;
    if (n >= min_deg_ && n <= max_deg_) {
        const Algebra& a = *x_.alg;
        for (int p = x_.low; p <= x_.high(); ++p) {
            const auto& xs = x_.term(p);
            const auto& ys = y_.term(p + n);
            for (std::size_t t = 0; t < ys.size(); ++t)
                for (std::size_t s = 0; s < xs.size(); ++s) {
                    const auto& c = a.corner(ys[t], xs[s]);
                    out.push_back({p, t, s, off, &c});
                    off += c.size();
                }
        }
    }
    dims_[n] = off;
    return blocks_.emplace(n, std::move(out)).first->second;
}

std::size_t HomComplex::dim(int n) const
{
    blocks(n);
    return dims_.at(n);
}

Mat HomComplex::differential(int n) const
{
    const Field& f = x_.alg ? x_.alg->field() : y_.alg->field();
    const auto& src = blocks(n);
    const auto& dst = blocks(n + 1);
    Mat out(f, dim(n + 1), dim(n));
    if (src.empty() || dst.empty())
        return out;
    const Algebra& a = *x_.alg;
    // offsets of the target blocks indexed by (p, t, s)
    std::map<int, std::pair<std::size_t, std::size_t>> first; // p -> (index of first block, |X^p|)
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (!first.count(dst[i].p))
            first[dst[i].p] = {i, x_.term(dst[i].p).size()};
    auto dst_block = [&](int p, std::size_t t, std::size_t s) -> const Block& {
        auto [i0, ns] = first.at(p);
        return dst[i0 + t * ns + s];
    };
    auto add_to = [&](const Block& b, const Elem& e, std::size_t col) {
        for (const auto& [idx, c] : e.terms())
            out(b.offset + a.corner_position(idx), col) += c;
    };
    const Scalar sign = (n % 2 == 0) ? -f.one() : f.one(); // -(-1)^n
    for (const auto& blk : src) {
        ElemMatrix dy = y_.diff(blk.p + n);
        ElemMatrix dx = x_.diff(blk.p - 1);
        for (std::size_t k = 0; k < blk.corner->size(); ++k) {
            std::size_t col = blk.offset + k;
            Elem c = a.basis_elem((*blk.corner)[k]);
            // d_Y phi, landing in degree p of Hom^{n+1}
            for (std::size_t u = 0; u < dy.rows(); ++u) {
                if (dy(u, blk.t).is_zero())
                    continue;
                add_to(dst_block(blk.p, u, blk.s), a.multiply(dy(u, blk.t), c), col);
            }
            // -(-1)^n phi d_X, landing in degree p - 1
            for (std::size_t r = 0; r < dx.cols(); ++r) {
                if (dx(blk.s, r).is_zero())
                    continue;
                add_to(dst_block(blk.p - 1, blk.t, r), a.multiply(c, dx(blk.s, r)).scaled(sign), col);
            }
        }
    }
    return out;
}

Vec HomComplex::to_vector(int n, const ChainMap& f) const
{
    const Field& fld = x_.alg ? x_.alg->field() : y_.alg->field();
    Vec v = zero_vec(fld, dim(n));
    for (const auto& blk : blocks(n)) {
        ElemMatrix m = f.comp(blk.p);
        if (m.rows() == 0 || m.cols() == 0)
            continue;
        for (const auto& [idx, c] : m(blk.t, blk.s).terms()) {
            std::size_t pos = x_.alg->corner_position(idx);
            if (pos >= blk.corner->size() || (*blk.corner)[pos] != idx)
                throw std::logic_error("to_vector: entry outside its corner");
            v[blk.offset + pos] = c;
        }
    }
    return v;
}

ChainMap HomComplex::to_map(int n, const Vec& v) const
{
    ChainMap f(x_, shift(y_, n));
    std::map<int, ElemMatrix> comps;
    for (const auto& blk : blocks(n)) {
        auto it = comps.find(blk.p);
        if (it == comps.end())
            it = comps.emplace(blk.p, ElemMatrix(y_.term(blk.p + n).size(), x_.term(blk.p).size())).first;
        for (std::size_t k = 0; k < blk.corner->size(); ++k)
            if (!v[blk.offset + k].is_zero())
                it->second(blk.t, blk.s).add_term((*blk.corner)[k], v[blk.offset + k]);
    }
    for (auto& [p, m] : comps)
        f.set(p, std::move(m));
    return f;
}

HomSpace hom_space(const HomComplex& h, int n)
{
    HomSpace out;
    out.degree = n;
    std::size_t d = h.dim(n);
    if (d == 0)
        return out;
    const Field& f = h.source().alg->field();
    out.cocycles = kernel_basis(h.differential(n));
    Subspace bound(f, d);
    Mat prev = h.differential(n - 1);
    for (std::size_t c = 0; c < prev.cols(); ++c)
        bound.add(prev.col(c));
    for (const auto& z : out.cocycles)
        if (bound.add(z))
            out.representatives.push_back(z);
    return out;
}

std::size_t HomTable::dim(int n) const
{
    auto it = dims.find(n);
    return it == dims.end() ? 0 : it->second;
}

HomTable hom_table(const ProjComplex& x, const ProjComplex& y, bool with_bases)
{
    HomComplex h(x, y);
    HomTable t;
    t.min_degree = h.min_degree();
    t.max_degree = h.max_degree();
    for (int n = t.min_degree; n <= t.max_degree; ++n) {
        HomSpace s = hom_space(h, n);
        t.dims[n] = s.dim();
        if (with_bases)
            for (const auto& r : s.representatives)
                t.bases[n].push_back(h.to_map(n, r));
    }
    return t;
}

std::size_t hom_dim(const ProjComplex& x, const ProjComplex& y, int n)
{
    HomComplex h(x, y);
    if (n < h.min_degree() || n > h.max_degree())
        return 0;
    return hom_space(h, n).dim();
}

std::vector<ChainMap> hom_basis(const ProjComplex& x, const ProjComplex& y, int n)
{
    HomComplex h(x, y);
    std::vector<ChainMap> out;
    if (n < h.min_degree() || n > h.max_degree())
        return out;
    for (const auto& r : hom_space(h, n).representatives)
        out.push_back(h.to_map(n, r));
    return out;
}

bool is_null_homotopic(const ChainMap& f)
{
    HomComplex h(f.source, f.target);
    if (h.dim(0) == 0)
        return true;
    Vec v = h.to_vector(0, f);
    Subspace bound(f.source.alg->field(), v.size());
    Mat prev = h.differential(-1);
    for (std::size_t c = 0; c < prev.cols(); ++c)
        bound.add(prev.col(c));
    return bound.contains(v);
}

// ---------------------------------------------------------------- minimalization

Elem local_inverse(const Algebra& a, int v, const Elem& x)
{
    auto c = x.coeff(a.idempotent(v));
    if (!c || c->is_zero())
        throw std::domain_error("local_inverse: element is not invertible");
    Scalar ci = c->inverse();
    Elem r = x - a.unit_elem(v).scaled(*c);
    Elem u = r.scaled(-ci);
    Elem sum = a.unit_elem(v), pow = a.unit_elem(v);
    for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
        pow = a.multiply(pow, u);
        if (pow.is_zero())
            return sum.scaled(ci);
        sum += pow;
    }
    throw std::logic_error("local_inverse: radical element is not nilpotent");
}

namespace {

bool invertible_entry(const Algebra& a, const Elem& e, int vt, int vs)
{
    if (vt != vs || e.is_zero())
        return false;
    auto c = e.coeff(a.idempotent(vt));
    return c && !c->is_zero();
}

} // namespace

bool is_minimal(const ProjComplex& x)
{
    for (int n = x.low; n < x.high(); ++n) {
        ElemMatrix d = x.diff(n);
        for (std::size_t t = 0; t < d.rows(); ++t)
            for (std::size_t s = 0; s < d.cols(); ++s)
                if (invertible_entry(*x.alg, d(t, s), x.term(n + 1)[t], x.term(n)[s]))
                    return false;
    }
    return true;
}

Minimal minimalize(const ProjComplex& x)
{
    Minimal out;
    if (x.is_zero()) {
        out.complex = x;
        out.to = ChainMap(x, x);
        out.from = ChainMap(x, x);
        return out;
    }
    const Algebra& a = *x.alg;
    const int low = x.low, high = x.high();
    auto idx = [&](int n) { return static_cast<std::size_t>(n - low); };
    std::vector<std::vector<int>> terms = x.terms;
    std::vector<ElemMatrix> diffs = x.diffs;
    std::vector<ElemMatrix> f, g; // f: X -> cur, g: cur -> X
    for (int n = low; n <= high; ++n) {
        f.push_back(ElemMatrix::identity(a, x.term(n)));
        g.push_back(ElemMatrix::identity(a, x.term(n)));
    }
    bool progress = true;
    while (progress) {
        progress = false;
        for (int k = low; k < high && !progress; ++k) {
            const ElemMatrix& d = diffs[idx(k)];
            for (std::size_t t = 0; t < d.rows() && !progress; ++t)
                for (std::size_t s = 0; s < d.cols() && !progress; ++s) {
                    int v = terms[idx(k)][s];
                    if (!invertible_entry(a, d(t, s), terms[idx(k + 1)][t], v))
                        continue;
                    progress = true;
                    const std::size_t nk = terms[idx(k)].size(), nk1 = terms[idx(k + 1)].size();
                    auto B = all_but(nk, s), C = all_but(nk1, t);
                    ElemMatrix phi_inv(1, 1);
                    phi_inv(0, 0) = local_inverse(a, v, d(t, s));
                    ElemMatrix beta = d.select({t}, B);
                    ElemMatrix delta = d.select(C, {s});
                    ElemMatrix eps = d.select(C, B);
                    ElemMatrix delta_phi = mul(a, delta, phi_inv);     // |C| x 1
                    ElemMatrix phi_beta = mul(a, phi_inv, beta);       // 1 x |B|
                    ElemMatrix new_d = eps - mul(a, delta_phi, beta);
                    // neighbouring differentials
                    if (k - 1 >= low)
                        diffs[idx(k - 1)] = diffs[idx(k - 1)].select(B, iota_vec(diffs[idx(k - 1)].cols()));
                    if (k + 1 < high)
                        diffs[idx(k + 1)] = diffs[idx(k + 1)].select(iota_vec(diffs[idx(k + 1)].rows()), C);
                    diffs[idx(k)] = new_d;
                    // homotopy equivalences
                    ElemMatrix& fk = f[idx(k)];
                    fk = fk.select(B, iota_vec(fk.cols()));
                    ElemMatrix& fk1 = f[idx(k + 1)];
                    fk1 = fk1.select(C, iota_vec(fk1.cols())) -
                          mul(a, delta_phi, fk1.select({t}, iota_vec(fk1.cols())));
                    ElemMatrix& gk = g[idx(k)];
                    gk = gk.select(iota_vec(gk.rows()), B) -
                         mul(a, gk.select(iota_vec(gk.rows()), {s}), phi_beta);
                    ElemMatrix& gk1 = g[idx(k + 1)];
                    gk1 = gk1.select(iota_vec(gk1.rows()), C);
                    terms[idx(k)].erase(terms[idx(k)].begin() + static_cast<long>(s));
                    terms[idx(k + 1)].erase(terms[idx(k + 1)].begin() + static_cast<long>(t));
                }
        }
    }
    ProjComplex m(x.alg);
    for (int n = low; n <= high; ++n)
        if (!terms[idx(n)].empty())
            m.set_term(n, terms[idx(n)]);
    if (!m.is_zero()) {
        for (int n = m.low; n < m.high(); ++n)
            if (n >= low && n < high)
                m.set_diff(n, diffs[idx(n)]);
    }
    out.complex = m;
    out.to = ChainMap(x, m);
    out.from = ChainMap(m, x);
    for (int n = low; n <= high; ++n) {
        if (terms[idx(n)].empty())
            continue;
        out.to.set(n, f[idx(n)]);
        out.from.set(n, g[idx(n)]);
    }
    return out;
}

bool is_contractible(const ProjComplex& x) { return minimalize(x).complex.is_zero(); }

// ---------------------------------------------------------------- isomorphism

namespace {

std::optional<ElemMatrix> invert_matrix(const Algebra& a, const std::vector<int>& src, const std::vector<int>& tgt,
                                        const ElemMatrix& m)
{
    if (src.size() != tgt.size())
        return std::nullopt;
    const Field& f = a.field();
    const std::size_t n = src.size();
    ElemMatrix s_inv(n, n);
    ElemMatrix semi(n, n);
    for (int v = 0; v < static_cast<int>(a.num_vertices()); ++v) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 0; i < n; ++i) {
            if (tgt[i] == v)
                rows.push_back(i);
            if (src[i] == v)
                cols.push_back(i);
        }
        if (rows.size() != cols.size())
            return std::nullopt;
        if (rows.empty())
            continue;
        Mat blk(f, rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) {
                auto c = m(rows[i], cols[j]).coeff(a.idempotent(v));
                if (c) {
                    blk(i, j) = *c;
                    semi(rows[i], cols[j]) = Elem(a.idempotent(v), *c);
                }
            }
        auto inv = inverse(blk);
        if (!inv)
            return std::nullopt;
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j)
                s_inv(cols[i], rows[j]) = Elem(a.idempotent(v), (*inv)(i, j));
    }
    ElemMatrix nil = mul(a, s_inv, m - semi); // radical entries, nilpotent
    ElemMatrix neg = -nil;
    ElemMatrix sum = ElemMatrix::identity(a, src), pw = ElemMatrix::identity(a, src);
    for (std::size_t k = 0;; ++k) {
        pw = mul(a, pw, neg);
        if (pw.is_zero())
            break;
        if (k > a.dim() + 1)
            throw std::logic_error("invert_matrix: radical part is not nilpotent");
        sum = sum + pw;
    }
    ElemMatrix inv = mul(a, sum, s_inv);
    if (!(mul(a, m, inv) == ElemMatrix::identity(a, tgt)))
        throw std::logic_error("invert_matrix: series inverse failed");
    return inv;
}

} // namespace

std::optional<ChainMap> invert_components(const ChainMap& f)
{
    ChainMap g(f.target, f.source);
    const auto& x = f.source;
    const auto& y = f.target;
    if (x.is_zero() && y.is_zero())
        return g;
    if (x.signature() != y.signature())
        return std::nullopt;
    const Algebra& a = *algebra_of(f);
    for (int n = x.low; n <= x.high(); ++n) {
        if (x.term(n).empty())
            continue;
        auto inv = invert_matrix(a, x.term(n), y.term(n), f.comp(n));
        if (!inv)
            return std::nullopt;
        g.set(n, *inv);
    }
    return g;
}

IsoResult is_iso(const ProjComplex& x, const ProjComplex& y, const Options& opts)
{
    IsoResult res;
    Minimal mx = minimalize(x), my = minimalize(y);
    if (mx.complex.signature() != my.complex.signature()) {
        res.certified = true;
        res.reason = "minimal term multisets differ";
        return res;
    }
    if (mx.complex.is_zero()) {
        res.iso = res.certified = true;
        res.reason = "both contractible";
        res.f = ChainMap(x, y);
        res.g = ChainMap(y, x);
        return res;
    }
    const AlgebraPtr& alg = mx.complex.alg;
    const Field& fld = alg->field();
    HomComplex h(mx.complex, my.complex);
    HomSpace hs = hom_space(h, 0);
    const std::size_t k = hs.dim();
    if (k == 0) {
        res.certified = true;
        res.reason = "Hom(X, Y) = 0";
        return res;
    }
    const std::size_t D = mx.complex.total_summands();

    auto try_vector = [&](const Vec& v) -> bool {
        ChainMap f = h.to_map(0, v);
        ChainMap fm(mx.complex, my.complex);
        for (const auto& [n, m] : f.comps)
            fm.set(n, m);
        auto g = invert_components(fm);
        if (!g)
            return false;
        ChainMap ft = compose(compose(mx.to, fm), my.from);
        ChainMap gt = compose(compose(my.to, *g), mx.from);
        if (opts.verify_witness) {
            if (!is_null_homotopic(add(compose(ft, gt), scale(identity_map(x), -fld.one()))) ||
                !is_null_homotopic(add(compose(gt, ft), scale(identity_map(y), -fld.one()))))
                throw std::logic_error("is_iso: witness failed verification");
        }
        res.iso = res.certified = true;
        res.reason = "invertible chain map found";
        res.f = ft;
        res.g = gt;
        return true;
    };
    auto combine = [&](const std::vector<Scalar>& coeffs) {
        Vec v = zero_vec(fld, h.dim(0));
        for (std::size_t i = 0; i < k; ++i)
            if (!coeffs[i].is_zero())
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!hs.representatives[i][j].is_zero())
                        v[j] += coeffs[i] * hs.representatives[i][j];
        return v;
    };

    double grid = std::pow(static_cast<double>(D + 1), static_cast<double>(k));
    bool exhaustive = opts.certify && grid <= static_cast<double>(opts.certify_cap) &&
                      (fld.is_rational() || fld.characteristic() > D);
    if (exhaustive) {
        std::vector<std::size_t> digits(k, 0);
        while (true) {
            std::vector<Scalar> coeffs;
            for (auto d : digits)
                coeffs.push_back(fld.from_int(static_cast<long long>(d)));
            if (try_vector(combine(coeffs)))
                return res;
            std::size_t i = 0;
            while (i < k && ++digits[i] > D)
                digits[i++] = 0;
            if (i == k)
                break;
        }
        res.certified = true;
        res.reason = "no invertible map on the exhaustive grid";
        return res;
    }
    std::mt19937_64 rng(opts.seed);
    for (std::size_t trial = 0; trial < opts.iso_trials; ++trial) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < k; ++i)
            coeffs.push_back(fld.random(rng));
        if (try_vector(combine(coeffs)))
            return res;
    }
    res.certified = false;
    double ratio = static_cast<double>(D) / fld.sample_size();
    res.error_bound = std::pow(std::min(1.0, ratio), static_cast<double>(opts.iso_trials));
    res.reason = "no invertible map in " + std::to_string(opts.iso_trials) + " random trials";
    return res;
}

// ---------------------------------------------------------------- resolutions

Resolved resolve_complex(const ModuleComplex& c, const Options& opts)
{
    const AlgebraPtr& alg = c.alg;
    const Algebra& a = *alg;
    const Field& fld = a.field();
    Resolved out;
    ProjComplex p(alg);
    if (c.empty()) {
        out.complex = p;
        return out;
    }
    std::map<int, Mat> pi;               // P^n -> C^n
    std::map<int, Module> pmod;          // module of P^n
    auto pm = [&](int n) -> const Module& {
        auto it = pmod.find(n);
        if (it == pmod.end())
            it = pmod.emplace(n, projective_sum(alg, p.term(n))).first;
        return it->second;
    };
    auto pi_at = [&](int n) -> Mat {
        auto it = pi.find(n);
        if (it != pi.end())
            return it->second;
        return Mat(fld, pm(n).dim(), c.term(n).dim());
    };
    auto rad = a.radical_basis();

    for (int n = c.high();; --n) {
        if (n < c.low - static_cast<int>(opts.pd_bound) - 1)
            throw BoundExceeded("resolution exceeds the projective dimension bound " +
                                std::to_string(opts.pd_bound) + " (possibly infinite projective dimension)");
        const Module& p1 = pm(n + 1);
        const Module cn = c.term(n);
        const std::size_t np = p1.dim(), nc = cn.dim(), dim = np + nc;
        if (dim == 0) {
            if (n < c.low)
                break;
            continue;
        }
        // cone differential out of degree n (row convention)
        Mat dp = module_map(a, p.term(n + 1), p.term(n + 2), p.diff(n + 1));
        Mat delta = vstack(hstack(-dp, pi_at(n + 1)),
                           hstack(Mat(fld, nc, pm(n + 2).dim()), c.diff(n)));
        std::vector<int> vert;
        for (std::size_t k = 0; k < np; ++k)
            vert.push_back(p1.vertex(k));
        for (std::size_t k = 0; k < nc; ++k)
            vert.push_back(cn.vertex(k));
        auto act = [&](const Vec& z, std::size_t r) {
            Vec out = zero_vec(fld, dim);
            Vec zp(z.begin(), z.begin() + static_cast<long>(np));
            Vec zc(z.begin() + static_cast<long>(np), z.end());
            Vec ap = np ? p1.action(r).apply_left(zp) : Vec{};
            Vec ac = nc ? cn.action(r).apply_left(zc) : Vec{};
            std::copy(ap.begin(), ap.end(), out.begin());
            std::copy(ac.begin(), ac.end(), out.begin() + static_cast<long>(np));
            return out;
        };
        // cycles, vertex by vertex
        const std::size_t nv = a.num_vertices();
        std::vector<std::vector<Vec>> cycles(nv);
        for (std::size_t v = 0; v < nv; ++v) {
            std::vector<std::size_t> rows;
            for (std::size_t k = 0; k < dim; ++k)
                if (vert[k] == static_cast<int>(v))
                    rows.push_back(k);
            if (rows.empty())
                continue;
            Mat sub(fld, rows.size(), delta.cols());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t j = 0; j < delta.cols(); ++j)
                    sub(i, j) = delta(rows[i], j);
            for (const auto& z : left_kernel_basis(sub)) {
                Vec full = zero_vec(fld, dim);
                for (std::size_t i = 0; i < rows.size(); ++i)
                    full[rows[i]] = z[i];
                cycles[v].push_back(std::move(full));
            }
        }
        // R = Z rad + B, vertex by vertex
        std::vector<Subspace> rspace(nv, Subspace(fld, dim));
        Mat dc_prev = c.diff(n - 1);
        const Module cprev = c.term(n - 1);
        for (std::size_t r = 0; r < dc_prev.rows(); ++r) {
            Vec b = zero_vec(fld, dim);
            for (std::size_t j = 0; j < nc; ++j)
                b[np + j] = dc_prev(r, j);
            rspace[static_cast<std::size_t>(cprev.vertex(r))].add(b);
        }
        for (std::size_t u = 0; u < nv; ++u)
            for (const auto& z : cycles[u])
                for (auto r : rad) {
                    if (a.basis(r).source != static_cast<int>(u))
                        continue;
                    Vec zr = act(z, r);
                    if (!is_zero(zr))
                        rspace[static_cast<std::size_t>(a.basis(r).target)].add(zr);
                }
        std::vector<std::pair<int, Vec>> gens;
        for (std::size_t v = 0; v < nv; ++v)
            for (const auto& z : cycles[v])
                if (rspace[v].add(z))
                    gens.emplace_back(static_cast<int>(v), z);
        if (gens.empty()) {
            if (n < c.low)
                break;
            continue;
        }
        // new summands of P^n
        std::vector<int> verts;
        for (const auto& g : gens)
            verts.push_back(g.first);
        p.set_term(n, verts);
        pmod.erase(n);
        ElemMatrix d(p.term(n + 1).size(), verts.size());
        auto offs = summand_offsets(a, p.term(n + 1));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const Vec& z = gens[j].second;
            for (std::size_t t = 0; t < p.term(n + 1).size(); ++t) {
                const auto& rows = a.row_basis(p.term(n + 1)[t]);
                Elem e;
                for (std::size_t k = 0; k < rows.size(); ++k)
                    e.add_term(rows[k], -z[offs[t] + k]);
                d(t, j) = e;
            }
        }
        if (!p.term(n + 1).empty())
            p.set_diff(n, d);
        // augmentation rows: z_C . rho_C(a) for a in row_basis(v)
        const Module& pn = pm(n);
        Mat pin(fld, pn.dim(), nc);
        auto noffs = summand_offsets(a, verts);
        for (std::size_t j = 0; j < gens.size(); ++j) {
            const Vec& z = gens[j].second;
            Vec zc(z.begin() + static_cast<long>(np), z.end());
            const auto& rows = a.row_basis(verts[j]);
            for (std::size_t k = 0; k < rows.size(); ++k) {
                Vec img = nc ? cn.action(rows[k]).apply_left(zc) : Vec{};
                for (std::size_t col = 0; col < nc; ++col)
                    pin(noffs[j] + k, col) = img[col];
            }
        }
        pi.insert_or_assign(n, pin);
    }
    p.trim();
    Minimal m = minimalize(p);
    out.complex = m.complex;
    out.augmentation.low = m.complex.low;
    for (int n = m.complex.low; n <= m.complex.high() && !m.complex.is_zero(); ++n) {
        Mat g = module_map(a, m.complex.term(n), p.term(n), m.from.comp(n));
        out.augmentation.components.push_back(g * pi_at(n));
    }
    return out;
}

Resolved projective_resolution(const Module& m, std::size_t max_len)
{
    Options o;
    o.pd_bound = max_len;
    return resolve_complex(stalk(m, 0), o);
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t bound)
{
    std::size_t gd = 0;
    for (int v = 0; v < static_cast<int>(a->num_vertices()); ++v) {
        try {
            Resolved r = projective_resolution(Module::simple(a, v), bound);
            gd = std::max(gd, static_cast<std::size_t>(-r.complex.low));
        } catch (const BoundExceeded&) {
            return std::nullopt;
        }
    }
    return gd;
}

ProjComplex simple_complex(const AlgebraPtr& a, int i, int degree, const Options& opts)
{
    return resolve_complex(stalk(Module::simple(a, i), degree), opts).complex;
}

ProjComplex module_complex(const Module& m, int degree, const Options& opts)
{
    return resolve_complex(stalk(m, degree), opts).complex;
}

} // namespace smckit
