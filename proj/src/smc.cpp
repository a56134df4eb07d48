#include "smckit/smc.hpp"

#include "smckit/errors.hpp"

#include <gmpxx.h>

#include <functional>

namespace smckit {

namespace {

TruncationStats g_stats;

std::string shift_suffix(int n)
{
    if (n == 0)
        return "";
    return "[" + std::to_string(n) + "]";
}

long determinant(std::vector<std::vector<long>> rows)
{
    const std::size_t n = rows.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = rows[i][j];
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            mpq_class f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det.get_num().get_si();
}

bool negative_homs_vanish(const ProjComplex& x, const ProjComplex& y)
{
    HomTable t = hom_table(x, y);
    for (const auto& [n, d] : t.dims)
        if (n < 0 && d != 0)
            return false;
    return true;
}

ChainMap retarget(const ChainMap& f, const ProjComplex& source, const ProjComplex& target)
{
    ChainMap g(source, target);
    for (const auto& [n, m] : f.comps)
        g.set(n, m);
    return g;
}

} // namespace

std::string to_string(Evidence e)
{
    switch (e) {
    case Evidence::StandardSimples: return "standard simples";
    case Evidence::GluedFrom: return "glued";
    case Evidence::MutatedFrom: return "mutated";
    case Evidence::UserAssumed: return "user assumed";
    }
    return "";
}

std::string to_string(Order o)
{
    switch (o) {
    case Order::Equal: return "equal";
    case Order::Greater: return ">=";
    case Order::Less: return "<=";
    case Order::Incomparable: return "incomparable";
    }
    return "";
}

SmcReport validate_smc(const SMC& s)
{
    SmcReport r;
    const std::size_t k = s.size();
    auto name = [&](std::size_t i) { return describe(s.objects[i]); };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            HomTable t = hom_table(s.objects[i], s.objects[j]);
            std::size_t d0 = t.dim(0);
            if (d0 != (i == j ? 1u : 0u)) {
                r.axiom1 = false;
                r.witnesses.push_back("dim Hom(" + name(i) + ", " + name(j) + ") = " + std::to_string(d0));
            }
            for (const auto& [n, d] : t.dims)
                if (n < 0 && d != 0) {
                    r.axiom3 = false;
                    r.witnesses.push_back("dim Hom(" + name(i) + ", " + name(j) + shift_suffix(n) +
                                          ") = " + std::to_string(d));
                }
        }
    if (s.alg && k == s.alg->num_vertices()) {
        std::vector<std::vector<long>> rows;
        for (const auto& x : s.objects)
            rows.push_back(x.is_zero() ? std::vector<long>(k, 0) : x.euler_class());
        r.euler_det = determinant(rows);
        r.euler_unimodular = r.euler_det == 1 || r.euler_det == -1;
    }
    if (!r.euler_unimodular)
        r.witnesses.push_back(k == (s.alg ? s.alg->num_vertices() : 0)
                                  ? "Euler matrix has determinant " + std::to_string(r.euler_det)
                                  : "collection has " + std::to_string(k) + " objects, expected " +
                                        std::to_string(s.alg ? s.alg->num_vertices() : 0));
    r.evidence = to_string(s.certificate.kind);
    if (!s.certificate.detail.empty())
        r.evidence += " (" + s.certificate.detail + ")";
    return r;
}

bool member_aisle(const ProjComplex& t, const SMC& s)
{
    for (const auto& x : s.objects)
        if (!negative_homs_vanish(t, x))
            return false;
    return true;
}

bool member_coaisle(const ProjComplex& t, const SMC& s)
{
    for (const auto& x : s.objects)
        if (!negative_homs_vanish(x, t))
            return false;
    return true;
}

Truncation truncate(const ProjComplex& t, const SMC& s, int threshold, const Options& opts)
{
    Truncation out;
    out.t = t;
    out.threshold = threshold;
    Minimal m = minimalize(t);
    ProjComplex cur = m.complex;
    ChainMap to_t = retarget(m.from, cur, t);
    while (true) {
        // top layer: the largest b with Hom(cur, S_i[-b]) != 0
        std::optional<int> best;
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            HomTable h = hom_table(cur, s.objects[i]);
            for (const auto& [n, d] : h.dims)
                if (d != 0 && (!best || -n > *best)) {
                    best = -n;
                    best_i = i;
                }
        }
        if (!best || *best < threshold)
            break;
        if (out.strips.size() >= opts.strip_cap)
            throw BoundExceeded("truncation exceeded " + std::to_string(opts.strip_cap) +
                                " strips; the object may lie outside the span of the collection");
        auto basis = hom_basis(cur, s.objects[best_i], -*best);
        Cocone cc = cocone(basis.front());
        Minimal mc = minimalize(cc.c);
        ChainMap step = compose(mc.from, retarget(cc.to_source, cc.c, cur));
        to_t = compose(step, to_t);
        cur = mc.complex;
        to_t = retarget(to_t, cur, t);
        out.strips.emplace_back(best_i, *best);
    }
    out.u = cur;
    out.u_to_t = to_t;
    Triangle tri = cone(to_t);
    Minimal mv = minimalize(tri.z);
    out.v = mv.complex;
    out.t_to_v = retarget(compose(tri.v, mv.to), t, out.v);
    out.u_member = member_aisle(shift(out.u, threshold - 1), s);
    out.v_member = member_coaisle(shift(out.v, threshold), s);
    auto et = t.euler_class(), eu = out.u.euler_class(), ev = out.v.euler_class();
    out.cone_ok = out.u_to_t.is_chain_map() && out.t_to_v.is_chain_map() &&
                  is_null_homotopic(compose(out.u_to_t, out.t_to_v));
    for (std::size_t k = 0; k < et.size() && out.cone_ok; ++k)
        out.cone_ok = (k < eu.size() ? eu[k] : 0) + (k < ev.size() ? ev[k] : 0) == et[k];
    ++g_stats.calls;
    if (!out.u_member || !out.v_member || !out.cone_ok)
        ++g_stats.failures;
    return out;
}

TruncationStats truncation_stats() { return g_stats; }

SMC x_image(const SMC& sx, const Recollement& r)
{
    SMC out;
    out.alg = r.algebra();
    for (const auto& x : sx.objects)
        out.objects.push_back(r.i_star(x));
    return out;
}

Glued glue(const SMC& sx, const SMC& sy, const Recollement& r)
{
    Glued g;
    SMC ix = x_image(sx, r);
    g.smc = ix;
    for (const auto& y : sy.objects) {
        GluedPiece p;
        p.y = y;
        p.image = r.j_lower_shriek(y);
        p.theta = r.canonical_theta(y);
        Cocone cc = cocone(p.theta);
        p.middle = cc.c;
        p.trunc = truncate(cc.c, ix, 1, r.options());
        ChainMap to_image = compose(p.trunc.u_to_t, retarget(cc.to_source, cc.c, p.image));
        p.triangle = cone(to_image);
        p.object = minimalize(p.triangle.z).complex;
        g.smc.objects.push_back(p.object);
        g.report.pieces.push_back(std::move(p));
    }
    g.smc.certificate = {Evidence::GluedFrom, "glued from " + std::to_string(sx.size()) + " + " +
                                                  std::to_string(sy.size()) + " objects"};
    return g;
}

Glued glue_dual(const SMC& sx, const SMC& sy, const Recollement& r)
{
    Glued g;
    g.report.dual = true;
    SMC ix = x_image(sx, r);
    g.smc = ix;
    for (const auto& y : sy.objects) {
        GluedPiece p;
        p.y = y;
        p.image = r.j_lower_star(y);
        p.theta = r.canonical_theta(y);
        Triangle c = cone(p.theta);
        p.middle = c.z;
        p.trunc = truncate(c.z, ix, 0, r.options());
        ChainMap to_n = compose(retarget(c.v, p.image, c.z), p.trunc.t_to_v);
        p.triangle = cone(to_n);
        p.object = minimalize(shift(p.triangle.z, -1)).complex;
        g.smc.objects.push_back(p.object);
        g.report.pieces.push_back(std::move(p));
    }
    g.smc.certificate = {Evidence::GluedFrom, "dual gluing of " + std::to_string(sx.size()) + " + " +
                                                  std::to_string(sy.size()) + " objects"};
    return g;
}

bool is_rigid(const ProjComplex& x) { return hom_dim(x, x, 1) == 0; }

Mutated mutate(const SMC& s, std::size_t i, Direction d, bool force)
{
    if (i >= s.size())
        throw InputError("mutation index " + std::to_string(i + 1) + " out of range");
    const ProjComplex& si = s.objects[i];
    if (!force && !is_rigid(si))
        throw MathError("object " + std::to_string(i + 1) + " is not rigid: Hom(S_i, S_i[1]) != 0");
    const Algebra& a = *s.alg;
    Mutated out;
    out.step.index = i;
    out.step.direction = d;
    out.smc.alg = s.alg;
    for (std::size_t l = 0; l < s.size(); ++l) {
        if (l == i) {
            out.smc.objects.push_back(shift(si, d == Direction::Left ? 1 : -1));
            out.step.multiplicity.push_back(0);
            out.step.approximations.emplace_back();
            continue;
        }
        const ProjComplex& sl = s.objects[l];
        std::vector<ChainMap> basis = d == Direction::Left ? hom_basis(sl, si, 1) : hom_basis(si, sl, 1);
        const std::size_t k = basis.size();
        out.step.multiplicity.push_back(k);
        if (k == 0) {
            out.smc.objects.push_back(sl);
            out.step.approximations.emplace_back();
            continue;
        }
        ProjComplex bundle = power(si, k);
        if (d == Direction::Left) {
            // S_l[-1] -> S_i^k, stacking the basis maps
            ProjComplex src = shift(sl, -1);
            ChainMap g(src, bundle);
            for (int n = src.low; n <= src.high(); ++n) {
                if (bundle.term(n).empty() || src.term(n).empty())
                    continue;
                ElemMatrix m(0, src.term(n).size());
                for (const auto& b : basis)
                    m = vstack(m, shift(b, -1).comp(n));
                g.set(n, m);
            }
            out.smc.objects.push_back(minimalize(cone(g).z).complex);
            out.step.approximations.push_back(g);
        } else {
            // S_i^k -> S_l[1], side by side
            ProjComplex tgt = shift(sl, 1);
            ChainMap g(bundle, tgt);
            for (int n = bundle.low; n <= bundle.high(); ++n) {
                if (bundle.term(n).empty() || tgt.term(n).empty())
                    continue;
                ElemMatrix m(tgt.term(n).size(), 0);
                for (const auto& b : basis)
                    m = hstack(m, b.comp(n));
                g.set(n, m);
            }
            out.smc.objects.push_back(minimalize(cocone(g).c).complex);
            out.step.approximations.push_back(g);
        }
    }
    (void)a;
    out.smc.certificate = {Evidence::MutatedFrom, std::string(d == Direction::Left ? "left" : "right") +
                                                      " mutation at " + std::to_string(i + 1)};
    return out;
}

SMC shift(const SMC& s, int n)
{
    SMC out = s;
    for (auto& x : out.objects)
        x = shift(x, n);
    return out;
}

SMC standard_simples(const AlgebraPtr& a, const Options& opts)
{
    SMC s;
    s.alg = a;
    for (int v = 0; v < static_cast<int>(a->num_vertices()); ++v)
        s.objects.push_back(simple_complex(a, v, 0, opts));
    s.certificate = {Evidence::StandardSimples, ""};
    return s;
}

bool geq(const SMC& s, const SMC& s2)
{
    for (const auto& x : s2.objects)
        for (const auto& y : s.objects)
            if (!negative_homs_vanish(x, y))
                return false;
    return true;
}

Order compare(const SMC& s, const SMC& s2, const Options& opts)
{
    if (s.size() != s2.size())
        throw InputError("cannot compare collections of sizes " + std::to_string(s.size()) + " and " +
                         std::to_string(s2.size()));
    bool a = geq(s, s2), b = geq(s2, s);
    if (a && b) {
        if (!smc_iso(s, s2, opts))
            throw std::logic_error("compare: mutually comparable collections are not isomorphic");
        return Order::Equal;
    }
    if (a)
        return Order::Greater;
    if (b)
        return Order::Less;
    return Order::Incomparable;
}

bool smc_iso(const SMC& s, const SMC& s2, const Options& opts)
{
    const std::size_t n = s.size();
    if (n != s2.size())
        return false;
    std::vector<std::vector<bool>> edge(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            edge[i][j] = is_iso(s.objects[i], s2.objects[j], opts).iso;
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> match = [&](std::size_t i) {
        if (i == n)
            return true;
        for (std::size_t j = 0; j < n; ++j)
            if (edge[i][j] && !used[j]) {
                used[j] = true;
                if (match(i + 1))
                    return true;
                used[j] = false;
            }
        return false;
    };
    return match(0);
}

bool is_glued_type_candidate(const SMC& s, const Recollement& r)
{
    for (const auto& x : s.objects)
        if (is_contractible(r.j_upper_shriek(x)))
            return true;
    return false;
}

std::optional<std::string> name_object(const ProjComplex& x, const Options& opts)
{
    ProjComplex m = minimalize(x).complex;
    if (m.is_zero())
        return std::string("0");
    const AlgebraPtr& a = m.alg;
    const int s = -m.high();
    for (int v = 0; v < static_cast<int>(a->num_vertices()); ++v) {
        const std::string label = a->vertex_labels()[static_cast<std::size_t>(v)];
        std::vector<std::pair<std::string, Module>> cands = {{"S", Module::simple(a, v)},
                                                             {"P", Module::projective(a, v)},
                                                             {"I", Module::injective(a, v)}};
        for (const auto& [prefix, mod] : cands) {
            ProjComplex c = shift(module_complex(mod, 0, opts), s);
            if (c.signature() != m.signature())
                continue;
            if (is_iso(m, c, opts).iso)
                return prefix + label + shift_suffix(s);
        }
    }
    return std::nullopt;
}

std::string describe(const ProjComplex& x, const Options& opts)
{
    if (auto n = name_object(x, opts))
        return *n;
    return "(" + minimalize(x).complex.describe() + ")";
}

std::string describe(const SMC& s, const Options& opts)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += describe(s.objects[i], opts);
    }
    return out + "}";
}

} // namespace smckit
