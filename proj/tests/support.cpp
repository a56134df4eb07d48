#include "support.hpp"

#include "smckit/errors.hpp"

namespace smckit::testing {

AlgebraPtr random_linear(std::mt19937_64& rng, std::size_t n, const Field& f)
{
    Quiver q;
    for (std::size_t v = 0; v < n; ++v)
        q.vertices.push_back(std::to_string(v + 1));
    for (std::size_t v = 0; v + 1 < n; ++v)
        q.arrows.push_back({"a" + std::to_string(v + 1), static_cast<int>(v), static_cast<int>(v + 1)});
    // zero paths a_i ... a_{i+len-1}, none containing another
    std::vector<Path> rel;
    for (std::size_t i = 0; i + 2 < n; ++i) {
        if (rng() % 3 != 0)
            continue;
        std::size_t len = 2 + rng() % (n - 2 - i);
        Path p;
        for (std::size_t k = 0; k < len; ++k)
            p.push_back(static_cast<int>(i + k));
        std::erase_if(rel, [&](const Path& r) { return p.front() >= r.front() && p.back() <= r.back(); });
        rel.push_back(p);
    }
    return build_path_algebra(f, q, rel);
}

RandomRecollement random_recollement(std::mt19937_64& rng, std::size_t max_n, const Field& f)
{
    RandomRecollement out;
    for (;;) {
        std::size_t n = 2 + rng() % (max_n - 1);
        AlgebraPtr a = random_linear(rng, n, f);
        std::vector<int> e;
        for (std::size_t v = 0; v < n; ++v)
            if (rng() % 2)
                e.push_back(static_cast<int>(v));
        if (e.empty() || e.size() == n) {
            ++out.rejected;
            continue;
        }
        try {
            auto r = std::make_unique<Recollement>(a, e);
            if (!r->report().validated) {
                ++out.rejected;
                continue;
            }
            out.alg = a;
            out.e = e;
            out.rec = std::move(r);
        } catch (const BoundExceeded&) {
            ++out.rejected;
            continue;
        }
        out.label = "A" + std::to_string(n) + " dim " + std::to_string(a->dim()) + ", e = {";
        for (std::size_t k = 0; k < e.size(); ++k)
            out.label += (k ? "," : "") + std::to_string(e[k] + 1);
        out.label += "}";
        return out;
    }
}

SMC random_smc(std::mt19937_64& rng, const AlgebraPtr& a, std::size_t steps)
{
    SMC s = standard_simples(a);
    if (s.size() == 0)
        return s;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t i = rng() % s.size();
        if (!is_rigid(s.objects[i]))
            continue;
        s = mutate(s, i, rng() % 2 ? Direction::Left : Direction::Right).smc;
    }
    return shift(s, static_cast<int>(rng() % 3) - 1);
}

SMC random_lower(std::mt19937_64& rng, const SMC& s)
{
    if (s.size() == 0)
        return s;
    std::size_t i = rng() % s.size();
    if (rng() % 3 == 0 || !is_rigid(s.objects[i]))
        return shift(s, 1);
    return mutate(s, i, Direction::Left).smc;
}

ProjComplex random_object(std::mt19937_64& rng, const AlgebraPtr& a)
{
    std::vector<ProjComplex> pool;
    for (int v = 0; v < static_cast<int>(a->num_vertices()); ++v) {
        pool.push_back(simple_complex(a, v));
        pool.push_back(stalk_projective(a, v, 0));
        pool.push_back(module_complex(Module::injective(a, v)));
    }
    if (pool.empty())
        return ProjComplex(a);
    ProjComplex x = shift(pool[rng() % pool.size()], static_cast<int>(rng() % 3) - 1);
    ProjComplex y = pool[rng() % pool.size()];
    ChainMap f(x, y);
    for (const auto& b : hom_basis(x, y, 0)) {
        ChainMap g(x, y);
        for (const auto& [n, m] : b.comps)
            g.set(n, m);
        f = add(f, scale(g, a->field().random(rng)));
    }
    return minimalize(cone(f).z).complex;
}

} // namespace smckit::testing
