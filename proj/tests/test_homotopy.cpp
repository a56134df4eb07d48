#include "doctest.h"

#include "smckit/errors.hpp"
#include "smckit/fixtures.hpp"
#include "smckit/homotopy.hpp"

#include <random>

using namespace smckit;

namespace {

std::vector<Field> fields() { return {Field(), Field::prime(2), Field::prime(3), Field::rationals()}; }

std::vector<Module> sample_modules(const AlgebraPtr& a)
{
    std::vector<Module> out;
    for (int v = 0; v < static_cast<int>(a->num_vertices()); ++v) {
        out.push_back(Module::simple(a, v));
        out.push_back(Module::projective(a, v));
        out.push_back(Module::injective(a, v));
    }
    return out;
}

// Cartan matrix C[i][v] = dim P_i e_v, inverted over the rationals.
std::vector<std::vector<mpq_class>> inverse_cartan(const AlgebraPtr& a)
{
    const std::size_t n = a->num_vertices();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        auto dv = Module::projective(a, static_cast<int>(i)).dim_vector();
        for (std::size_t v = 0; v < n; ++v)
            m[i][v] = static_cast<long>(dv[v]);
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0)
            ++p;
        std::swap(m[p], m[c]);
        mpq_class piv = m[c][c];
        for (auto& x : m[c])
            x /= piv;
        for (std::size_t r = 0; r < n; ++r)
            if (r != c && m[r][c] != 0) {
                mpq_class f = m[r][c];
                for (std::size_t k = 0; k < 2 * n; ++k)
                    m[r][k] -= f * m[c][k];
            }
    }
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = m[i][n + j];
    return inv;
}

// Euler form <M, N> = dim(M)^T C^{-1} dim(N), valid for finite global dimension.
long euler_form(const AlgebraPtr& a, const Module& m, const Module& n)
{
    auto ci = inverse_cartan(a);
    auto dm = m.dim_vector(), dn = n.dim_vector();
    mpq_class s = 0;
    for (std::size_t i = 0; i < dm.size(); ++i)
        for (std::size_t j = 0; j < dn.size(); ++j)
            s += static_cast<long>(dm[i]) * ci[i][j] * static_cast<long>(dn[j]);
    REQUIRE(s.get_den() == 1);
    return s.get_num().get_si();
}

long hom_euler(const ProjComplex& x, const ProjComplex& y)
{
    HomTable t = hom_table(x, y);
    long s = 0;
    for (const auto& [n, d] : t.dims)
        s += (n % 2 == 0 ? 1 : -1) * static_cast<long>(d);
    return s;
}

ChainMap random_map(const ProjComplex& x, const ProjComplex& y, std::mt19937_64& rng)
{
    ChainMap f(x, y);
    const Field& fld = x.is_zero() ? y.alg->field() : x.alg->field();
    for (const auto& b : hom_basis(x, y, 0)) {
        ChainMap g(x, y);
        for (const auto& [n, m] : b.comps)
            g.set(n, m);
        f = add(f, scale(g, fld.random(rng)));
    }
    return f;
}

ProjComplex random_object(const AlgebraPtr& a, std::mt19937_64& rng, int depth)
{
    auto mods = sample_modules(a);
    std::uniform_int_distribution<std::size_t> pick(0, mods.size() - 1);
    std::uniform_int_distribution<int> deg(-1, 1);
    if (depth == 0 || rng() % 3 == 0)
        return module_complex(mods[pick(rng)], deg(rng));
    ProjComplex x = random_object(a, rng, depth - 1);
    ProjComplex y = random_object(a, rng, depth - 1);
    if (rng() % 2 == 0)
        y = shift(y, 1);
    return cone(random_map(x, y, rng)).z;
}

} // namespace

TEST_CASE("modules: dimensions and Yoneda")
{
    for (const auto& f : fields()) {
        auto a2 = fixtures::a2(f);
        CHECK(Module::projective(a2, 0).dim() == 2);
        CHECK(Module::projective(a2, 1).dim() == 1);
        CHECK(Module::injective(a2, 0).dim() == 1);
        CHECK(Module::injective(a2, 1).dim() == 2);
        CHECK(module_hom_space(Module::projective(a2, 1), Module::simple(a2, 1)).size() == 1);
        CHECK(module_hom_space(Module::injective(a2, 0), Module::simple(a2, 0)).size() == 1);
        for (auto alg : {a2, fixtures::beta_alpha(f)}) {
            auto mods = sample_modules(alg);
            for (const auto& m : mods) {
                m.check();
                for (int v = 0; v < static_cast<int>(alg->num_vertices()); ++v)
                    CHECK(module_hom_space(Module::projective(alg, v), m).size() == m.dim_vector()[static_cast<std::size_t>(v)]);
                // D(Ae_v) is injective: Hom(M, I_v) = dim M e_v
                for (int v = 0; v < static_cast<int>(alg->num_vertices()); ++v)
                    CHECK(module_hom_space(m, Module::injective(alg, v)).size() == m.dim_vector()[static_cast<std::size_t>(v)]);
            }
        }
    }
}

TEST_CASE("modules: double dual")
{
    auto a = fixtures::beta_alpha();
    auto op = a->opposite();
    for (const auto& m : sample_modules(a)) {
        Module dd = dual(dual(m, op), a);
        CHECK(dd.dim_vector() == m.dim_vector());
        CHECK(module_hom_space(m, dd).size() == module_hom_space(m, m).size());
    }
}

TEST_CASE("resolutions")
{
    for (const auto& f : fields()) {
        auto a2 = fixtures::a2(f);
        ProjComplex s1 = simple_complex(a2, 0);
        s1.check();
        CHECK(s1.low == -1);
        CHECK(s1.signature() == std::map<int, std::vector<int>>{{-1, {1}}, {0, {0}}});
        CHECK(simple_complex(a2, 1).signature() == std::map<int, std::vector<int>>{{0, {1}}});
        CHECK(global_dimension(a2) == std::optional<std::size_t>(1));

        auto ba = fixtures::beta_alpha(f);
        CHECK(global_dimension(ba) == std::optional<std::size_t>(2));
        ProjComplex b1 = simple_complex(ba, 0);
        b1.check();
        CHECK(b1.signature() == std::map<int, std::vector<int>>{{-2, {0}}, {-1, {1}}, {0, {0}}});

        for (auto alg : {a2, ba})
            for (const auto& m : sample_modules(alg)) {
                Resolved r = resolve_complex(stalk(m, 2));
                r.complex.check();
                CHECK(is_minimal(r.complex));
                CHECK(is_quasi_iso(to_modules(r.complex), stalk(m, 2), r.augmentation));
            }
    }
}

TEST_CASE("resolutions: unbounded projective dimension")
{
    // k[x]/x^2 has gldim infinity
    Quiver q{{"1"}, {{"x", 0, 0}}};
    auto a = build_path_algebra(Field(), q, {{0, 0}});
    CHECK_FALSE(global_dimension(a, 5).has_value());
    CHECK_THROWS_AS(projective_resolution(Module::simple(a, 0), 5), BoundExceeded);
}

TEST_CASE("hom: simple examples over A2")
{
    auto a = fixtures::a2();
    ProjComplex p1 = stalk_projective(a, 0, 0);
    ProjComplex s1 = simple_complex(a, 0);
    ProjComplex s2 = simple_complex(a, 1);
    HomTable t = hom_table(p1, s1);
    CHECK(t.dim(0) == 1);
    for (int n = -4; n <= 4; ++n) {
        CHECK(hom_dim(s1, s2, n) == (n == 1 ? 1u : 0u));
        CHECK(hom_dim(s2, s1, n) == 0u);
        CHECK(hom_dim(s1, s1, n) == (n == 0 ? 1u : 0u));
    }
}

TEST_CASE("hom: Euler form oracle")
{
    for (const auto& f : fields())
        for (auto alg : {fixtures::a2(f), fixtures::beta_alpha(f)}) {
            auto mods = sample_modules(alg);
            for (const auto& m : mods)
                for (const auto& n : mods) {
                    ProjComplex x = module_complex(m), y = module_complex(n);
                    CHECK(hom_euler(x, y) == euler_form(alg, m, n));
                    CHECK(hom_dim(x, y, 0) == module_hom_space(m, n).size());
                    for (int k = -3; k < 0; ++k)
                        CHECK(hom_dim(x, y, k) == 0u);
                }
        }
}

TEST_CASE("hom: projectives detect cohomology")
{
    std::mt19937_64 rng(11);
    for (auto alg : {fixtures::a2(), fixtures::beta_alpha()})
        for (int trial = 0; trial < 15; ++trial) {
            ProjComplex x = random_object(alg, rng, 2);
            x.check();
            auto c = to_modules(x);
            auto coh = cohomology_dims(c);
            for (int n = x.low; n <= x.high(); ++n) {
                std::size_t total = 0;
                for (int v = 0; v < static_cast<int>(alg->num_vertices()); ++v)
                    total += hom_dim(stalk_projective(alg, v, 0), x, n);
                CHECK(total == coh[static_cast<std::size_t>(n - x.low)]);
            }
        }
}

TEST_CASE("cones")
{
    auto a = fixtures::a2();
    ProjComplex s1m = shift(simple_complex(a, 0), -1);
    ProjComplex s2 = simple_complex(a, 1);
    auto basis = hom_basis(s1m, s2, 0);
    REQUIRE(basis.size() == 1);
    Triangle t = cone(basis[0]);
    t.z.check();
    CHECK(t.u.is_chain_map());
    CHECK(t.v.is_chain_map());
    CHECK(t.w.is_chain_map());
    IsoResult r = is_iso(t.z, stalk_projective(a, 0, 0));
    CHECK(r.iso);
    CHECK(r.certified);

    IsoResult no = is_iso(simple_complex(a, 0), stalk_projective(a, 0, 0));
    CHECK_FALSE(no.iso);
    CHECK(no.certified);

    // cone of zero map splits
    Triangle z = cone(ChainMap(s2, s2));
    CHECK(is_iso(z.z, direct_sum(shift(s2, 1), s2)).iso);
    CHECK(minimalize(z.z).complex.total_summands() == 2);

    Cocone cc = cocone(basis[0]);
    cc.c.check();
    CHECK(cc.to_source.is_chain_map());
    CHECK(is_iso(cc.c, stalk_projective(a, 0, 1)).iso);
}

TEST_CASE("triangles: random properties")
{
    std::mt19937_64 rng(5);
    for (const auto& f : fields())
        for (auto alg : {fixtures::a2(f), fixtures::beta_alpha(f)})
            for (int trial = 0; trial < 6; ++trial) {
                ProjComplex x = random_object(alg, rng, 1);
                ProjComplex y = random_object(alg, rng, 1);
                ChainMap u = random_map(x, y, rng);
                REQUIRE(u.is_chain_map());
                Triangle t = cone(u);
                t.z.check();
                CHECK(t.v.is_chain_map());
                CHECK(t.w.is_chain_map());
                CHECK(is_null_homotopic(compose(t.u, t.v)));
                CHECK(is_null_homotopic(compose(t.v, t.w)));

                auto ex = x.euler_class(), ey = y.euler_class(), ez = t.z.euler_class();
                for (std::size_t v = 0; v < ex.size(); ++v)
                    CHECK(ez[v] == ey[v] - ex[v]);

                ProjComplex test = random_object(alg, rng, 1);
                CHECK(hom_euler(test, t.z) == hom_euler(test, y) - hom_euler(test, x));

                // cone of an identity is contractible
                CHECK(is_contractible(cone(identity_map(x)).z));

                // shift invariance
                for (int n = -2; n <= 2; ++n)
                    CHECK(hom_dim(shift(x, 1), shift(y, 1), n) == hom_dim(x, y, n));
                CHECK(hom_dim(x, shift(y, 1), 0) == hom_dim(x, y, 1));
            }
}

TEST_CASE("minimalize")
{
    std::mt19937_64 rng(9);
    for (auto alg : {fixtures::a2(), fixtures::beta_alpha(Field::rationals())})
        for (int trial = 0; trial < 10; ++trial) {
            ProjComplex x = random_object(alg, rng, 2);
            Minimal m = minimalize(x);
            m.complex.check();
            CHECK(is_minimal(m.complex));
            CHECK(m.to.is_chain_map());
            CHECK(m.from.is_chain_map());
            const Field& f = alg->field();
            CHECK(is_null_homotopic(add(compose(m.to, m.from), scale(identity_map(x), -f.one()))));
            CHECK(is_null_homotopic(add(compose(m.from, m.to), scale(identity_map(m.complex), -f.one()))));
            Minimal again = minimalize(m.complex);
            CHECK(again.complex.signature() == m.complex.signature());
            IsoResult r = is_iso(x, m.complex);
            CHECK(r.iso);
            REQUIRE(r.f.has_value());
            CHECK(r.f->is_chain_map());
            CHECK(r.g->is_chain_map());
        }
}

TEST_CASE("local inverse")
{
    Quiver q{{"1"}, {{"x", 0, 0}}};
    auto a = build_path_algebra(Field::rationals(), q, {{0, 0, 0}});
    Elem u = a->parse("2*e1 + x - 3*x.x");
    Elem inv = local_inverse(*a, 0, u);
    CHECK(a->multiply(u, inv) == a->unit_elem(0));
    CHECK(a->multiply(inv, u) == a->unit_elem(0));
    CHECK_THROWS(local_inverse(*a, 0, a->parse("x")));
}

TEST_CASE("is_iso: certified grid search")
{
    auto a = fixtures::beta_alpha();
    Options o;
    o.certify = true;
    ProjComplex s1 = simple_complex(a, 0);
    ProjComplex p1 = stalk_projective(a, 0, 0);
    IsoResult r = is_iso(direct_sum(s1, p1), direct_sum(p1, s1), o);
    CHECK(r.iso);

    // same terms as S1 over A2, zero differential
    auto a2 = fixtures::a2();
    ProjComplex split = direct_sum(stalk_projective(a2, 1, -1), stalk_projective(a2, 0, 0));
    ProjComplex s = simple_complex(a2, 0);
    REQUIRE(split.signature() == s.signature());
    IsoResult n = is_iso(split, s, o);
    CHECK_FALSE(n.iso);
    CHECK(n.certified);
    IsoResult m = is_iso(split, s);
    CHECK_FALSE(m.iso);
    CHECK_FALSE(m.certified);
    CHECK(m.error_bound < 1e-50);
}
