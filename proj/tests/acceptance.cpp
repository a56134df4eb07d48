// One line per acceptance criterion; exit status 1 if any fails.
#include "support.hpp"

#include "smckit/errors.hpp"
#include "smckit/fixtures.hpp"
#include "smckit/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace smckit;
using smckit::testing::random_lower;
using smckit::testing::random_object;
using smckit::testing::random_recollement;
using smckit::testing::random_smc;

namespace {

struct Tally {
    std::size_t checks = 0, failures = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        ++checks;
        if (!ok) {
            ++failures;
            if (notes.size() < 8)
                notes.push_back(what);
        }
    }
};

// every glue output is recorded for criterion 7
std::size_t g_glued = 0, g_glued_candidates = 0;

Glued glued(const SMC& sx, const SMC& sy, const Recollement& r, bool dual = false)
{
    Glued g = dual ? glue_dual(sx, sy, r) : glue(sx, sy, r);
    if (sx.size() != 0 && sy.size() != 0) {
        ++g_glued;
        if (is_glued_type_candidate(g.smc, r))
            ++g_glued_candidates;
    }
    return g;
}

SMC make(const AlgebraPtr& a, std::vector<ProjComplex> objs)
{
    SMC s;
    s.alg = a;
    s.objects = std::move(objs);
    return s;
}

int report(int n, const std::string& title, double limit, const std::function<void(Tally&)>& body)
{
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        ++t.failures;
        t.notes.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.failures == 0 && secs < limit;
    std::printf("criterion %d: %s  %s  (%zu checks, %zu failed, %.2fs of %.0fs)\n", n, ok ? "PASS" : "FAIL",
                title.c_str(), t.checks, t.failures, secs, limit);
    for (const auto& s : t.notes)
        std::printf("    %s\n", s.c_str());
    std::fflush(stdout);
    return ok ? 0 : 1;
}

// rank of Hom(T, X[n]) -> Hom(T, Y[n]) induced by f
std::size_t induced_rank(const ProjComplex& t, const ChainMap& f, int n)
{
    HomComplex h(t, f.target);
    const Field& fld = t.alg->field();
    Subspace sp(fld, h.dim(n));
    if (h.dim(n) == 0)
        return 0;
    if (h.dim(n - 1) != 0) {
        Mat d = h.differential(n - 1);
        for (std::size_t c = 0; c < d.cols(); ++c) {
            Vec v = zero_vec(fld, d.rows());
            for (std::size_t r = 0; r < d.rows(); ++r)
                v[r] = d(r, c);
            sp.add(v);
        }
    }
    std::size_t base = sp.dim();
    ChainMap fs = shift(f, n);
    for (const auto& b : hom_basis(t, f.source, n))
        sp.add(h.to_vector(n, compose(b, fs)));
    return sp.dim() - base;
}

std::vector<std::pair<AlgebraPtr, std::vector<int>>> fixture_cases()
{
    return {{fixtures::a2(), {0}}, {fixtures::a2(), {1}}, {fixtures::beta_alpha(), {0}}};
}

} // namespace

int main()
{
    int failed = 0;
    std::mt19937_64 rng(20261016);

    failed += report(1, "beta alpha: {S2, I1} and {S2, eA} are not simple-minded", 5, [](Tally& t) {
        auto b = fixtures::beta_alpha();
        ProjComplex s2 = simple_complex(b, 1), ea = stalk_projective(b, 0, 0),
                    i1 = module_complex(Module::injective(b, 0));
        std::size_t h1 = hom_dim(s2, ea, 0), h2 = hom_dim(i1, s2, 0);
        t.expect(h1 >= 1, "dim Hom(S2, eA) = " + std::to_string(h1));
        t.expect(h2 >= 1, "dim Hom(I1, S2) = " + std::to_string(h2));
        t.expect(!validate_smc(make(b, {s2, i1})).passed(), "{S2, I1} accepted");
        t.expect(!validate_smc(make(b, {s2, ea})).passed(), "{S2, eA} accepted");
    });

    failed += report(2, "beta alpha gluing is simple-minded with the image identities", 30, [](Tally& t) {
        auto b = fixtures::beta_alpha();
        Recollement r(b, {0});
        SMC sx = standard_simples(r.x_algebra()), sy = standard_simples(r.y_algebra());
        Glued g = glued(sx, sy, r);
        SmcReport v = validate_smc(g.smc);
        t.expect(v.axiom1, "axiom 1");
        t.expect(v.axiom3, "axiom 3");
        t.expect(v.euler_unimodular, "Euler classes not unimodular");
        t.expect(g.smc.certificate.kind == Evidence::GluedFrom, "certificate");
        for (const auto& p : g.report.pieces) {
            IsoResult a = is_iso(r.j_upper_shriek(p.object), p.y);
            IsoResult c = is_iso(r.i_star_i_upper_star(p.object), shift(p.trunc.u, 1));
            IsoResult d = is_iso(r.i_star_i_upper_shriek(p.object), p.trunc.v);
            t.expect(a.iso, "j^!(W) vs Y: " + a.reason);
            t.expect(c.iso, "i_*i^*(W) vs i_*U[1]: " + c.reason);
            t.expect(d.iso, "i_*i^!(W) vs i_*V: " + d.reason);
        }
    });

    failed += report(3, "glue and glue_dual agree on fixtures and 24 random linear A_n", 300, [&](Tally& t) {
        for (const auto& [a, e] : fixture_cases()) {
            Recollement r(a, e);
            SMC sx = standard_simples(r.x_algebra()), sy = standard_simples(r.y_algebra());
            for (int k = -1; k <= 1; ++k) {
                Glued g = glued(shift(sx, k), sy, r), gd = glued(shift(sx, k), sy, r, true);
                t.expect(smc_iso(g.smc, gd.smc), "fixture: " + describe(g.smc) + " vs " + describe(gd.smc));
                t.expect(validate_smc(gd.smc).passed(), "fixture dual fails validation");
            }
        }
        std::size_t rejected = 0;
        for (int trial = 0; trial < 24; ++trial) {
            auto rr = random_recollement(rng);
            rejected += rr.rejected;
            const Recollement& r = *rr.rec;
            SMC sx = random_smc(rng, r.x_algebra()), sy = random_smc(rng, r.y_algebra());
            Glued g = glued(sx, sy, r), gd = glued(sx, sy, r, true);
            t.expect(smc_iso(g.smc, gd.smc), rr.label + ": " + describe(g.smc) + " vs " + describe(gd.smc));
            t.expect(validate_smc(g.smc).passed(), rr.label + ": glued collection fails validation");
        }
        t.notes.insert(t.notes.begin(), "idempotents rejected while sampling: " + std::to_string(rejected));
    });

    failed += report(4, "A2 diagrams (1), (2), (3)", 30, [](Tally& t) {
        auto a = fixtures::a2();
        Recollement r(a, {0});
        ProjComplex s1 = simple_complex(a, 0), s2 = simple_complex(a, 1), p1 = stalk_projective(a, 0, 0);
        ProjComplex xs = simple_complex(r.x_algebra(), 0), ys = stalk_projective(r.y_algebra(), 0, 0);
        auto sx = [&](int n) { return make(r.x_algebra(), {shift(xs, n)}); };
        auto sy = [&](int n) { return make(r.y_algebra(), {shift(ys, n)}); };
        auto has = [](const CheckReport& c, const std::string& s) {
            for (const auto& x : c.conditions)
                if (x == s)
                    return true;
            return false;
        };
        // (1) both rows
        CheckReport c1 = check_glue_mutation_commute(sx(0), sy(0), r, Side::X, 0, Direction::Left);
        CheckReport c2 = check_glue_mutation_commute(sx(1), sy(-1), r, Side::X, 0, Direction::Right);
        t.expect(c1.status == Status::Pass, "(1) mu^+ row");
        t.expect(c2.status == Status::Pass, "(1) mu^- row");
        t.expect(smc_iso(glued(sx(1), sy(0), r).smc, make(a, {shift(s2, 1), p1})), "(1) {S2[1], P1}");
        t.expect(smc_iso(glued(sx(0), sy(-1), r).smc, make(a, {s2, shift(p1, -1)})), "(1) {S2, P1[-1]}");
        // (2) conditions true
        CheckReport c3 = check_glue_mutation_commute(sx(1), sy(1), r, Side::Y, 0, Direction::Left);
        CheckReport c4 = check_glue_mutation_commute(sx(1), sy(0), r, Side::Y, 0, Direction::Right);
        for (const auto* c : {&c3, &c4}) {
            t.expect(c->status == Status::Pass, "(2) " + c->inputs);
            t.expect(has(*c, "vanishing condition: true"), "(2) condition not true: " + c->inputs);
        }
        t.expect(smc_iso(glued(sx(1), sy(2), r).smc, make(a, {shift(s2, 1), shift(s1, 2)})), "(2) {S2[1], S1[2]}");
        // (3) conditions false, certified non-isomorphism
        CheckReport c5 = check_glue_mutation_commute(sx(1), sy(0), r, Side::Y, 0, Direction::Left);
        CheckReport c6 = check_glue_mutation_commute(sx(1), sy(1), r, Side::Y, 0, Direction::Right);
        for (const auto* c : {&c5, &c6}) {
            t.expect(has(*c, "vanishing condition: false"), "(3) condition not false: " + c->inputs);
            t.expect(has(*c, "not isomorphic (certified)"), "(3) not certified: " + c->inputs);
        }
        SMC up = mutate(glued(sx(1), sy(0), r).smc, 1, Direction::Left).smc;
        SMC down = mutate(glued(sx(1), sy(1), r).smc, 1, Direction::Right).smc;
        t.expect(smc_iso(up, make(a, {s1, shift(p1, 1)})), "(3) mu^+_2 = {S1, P1[1]}");
        t.expect(smc_iso(down, make(a, {shift(p1, 1), s1})), "(3) mu^-_2 = {P1[1], S1}");
        t.expect(certified_distinct(make(a, {s1, shift(p1, 1)}), make(a, {shift(s2, 1), shift(s1, 1)})),
                 "{S1, P1[1]} vs {S2[1], S1[1]}");
        t.expect(certified_distinct(make(a, {shift(p1, 1), s1}), make(a, {shift(s2, 1), p1})),
                 "{P1[1], S1} vs {S2[1], P1}");
    });

    failed += report(5, "mutation chains on built-in collections, order preservation on 24 quadruples", 300,
                     [&](Tally& t) {
        std::vector<SMC> builtin;
        for (const auto& [a, e] : fixture_cases()) {
            Recollement r(a, e);
            builtin.push_back(standard_simples(a));
            builtin.push_back(standard_simples(r.x_algebra()));
            builtin.push_back(standard_simples(r.y_algebra()));
            SMC sx = standard_simples(r.x_algebra()), sy = standard_simples(r.y_algebra());
            for (int k = -1; k <= 1; ++k)
                for (int l = -1; l <= 2; ++l) {
                    Glued g = glued(shift(sx, k), shift(sy, l), r);
                    builtin.push_back(g.smc);
                    for (std::size_t i = 0; i < g.smc.size(); ++i)
                        if (is_rigid(g.smc.objects[i]))
                            for (Direction d : {Direction::Left, Direction::Right})
                                builtin.push_back(mutate(g.smc, i, d).smc);
                }
        }
        std::size_t rigid = 0;
        for (const auto& s : builtin)
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (!is_rigid(s.objects[i]))
                    continue;
                ++rigid;
                CheckReport c = check_mutation_order_chain(s, i);
                t.expect(c.status == Status::Pass,
                         c.inputs + (c.witness.empty() ? std::string() : ": " + c.witness.front()));
            }
        for (int trial = 0; trial < 24; ++trial) {
            auto rr = random_recollement(rng);
            const Recollement& r = *rr.rec;
            SMC sx = random_smc(rng, r.x_algebra()), sy = random_smc(rng, r.y_algebra());
            SMC sx2 = random_lower(rng, sx), sy2 = random_lower(rng, sy);
            CheckReport c = check_order_preservation(sx, sx2, sy, sy2, r);
            t.expect(c.status == Status::Pass,
                     rr.label + " " + to_string(c.status) +
                         (c.witness.empty() ? std::string() : ": " + c.witness.front()));
            for (const auto& [x, y] : {std::pair{&sx, &sy}, {&sx2, &sy}, {&sx, &sy2}, {&sx2, &sy2}})
                glued(*x, *y, r);
        }
        t.notes.insert(t.notes.begin(), std::to_string(builtin.size()) + " collections, " + std::to_string(rigid) +
                                            " rigid indices");
    });

    failed += report(6, "engine properties", 600, [&](Tally& t) {
        std::vector<AlgebraPtr> algs = {fixtures::a2(), fixtures::beta_alpha(), fixtures::a2(Field::rationals())};
        for (int k = 0; k < 4; ++k)
            algs.push_back(testing::random_linear(rng, 3 + static_cast<std::size_t>(k % 2)));
        auto d2 = [&](const ProjComplex& x, const std::string& what) {
            try {
                x.check();
                t.expect(true, what);
            } catch (const std::exception& e) {
                t.expect(false, what + ": " + e.what());
            }
        };
        // long exact sequences of 100 random cones
        for (int trial = 0; trial < 100; ++trial) {
            const AlgebraPtr& a = algs[static_cast<std::size_t>(trial) % algs.size()];
            ProjComplex x = random_object(rng, a), y = random_object(rng, a), test = random_object(rng, a);
            ChainMap f(x, y);
            for (const auto& b : hom_basis(x, y, 0)) {
                ChainMap g(x, y);
                for (const auto& [n, m] : b.comps)
                    g.set(n, m);
                f = add(f, scale(g, a->field().random(rng)));
            }
            Triangle tri = cone(f);
            d2(tri.z, "cone");
            d2(shift(x, 3), "shift");
            d2(direct_sum(x, y), "direct sum");
            d2(cocone(f).c, "cocone");
            d2(minimalize(tri.z).complex, "minimalize");
            for (int n = -4; n <= 4; ++n) {
                std::size_t lhs = hom_dim(test, tri.z, n);
                std::size_t rhs = hom_dim(test, y, n) - induced_rank(test, f, n) + hom_dim(test, x, n + 1) -
                                  induced_rank(test, f, n + 1);
                t.expect(lhs == rhs, "LES rank at degree " + std::to_string(n));
            }
            // additivity and shift
            ProjComplex s = direct_sum(x, y);
            for (int n = -3; n <= 3; ++n) {
                t.expect(hom_dim(test, s, n) == hom_dim(test, x, n) + hom_dim(test, y, n), "direct sum additivity");
                t.expect(hom_dim(s, test, n) == hom_dim(x, test, n) + hom_dim(y, test, n), "direct sum additivity");
                t.expect(hom_dim(shift(x, 2), shift(test, 2), n) == hom_dim(x, test, n), "shift invariance");
                t.expect(hom_dim(x, shift(test, 1), n) == hom_dim(x, test, n + 1), "shift by one");
            }
            // minimalize idempotence
            Minimal m1 = minimalize(tri.z), m2 = minimalize(m1.complex);
            t.expect(is_minimal(m1.complex), "minimal form is not minimal");
            bool same = m1.complex.low == m2.complex.low && m1.complex.high() == m2.complex.high();
            for (int n = m1.complex.low; same && n <= m1.complex.high(); ++n)
                same = m1.complex.term(n) == m2.complex.term(n);
            t.expect(same, "minimalize is not idempotent");
        }
        // adjunctions on 50 random applications
        std::size_t applications = 0;
        for (const auto& [a, e] : fixture_cases()) {
            Recollement r(a, e);
            for (int trial = 0; trial < 6; ++trial) {
                ProjComplex tt = random_object(rng, a), y = random_object(rng, r.y_algebra());
                ProjComplex x = random_object(rng, r.x_algebra());
                ProjComplex jt = r.j_upper_shriek(tt), jy = r.j_lower_shriek(y), jsy = r.j_lower_star(y);
                ProjComplex ix = r.i_star(x), ii = r.i_star_i_upper_star(tt), is = r.i_star_i_upper_shriek(tt);
                for (const auto* c : {&jt, &jy, &jsy, &ix, &ii, &is})
                    d2(*c, "functor output");
                applications += 6;
                for (int n = -3; n <= 3; ++n) {
                    t.expect(hom_dim(jy, tt, n) == hom_dim(y, jt, n), "j_! -| j^!");
                    t.expect(hom_dim(tt, jsy, n) == hom_dim(jt, y, n), "j^! -| j_*");
                    t.expect(hom_dim(ii, ix, n) == hom_dim(tt, ix, n), "i^* -| i_*");
                    t.expect(hom_dim(ix, is, n) == hom_dim(ix, tt, n), "i_* -| i^!");
                }
            }
        }
        for (int trial = 0; trial < 4; ++trial) {
            auto rr = random_recollement(rng);
            const Recollement& r = *rr.rec;
            ProjComplex tt = random_object(rng, rr.alg), y = random_object(rng, r.y_algebra());
            ProjComplex jt = r.j_upper_shriek(tt), jy = r.j_lower_shriek(y), jsy = r.j_lower_star(y);
            applications += 3;
            for (int n = -3; n <= 3; ++n) {
                t.expect(hom_dim(jy, tt, n) == hom_dim(y, jt, n), rr.label + ": j_! -| j^!");
                t.expect(hom_dim(tt, jsy, n) == hom_dim(jt, y, n), rr.label + ": j^! -| j_*");
            }
        }
        t.expect(applications >= 50, "only " + std::to_string(applications) + " functor applications");
        // every truncation of the whole run, including the gluings above
        TruncationStats st = truncation_stats();
        t.expect(st.calls > 0, "no truncations recorded");
        t.expect(st.failures == 0, std::to_string(st.failures) + " truncations violate their invariants");
        t.notes.insert(t.notes.begin(), std::to_string(applications) + " functor applications, " +
                                            std::to_string(st.calls) + " truncations");
    });

    failed += report(7, "{P1[1], S1} is not of glued type; every glue output is a candidate", 5, [](Tally& t) {
        auto a = fixtures::a2();
        Recollement r(a, {0});
        SMC p1s1 = make(a, {shift(stalk_projective(a, 0, 0), 1), simple_complex(a, 0)});
        t.expect(validate_smc(p1s1).passed(), "{P1[1], S1} fails validation");
        t.expect(!is_glued_type_candidate(p1s1, r), "{P1[1], S1} reported as a candidate");
        t.expect(g_glued > 0, "no glue outputs recorded");
        t.expect(g_glued_candidates == g_glued, std::to_string(g_glued - g_glued_candidates) + " of " +
                                                    std::to_string(g_glued) + " glue outputs are not candidates");
        t.notes.insert(t.notes.begin(), std::to_string(g_glued) + " glue outputs");
    });

    return failed == 0 ? 0 : 1;
}
