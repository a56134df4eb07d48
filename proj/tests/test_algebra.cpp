#include "doctest.h"

#include "smckit/algebra.hpp"
#include "smckit/errors.hpp"
#include "smckit/fixtures.hpp"

using namespace smckit;

namespace {

// Independent oracle: count composable arrow words of length <= max_len
// containing no relation as a contiguous subword, plus the trivial paths.
std::size_t count_paths(const Quiver& q, const std::vector<Path>& rels, std::size_t max_len)
{
    std::size_t count = q.vertices.size();
    std::vector<Path> layer;
    for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
        layer.push_back({a});
    for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
        std::vector<Path> next;
        for (const auto& p : layer) {
            bool bad = false;
            for (const auto& r : rels)
                for (std::size_t s = 0; s + r.size() <= p.size(); ++s)
                    if (std::equal(r.begin(), r.end(), p.begin() + static_cast<long>(s)))
                        bad = true;
            if (bad)
                continue;
            ++count;
            for (int a = 0; a < static_cast<int>(q.arrows.size()); ++a)
                if (q.arrows[static_cast<std::size_t>(a)].source == q.arrows[static_cast<std::size_t>(p.back())].target) {
                    Path n = p;
                    n.push_back(a);
                    next.push_back(n);
                }
        }
        layer = std::move(next);
    }
    return count;
}

} // namespace

TEST_CASE("path algebra dimensions")
{
    auto a2 = fixtures::a2();
    CHECK(a2->dim() == 3);
    CHECK(a2->dim() == count_paths(fixtures::a2_quiver(), {}, 10));

    auto ba = fixtures::beta_alpha();
    CHECK(ba->dim() == count_paths(fixtures::beta_alpha_quiver(), fixtures::beta_alpha_relations(), 10));
    CHECK(ba->dim() == 5);

    Quiver point;
    point.vertices = {"1"};
    auto k = build_path_algebra(Field(), point, {});
    CHECK(k->dim() == 1);
    CHECK(k->loewy_length() == 1);
}

TEST_CASE("path algebra errors")
{
    Quiver loop;
    loop.vertices = {"1"};
    loop.arrows = {{"x", 0, 0}};
    CHECK_THROWS_AS(build_path_algebra(Field(), loop, {}, 100), BoundExceeded);
    CHECK_THROWS_AS(build_path_algebra(Field(), loop, {{0}}), InputError);
    auto trunc = build_path_algebra(Field(), loop, {{0, 0, 0}});
    CHECK(trunc->dim() == 3);
    CHECK(trunc->loewy_length() == 3);
    Quiver bad = fixtures::a2_quiver();
    bad.arrows.push_back({"a", 0, 1});
    CHECK_THROWS_AS(build_path_algebra(Field(), bad, {}), InputError);
}

TEST_CASE("structure constants are validated")
{
    Field f;
    // a radical element squaring to an idempotent is rejected
    std::vector<BasisElement> basis = {{"e1", 0, 0}, {"x", 0, 0}};
    Algebra::StructureConstants mult(2, std::vector<std::vector<Elem::Term>>(2));
    mult[0][0] = {{0, f.one()}};
    mult[0][1] = {{1, f.one()}};
    mult[1][0] = {{1, f.one()}};
    mult[1][1] = {{0, f.one()}};
    CHECK_THROWS_AS(Algebra(f, {"1"}, basis, {0}, mult), InputError);
    mult[1][1] = {};
    CHECK_NOTHROW(Algebra(f, {"1"}, basis, {0}, mult));
}

TEST_CASE("corner and quotient algebras")
{
    auto a2 = fixtures::a2();
    CHECK(corner_algebra(a2, {0}).algebra->dim() == 1);
    CHECK(corner_algebra(a2, {0, 1}).algebra->dim() == a2->dim());
    CHECK(quotient_algebra(a2, {0}).algebra->dim() == 1);
    CHECK(quotient_algebra(a2, {}).algebra->dim() == a2->dim());
    CHECK(quotient_algebra(a2, {0, 1}).algebra->dim() == 0);

    auto ba = fixtures::beta_alpha();
    auto c = corner_algebra(ba, {0});
    CHECK(c.algebra->dim() == 1);
    CHECK(c.vertex_map == std::vector<int>{0});
    auto qa = quotient_algebra(ba, {0});
    CHECK(qa.algebra->dim() == 1);
    CHECK(qa.vertex_map == std::vector<int>{1});
    // the arrow and everything through vertex 1 vanish in A/AeA
    CHECK(qa.projection[ba->basis_index("alpha")].is_zero());
    CHECK(qa.projection[ba->basis_index("alpha.beta")].is_zero());
    CHECK_THROWS_AS(corner_algebra(ba, {5}), InputError);
}

TEST_CASE("parse and format")
{
    auto ba = fixtures::beta_alpha(Field::rationals());
    Elem x = ba->parse("2*alpha.beta - e1 + 1/2*beta");
    CHECK(ba->parse(ba->format(x)) == x);
    CHECK(ba->parse("beta.alpha").is_zero());
    CHECK(ba->parse("alpha.beta") == ba->multiply(ba->parse("alpha"), ba->parse("beta")));
    CHECK(ba->parse("0").is_zero());
    CHECK_THROWS_AS(ba->parse("gamma"), InputError);
    CHECK_THROWS_AS(ba->parse("2*"), InputError);
}

TEST_CASE("opposite algebra")
{
    auto ba = fixtures::beta_alpha();
    auto op = ba->opposite();
    CHECK(op->dim() == ba->dim());
    auto ab = ba->basis_index("alpha.beta");
    CHECK(op->basis(ab).source == ba->basis(ab).target);
    CHECK(op->multiply(op->parse("beta"), op->parse("alpha")) == op->parse("alpha.beta"));
}
