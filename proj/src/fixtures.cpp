#include "smckit/fixtures.hpp"

namespace smckit::fixtures {

Quiver a2_quiver()
{
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", 0, 1}};
    return q;
}

AlgebraPtr a2(const Field& f) { return build_path_algebra(f, a2_quiver(), {}); }

Quiver beta_alpha_quiver()
{
    Quiver q;
    q.vertices = {"1", "2"};
    q.arrows = {{"beta", 0, 1}, {"alpha", 1, 0}};
    return q;
}

std::vector<Path> beta_alpha_relations() { return {{0, 1}}; }

AlgebraPtr beta_alpha(const Field& f) { return build_path_algebra(f, beta_alpha_quiver(), beta_alpha_relations()); }

} // namespace smckit::fixtures
