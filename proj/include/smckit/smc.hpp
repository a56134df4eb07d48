#pragma once

#include "smckit/recollement.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace smckit {

/// How generation (axiom 2) is known.
enum class Evidence { StandardSimples, GluedFrom, MutatedFrom, UserAssumed };

struct Certificate {
    Evidence kind = Evidence::UserAssumed;
    std::string detail;
};

std::string to_string(Evidence e);

/// Ordered simple-minded collection candidate in K^b(proj alg).
struct SMC {
    AlgebraPtr alg;
    std::vector<ProjComplex> objects;
    Certificate certificate;

    std::size_t size() const { return objects.size(); }
};

struct SmcReport {
    bool axiom1 = true;
    bool axiom3 = true;
    /// The Euler classes form a basis of K_0 (square, determinant +-1).
    bool euler_unimodular = false;
    long euler_det = 0;
    std::string evidence;
    /// One line per violated identity, e.g. "dim Hom(S1, S2[-1]) = 1".
    std::vector<std::string> witnesses;

    bool passed() const { return axiom1 && axiom3 && euler_unimodular; }
};

SmcReport validate_smc(const SMC& s);

/// T in Filt S[>=0]: Hom(T, S_i[n]) = 0 for all n <= -1.
bool member_aisle(const ProjComplex& t, const SMC& s);
/// T in Filt S[<=0]: Hom(S_i[n], T) = 0 for all n >= 1.
bool member_coaisle(const ProjComplex& t, const SMC& s);

/// U -> T -> V -> U[1] with U in Filt S[>= 1 - threshold] and V in
/// Filt S[<= -threshold].
struct Truncation {
    ProjComplex t, u, v;
    ChainMap u_to_t, t_to_v;
    int threshold = 1;
    /// (object index, b) for each stripped layer S_i[-b].
    std::vector<std::pair<std::size_t, int>> strips;
    bool u_member = false, v_member = false;
    /// Both maps are chain maps, their composite is null-homotopic and [T] = [U] + [V].
    bool cone_ok = false;
};

Truncation truncate(const ProjComplex& t, const SMC& s, int threshold = 1, const Options& opts = {});

/// Running totals over every truncate call in the process.
struct TruncationStats {
    std::size_t calls = 0;
    std::size_t failures = 0;
};
TruncationStats truncation_stats();

/// Byproducts of gluing one object Y_j.
struct GluedPiece {
    ProjComplex y;
    ProjComplex image;   // j_!(Y_j), or j_*(Y_j) for the dual
    ChainMap theta;      // j_!(Y_j) -> j_*(Y_j)
    ProjComplex middle;  // i_*i^!j_!(Y_j), or i_*i^*j_*(Y_j)
    Truncation trunc;    // U_j, V_j, or M_j, N_j
    /// Glue: the triangle i_*U -> j_!Y -> W. Dual: j_*Y -> i_*N -> P[1].
    Triangle triangle;
    ProjComplex object;  // W_j or P_j, minimal
};

struct GluingReport {
    bool dual = false;
    std::vector<GluedPiece> pieces;
};

struct Glued {
    SMC smc;
    GluingReport report;
};

/// i_*(S_X) as a collection over A.
SMC x_image(const SMC& sx, const Recollement& r);
/// (i_*X_1, ..., i_*X_m, W_1, ..., W_n).
Glued glue(const SMC& sx, const SMC& sy, const Recollement& r);
/// (i_*X_1, ..., i_*X_m, P_1, ..., P_n).
Glued glue_dual(const SMC& sx, const SMC& sy, const Recollement& r);

/// Left is mu^+ (S_i -> S_i[1]), right is mu^- (S_i -> S_i[-1]).
enum class Direction { Left, Right };

struct MutationStep {
    std::size_t index = 0;
    Direction direction = Direction::Left;
    /// d_l for every l (0 at l = index).
    std::vector<std::size_t> multiplicity;
    /// g_l: S_l[-1] -> S_i^{d_l} (left) or S_i^{d_l} -> S_l[1] (right).
    std::vector<ChainMap> approximations;
};

struct Mutated {
    SMC smc;
    MutationStep step;
};

bool is_rigid(const ProjComplex& x);
/// Throws MathError when S_i is not rigid unless `force`.
Mutated mutate(const SMC& s, std::size_t i, Direction d, bool force = false);

SMC shift(const SMC& s, int n);
SMC standard_simples(const AlgebraPtr& a, const Options& opts = {});

/// S >= S': Hom(S'_i, S_j[n]) = 0 for all n < 0.
bool geq(const SMC& s, const SMC& s2);

enum class Order { Equal, Greater, Less, Incomparable };
std::string to_string(Order o);
/// Greater means s >= s2. Throws InputError on a size mismatch.
Order compare(const SMC& s, const SMC& s2, const Options& opts = {});

/// A bijection of objects under is_iso.
bool smc_iso(const SMC& s, const SMC& s2, const Options& opts = {});

/// Some j^!(S_i) is zero (necessary for S to be glued).
bool is_glued_type_candidate(const SMC& s, const Recollement& r);

/// Name of x as a shifted simple, projective or injective ("P1[1]"), if it is one.
std::optional<std::string> name_object(const ProjComplex& x, const Options& opts = {});
std::string describe(const ProjComplex& x, const Options& opts = {});
std::string describe(const SMC& s, const Options& opts = {});

} // namespace smckit
