#ifndef INTMAT_MEMBERSHIP_HPP
#define INTMAT_MEMBERSHIP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "intmat/base.hpp"
#include "intmat/matrix.hpp"
#include "intmat/poly.hpp"
#include "intmat/splitting_algebra.hpp"

namespace intmat {

/// Which criterion decided a membership question.
enum class Route {
    remainder,            // Euclidean remainder of g by p has all coefficients divisible by d
    companion,            // g at the companion matrix lands in d*M_n(Z)
    divided_diff,         // divided differences at the splitting-algebra roots lie in d*A_p
    exhaustive_residues,  // remainder test against every monic residue polynomial mod d
    brute_force,          // direct evaluation at every matrix of M_n(Z/dZ)
    triangular,           // divided differences divisible by d on residue tuples
};

std::string route_name(Route r);

// --- certificates -----------------------------------------------------------

/// f = r + p*q with r integer-coefficient; recombines exactly.
struct QuotientRemainder {
    RatPoly quotient;
    IntPoly remainder;
};

/// Companion-route evidence: f(C_p) = B with integer entries (g(C_p) = d*B).
struct MatrixCertificate {
    MatZ value;
};

/// Divided-difference route evidence: the Newton coefficients of g along the
/// generator prefix, divided by d (all divisions exact), as algebra
/// coordinates per coefficient.
struct NewtonCertificate {
    std::vector<std::vector<Int>> scaled_coords;
};

/// Record of a completed exhaustive sweep with no failures; re-verified by
/// re-running the sweep.
struct SweepCertificate {
    std::string what;  // residues | matrices | tuples
    std::uint64_t checked = 0;
};

using Certificate = std::variant<QuotientRemainder, MatrixCertificate, NewtonCertificate, SweepCertificate>;

// --- witnesses ---------------------------------------------------------------

/// A matrix M with f(M) not integral: entry (row, col) of g(M) is not
/// divisible by d.
struct MatrixWitness {
    MatZ matrix;
    int row = 0;
    int col = 0;
    Int entry_value;
};

/// Coefficient `index` of the remainder of g by p is not divisible by d.
struct CoeffWitness {
    std::size_t index = 0;
    Int value;
};

/// Divided difference of order k at the generators picked by `indices` is
/// not in d*A_p.
struct SubsetWitness {
    int k = 0;
    std::vector<int> indices;
};

/// Integer tuple (lifted to [0, d)) where the order-k divided difference of
/// g is not divisible by d.
struct TupleWitness {
    int k = 0;
    std::vector<Int> points;
    Int value;
};

/// A monic polynomial that does not divide g modulo d.
struct ResidueWitness {
    IntPoly poly;
    Int modulus;
};

using Witness = std::variant<MatrixWitness, CoeffWitness, SubsetWitness, TupleWitness, ResidueWitness>;

struct Counts {
    std::uint64_t residues_checked = 0;
    std::uint64_t matrices_swept = 0;
    std::uint64_t tuples_checked = 0;
    std::uint64_t subsets_checked = 0;
};

/// Decision outcome. Member verdicts carry a machine-checkable certificate,
/// non-member verdicts a machine-checkable witness. `sampled` marks member
/// verdicts that only verified a necessary condition.
struct Verdict {
    bool member = false;
    Route route = Route::remainder;
    std::optional<Certificate> certificate;
    std::optional<Witness> witness;
    Counts counts;
    bool sampled = false;
};

// --- sets of characteristic polynomials --------------------------------------

/// A set P of monic degree-n polynomials, explicit or described. The
/// modulus for the residue descriptions comes from the denominator of the
/// polynomial under test.
struct PSet {
    enum class Kind { explicit_list, all_monic_mod_d, all_split_mod_d, sampled_irreducible };

    Kind kind = Kind::explicit_list;
    int degree = 0;
    std::vector<IntPoly> list;  // explicit_list
    Int box;                    // sampled_irreducible coefficient bound

    static PSet explicit_polys(std::vector<IntPoly> polys);
    static PSet all_monic(int degree);
    static PSet all_split(int degree);
    static PSet sampled_irreducible(int degree, Int box);
};

// --- decision procedures ------------------------------------------------------

/// Membership of f in Int(M_n^p(Z), M_n(Z)) via the Euclidean remainder:
/// divide g by the monic p over Z and test every remainder coefficient for
/// divisibility by d.
Verdict member_mnp_remainder(const RatPoly& f, const IntPoly& p);

/// Same ring, decided at the companion matrix: member iff g(C_p) lies in
/// d*M_n(Z).
Verdict member_mnp_companion(const RatPoly& f, const IntPoly& p);

/// Same ring, decided through divided differences at the roots of p inside
/// the splitting algebra A_p: member iff phi^k(g) at every (k+1)-subset of
/// the root generators lies in d*A_p, for all k < n.
Verdict member_mnp_divdiff(const RatPoly& f, const IntPoly& p, const Budget& budget = {});

/// Same ring, decided by sweeping every matrix of M_n(Z/dZ) whose
/// characteristic polynomial equals p mod d.
Verdict member_mnp_bruteforce(const RatPoly& f, const IntPoly& p, const Budget& budget = {}, int jobs = 1);

/// Membership of f in Int(M_n^P(Z), M_n(Z)): the remainder test against
/// every p in P, deduplicated modulo d.
Verdict member_mnP(const RatPoly& f, const PSet& P, const Budget& budget = {});

/// Membership of f in Int(M_n(Z)): complete decision through the d^n monic
/// residue polynomials mod d.
Verdict member_mn(const RatPoly& f, int n, const Budget& budget = {});

/// Independent oracle for Int(M_n(Z)): evaluates g at every matrix of
/// M_n(Z/dZ).
Verdict member_mn_bruteforce(const RatPoly& f, int n, const Budget& budget = {}, int jobs = 1);

/// Necessary condition for Int(M_n(Z)) through monic irreducible integer
/// polynomials with coefficients in [-box, box]. Non-member verdicts are
/// definitive; member verdicts are marked sampled. Supports n <= 3, where
/// monic irreducibility over Q reduces to the absence of integer roots.
Verdict member_mn_irr_sampled(const RatPoly& f, int n, const Int& box, const Budget& budget = {});

/// Membership of f in Int(T_n(Z), M_n(Z)): divided differences of g up to
/// order n-1 must be divisible by d on every residue tuple.
Verdict member_tn(const RatPoly& f, int n, const Budget& budget = {});

// --- polynomial closure -------------------------------------------------------

/// Whether M lies in the polynomial closure of the matrices with
/// characteristic polynomial p, i.e. whether p(M) = 0.
bool in_closure(const MatZ& m, const IntPoly& p);

/// For irreducible monic p (degree <= 2), scans all integer matrices with
/// entries in [-box, box] and compares {M : p(M) = 0} against
/// {M : char_poly(M) = p}. The sets must coincide; any violation is a bug.
struct ClosureReport {
    std::uint64_t scanned = 0;
    std::uint64_t annihilating = 0;  // p(M) = 0
    std::uint64_t with_char_poly = 0;
    std::vector<MatZ> violations;
    bool exact() const { return violations.empty(); }
};

ClosureReport closure_is_exact_for_irreducible(const IntPoly& p, const Int& box, const Budget& budget = {});

/// Irreducibility over Q for monic integer polynomials of degree <= 3
/// (reducibility there means an integer root; degree 1 is always
/// irreducible).
bool is_irreducible_cubic_or_less(const IntPoly& p);

// --- independent re-verification ----------------------------------------------

/// Re-checks a verdict's certificate against f (and p where one is
/// involved) by direct recombination or re-evaluation.
bool verify_certificate(const RatPoly& f, const std::optional<IntPoly>& p, const Verdict& v);

/// Re-checks a verdict's witness by direct exact evaluation.
bool verify_witness(const RatPoly& f, const std::optional<IntPoly>& p, const Verdict& v);

}  // namespace intmat

#endif  // INTMAT_MEMBERSHIP_HPP
