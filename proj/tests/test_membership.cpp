#include <doctest.h>

#include "intmat/divided_differences.hpp"
#include "intmat/enumerate.hpp"
#include "intmat/membership.hpp"
#include "intmat/parse.hpp"
#include "oracles.hpp"

using namespace intmat;

namespace {

RatPoly frac(IntPoly g, long long d) { return canonicalize(std::move(g), d); }

const IntPoly kX2mX{0, -1, 1};  // X^2 - X

}  // namespace

TEST_CASE("member_mnp_remainder examples") {
    RatPoly f = frac(kX2mX, 2);

    Verdict v1 = member_mnp_remainder(f, kX2mX);
    CHECK(v1.member);
    const auto& cert = std::get<QuotientRemainder>(*v1.certificate);
    CHECK(cert.remainder.is_zero());
    CHECK(cert.quotient == canonicalize(IntPoly{1}, 2));
    CHECK(verify_certificate(f, kX2mX, v1));

    Verdict v2 = member_mnp_remainder(f, IntPoly{0, 0, 1});
    CHECK_FALSE(v2.member);
    const auto& w = std::get<CoeffWitness>(*v2.witness);
    CHECK(w.index == 1);
    CHECK(w.value == -1);
    CHECK(verify_witness(f, IntPoly{0, 0, 1}, v2));

    // integer polynomial of degree < n: member with q = 0, r = f
    RatPoly fi = frac(IntPoly{3, 1}, 1);
    Verdict v3 = member_mnp_remainder(fi, IntPoly{0, 0, 1});
    CHECK(v3.member);
    const auto& c3 = std::get<QuotientRemainder>(*v3.certificate);
    CHECK(c3.quotient.is_zero());
    CHECK(c3.remainder == IntPoly{3, 1});
}

TEST_CASE("member_mnp_companion examples") {
    RatPoly f = frac(kX2mX, 2);
    Verdict v1 = member_mnp_companion(f, IntPoly{0, 0, 1});
    CHECK_FALSE(v1.member);
    const auto& w = std::get<MatrixWitness>(*v1.witness);
    CHECK(w.matrix == companion(IntPoly{0, 0, 1}));
    CHECK(verify_witness(f, IntPoly{0, 0, 1}, v1));

    // f = p/1 is annihilated at the companion matrix
    IntPoly p{3, -1, 2, 1};
    Verdict v2 = member_mnp_companion(frac(p, 1), p);
    CHECK(v2.member);
    CHECK(std::get<MatrixCertificate>(*v2.certificate).value.is_zero());
    CHECK(verify_certificate(frac(p, 1), p, v2));
}

TEST_CASE("remainder and companion routes agree on random inputs") {
    testing::Rng rng(31);
    for (int iter = 0; iter < 2000; ++iter) {
        int n = static_cast<int>(rng.pick(1, 3));
        IntPoly p = rng.monic_poly(n, -4, 4);
        RatPoly f = frac(rng.poly(6, -9, 9), rng.pick(1, 9));
        Verdict a = member_mnp_remainder(f, p);
        Verdict b = member_mnp_companion(f, p);
        CHECK(a.member == b.member);
    }
}

TEST_CASE("member_mnp_divdiff examples") {
    RatPoly f = frac(kX2mX, 2);
    IntPoly p{1, 1, 1};  // X^2 + X + 1

    Verdict v1 = member_mnp_divdiff(f, p);
    CHECK_FALSE(v1.member);
    const auto& w = std::get<SubsetWitness>(*v1.witness);
    CHECK(w.k == 0);
    CHECK(w.indices == std::vector<int>{0});
    CHECK(verify_witness(f, p, v1));

    // g in dZ[X] is a member, with a Newton certificate
    RatPoly f2 = frac(IntPoly{4, -2, 6}, 2);
    Verdict v2 = member_mnp_divdiff(f2, p);
    CHECK(v2.member);
    CHECK(std::holds_alternative<NewtonCertificate>(*v2.certificate));
    CHECK(verify_certificate(f2, p, v2));

    // budget: degree 6 algebra is refused
    CHECK_THROWS_AS(member_mnp_divdiff(f, IntPoly{1, 0, 0, 0, 0, 0, 1}), BudgetExceeded);
}

TEST_CASE("divided-difference route on a split polynomial matches the integer-tuple test") {
    testing::Rng rng(32);
    IntPoly p = IntPoly{0, 1} * IntPoly{-1, 1};  // X(X - 1)
    for (int iter = 0; iter < 300; ++iter) {
        RatPoly f = frac(rng.poly(5, -6, 6), rng.pick(1, 6));
        bool expected = (f.num().evaluate(0) % f.den()) == 0 && (f.num().evaluate(1) % f.den()) == 0 &&
                        (phi_eval_int(f.num(), std::vector<Int>{0, 1}) % f.den()) == 0;
        CHECK(member_mnp_divdiff(f, p).member == expected);
    }
}

TEST_CASE("four-way equivalence on a small grid") {
    testing::Rng rng(33);
    for (int iter = 0; iter < 400; ++iter) {
        IntPoly p = rng.monic_poly(2, -2, 2);
        RatPoly f = frac(rng.poly(4, 0, 3), rng.pick(2, 3));
        Verdict a = member_mnp_remainder(f, p);
        Verdict b = member_mnp_companion(f, p);
        Verdict c = member_mnp_divdiff(f, p);
        Verdict d = member_mnp_bruteforce(f, p);
        CHECK(a.member == b.member);
        CHECK(a.member == c.member);
        CHECK(a.member == d.member);
    }
}

TEST_CASE("member_mnP") {
    // singleton reduces to the remainder test
    testing::Rng rng(34);
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly p = rng.monic_poly(2, -3, 3);
        RatPoly f = frac(rng.poly(5, -5, 5), rng.pick(1, 6));
        CHECK(member_mnP(f, PSet::explicit_polys({p})).member == member_mnp_remainder(f, p).member);
    }

    // X^2 (X-1)^2 (X^2+X+1) / 2 is integer-valued on all of M_2(Z)
    IntPoly g = IntPoly{0, 0, 1} * IntPoly{1, -2, 1} * IntPoly{1, 1, 1};
    RatPoly member_f = frac(g, 2);
    Verdict v1 = member_mnP(member_f, PSet::all_monic(2));
    CHECK(v1.member);
    CHECK(v1.counts.residues_checked == 4);

    // (X^2-X)(X^2-X-2)/2 fails exactly at the irreducible residue X^2+X+1
    IntPoly h = kX2mX * IntPoly{-2, -1, 1};
    RatPoly nonmember_f = frac(h, 2);
    Verdict v2 = member_mnP(nonmember_f, PSet::all_monic(2));
    CHECK_FALSE(v2.member);
    const auto& w = std::get<ResidueWitness>(*v2.witness);
    CHECK(w.poly == IntPoly{1, 1, 1});
    CHECK(w.modulus == 2);
    CHECK(verify_witness(nonmember_f, std::nullopt, v2));

    // mixed degrees are rejected
    CHECK_THROWS_AS(PSet::explicit_polys({IntPoly{0, 1}, IntPoly{0, 0, 1}}), InvalidInput);
}

TEST_CASE("member_mn regressions and examples") {
    // (X^2 - X)/2 is not integer-valued on M_2(Z)
    Verdict v1 = member_mn(frac(kX2mX, 2), 2);
    CHECK_FALSE(v1.member);
    CHECK(v1.route == Route::exhaustive_residues);

    // its brute-force witness is the first nilpotent in enumeration order
    Verdict bf = member_mn_bruteforce(frac(kX2mX, 2), 2);
    CHECK_FALSE(bf.member);
    const auto& w = std::get<MatrixWitness>(*bf.witness);
    CHECK(w.matrix == MatZ(2, {Int(0), Int(1), Int(0), Int(0)}));
    CHECK(verify_witness(frac(kX2mX, 2), std::nullopt, bf));

    // integer polynomials are members
    CHECK(member_mn(frac(IntPoly{7, -3, 2, 1}, 1), 2).member);
    CHECK(member_mn_bruteforce(frac(IntPoly{7, -3, 2, 1}, 1), 2).member);

    // X^2(X-1)^2(X^2+X+1)/2 is a member, cross-checked by brute force
    IntPoly g = IntPoly{0, 0, 1} * IntPoly{1, -2, 1} * IntPoly{1, 1, 1};
    CHECK(member_mn(frac(g, 2), 2).member);
    CHECK(member_mn_bruteforce(frac(g, 2), 2).member);
}

TEST_CASE("member_mn_bruteforce: n = 1 is the classical integer-valuedness check") {
    Verdict v = member_mn_bruteforce(frac(kX2mX, 2), 1);
    CHECK(v.member);  // binomial coefficient: X(X-1)/2 is integer-valued on Z
    CHECK(member_mn(frac(kX2mX, 2), 1).member);
    // (X^2+1)/2 is not: at X = 0 the value is 1/2
    Verdict v2 = member_mn_bruteforce(frac(IntPoly{1, 0, 1}, 2), 1);
    CHECK_FALSE(v2.member);
    CHECK(std::get<MatrixWitness>(*v2.witness).matrix == MatZ(1, {Int(0)}));
}

TEST_CASE("member_mn equals the brute-force oracle on part of the exhaustive family") {
    for (std::uint64_t bits = 0; bits < 128; bits += 2) {
        std::vector<Int> c;
        for (int i = 0; i < 7; ++i) c.emplace_back((bits >> i) & 1u);
        RatPoly f = canonicalize(IntPoly(std::move(c)), 2);
        CHECK(member_mn(f, 2).member == member_mn_bruteforce(f, 2).member);
    }
}

TEST_CASE("member_mn parallel sweeps are deterministic") {
    IntPoly h = kX2mX * IntPoly{-2, -1, 1};
    RatPoly f = frac(h, 2);
    Verdict base = member_mn_bruteforce(f, 2, {}, 1);
    for (int jobs : {2, 4}) {
        Verdict v = member_mn_bruteforce(f, 2, {}, jobs);
        CHECK(v.member == base.member);
        CHECK(std::get<MatrixWitness>(*v.witness).matrix == std::get<MatrixWitness>(*base.witness).matrix);
    }
}

TEST_CASE("member_mn_irr_sampled") {
    // witness replay: the failing irreducible residue from member_mn
    IntPoly h = kX2mX * IntPoly{-2, -1, 1};
    RatPoly f = frac(h, 2);
    Verdict v = member_mn_irr_sampled(f, 2, 4);
    CHECK_FALSE(v.member);
    CHECK_FALSE(v.sampled);
    CHECK(std::get<ResidueWitness>(*v.witness).poly == IntPoly{1, 1, 1});

    // integer polynomials: member, flagged as sampled
    Verdict v2 = member_mn_irr_sampled(frac(IntPoly{1, 2, 3}, 1), 2, 3);
    CHECK(v2.member);
    CHECK(v2.sampled);

    // agreement with the complete decision on the exhaustive half-family
    for (std::uint64_t bits = 1; bits < 128; bits += 2) {
        std::vector<Int> c;
        for (int i = 0; i < 7; ++i) c.emplace_back((bits >> i) & 1u);
        RatPoly g = canonicalize(IntPoly(std::move(c)), 2);
        CHECK(member_mn_irr_sampled(g, 2, 4).member == member_mn(g, 2).member);
    }

    CHECK_THROWS_AS(member_mn_irr_sampled(f, 4, 2), InvalidInput);
}

TEST_CASE("member_tn examples") {
    RatPoly f = frac(kX2mX, 2);
    Verdict v = member_tn(f, 2);
    CHECK_FALSE(v.member);
    const auto& w = std::get<TupleWitness>(*v.witness);
    CHECK(w.k == 1);
    CHECK(w.points == std::vector<Int>{0, 0});
    CHECK(w.value == -1);
    CHECK(verify_witness(f, std::nullopt, v));

    CHECK(member_tn(frac(IntPoly{5, 5, 5}, 1), 3).member);

    // n = 1 reduces to integer-valuedness on Z
    CHECK(member_tn(frac(kX2mX, 2), 1).member);
}

TEST_CASE("member_mn implies member_tn on the exhaustive family") {
    int strict = 0;
    for (std::uint64_t bits = 0; bits < 128; ++bits) {
        std::vector<Int> c;
        for (int i = 0; i < 7; ++i) c.emplace_back((bits >> i) & 1u);
        RatPoly f = canonicalize(IntPoly(std::move(c)), 2);
        bool mn = member_mn(f, 2).member;
        bool tn = member_tn(f, 2).member;
        if (mn) CHECK(tn);
        if (tn && !mn) ++strict;
    }
    CHECK(strict > 0);  // the containment is strict
}

TEST_CASE("split-residue P-set verdicts equal the triangular route") {
    testing::Rng rng(35);
    for (int iter = 0; iter < 200; ++iter) {
        RatPoly f = frac(rng.poly(6, -4, 4), rng.pick(1, 4));
        int n = static_cast<int>(rng.pick(1, 3));
        CHECK(member_mnP(f, PSet::all_split(n)).member == member_tn(f, n).member);
    }
}

TEST_CASE("degenerate inputs") {
    // d = 1 short-circuits to member everywhere
    RatPoly f = frac(IntPoly{1, 1, 1, 1}, 1);
    CHECK(member_mn(f, 3).member);
    CHECK(member_tn(f, 3).member);
    CHECK(member_mn_bruteforce(f, 3).member);
    CHECK(member_mnp_bruteforce(f, IntPoly{1, 1, 1}).member);
    CHECK_THROWS_AS(member_mn(f, 0), InvalidInput);

    // budget errors surface the required count
    RatPoly big = frac(IntPoly{1, 1}, 1009);
    CHECK_THROWS_AS(member_mn(big, 4), BudgetExceeded);
    try {
        member_mn(big, 4);
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() == int_pow(Int(1009), 4));
    }
}

TEST_CASE("in_closure examples") {
    // p(I) = 0 for p = X^2 - X although char_poly(I) != p
    CHECK(in_closure(MatZ::identity(2), kX2mX));
    CHECK(char_poly(MatZ::identity(2)) != kX2mX);

    CHECK_FALSE(in_closure(MatZ::identity(2), IntPoly{1, 0, 1}));
    IntPoly p{2, -3, 0, 1};
    CHECK(in_closure(companion(p), p));

    CHECK_THROWS_AS(in_closure(MatZ::identity(3), kX2mX), InvalidInput);
}

TEST_CASE("closure scans for irreducible quadratics") {
    ClosureReport r1 = closure_is_exact_for_irreducible(IntPoly{1, 0, 1}, 3);
    CHECK(r1.exact());
    CHECK(r1.annihilating == r1.with_char_poly);
    // independent count: integer 2x2 matrices in the box with trace 0, det 1
    std::uint64_t expected = 0;
    for (long long a = -3; a <= 3; ++a)
        for (long long b = -3; b <= 3; ++b)
            for (long long c = -3; c <= 3; ++c)
                for (long long e = -3; e <= 3; ++e)
                    if (a + e == 0 && a * e - b * c == 1) ++expected;
    CHECK(r1.annihilating == expected);

    ClosureReport r2 = closure_is_exact_for_irreducible(IntPoly{-1, -1, 1}, 3);
    CHECK(r2.exact());

    CHECK_THROWS_AS(closure_is_exact_for_irreducible(kX2mX, 3), InvalidInput);  // reducible
    CHECK_THROWS_AS(closure_is_exact_for_irreducible(IntPoly{1, 0, 0, 1}, 1), InvalidInput);  // degree 3
}

TEST_CASE("irreducibility test") {
    CHECK(is_irreducible_cubic_or_less(IntPoly{1, 1, 1}));
    CHECK(is_irreducible_cubic_or_less(IntPoly{1, 0, 1}));
    CHECK_FALSE(is_irreducible_cubic_or_less(kX2mX));
    CHECK_FALSE(is_irreducible_cubic_or_less(IntPoly{1, 2, 1}));
    CHECK(is_irreducible_cubic_or_less(IntPoly{-1, -1, 0, 1}));   // X^3 - X - 1
    CHECK_FALSE(is_irreducible_cubic_or_less(IntPoly{0, 0, 0, 1}));  // X^3
    CHECK_FALSE(is_irreducible_cubic_or_less(IntPoly{-8, 0, 0, 1}));  // root 2
    CHECK(is_irreducible_cubic_or_less(IntPoly{5, 1}));
    CHECK_THROWS_AS(is_irreducible_cubic_or_less(IntPoly{1, 1, 1, 1, 1}), InvalidInput);
}

TEST_CASE("certificates and witnesses re-verify across routes") {
    testing::Rng rng(36);
    for (int iter = 0; iter < 500; ++iter) {
        int n = static_cast<int>(rng.pick(1, 3));
        IntPoly p = rng.monic_poly(n, -3, 3);
        RatPoly f = frac(rng.poly(5, -6, 6), rng.pick(2, 6));

        for (Verdict v : {member_mnp_remainder(f, p), member_mnp_companion(f, p), member_mnp_divdiff(f, p),
                          member_mnp_bruteforce(f, p)}) {
            if (v.member)
                CHECK(verify_certificate(f, p, v));
            else
                CHECK(verify_witness(f, p, v));
        }
        Verdict tn = member_tn(f, n);
        if (!tn.member) CHECK(verify_witness(f, std::nullopt, tn));
        Verdict mn = member_mn(f, n);
        if (!mn.member) CHECK(verify_witness(f, std::nullopt, mn));
    }
}

TEST_CASE("pullback shape: members of degree < n have integral coefficients, certificates recombine") {
    testing::Rng rng(37);
    for (int iter = 0; iter < 400; ++iter) {
        int n = static_cast<int>(rng.pick(1, 3));
        IntPoly p = rng.monic_poly(n, -3, 3);
        RatPoly f = frac(rng.poly(n - 1 >= 0 ? n - 1 : 0, -9, 9), rng.pick(2, 6));
        Verdict v = member_mnp_remainder(f, p);
        if (v.member) CHECK(f.den() == 1);
        if (f.den() == 1) CHECK(v.member);
    }
}
