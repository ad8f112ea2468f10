// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Thresholds and tolerances are pinned here:
//   1. four-way route equivalence, exhaustive grid, 0 disagreements, < 60 s
//   2. complete residue decision == brute-force matrix oracle, 0
//      disagreements on the exhaustive n=2 family and an n=3 spot check,
//      < 30 s / < 60 s
//   3. certificate/witness integrity on 10^4 randomized cases, 100%
//   4. Newton/divided-difference identities, 10^3 + permutation sweeps, 0
//      failures, < 10 s
//   5. splitting-algebra structure for all monic p, n <= 3, |coeff| <= 3,
//      0 failures, < 30 s
//   6. null-ideal principality at companion matrices, n = 2, d in {2,3},
//      0 failures, < 10 s
//   7. triangular/split agreement plus a strict containment witness, < 30 s
//   8. closure scans for X^2+1 and X^2-X-1 with entries in [-3,3], exact;
//      identity matrix in the closure for X^2-X, < 10 s
//   9. enumeration floor: 1,679,616-matrix filtered sweep < 5 s single
//      thread; 4-worker sweep bit-identical with speedup >= 0.55 x
//      min(4, hardware threads)
//  10. three known-element regressions, stable across every route

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <thread>
#include <vector>

#include "intmat/divided_differences.hpp"
#include "intmat/enumerate.hpp"
#include "intmat/membership.hpp"
#include "intmat/parse.hpp"
#include "oracles.hpp"

using namespace intmat;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1() {
    const auto start = Clock::now();
    std::uint64_t cases = 0, disagreements = 0;
    // all monic quadratics with coefficients in [-2, 2]
    std::vector<IntPoly> ps;
    for (long long c0 = -2; c0 <= 2; ++c0)
        for (long long c1 = -2; c1 <= 2; ++c1) ps.push_back(IntPoly{Int(c0), Int(c1), 1});
    // all g with coefficients in {0..3}, deg <= 4
    for (long long d : {2, 3}) {
        std::vector<Int> c(5, Int(0));
        while (true) {
            RatPoly f = canonicalize(IntPoly(std::vector<Int>(c)), d);
            for (const IntPoly& p : ps) {
                const bool a = member_mnp_remainder(f, p).member;
                const bool b = member_mnp_companion(f, p).member;
                const bool e = member_mnp_divdiff(f, p).member;
                const bool m = member_mnp_bruteforce(f, p).member;
                ++cases;
                if (a != b || a != e || a != m) ++disagreements;
            }
            std::size_t pos = 0;
            while (pos < c.size() && c[pos] == 3) {
                c[pos] = 0;
                ++pos;
            }
            if (pos == c.size()) break;
            ++c[pos];
        }
    }
    const double t = seconds_since(start);
    report(1, disagreements == 0 && t < 60.0,
           fmt("four-way equivalence: %llu cases, %llu disagreements, %.1f s (limit 60 s)",
               (unsigned long long)cases, (unsigned long long)disagreements, t));
}

void criterion_2() {
    const auto start = Clock::now();
    std::uint64_t disagreements = 0;
    for (std::uint64_t bits = 0; bits < 128; ++bits) {
        std::vector<Int> c;
        for (int i = 0; i < 7; ++i) c.emplace_back((bits >> i) & 1u);
        RatPoly f = canonicalize(IntPoly(std::move(c)), 2);
        if (member_mn(f, 2).member != member_mn_bruteforce(f, 2).member) ++disagreements;
    }
    const double t2 = seconds_since(start);
    const bool family_ok = disagreements == 0 && t2 < 30.0;

    const auto start3 = Clock::now();
    std::uint64_t disagreements3 = 0;
    testing::Rng rng(1002);
    for (int iter = 0; iter < 10; ++iter) {
        RatPoly f = canonicalize(rng.poly(6, 0, 1), 2);
        if (member_mn(f, 3).member != member_mn_bruteforce(f, 3).member) ++disagreements3;
    }
    const double t3 = seconds_since(start3);
    report(2, family_ok && disagreements3 == 0 && t3 < 60.0,
           fmt("residue decision vs matrix oracle: 128 f at n=2 (%llu diff, %.1f s), 10 f at n=3 "
               "(%llu diff, %.1f s)",
               (unsigned long long)disagreements, t2, (unsigned long long)disagreements3, t3));
}

void criterion_3() {
    const auto start = Clock::now();
    testing::Rng rng(1003);
    std::uint64_t checked = 0, failures = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        const int n = static_cast<int>(rng.pick(1, 3));
        IntPoly p = rng.monic_poly(n, -4, 4);
        RatPoly f = canonicalize(rng.poly(6, -9, 9), rng.pick(2, 9));

        Verdict rem = member_mnp_remainder(f, p);
        Verdict com = member_mnp_companion(f, p);
        ++checked;
        if (rem.member != com.member) {
            ++failures;
            continue;
        }
        if (rem.member) {
            // (q, r) must recombine to f exactly
            if (!verify_certificate(f, p, rem)) ++failures;
            if (!verify_certificate(f, p, com)) ++failures;
        } else {
            // the witness matrix must evaluate to a non-integral image
            if (!verify_witness(f, p, com)) ++failures;
            if (!verify_witness(f, p, rem)) ++failures;
        }
    }
    const double t = seconds_since(start);
    report(3, failures == 0,
           fmt("certificate/witness integrity: %llu randomized cases, %llu failures, %.1f s",
               (unsigned long long)checked, (unsigned long long)failures, t));
}

void criterion_4() {
    const auto start = Clock::now();
    testing::Rng rng(1004);
    const IntegerRing z;
    const RationalRing q;
    std::uint64_t failures = 0;

    // Newton reconstruction on 10^3 random (g, nodes) with repetitions
    for (int iter = 0; iter < 1000; ++iter) {
        IntPoly g = rng.poly(8, -20, 20);
        std::vector<Int> nodes;
        const int count = std::max(0, g.degree()) + static_cast<int>(rng.pick(0, 2));
        for (int i = 0; i < count; ++i) nodes.push_back(rng.int_in(-3, 3));
        auto e = newton_expand(z, g.coeffs(), nodes);
        if (!poly_eq(z, newton_reconstruct(z, e), g.coeffs())) ++failures;
    }

    // permutation symmetry for k <= 3
    for (int iter = 0; iter < 120; ++iter) {
        IntPoly g = rng.poly(6, -9, 9);
        std::vector<Rat> gq;
        for (const Int& c : g.coeffs()) gq.emplace_back(c);
        for (int k = 1; k <= 3; ++k) {
            std::vector<Rat> pts;
            for (int i = 0; i <= k; ++i) pts.push_back(Rat(rng.int_in(-5, 5)));
            std::sort(pts.begin(), pts.end());
            Rat ref = phi_eval(q, gq, std::span<const Rat>(pts.data(), pts.size()));
            do {
                if (phi_eval(q, gq, std::span<const Rat>(pts.data(), pts.size())) != ref) ++failures;
            } while (std::next_permutation(pts.begin(), pts.end()));
        }
    }

    // annihilation beyond the degree
    for (int iter = 0; iter < 300; ++iter) {
        IntPoly g = rng.poly(5, -9, 9);
        std::vector<Int> pts;
        for (int i = 0; i <= g.degree() + 1 + static_cast<int>(rng.pick(0, 2)); ++i) pts.push_back(rng.int_in(-9, 9));
        if (phi_eval_int(g, pts) != 0) ++failures;
    }

    const double t = seconds_since(start);
    report(4, failures == 0 && t < 10.0,
           fmt("divided-difference foundations: %llu failures, %.1f s (limit 10 s)", (unsigned long long)failures, t));
}

void criterion_5() {
    const auto start = Clock::now();
    std::uint64_t algebras = 0, failures = 0;
    for (int n = 1; n <= 3; ++n) {
        std::vector<Int> coeff(static_cast<std::size_t>(n), Int(-3));
        while (true) {
            std::vector<Int> c = coeff;
            c.emplace_back(1);
            IntPoly p(std::move(c));
            SplitAlgebra a = SplitAlgebra::build(p);
            ++algebras;

            std::size_t expected_rank = 1;
            for (int i = 2; i <= n; ++i) expected_rank *= static_cast<std::size_t>(i);
            if (a.rank() != expected_rank) ++failures;

            // multiplication closes on the basis
            for (std::size_t i = 0; i < a.rank(); ++i)
                for (std::size_t j = i; j < a.rank(); ++j) {
                    AlgElem u = a.zero(), v = a.zero();
                    u.coords[i] = 1;
                    v.coords[j] = 1;
                    if (a.mul(u, v).coords.size() != a.rank()) ++failures;
                }

            // prod (X - x_i) = p and e_k = (-1)^k p_{n-k}
            Coeffs<SplitAlgebra> prod{a.one()};
            for (int i = 0; i < n; ++i) prod = poly_mul(a, prod, poly_linear(a, a.generator(i)));
            if (prod.size() != static_cast<std::size_t>(n) + 1) ++failures;
            for (int t = 0; t <= n && prod.size() == static_cast<std::size_t>(n) + 1; ++t)
                if (!a.eq(prod[static_cast<std::size_t>(t)], a.from_int(p.coeff(static_cast<std::size_t>(t)))))
                    ++failures;

            std::size_t pos = 0;
            while (pos < coeff.size() && coeff[pos] == 3) {
                coeff[pos] = -3;
                ++pos;
            }
            if (pos == coeff.size()) break;
            ++coeff[pos];
        }
    }
    const double t = seconds_since(start);
    report(5, failures == 0 && t < 30.0,
           fmt("splitting-algebra soundness: %llu algebras (n <= 3), %llu failures, %.1f s (limit 30 s)",
               (unsigned long long)algebras, (unsigned long long)failures, t));
}

void criterion_6() {
    const auto start = Clock::now();
    std::uint64_t failures = 0, polys = 0;
    for (std::int64_t d : {2, 3}) {
        for (std::int64_t c0 = 0; c0 < d; ++c0)
            for (std::int64_t c1 = 0; c1 < d; ++c1) {
                IntPoly p{Int(c0), Int(c1), 1};
                ++polys;
                auto found = null_ideal_scan(companion_mod(p, d), 3);
                std::vector<ModPoly> expected;
                ModPoly pbar = reduce_mod(p, d);
                for (std::int64_t h0 = 0; h0 < d; ++h0)
                    for (std::int64_t h1 = 0; h1 < d; ++h1) expected.push_back(ModPoly(d, {h0, h1}) * pbar);
                std::sort(expected.begin(), expected.end());
                std::vector<ModPoly> got = found;
                std::sort(got.begin(), got.end());
                if (got != expected || found.size() != static_cast<std::size_t>(d * d)) ++failures;
            }
    }
    const double t = seconds_since(start);
    report(6, failures == 0 && t < 10.0,
           fmt("null-ideal principality at companions: %llu residue polynomials, %llu failures, %.1f s",
               (unsigned long long)polys, (unsigned long long)failures, t));
}

void criterion_7() {
    const auto start = Clock::now();
    std::uint64_t failures = 0;
    std::uint64_t strict = 0;
    RatPoly strict_example;
    for (std::uint64_t bits = 0; bits < 128; ++bits) {
        std::vector<Int> c;
        for (int i = 0; i < 7; ++i) c.emplace_back((bits >> i) & 1u);
        RatPoly f = canonicalize(IntPoly(std::move(c)), 2);
        const bool tn = member_tn(f, 2).member;
        const bool split = member_mnP(f, PSet::all_split(2)).member;
        const bool mn = member_mn(f, 2).member;
        if (tn != split) ++failures;
        if (mn && !tn) ++failures;
        if (tn && !mn) {
            if (strict == 0) strict_example = f;
            ++strict;
        }
    }
    // a strict witness must fail only at the irreducible residue X^2+X+1
    bool strict_shape_ok = false;
    if (strict > 0) {
        Verdict v = member_mn(strict_example, 2);
        if (!v.member) {
            const auto* rw = std::get_if<ResidueWitness>(&*v.witness);
            strict_shape_ok = rw && rw->poly == IntPoly{1, 1, 1};
        }
    }
    const double t = seconds_since(start);
    report(7, failures == 0 && strict > 0 && strict_shape_ok && t < 30.0,
           fmt("triangular vs split P-set: 128 f, %llu mismatches, %llu strict containment witnesses "
               "(first: %s, fails at x^2+x+1), %.1f s",
               (unsigned long long)failures, (unsigned long long)strict, to_string(strict_example).c_str(), t));
}

void criterion_8() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;
    for (const IntPoly& p : {IntPoly{1, 0, 1}, IntPoly{-1, -1, 1}}) {
        ClosureReport r = closure_is_exact_for_irreducible(p, 3);
        ok = ok && r.exact() && r.annihilating == r.with_char_poly;
        detail += fmt("%s: %llu matches of %llu scanned; ", to_string(p).c_str(),
                      (unsigned long long)r.annihilating, (unsigned long long)r.scanned);
    }
    // reducible case: the identity matrix lies in the closure of X^2 - X
    // although its characteristic polynomial differs
    IntPoly x2mx{0, -1, 1};
    ok = ok && in_closure(MatZ::identity(2), x2mx) && char_poly(MatZ::identity(2)) != x2mx;
    const double t = seconds_since(start);
    report(8, ok && t < 10.0, fmt("closure law: %sidentity in closure of x^2 - x: yes; %.1f s", detail.c_str(), t));
}

void criterion_9() {
    // (a) the sweep sizes: the full M_2(Z/6) space and a 1,679,616-matrix
    // space (M_2(Z/36)), both char-poly filtered, single thread, < 5 s.
    const auto t6_start = Clock::now();
    std::uint64_t count6 = 0;
    for_each_matrix_with_charpoly(2, 6, reduce_mod(IntPoly{1, 1, 1}, 6), {0, matrix_space_size(2, 6)},
                                  [&](std::uint64_t, const std::vector<std::int64_t>&) {
                                      ++count6;
                                      return true;
                                  });
    const double t6 = seconds_since(t6_start);

    const std::int64_t d = 36;
    const std::uint64_t total = matrix_space_size(2, d);
    const ModPoly target = reduce_mod(IntPoly{1, 1, 1}, d);
    auto counting_sweep = [&](int jobs) {
        return parallel_sweep(total, jobs, [&](EnumRange range) {
            SweepOutcome out;
            for_each_matrix_with_charpoly(2, d, target, range,
                                          [&](std::uint64_t, const std::vector<std::int64_t>&) {
                                              ++out.swept;
                                              return true;
                                          });
            return out;
        });
    };

    // (b) bit-identical outcomes and speedup with 4 workers. The speedup
    // floor is pinned at 0.55 x min(4, hardware threads): near-linear on a
    // 4-core box, proportionally scaled when fewer cores exist. Both
    // timings are the best of three interleaved runs to damp scheduler
    // noise.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const double speedup_floor = 0.55 * static_cast<double>(std::min(4u, hw));

    double t1 = 1e9, t4 = 1e9;
    SweepOutcome single, quad;
    for (int rep = 0; rep < 3; ++rep) {
        auto s = Clock::now();
        single = counting_sweep(1);
        t1 = std::min(t1, seconds_since(s));
        s = Clock::now();
        quad = counting_sweep(4);
        t4 = std::min(t4, seconds_since(s));
    }
    const bool identical = quad.swept == single.swept && !quad.first_fail && !single.first_fail;

    // membership sweeps must agree verdict-for-verdict and witness-for-witness
    RatPoly f = canonicalize(IntPoly{7, 3, 5, 1, 0, 2, 1}, 36);
    Verdict v1 = member_mn_bruteforce(f, 2, {}, 1);
    Verdict v4 = member_mn_bruteforce(f, 2, {}, 4);
    bool verdicts_identical = v1.member == v4.member;
    if (!v1.member && !v4.member)
        verdicts_identical = verdicts_identical &&
                             std::get<MatrixWitness>(*v1.witness).matrix == std::get<MatrixWitness>(*v4.witness).matrix;

    const double speedup = t1 / std::max(t4, 1e-9);
    const bool pass = t6 < 5.0 && t1 < 5.0 && identical && verdicts_identical && speedup >= speedup_floor;
    report(9, pass,
           fmt("enumeration floor: M_2(Z/6) filtered in %.2f s; %llu matrices filtered in %.2f s single-thread "
               "(%llu matches); 4 workers %.2f s, speedup %.2fx (floor %.2fx on %u threads), outcomes %s",
               t6, (unsigned long long)total, t1, (unsigned long long)single.swept, t4, speedup, speedup_floor, hw,
               identical && verdicts_identical ? "bit-identical" : "DIVERGED"));
}

void criterion_10() {
    const auto start = Clock::now();
    bool ok = true;
    std::string detail;

    const IntPoly x2mx{0, -1, 1};

    // (X^2 - X)/2: non-member with the nilpotent witness
    {
        RatPoly f = canonicalize(x2mx, 2);
        Verdict residues = member_mn(f, 2);
        Verdict brute = member_mn_bruteforce(f, 2);
        Verdict tn_like = member_mnP(f, PSet::all_monic(2));
        ok = ok && !residues.member && !brute.member && !tn_like.member;
        const auto* w = std::get_if<MatrixWitness>(&*brute.witness);
        ok = ok && w && w->matrix == MatZ(2, {Int(0), Int(1), Int(0), Int(0)});
        ok = ok && verify_witness(f, std::nullopt, brute);
        detail += "(x^2-x)/2: non-member, nilpotent witness; ";
    }

    // X^2 (X-1)^2 (X^2+X+1) / 2: member on every route
    {
        IntPoly g = IntPoly{0, 0, 1} * IntPoly{1, -2, 1} * IntPoly{1, 1, 1};
        RatPoly f = canonicalize(g, 2);
        ok = ok && member_mn(f, 2).member && member_mn_bruteforce(f, 2).member &&
             member_mnP(f, PSet::all_split(2)).member && member_tn(f, 2).member;
        detail += "x^2(x-1)^2(x^2+x+1)/2: member; ";
    }

    // (X^2-X)(X^2-X-2)/2: non-member with residue witness X^2+X+1
    {
        IntPoly g = x2mx * IntPoly{-2, -1, 1};
        RatPoly f = canonicalize(g, 2);
        Verdict residues = member_mn(f, 2);
        Verdict brute = member_mn_bruteforce(f, 2);
        ok = ok && !residues.member && !brute.member;
        const auto* rw = std::get_if<ResidueWitness>(&*residues.witness);
        ok = ok && rw && rw->poly == IntPoly{1, 1, 1} && rw->modulus == 2;
        ok = ok && member_tn(f, 2).member;  // integer-valued on triangular matrices nonetheless
        detail += "(x^2-x)(x^2-x-2)/2: non-member at x^2+x+1";
    }

    const double t = seconds_since(start);
    report(10, ok, fmt("known-element regressions: %s; %.1f s", detail.c_str(), t));
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
