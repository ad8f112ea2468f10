#include "intmat/enumerate.hpp"

#include <algorithm>

namespace intmat {

std::uint64_t matrix_space_size(int n, std::int64_t d, const Budget& budget) {
    if (n < 1) throw InvalidInput("matrix dimension must be >= 1");
    if (d < 2) throw InvalidInput("modulus must be >= 2");
    return checked_count(int_pow(Int(d), static_cast<unsigned>(n) * static_cast<unsigned>(n)), budget);
}

MatMod matrix_at(int n, std::int64_t d, std::uint64_t index) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(n) * n);
    for (auto& v : e) {
        v = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(d));
        index /= static_cast<std::uint64_t>(d);
    }
    return MatMod(n, d, std::move(e));
}

std::vector<EnumRange> partition_range(std::uint64_t total, int parts) {
    if (parts < 1) throw InvalidInput("partition count must be >= 1");
    std::vector<EnumRange> out;
    out.reserve(static_cast<std::size_t>(parts));
    const std::uint64_t base = total / static_cast<std::uint64_t>(parts);
    const std::uint64_t extra = total % static_cast<std::uint64_t>(parts);
    std::uint64_t at = 0;
    for (int i = 0; i < parts; ++i) {
        std::uint64_t len = base + (static_cast<std::uint64_t>(i) < extra ? 1 : 0);
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

namespace {

// Odometer state: entry vector plus increment; entry 0 is the least
// significant digit.
struct Odometer {
    std::vector<std::int64_t> digits;
    std::int64_t d;

    Odometer(std::size_t len, std::int64_t mod, std::uint64_t start) : digits(len), d(mod) {
        for (auto& v : digits) {
            v = static_cast<std::int64_t>(start % static_cast<std::uint64_t>(mod));
            start /= static_cast<std::uint64_t>(mod);
        }
    }

    void advance() {
        for (auto& v : digits) {
            if (++v < d) return;
            v = 0;
        }
    }
};

}  // namespace

void for_each_matrix(int n, std::int64_t d, EnumRange range,
                     const std::function<bool(std::uint64_t, const std::vector<std::int64_t>&)>& fn) {
    Odometer odo(static_cast<std::size_t>(n) * n, d, range.begin);
    for (std::uint64_t i = range.begin; i < range.end; ++i) {
        if (!fn(i, odo.digits)) return;
        odo.advance();
    }
}

ModPoly char_poly_entries(int n, std::int64_t d, const std::vector<std::int64_t>& e) {
    ResidueRing ring(d);
    if (n == 1) return ModPoly(d, {ring.neg(e[0]), 1 % d});
    if (n == 2) {
        std::int64_t tr = (e[0] + e[3]) % d;
        std::int64_t det = ring.sub(ring.mul(e[0], e[3]), ring.mul(e[1], e[2]));
        return ModPoly(d, {det, ring.neg(tr), 1 % d});
    }
    if (n == 3) {
        std::int64_t tr = (e[0] + e[4] + e[8]) % d;
        // sum of principal 2x2 minors
        std::int64_t m01 = ring.sub(ring.mul(e[0], e[4]), ring.mul(e[1], e[3]));
        std::int64_t m02 = ring.sub(ring.mul(e[0], e[8]), ring.mul(e[2], e[6]));
        std::int64_t m12 = ring.sub(ring.mul(e[4], e[8]), ring.mul(e[5], e[7]));
        std::int64_t s2 = (m01 + m02 + m12) % d;
        std::int64_t det = e[0] * m12 % d - e[1] * ring.sub(ring.mul(e[3], e[8]), ring.mul(e[5], e[6])) % d +
                           e[2] * ring.sub(ring.mul(e[3], e[7]), ring.mul(e[4], e[6])) % d;
        det = ((det % d) + d) % d;
        return ModPoly(d, {ring.neg(det), s2, ring.neg(tr), 1 % d});
    }
    return ModPoly(d, char_poly_berkowitz(ring, e, n));
}

void for_each_matrix_with_charpoly(int n, std::int64_t d, const ModPoly& target, EnumRange range,
                                   const std::function<bool(std::uint64_t, const std::vector<std::int64_t>&)>& fn) {
    if (target.modulus() != d) throw InvalidInput("filter polynomial modulus mismatch");
    for_each_matrix(n, d, range, [&](std::uint64_t i, const std::vector<std::int64_t>& e) {
        if (char_poly_entries(n, d, e) != target) return true;
        return fn(i, e);
    });
}

std::vector<ModPoly> null_ideal_scan(const MatMod& m, int bound, const Budget& budget) {
    if (bound < 0) throw InvalidInput("degree bound must be >= 0");
    const std::int64_t d = m.modulus();
    const std::uint64_t total = checked_count(int_pow(Int(d), static_cast<unsigned>(bound) + 1), budget);
    std::vector<ModPoly> out;
    Odometer odo(static_cast<std::size_t>(bound) + 1, d, 0);
    for (std::uint64_t i = 0; i < total; ++i) {
        ModPoly g(d, odo.digits);
        if (eval_at_matrix(g, m).is_zero()) out.push_back(std::move(g));
        odo.advance();
    }
    return out;
}

std::uint64_t monic_residue_count(int n, std::int64_t d, const Budget& budget) {
    if (n < 1) throw InvalidInput("degree must be >= 1");
    if (d < 2) throw InvalidInput("modulus must be >= 2");
    return checked_count(int_pow(Int(d), static_cast<unsigned>(n)), budget);
}

ModPoly monic_residue_at(int n, std::int64_t d, std::uint64_t index) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(index % static_cast<std::uint64_t>(d));
        index /= static_cast<std::uint64_t>(d);
    }
    c[static_cast<std::size_t>(n)] = 1 % d;
    return ModPoly(d, std::move(c));
}

std::vector<ModPoly> split_residues(int n, std::int64_t d, const Budget& budget) {
    if (n < 1) throw InvalidInput("degree must be >= 1");
    ResidueRing ring(d);
    // multisets 0 <= a_0 <= ... <= a_{n-1} < d
    Int count = 1;
    for (int i = 0; i < n; ++i) count = count * (d + i) / (i + 1);
    checked_count(count, budget);

    std::vector<ModPoly> out;
    std::vector<std::int64_t> roots(static_cast<std::size_t>(n), 0);
    while (true) {
        Coeffs<ResidueRing> p{1 % d};
        for (auto r : roots) p = poly_mul(ring, p, poly_linear(ring, r));
        out.emplace_back(d, p);
        int j = n - 1;
        while (j >= 0 && roots[static_cast<std::size_t>(j)] == d - 1) --j;
        if (j < 0) break;
        std::int64_t next = roots[static_cast<std::size_t>(j)] + 1;
        for (int k = j; k < n; ++k) roots[static_cast<std::size_t>(k)] = next;
    }
    return out;
}

SweepOutcome parallel_sweep(std::uint64_t total, int jobs, const std::function<SweepOutcome(EnumRange)>& worker) {
    if (jobs < 1) throw InvalidInput("job count must be >= 1");
    auto ranges = partition_range(total, jobs);
    std::vector<SweepOutcome> results(ranges.size());
    if (jobs == 1) {
        results[0] = worker(ranges[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(ranges.size());
        for (std::size_t i = 0; i < ranges.size(); ++i)
            threads.emplace_back([&, i] { results[i] = worker(ranges[i]); });
        for (auto& t : threads) t.join();
    }
    SweepOutcome merged;
    for (const auto& r : results) {
        merged.swept += r.swept;
        if (r.first_fail && (!merged.first_fail || *r.first_fail < *merged.first_fail)) merged.first_fail = r.first_fail;
    }
    return merged;
}

}  // namespace intmat
