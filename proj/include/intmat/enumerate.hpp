#ifndef INTMAT_ENUMERATE_HPP
#define INTMAT_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "intmat/base.hpp"
#include "intmat/matrix.hpp"
#include "intmat/poly.hpp"

namespace intmat {

/// Exhaustive enumeration of M_n(Z/dZ) in a fixed, documented order: the
/// index is read as an odometer over the d^{n^2} entry tuples in row-major
/// position, with the (0,0) entry as the fastest (least significant) digit.
/// The order is what makes runs reproducible and lets disjoint index ranges
/// be swept by independent workers.

struct EnumRange {
    std::uint64_t begin = 0;
    std::uint64_t end = 0;  // exclusive
};

/// Number of matrices in M_n(Z/dZ), budget-checked.
std::uint64_t matrix_space_size(int n, std::int64_t d, const Budget& budget = {});

/// Matrix at a given enumeration index.
MatMod matrix_at(int n, std::int64_t d, std::uint64_t index);

/// Splits [0, total) into `parts` contiguous ranges (some possibly empty).
std::vector<EnumRange> partition_range(std::uint64_t total, int parts);

/// Calls fn(index, entries) for every index in the range; `entries` is the
/// row-major entry vector of the matrix at that index. Returns early if fn
/// returns false.
void for_each_matrix(int n, std::int64_t d, EnumRange range,
                     const std::function<bool(std::uint64_t, const std::vector<std::int64_t>&)>& fn);

/// Same, restricted to matrices whose characteristic polynomial equals
/// `target` mod d.
void for_each_matrix_with_charpoly(int n, std::int64_t d, const ModPoly& target, EnumRange range,
                                   const std::function<bool(std::uint64_t, const std::vector<std::int64_t>&)>& fn);

/// Characteristic polynomial of an entry vector mod d (closed forms for
/// n <= 3, Berkowitz beyond).
ModPoly char_poly_entries(int n, std::int64_t d, const std::vector<std::int64_t>& entries);

/// All polynomials over Z/dZ of degree <= bound annihilating M, in
/// enumeration order of their coefficient tuples (constant term fastest).
std::vector<ModPoly> null_ideal_scan(const MatMod& m, int bound, const Budget& budget = {});

/// Monic residue polynomial X^n + sum c_i X^i for an index over the d^n
/// coefficient tuples (c_0 fastest).
ModPoly monic_residue_at(int n, std::int64_t d, std::uint64_t index);
std::uint64_t monic_residue_count(int n, std::int64_t d, const Budget& budget = {});

/// All monic totally split residue polynomials prod (X - a_i) mod d, one
/// per non-decreasing root multiset, in lexicographic multiset order.
std::vector<ModPoly> split_residues(int n, std::int64_t d, const Budget& budget = {});

/// Outcome of sweeping one index range: number of items visited and the
/// smallest failing index, if any.
struct SweepOutcome {
    std::uint64_t swept = 0;
    std::optional<std::uint64_t> first_fail;
};

/// Runs `worker` over a partition of [0, total) on `jobs` threads and
/// merges outcomes; the merged first_fail is the global minimum, so the
/// result does not depend on the number of workers.
SweepOutcome parallel_sweep(std::uint64_t total, int jobs, const std::function<SweepOutcome(EnumRange)>& worker);

}  // namespace intmat

#endif  // INTMAT_ENUMERATE_HPP
