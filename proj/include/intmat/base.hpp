#ifndef INTMAT_BASE_HPP
#define INTMAT_BASE_HPP

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace intmat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Structurally invalid argument: non-monic divisor, zero denominator,
/// mismatched algebra parents, dimension mismatch, malformed input text.
class InvalidInput : public std::invalid_argument {
  public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// An exhaustive sweep would enumerate more candidates than allowed.
/// Carries the exact count that would have been required.
class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(Int required, std::uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: " + required.str() +
                             " candidates required, budget is " + std::to_string(budget)),
          required_(std::move(required)),
          budget_(budget) {}

    const Int& required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

  private:
    Int required_;
    std::uint64_t budget_;
};

/// Limits for exhaustive operations. A sweep that would exceed
/// max_candidates is refused outright; a partial sweep is never run.
struct Budget {
    std::uint64_t max_candidates = 100'000'000;
    int max_algebra_degree = 5;

    /// Default budget, with INTMAT_BUDGET (candidate count) honored if set.
    static Budget from_env() {
        Budget b;
        if (const char* s = std::getenv("INTMAT_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(s, &end, 10);
            if (end != s && v > 0) b.max_candidates = v;
        }
        return b;
    }
};

/// Verifies `required <= budget` and narrows to uint64.
inline std::uint64_t checked_count(const Int& required, const Budget& budget) {
    if (required > Int(budget.max_candidates)) throw BudgetExceeded(required, budget.max_candidates);
    return static_cast<std::uint64_t>(required);
}

inline Int int_pow(Int base, unsigned exp) {
    Int r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

}  // namespace intmat

#endif  // INTMAT_BASE_HPP
