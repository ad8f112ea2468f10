#ifndef INTMAT_REPORT_HPP
#define INTMAT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "intmat/base.hpp"
#include "intmat/membership.hpp"

namespace intmat {

/// A parsed CLI invocation. Polynomials arrive as expression text and are
/// parsed/validated when the request runs.
struct Request {
    std::string command;  // check-mn | check-mnp | check-tn | check-closure | divdiff | newton | nullideal
    std::string f_text;
    std::string p_text;
    std::string g_text;
    std::string matrix_text;
    std::string points_text;
    std::string nodes_text;
    int n = 0;
    std::int64_t d = 0;   // nullideal modulus
    int bound = -1;       // nullideal degree bound; default 2n-1
    Int entry_box = 3;    // check-closure scan radius
    std::optional<Int> d_box;  // check-mn: also run the sampled-irreducible necessary check with this box
    int jobs = 1;
    Budget budget = Budget::from_env();
    std::string format = "text";  // text | json
    std::uint64_t seed = 0;       // reserved for randomized commands; current commands are deterministic
};

struct RunResult {
    int exit_code = 0;  // 0 member/true, 1 non-member/false, 2 error/budget
    std::string output;
};

/// Executes a request and renders the report in the requested format.
/// Never throws; failures become exit code 2 with a message.
RunResult run(const Request& request);

}  // namespace intmat

#endif  // INTMAT_REPORT_HPP
