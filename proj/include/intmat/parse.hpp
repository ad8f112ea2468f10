#ifndef INTMAT_PARSE_HPP
#define INTMAT_PARSE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "intmat/matrix.hpp"
#include "intmat/poly.hpp"

namespace intmat {

/// Parse error with the 0-based position in the input text.
class ParseError : public InvalidInput {
  public:
    ParseError(const std::string& what, std::size_t position)
        : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Polynomial expressions in one variable `x` with `+ - * / ^`, integer and
/// a/b rational literals, parentheses, and whole-expression denominators
/// like "(x^2 - x)/2". Whitespace-insensitive. Division is by integer
/// literals only. The result is canonicalized.
RatPoly parse_poly(std::string_view text);

/// As parse_poly but requires integer coefficients.
IntPoly parse_int_poly(std::string_view text);

/// As parse_int_poly but additionally requires a monic polynomial.
IntPoly parse_monic_poly(std::string_view text);

/// Matrix literal [[a,b],[c,d]] with integer entries.
MatZ parse_matrix(std::string_view text);

/// Comma-separated integers or a/b rationals.
std::vector<Rat> parse_rational_list(std::string_view text);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);
std::string to_string(const IntPoly& p);
std::string to_string(const RatPoly& f);
std::string to_string(const ModPoly& p);
std::string to_string(const MatZ& m);

}  // namespace intmat

#endif  // INTMAT_PARSE_HPP
