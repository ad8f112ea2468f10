#ifndef INTMAT_SPLITTING_ALGEBRA_HPP
#define INTMAT_SPLITTING_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "intmat/base.hpp"
#include "intmat/poly.hpp"

namespace intmat {

namespace detail {
struct AlgebraImpl;
}

class SplitAlgebra;

/// Element of a splitting algebra: an exact integer coordinate vector over
/// the monomial basis x_0^{e_0}...x_{n-1}^{e_{n-1}}, 0 <= e_i <= n-1-i.
/// Elements remember their parent algebra; mixing parents is rejected.
struct AlgElem {
    std::shared_ptr<const detail::AlgebraImpl> parent;
    std::vector<Int> coords;

    bool operator==(const AlgElem& o) const { return parent == o.parent && coords == o.coords; }
    bool operator!=(const AlgElem& o) const { return !(*this == o); }
};

AlgElem operator+(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a, const AlgElem& b);
AlgElem operator-(const AlgElem& a);
AlgElem operator*(const AlgElem& a, const AlgElem& b);

/// Universal splitting algebra of a monic integer polynomial p of degree n:
/// the ring obtained by adjoining one root at a time,
///
///   A_1 = Z[x_0]/(p_1(x_0)) with p_1 = p,
///   p_2 = p_1/(X - x_0) computed inside A_1,  A_2 = A_1[x_1]/(p_2(x_1)), ...
///
/// until p factors completely as p(X) = (X - x_0)...(X - x_{n-1}). The
/// result is a free Z-module of rank n! on the monomials x_i^{e_i} with
/// e_i <= n-1-i; each adjunction step records the rewrite rule expressing
/// x_i^{n-i} in lower powers, and products are normalized against those
/// rules. Elementary symmetric functions of the generators reduce to the
/// coefficients of p (up to sign), which the test suite checks.
///
/// The algebra is a constructive stand-in for the ring of integers of a
/// splitting field: coordinate-wise divisibility by d in A_p is the
/// decidable surrogate for "lies in d times the integral closure", and the
/// basis contains 1, so divisibility of embedded scalars contracts exactly
/// to divisibility in Z.
///
/// Instances are immutable after build and cheap to copy (shared state);
/// the class itself satisfies the ring-descriptor interface with
/// Elem = AlgElem, so the generic polynomial and divided-difference
/// routines run over it unchanged.
class SplitAlgebra {
  public:
    using Elem = AlgElem;

    /// Builds A_p. Rejects non-monic p; refuses degrees above the budget's
    /// max_algebra_degree (the rank n! grows too fast beyond that).
    static SplitAlgebra build(const IntPoly& p, const Budget& budget = {});

    int degree() const;        // n
    std::size_t rank() const;  // n!
    const IntPoly& poly() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(const Int& v) const;
    Elem generator(int i) const;  // x_i, reduced to basis coordinates

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const;

    /// True iff every coordinate of a is divisible by d.
    bool divisible(const Elem& a, const Int& d) const;

    /// Evaluation morphism x_i -> roots[i]; defined for any assignment,
    /// a ring homomorphism when p splits as prod (X - roots[i]) over Z.
    Int evaluate_at(const Elem& a, std::span<const Int> roots) const;

    /// Exponent tuple of a basis monomial.
    std::vector<std::uint8_t> exponents_of(std::size_t basis_index) const;

    bool same_algebra(const SplitAlgebra& o) const { return impl_ == o.impl_; }

  private:
    std::shared_ptr<const detail::AlgebraImpl> impl_;
    explicit SplitAlgebra(std::shared_ptr<const detail::AlgebraImpl> impl) : impl_(std::move(impl)) {}
    friend AlgElem operator*(const AlgElem&, const AlgElem&);
};

}  // namespace intmat

#endif  // INTMAT_SPLITTING_ALGEBRA_HPP
