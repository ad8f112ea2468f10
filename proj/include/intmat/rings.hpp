#ifndef INTMAT_RINGS_HPP
#define INTMAT_RINGS_HPP

#include <concepts>
#include <cstdint>

#include <boost/integer/common_factor_rt.hpp>

#include "intmat/base.hpp"

namespace intmat {

/// Ring descriptors. A descriptor carries whatever runtime context its
/// element type needs (a modulus, an algebra's reduction tables) and exposes
/// a uniform arithmetic surface, so the polynomial and divided-difference
/// routines are written once and instantiated over Z, Q, Z/dZ and the
/// splitting algebra alike. `divisible(a, d)` decides membership of `a` in
/// the subset d·R.
template <typename R>
concept CommutativeRing = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b, const Int& d) {
    typename R::Elem;
    { r.zero() } -> std::same_as<typename R::Elem>;
    { r.one() } -> std::same_as<typename R::Elem>;
    { r.add(a, b) } -> std::same_as<typename R::Elem>;
    { r.sub(a, b) } -> std::same_as<typename R::Elem>;
    { r.neg(a) } -> std::same_as<typename R::Elem>;
    { r.mul(a, b) } -> std::same_as<typename R::Elem>;
    { r.is_zero(a) } -> std::same_as<bool>;
    { r.eq(a, b) } -> std::same_as<bool>;
    { r.from_int(d) } -> std::same_as<typename R::Elem>;
    { r.divisible(a, d) } -> std::same_as<bool>;
};

struct IntegerRing {
    using Elem = Int;
    Elem zero() const { return Int(0); }
    Elem one() const { return Int(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(const Int& v) const { return v; }
    bool divisible(const Elem& a, const Int& d) const {
        if (d.is_zero()) return a.is_zero();
        return (a % d) == 0;
    }
};

struct RationalRing {
    using Elem = Rat;
    Elem zero() const { return Rat(0); }
    Elem one() const { return Rat(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_int(const Int& v) const { return Rat(v); }
    // d·Q = Q for d != 0, so divisibility is vacuous over the field.
    bool divisible(const Elem& a, const Int& d) const { return !d.is_zero() || a.is_zero(); }
};

/// Z/dZ with elements stored reduced into [0, d). The modulus is capped so
/// that a product of two reduced residues fits in int64 without overflow.
class ResidueRing {
  public:
    using Elem = std::int64_t;

    explicit ResidueRing(std::int64_t modulus) : d_(modulus) {
        if (d_ < 2) throw InvalidInput("residue ring modulus must be >= 2");
        if (d_ > kMaxModulus) throw InvalidInput("residue ring modulus too large for exact int64 arithmetic");
    }

    static constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

    std::int64_t modulus() const { return d_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % d_; }
    Elem add(Elem a, Elem b) const { return (a + b) % d_; }
    Elem sub(Elem a, Elem b) const { return (a - b + d_) % d_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : d_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % d_; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem from_int(const Int& v) const {
        Int r = v % d_;
        if (r < 0) r += d_;
        return static_cast<Elem>(r);
    }

    // a in d·(Z/mZ)  <=>  gcd(d, m) | a.
    bool divisible(Elem a, const Int& d) const {
        Int g = boost::integer::gcd(Int(d_), d);
        if (g.is_zero()) return a == 0;
        return a % static_cast<std::int64_t>(g) == 0;
    }

  private:
    std::int64_t d_;
};

static_assert(CommutativeRing<IntegerRing>);
static_assert(CommutativeRing<RationalRing>);
static_assert(CommutativeRing<ResidueRing>);

}  // namespace intmat

#endif  // INTMAT_RINGS_HPP
