#ifndef INTMAT_POLY_HPP
#define INTMAT_POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/integer/common_factor_rt.hpp>

#include "intmat/base.hpp"
#include "intmat/rings.hpp"

namespace intmat {

/// Dense univariate polynomials over a ring descriptor R, stored as
/// coefficient vectors, lowest degree first, with no trailing zero
/// (the zero polynomial is the empty vector). The degree of the zero
/// polynomial is the sentinel -1; every divisor we ever pass to
/// poly_divrem is monic of degree >= 0, so `deg r < deg b` stays true
/// for zero remainders.

template <CommutativeRing R>
using Coeffs = std::vector<typename R::Elem>;

template <CommutativeRing R>
void poly_trim(const R& ring, Coeffs<R>& a) {
    while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

template <CommutativeRing R>
int poly_degree(const Coeffs<R>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <CommutativeRing R>
bool poly_is_monic(const R& ring, const Coeffs<R>& a) {
    return !a.empty() && ring.eq(a.back(), ring.one());
}

template <CommutativeRing R>
Coeffs<R> poly_add(const R& ring, const Coeffs<R>& a, const Coeffs<R>& b) {
    Coeffs<R> out(std::max(a.size(), b.size()), ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = ring.add(out[i], b[i]);
    poly_trim(ring, out);
    return out;
}

template <CommutativeRing R>
Coeffs<R> poly_neg(const R& ring, const Coeffs<R>& a) {
    Coeffs<R> out = a;
    for (auto& c : out) c = ring.neg(c);
    return out;
}

template <CommutativeRing R>
Coeffs<R> poly_sub(const R& ring, const Coeffs<R>& a, const Coeffs<R>& b) {
    return poly_add(ring, a, poly_neg(ring, b));
}

template <CommutativeRing R>
Coeffs<R> poly_mul(const R& ring, const Coeffs<R>& a, const Coeffs<R>& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs<R> out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (ring.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = ring.add(out[i + j], ring.mul(a[i], b[j]));
        }
    }
    poly_trim(ring, out);
    return out;
}

template <CommutativeRing R>
Coeffs<R> poly_scale(const R& ring, const Coeffs<R>& a, const typename R::Elem& s) {
    Coeffs<R> out = a;
    for (auto& c : out) c = ring.mul(c, s);
    poly_trim(ring, out);
    return out;
}

template <CommutativeRing R>
typename R::Elem poly_eval(const R& ring, const Coeffs<R>& a, const typename R::Elem& x) {
    typename R::Elem acc = ring.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = ring.add(ring.mul(acc, x), *it);
    return acc;
}

/// X - a
template <CommutativeRing R>
Coeffs<R> poly_linear(const R& ring, const typename R::Elem& a) {
    return {ring.neg(a), ring.one()};
}

template <CommutativeRing R>
bool poly_eq(const R& ring, const Coeffs<R>& a, const Coeffs<R>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!ring.eq(a[i], b[i])) return false;
    return true;
}

/// Canonical image of an integer-coefficient polynomial in R[X].
template <CommutativeRing R>
Coeffs<R> poly_lift(const R& ring, const std::vector<Int>& int_coeffs) {
    Coeffs<R> out;
    out.reserve(int_coeffs.size());
    for (const Int& c : int_coeffs) out.push_back(ring.from_int(c));
    poly_trim(ring, out);
    return out;
}

template <CommutativeRing R>
struct DivRem {
    Coeffs<R> quotient;
    Coeffs<R> remainder;
};

/// Euclidean division a = q·b + r with deg r < deg b. Requires b monic;
/// quotient and remainder are then unique over any commutative ring.
template <CommutativeRing R>
DivRem<R> poly_divrem(const R& ring, const Coeffs<R>& a, const Coeffs<R>& b) {
    if (!poly_is_monic(ring, b)) throw InvalidInput("poly_divrem: divisor must be monic");
    const int db = poly_degree<R>(b);
    Coeffs<R> rem = a;
    poly_trim(ring, rem);
    if (poly_degree<R>(rem) < db) return {{}, std::move(rem)};
    Coeffs<R> quo(rem.size() - db, ring.zero());
    for (int i = poly_degree<R>(rem); i >= db; --i) {
        typename R::Elem lead = rem[static_cast<std::size_t>(i)];
        if (ring.is_zero(lead)) continue;
        quo[static_cast<std::size_t>(i - db)] = lead;
        for (int j = 0; j <= db; ++j) {
            auto& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = ring.sub(slot, ring.mul(lead, b[static_cast<std::size_t>(j)]));
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    poly_trim(ring, rem);
    poly_trim(ring, quo);
    return {std::move(quo), std::move(rem)};
}

// ---------------------------------------------------------------------------
// Concrete polynomial value types.
// ---------------------------------------------------------------------------

/// Polynomial with arbitrary-precision integer coefficients.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long long> coeffs) {
        for (long long v : coeffs) c_.emplace_back(v);
        trim();
    }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    static IntPoly monomial(Int coeff, int degree) {
        std::vector<Int> c(static_cast<std::size_t>(degree) + 1, Int(0));
        c.back() = std::move(coeff);
        return IntPoly(std::move(c));
    }
    static IntPoly variable() { return IntPoly{0, 1}; }
    static IntPoly constant(Int v) { return IntPoly(std::vector<Int>{std::move(v)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const Int& leading() const {
        if (c_.empty()) throw InvalidInput("leading coefficient of the zero polynomial");
        return c_.back();
    }

    /// gcd of the coefficients, non-negative; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& c : c_) g = boost::integer::gcd(g, c);
        return g < 0 ? Int(-g) : g;
    }

    Int evaluate(const Int& x) const {
        Int acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    IntPoly operator+(const IntPoly& o) const { return IntPoly(poly_add(kZ, c_, o.c_)); }
    IntPoly operator-(const IntPoly& o) const { return IntPoly(poly_sub(kZ, c_, o.c_)); }
    IntPoly operator*(const IntPoly& o) const { return IntPoly(poly_mul(kZ, c_, o.c_)); }
    IntPoly operator-() const { return IntPoly(poly_neg(kZ, c_)); }
    IntPoly operator*(const Int& s) const { return IntPoly(poly_scale(kZ, c_, s)); }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

  private:
    static inline const IntegerRing kZ{};
    std::vector<Int> c_;
    void trim() { poly_trim(kZ, c_); }
};

inline std::pair<IntPoly, IntPoly> poly_divrem(const IntPoly& a, const IntPoly& b) {
    IntegerRing z;
    auto dr = poly_divrem(z, a.coeffs(), b.coeffs());
    return {IntPoly(std::move(dr.quotient)), IntPoly(std::move(dr.remainder))};
}

/// Rational polynomial kept as the canonical pair g/d: integer-coefficient
/// numerator g, denominator d >= 1, gcd(content(g), d) = 1. The zero
/// polynomial is (0, 1). Two values are equal iff the pairs are identical.
class RatPoly {
  public:
    RatPoly() : den_(1) {}

    const IntPoly& num() const { return num_; }
    const Int& den() const { return den_; }
    int degree() const { return num_.degree(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == 1; }

    Rat evaluate(const Rat& x) const {
        Rat acc = 0;
        const auto& c = num_.coeffs();
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
        return acc / Rat(den_);
    }

    std::vector<Rat> rational_coeffs() const {
        std::vector<Rat> out;
        out.reserve(num_.coeffs().size());
        for (const Int& c : num_.coeffs()) out.emplace_back(Rat(c) / Rat(den_));
        return out;
    }

    bool operator==(const RatPoly& o) const { return den_ == o.den_ && num_ == o.num_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    friend RatPoly canonicalize(IntPoly g, Int d);

  private:
    IntPoly num_;
    Int den_;
};

/// The unique canonical form of g/d with positive minimal denominator.
inline RatPoly canonicalize(IntPoly g, Int d) {
    if (d.is_zero()) throw InvalidInput("canonicalize: zero denominator");
    RatPoly f;
    if (g.is_zero()) return f;
    if (d < 0) {
        g = -g;
        d = -d;
    }
    Int e = boost::integer::gcd(g.content(), d);
    if (e > 1) {
        std::vector<Int> c = g.coeffs();
        for (Int& v : c) v /= e;
        g = IntPoly(std::move(c));
        d /= e;
    }
    f.num_ = std::move(g);
    f.den_ = std::move(d);
    return f;
}

inline RatPoly rat_poly_from_coeffs(const std::vector<Rat>& coeffs) {
    Int l = 1;
    for (const Rat& c : coeffs) l = boost::integer::lcm(l, denominator(c));
    std::vector<Int> num;
    num.reserve(coeffs.size());
    for (const Rat& c : coeffs) num.push_back(numerator(c) * (l / denominator(c)));
    return canonicalize(IntPoly(std::move(num)), l);
}

/// Polynomial over Z/dZ, coefficients reduced into [0, d).
class ModPoly {
  public:
    ModPoly(std::int64_t modulus, std::vector<std::int64_t> coeffs) : ring_(modulus), c_(std::move(coeffs)) {
        for (auto& v : c_) v = ((v % modulus) + modulus) % modulus;
        poly_trim(ring_, c_);
    }

    std::int64_t modulus() const { return ring_.modulus(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    IntPoly lift() const {
        std::vector<Int> out(c_.begin(), c_.end());
        return IntPoly(std::move(out));
    }

    ModPoly operator+(const ModPoly& o) const { return with(poly_add(ring_, c_, o.checked(*this).c_)); }
    ModPoly operator-(const ModPoly& o) const { return with(poly_sub(ring_, c_, o.checked(*this).c_)); }
    ModPoly operator*(const ModPoly& o) const { return with(poly_mul(ring_, c_, o.checked(*this).c_)); }
    bool operator==(const ModPoly& o) const { return modulus() == o.modulus() && c_ == o.c_; }
    bool operator!=(const ModPoly& o) const { return !(*this == o); }
    bool operator<(const ModPoly& o) const {
        if (modulus() != o.modulus()) return modulus() < o.modulus();
        return c_ < o.c_;
    }

  private:
    ResidueRing ring_;
    std::vector<std::int64_t> c_;

    ModPoly with(std::vector<std::int64_t> c) const { return ModPoly(modulus(), std::move(c)); }
    const ModPoly& checked(const ModPoly& other) const {
        if (modulus() != other.modulus()) throw InvalidInput("mixed moduli in ModPoly arithmetic");
        return *this;
    }
};

/// Coefficient-wise reduction of g modulo d (d >= 2). Degree may drop.
inline ModPoly reduce_mod(const IntPoly& g, std::int64_t d) {
    if (d < 2) throw InvalidInput("reduce_mod: modulus must be >= 2");
    ResidueRing ring(d);
    std::vector<std::int64_t> c;
    c.reserve(g.coeffs().size());
    for (const Int& v : g.coeffs()) c.push_back(ring.from_int(v));
    return ModPoly(d, std::move(c));
}

}  // namespace intmat

#endif  // INTMAT_POLY_HPP
