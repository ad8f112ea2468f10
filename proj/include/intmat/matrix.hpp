#ifndef INTMAT_MATRIX_HPP
#define INTMAT_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "intmat/poly.hpp"
#include "intmat/rings.hpp"

namespace intmat {

/// Square matrix with arbitrary-precision integer entries, row-major.
class MatZ {
  public:
    MatZ() : n_(0) {}
    explicit MatZ(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, Int(0)) {
        if (n < 1) throw InvalidInput("matrix dimension must be >= 1");
    }
    MatZ(int n, std::vector<Int> entries) : n_(n), e_(std::move(entries)) {
        if (n < 1 || e_.size() != static_cast<std::size_t>(n) * n)
            throw InvalidInput("matrix entry count does not match dimension");
    }

    static MatZ identity(int n) {
        MatZ m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int dim() const { return n_; }
    const std::vector<Int>& entries() const { return e_; }
    Int& at(int r, int c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    const Int& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }

    bool is_zero() const {
        for (const Int& v : e_)
            if (!v.is_zero()) return false;
        return true;
    }

    MatZ operator+(const MatZ& o) const;
    MatZ operator-(const MatZ& o) const;
    MatZ operator*(const MatZ& o) const;
    MatZ operator*(const Int& s) const;
    bool operator==(const MatZ& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const MatZ& o) const { return !(*this == o); }

  private:
    int n_;
    std::vector<Int> e_;
    void check_same(const MatZ& o) const {
        if (n_ != o.n_) throw InvalidInput("matrix dimension mismatch");
    }
    friend MatZ mat_mul(const MatZ& a, const MatZ& b);
};

/// Square matrix over Z/dZ, entries reduced into [0, d).
class MatMod {
  public:
    MatMod(int n, std::int64_t d, std::vector<std::int64_t> entries) : n_(n), ring_(d), e_(std::move(entries)) {
        if (n < 1 || e_.size() != static_cast<std::size_t>(n) * n)
            throw InvalidInput("matrix entry count does not match dimension");
        for (auto& v : e_) v = ((v % d) + d) % d;
    }
    MatMod(int n, std::int64_t d) : MatMod(n, d, std::vector<std::int64_t>(static_cast<std::size_t>(n) * n, 0)) {}

    static MatMod identity(int n, std::int64_t d) {
        MatMod m(n, d);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1 % d;
        return m;
    }

    int dim() const { return n_; }
    std::int64_t modulus() const { return ring_.modulus(); }
    const ResidueRing& ring() const { return ring_; }
    const std::vector<std::int64_t>& entries() const { return e_; }
    std::int64_t& at(int r, int c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    std::int64_t at(int r, int c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }

    bool is_zero() const {
        for (auto v : e_)
            if (v != 0) return false;
        return true;
    }

    /// Entry-wise lift to the integer matrix with entries in [0, d).
    MatZ lift() const {
        std::vector<Int> out(e_.begin(), e_.end());
        return MatZ(n_, std::move(out));
    }

    MatMod operator+(const MatMod& o) const;
    MatMod operator*(const MatMod& o) const;
    bool operator==(const MatMod& o) const { return n_ == o.n_ && modulus() == o.modulus() && e_ == o.e_; }
    bool operator!=(const MatMod& o) const { return !(*this == o); }

  private:
    int n_;
    ResidueRing ring_;
    std::vector<std::int64_t> e_;
};

MatMod reduce_mod(const MatZ& m, std::int64_t d);

/// Characteristic polynomial det(XI - A) by the Samuelson-Berkowitz scheme:
/// division-free, so it is valid over any commutative ring. Returns monic
/// degree-n coefficients, lowest degree first.
template <CommutativeRing R>
Coeffs<R> char_poly_berkowitz(const R& ring, const std::vector<typename R::Elem>& a, int n) {
    using Elem = typename R::Elem;
    auto entry = [&](int r, int c) -> const Elem& { return a[static_cast<std::size_t>(r) * n + c]; };

    std::vector<Elem> v{ring.one()};  // char poly of the empty matrix, highest degree first
    for (int r = 1; r <= n; ++r) {
        // Toeplitz column for the leading r x r principal submatrix:
        // [1, -a_rr, -(R S), -(R A S), ..., -(R A^{r-2} S)].
        std::vector<Elem> col;
        col.reserve(static_cast<std::size_t>(r) + 1);
        col.push_back(ring.one());
        col.push_back(ring.neg(entry(r - 1, r - 1)));
        std::vector<Elem> vec;  // A_sub^m * S, updated incrementally
        vec.reserve(static_cast<std::size_t>(r) - 1);
        for (int i = 0; i < r - 1; ++i) vec.push_back(entry(i, r - 1));
        for (int m = 2; m <= r; ++m) {
            Elem dot = ring.zero();
            for (int i = 0; i < r - 1; ++i) dot = ring.add(dot, ring.mul(entry(r - 1, i), vec[i]));
            col.push_back(ring.neg(dot));
            if (m == r) break;
            std::vector<Elem> next(static_cast<std::size_t>(r) - 1, ring.zero());
            for (int i = 0; i < r - 1; ++i)
                for (int j = 0; j < r - 1; ++j) next[i] = ring.add(next[i], ring.mul(entry(i, j), vec[j]));
            vec = std::move(next);
        }
        std::vector<Elem> next(static_cast<std::size_t>(r) + 1, ring.zero());
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < r && j <= i; ++j)
                if (i - j <= r) next[i] = ring.add(next[i], ring.mul(col[static_cast<std::size_t>(i - j)], v[j]));
        v = std::move(next);
    }
    std::vector<Elem> out(v.rbegin(), v.rend());
    return out;
}

IntPoly char_poly(const MatZ& m);
ModPoly char_poly(const MatMod& m);

/// Companion matrix of a monic p: ones on the subdiagonal, last column
/// -p_0, ..., -p_{n-1}.
MatZ companion(const IntPoly& p);
MatMod companion_mod(const IntPoly& p, std::int64_t d);

/// Horner evaluation of g at a matrix, exact over the matching ring.
MatZ eval_at_matrix(const IntPoly& g, const MatZ& m);
MatMod eval_at_matrix(const ModPoly& g, const MatMod& m);
MatMod eval_at_matrix(const IntPoly& g, const MatMod& m);

}  // namespace intmat

#endif  // INTMAT_MATRIX_HPP
