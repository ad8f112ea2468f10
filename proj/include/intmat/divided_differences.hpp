#ifndef INTMAT_DIVIDED_DIFFERENCES_HPP
#define INTMAT_DIVIDED_DIFFERENCES_HPP

#include <span>
#include <vector>

#include "intmat/poly.hpp"
#include "intmat/rings.hpp"

namespace intmat {

/// Divided differences computed without any division. The k-th divided
/// difference of g at (a_0,...,a_k) equals the k-th Newton coefficient of g
/// with respect to the node prefix (a_0,...,a_{k-1}), evaluated at a_k, and
/// that coefficient is reachable by iterated Euclidean division of g by the
/// monic linear factors (X - a_0), (X - a_1), ...  This agrees with the
/// quotient-of-differences recursion wherever the recursion is defined,
/// works over rings where node differences are not invertible (Z/dZ, the
/// splitting algebra), and handles repeated nodes by the confluent rule
/// phi^k(g)(a,...,a) = g^(k)(a)/k!.

/// phi^k(g)(points[0], ..., points[k]) where k = points.size() - 1.
template <CommutativeRing R>
typename R::Elem phi_eval(const R& ring, const Coeffs<R>& g, std::span<const typename R::Elem> points) {
    if (points.empty()) throw InvalidInput("phi_eval: at least one point required");
    Coeffs<R> cur = g;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        cur = poly_divrem(ring, cur, poly_linear(ring, points[i])).quotient;
        if (cur.empty()) return ring.zero();
    }
    return poly_eval(ring, cur, points.back());
}

/// Newton form of g with respect to a node sequence:
///   g = sum_k c_k * prod_{i<k} (X - a_i),   c_k = phi^k(g)(a_0,...,a_k).
/// Needs at least deg(g) nodes; coefficients run c_0..c_m for m nodes.
template <CommutativeRing R>
struct NewtonExpansion {
    std::vector<typename R::Elem> nodes;
    std::vector<typename R::Elem> coefficients;
};

template <CommutativeRing R>
NewtonExpansion<R> newton_expand(const R& ring, const Coeffs<R>& g, std::vector<typename R::Elem> nodes) {
    if (static_cast<int>(nodes.size()) < poly_degree<R>(g))
        throw InvalidInput("newton_expand: need at least deg(g) nodes");
    NewtonExpansion<R> out;
    out.coefficients.reserve(nodes.size() + 1);
    Coeffs<R> cur = g;
    for (const auto& a : nodes) {
        auto dr = poly_divrem(ring, cur, poly_linear(ring, a));
        out.coefficients.push_back(dr.remainder.empty() ? ring.zero() : dr.remainder.front());
        cur = std::move(dr.quotient);
    }
    // After m divisions the quotient is a constant (possibly zero): c_m.
    out.coefficients.push_back(cur.empty() ? ring.zero() : cur.front());
    out.nodes = std::move(nodes);
    return out;
}

template <CommutativeRing R>
Coeffs<R> newton_reconstruct(const R& ring, const NewtonExpansion<R>& e) {
    Coeffs<R> acc;
    Coeffs<R> basis{ring.one()};
    for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
        acc = poly_add(ring, acc, poly_scale(ring, basis, e.coefficients[k]));
        if (k < e.nodes.size()) basis = poly_mul(ring, basis, poly_linear(ring, e.nodes[k]));
    }
    return acc;
}

/// True iff phi^k(g) at the given points lies in d·R.
template <CommutativeRing R>
bool phi_values_in(const R& ring, const IntPoly& g, std::span<const typename R::Elem> points, const Int& d) {
    auto value = phi_eval(ring, poly_lift(ring, g.coeffs()), points);
    return ring.divisible(value, d);
}

/// Full triangular table: entry (k, i) = phi^k(g)(a_i, ..., a_{i+k}).
template <CommutativeRing R>
struct DividedDiffTable {
    std::vector<typename R::Elem> nodes;
    std::vector<std::vector<typename R::Elem>> rows;  // rows[k][i]

    const typename R::Elem& entry(std::size_t k, std::size_t i) const { return rows.at(k).at(i); }
};

template <CommutativeRing R>
DividedDiffTable<R> divided_diff_table(const R& ring, const Coeffs<R>& g,
                                       std::vector<typename R::Elem> nodes) {
    DividedDiffTable<R> t;
    const std::size_t m = nodes.size();
    t.rows.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        t.rows[k].reserve(m - k);
        for (std::size_t i = 0; i + k < m; ++i) {
            std::span<const typename R::Elem> pts(nodes.data() + i, k + 1);
            t.rows[k].push_back(phi_eval(ring, g, pts));
        }
    }
    t.nodes = std::move(nodes);
    return t;
}

// Convenience wrappers over Z.

inline Int phi_eval_int(const IntPoly& g, std::span<const Int> points) {
    IntegerRing z;
    return phi_eval(z, g.coeffs(), points);
}

inline Int phi_eval_int(const IntPoly& g, const std::vector<Int>& points) {
    return phi_eval_int(g, std::span<const Int>(points.data(), points.size()));
}

}  // namespace intmat

#endif  // INTMAT_DIVIDED_DIFFERENCES_HPP
