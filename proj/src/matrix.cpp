#include "intmat/matrix.hpp"

namespace intmat {

MatZ MatZ::operator+(const MatZ& o) const {
    check_same(o);
    MatZ out(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

MatZ MatZ::operator-(const MatZ& o) const {
    check_same(o);
    MatZ out(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

MatZ MatZ::operator*(const MatZ& o) const {
    check_same(o);
    MatZ out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Int& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n_; ++j) out.at(i, j) += aik * o.at(k, j);
        }
    return out;
}

MatZ MatZ::operator*(const Int& s) const {
    MatZ out(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
    return out;
}

MatMod MatMod::operator+(const MatMod& o) const {
    if (n_ != o.n_ || modulus() != o.modulus()) throw InvalidInput("matrix dimension or modulus mismatch");
    std::vector<std::int64_t> out(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) out[i] = ring_.add(e_[i], o.e_[i]);
    return MatMod(n_, modulus(), std::move(out));
}

MatMod MatMod::operator*(const MatMod& o) const {
    if (n_ != o.n_ || modulus() != o.modulus()) throw InvalidInput("matrix dimension or modulus mismatch");
    const std::int64_t d = modulus();
    std::vector<std::int64_t> out(e_.size(), 0);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const std::int64_t aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n_; ++j) {
                auto& slot = out[static_cast<std::size_t>(i) * n_ + j];
                slot = (slot + aik * o.at(k, j)) % d;
            }
        }
    return MatMod(n_, d, std::move(out));
}

MatMod reduce_mod(const MatZ& m, std::int64_t d) {
    ResidueRing ring(d);
    std::vector<std::int64_t> e;
    e.reserve(m.entries().size());
    for (const Int& v : m.entries()) e.push_back(ring.from_int(v));
    return MatMod(m.dim(), d, std::move(e));
}

IntPoly char_poly(const MatZ& m) {
    IntegerRing z;
    return IntPoly(char_poly_berkowitz(z, m.entries(), m.dim()));
}

ModPoly char_poly(const MatMod& m) {
    auto c = char_poly_berkowitz(m.ring(), m.entries(), m.dim());
    return ModPoly(m.modulus(), std::move(c));
}

MatZ companion(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw InvalidInput("companion: polynomial must be monic of degree >= 1");
    const int n = p.degree();
    MatZ c(n);
    for (int i = 1; i < n; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < n; ++i) c.at(i, n - 1) = -p.coeff(static_cast<std::size_t>(i));
    return c;
}

MatMod companion_mod(const IntPoly& p, std::int64_t d) { return reduce_mod(companion(p), d); }

MatZ eval_at_matrix(const IntPoly& g, const MatZ& m) {
    const int n = m.dim();
    MatZ acc(n);
    const auto& c = g.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

MatMod eval_at_matrix(const ModPoly& g, const MatMod& m) {
    if (g.modulus() != m.modulus()) throw InvalidInput("modulus mismatch between polynomial and matrix");
    const int n = m.dim();
    const std::int64_t d = m.modulus();
    MatMod acc(n, d);
    const auto& c = g.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * m;
        for (int i = 0; i < n; ++i) acc.at(i, i) = (acc.at(i, i) + *it) % d;
    }
    return acc;
}

MatMod eval_at_matrix(const IntPoly& g, const MatMod& m) { return eval_at_matrix(reduce_mod(g, m.modulus()), m); }

}  // namespace intmat
