#include "intmat/splitting_algebra.hpp"

#include <algorithm>
#include <map>

namespace intmat {
namespace detail {

using Mono = std::vector<std::uint8_t>;

struct AlgebraImpl {
    IntPoly p;
    int n = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> stride;  // mixed-radix strides, radix of e_i is n-i
    // rules[j][t]: coordinates of the coefficient of x_j^t in the rewrite of
    // x_j^{n-j}; the coefficients only involve generators below j.
    std::vector<std::vector<std::vector<Int>>> rules;

    std::size_t encode(const Mono& m) const {
        std::size_t idx = 0;
        for (int j = 0; j < n; ++j) idx += m[static_cast<std::size_t>(j)] * stride[static_cast<std::size_t>(j)];
        return idx;
    }

    Mono decode(std::size_t idx) const {
        Mono m(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            std::size_t radix = static_cast<std::size_t>(n - j);
            m[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(idx % radix);
            idx /= radix;
        }
        return m;
    }

    // Normalizes a sparse integer combination of (possibly out-of-basis)
    // monomials down to dense basis coordinates. Each rewrite strictly
    // lowers the exponent of the generator it fires on and only touches
    // lower generators, so the loop terminates.
    std::vector<Int> reduce(std::map<Mono, Int>&& work) const {
        std::vector<Int> out(rank, Int(0));
        while (!work.empty()) {
            auto node = work.extract(work.begin());
            const Mono& m = node.key();
            Int& c = node.mapped();
            if (c.is_zero()) continue;
            int fire = -1;
            for (int j = n - 1; j >= 0; --j) {
                if (m[static_cast<std::size_t>(j)] > n - 1 - j) {
                    fire = j;
                    break;
                }
            }
            if (fire < 0) {
                out[encode(m)] += c;
                continue;
            }
            const int deg = n - fire;  // degree of the relation at generator `fire`
            Mono base = m;
            base[static_cast<std::size_t>(fire)] = static_cast<std::uint8_t>(base[static_cast<std::size_t>(fire)] - deg);
            const auto& rule = rules[static_cast<std::size_t>(fire)];
            for (int t = 0; t < deg; ++t) {
                const std::vector<Int>& coeff = rule[static_cast<std::size_t>(t)];
                for (std::size_t bi = 0; bi < rank; ++bi) {
                    if (coeff[bi].is_zero()) continue;
                    Mono target = base;
                    target[static_cast<std::size_t>(fire)] =
                        static_cast<std::uint8_t>(target[static_cast<std::size_t>(fire)] + t);
                    Mono extra = decode(bi);
                    for (int j = 0; j < n; ++j)
                        target[static_cast<std::size_t>(j)] =
                            static_cast<std::uint8_t>(target[static_cast<std::size_t>(j)] + extra[static_cast<std::size_t>(j)]);
                    work[target] += c * coeff[bi];
                }
            }
        }
        return out;
    }

    std::vector<Int> mul_coords(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::map<Mono, Int> work;
        for (std::size_t i = 0; i < rank; ++i) {
            if (a[i].is_zero()) continue;
            Mono mi = decode(i);
            for (std::size_t j = 0; j < rank; ++j) {
                if (b[j].is_zero()) continue;
                Mono mj = decode(j);
                Mono sum(static_cast<std::size_t>(n));
                for (int k = 0; k < n; ++k)
                    sum[static_cast<std::size_t>(k)] =
                        static_cast<std::uint8_t>(mi[static_cast<std::size_t>(k)] + mj[static_cast<std::size_t>(k)]);
                work[sum] += a[i] * b[j];
            }
        }
        return reduce(std::move(work));
    }

    std::vector<Int> mul_by_generator(const std::vector<Int>& a, int g) const {
        std::map<Mono, Int> work;
        for (std::size_t i = 0; i < rank; ++i) {
            if (a[i].is_zero()) continue;
            Mono m = decode(i);
            m[static_cast<std::size_t>(g)] = static_cast<std::uint8_t>(m[static_cast<std::size_t>(g)] + 1);
            work[m] += a[i];
        }
        return reduce(std::move(work));
    }
};

}  // namespace detail

using detail::AlgebraImpl;

SplitAlgebra SplitAlgebra::build(const IntPoly& p, const Budget& budget) {
    if (!p.is_monic() || p.degree() < 1) throw InvalidInput("build_algebra: polynomial must be monic of degree >= 1");
    const int n = p.degree();
    if (n > budget.max_algebra_degree) {
        Int rank = 1;
        for (int i = 2; i <= n; ++i) rank *= i;
        throw BudgetExceeded(rank, budget.max_candidates);
    }

    auto impl = std::make_shared<AlgebraImpl>();
    impl->p = p;
    impl->n = n;
    impl->rank = 1;
    for (int i = 2; i <= n; ++i) impl->rank *= static_cast<std::size_t>(i);
    impl->stride.resize(static_cast<std::size_t>(n));
    {
        std::size_t s = 1;
        for (int j = 0; j < n; ++j) {
            impl->stride[static_cast<std::size_t>(j)] = s;
            s *= static_cast<std::size_t>(n - j);
        }
    }
    impl->rules.assign(static_cast<std::size_t>(n), {});

    auto scalar = [&](const Int& v) {
        std::vector<Int> c(impl->rank, Int(0));
        c[0] = v;
        return c;
    };
    auto vec_add = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
        std::vector<Int> out(impl->rank);
        for (std::size_t i = 0; i < impl->rank; ++i) out[i] = a[i] + b[i];
        return out;
    };
    auto vec_is_zero = [&](const std::vector<Int>& a) {
        return std::all_of(a.begin(), a.end(), [](const Int& v) { return v.is_zero(); });
    };

    // cur[t] = coefficient of X^t of the polynomial still to be split;
    // starts as p itself with scalar coordinates.
    std::vector<std::vector<Int>> cur(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t) cur[static_cast<std::size_t>(t)] = scalar(p.coeff(static_cast<std::size_t>(t)));

    for (int j = 0; j < n; ++j) {
        const int deg = n - j;
        // x_j is a root of cur: record x_j^{deg} = -(lower part of cur)(x_j).
        auto& rule = impl->rules[static_cast<std::size_t>(j)];
        rule.resize(static_cast<std::size_t>(deg));
        for (int t = 0; t < deg; ++t) {
            rule[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t)];
            for (Int& v : rule[static_cast<std::size_t>(t)]) v = -v;
        }
        // Synthetic division by (X - x_j): q_{deg-1} = 1, q_{t-1} = cur_t + x_j q_t.
        std::vector<std::vector<Int>> q(static_cast<std::size_t>(deg));
        q[static_cast<std::size_t>(deg - 1)] = cur[static_cast<std::size_t>(deg)];
        for (int t = deg - 1; t >= 1; --t)
            q[static_cast<std::size_t>(t - 1)] =
                vec_add(cur[static_cast<std::size_t>(t)], impl->mul_by_generator(q[static_cast<std::size_t>(t)], j));
        auto rem = vec_add(cur[0], impl->mul_by_generator(q[0], j));
        if (!vec_is_zero(rem)) throw std::logic_error("splitting algebra construction: nonzero division remainder");
        cur = std::move(q);
    }

    return SplitAlgebra(std::move(impl));
}

int SplitAlgebra::degree() const { return impl_->n; }
std::size_t SplitAlgebra::rank() const { return impl_->rank; }
const IntPoly& SplitAlgebra::poly() const { return impl_->p; }

AlgElem SplitAlgebra::zero() const { return {impl_, std::vector<Int>(impl_->rank, Int(0))}; }

AlgElem SplitAlgebra::one() const { return from_int(1); }

AlgElem SplitAlgebra::from_int(const Int& v) const {
    std::vector<Int> c(impl_->rank, Int(0));
    c[0] = v;
    return {impl_, std::move(c)};
}

AlgElem SplitAlgebra::generator(int i) const {
    if (i < 0 || i >= impl_->n) throw InvalidInput("generator index out of range");
    std::map<detail::Mono, Int> work;
    detail::Mono m(static_cast<std::size_t>(impl_->n), 0);
    m[static_cast<std::size_t>(i)] = 1;
    work[m] = 1;
    return {impl_, impl_->reduce(std::move(work))};
}

namespace {
const detail::AlgebraImpl& same_parent(const AlgElem& a, const AlgElem& b) {
    if (a.parent != b.parent) throw InvalidInput("algebra elements have different parents");
    if (!a.parent) throw InvalidInput("algebra element has no parent");
    return *a.parent;
}
}  // namespace

AlgElem SplitAlgebra::add(const AlgElem& a, const AlgElem& b) const {
    const auto& impl = same_parent(a, b);
    std::vector<Int> c(impl.rank);
    for (std::size_t i = 0; i < impl.rank; ++i) c[i] = a.coords[i] + b.coords[i];
    return {a.parent, std::move(c)};
}

AlgElem SplitAlgebra::sub(const AlgElem& a, const AlgElem& b) const {
    const auto& impl = same_parent(a, b);
    std::vector<Int> c(impl.rank);
    for (std::size_t i = 0; i < impl.rank; ++i) c[i] = a.coords[i] - b.coords[i];
    return {a.parent, std::move(c)};
}

AlgElem SplitAlgebra::neg(const AlgElem& a) const {
    std::vector<Int> c = a.coords;
    for (Int& v : c) v = -v;
    return {a.parent, std::move(c)};
}

AlgElem SplitAlgebra::mul(const AlgElem& a, const AlgElem& b) const {
    const auto& impl = same_parent(a, b);
    return {a.parent, impl.mul_coords(a.coords, b.coords)};
}

bool SplitAlgebra::is_zero(const AlgElem& a) const {
    for (const Int& v : a.coords)
        if (!v.is_zero()) return false;
    return true;
}

bool SplitAlgebra::eq(const AlgElem& a, const AlgElem& b) const {
    same_parent(a, b);
    return a.coords == b.coords;
}

bool SplitAlgebra::divisible(const AlgElem& a, const Int& d) const {
    if (d.is_zero()) return is_zero(a);
    for (const Int& v : a.coords)
        if ((v % d) != 0) return false;
    return true;
}

Int SplitAlgebra::evaluate_at(const AlgElem& a, std::span<const Int> roots) const {
    if (static_cast<int>(roots.size()) != impl_->n) throw InvalidInput("evaluate_at: need one value per generator");
    Int acc = 0;
    for (std::size_t i = 0; i < impl_->rank; ++i) {
        if (a.coords[i].is_zero()) continue;
        Int term = a.coords[i];
        auto m = impl_->decode(i);
        for (int j = 0; j < impl_->n; ++j)
            for (int e = 0; e < m[static_cast<std::size_t>(j)]; ++e) term *= roots[static_cast<std::size_t>(j)];
        acc += term;
    }
    return acc;
}

std::vector<std::uint8_t> SplitAlgebra::exponents_of(std::size_t basis_index) const {
    return impl_->decode(basis_index);
}

AlgElem operator+(const AlgElem& a, const AlgElem& b) {
    const auto& impl = same_parent(a, b);
    std::vector<Int> c(impl.rank);
    for (std::size_t i = 0; i < impl.rank; ++i) c[i] = a.coords[i] + b.coords[i];
    return {a.parent, std::move(c)};
}

AlgElem operator-(const AlgElem& a, const AlgElem& b) {
    const auto& impl = same_parent(a, b);
    std::vector<Int> c(impl.rank);
    for (std::size_t i = 0; i < impl.rank; ++i) c[i] = a.coords[i] - b.coords[i];
    return {a.parent, std::move(c)};
}

AlgElem operator-(const AlgElem& a) {
    std::vector<Int> c = a.coords;
    for (Int& v : c) v = -v;
    return {a.parent, std::move(c)};
}

AlgElem operator*(const AlgElem& a, const AlgElem& b) {
    const auto& impl = same_parent(a, b);
    return {a.parent, impl.mul_coords(a.coords, b.coords)};
}

}  // namespace intmat
