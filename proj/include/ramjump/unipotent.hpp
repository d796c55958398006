#pragma once

#include <concepts>
#include <vector>

#include "ramjump/laurent.hpp"

namespace ramjump {

// Arithmetic of the unipotent group attached to the order-n nilpotent shift
// matrix, over any commutative coefficient ring of characteristic p. The ring
// is passed as a lightweight handle so the same code runs over the residue
// field, Laurent series, and tower layers.
template <class R>
concept CoeffRing = requires(const R& r, const typename R::Elem& a, const typename R::Elem& b, long long k) {
    typename R::Elem;
    { r.p() } -> std::convertible_to<int>;
    { r.zero() } -> std::convertible_to<typename R::Elem>;
    { r.one() } -> std::convertible_to<typename R::Elem>;
    { r.from_int(k) } -> std::convertible_to<typename R::Elem>;
    { r.add(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename R::Elem>;
    { r.neg(a) } -> std::convertible_to<typename R::Elem>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
};

struct FqRing {
    using Elem = FqElem;
    const FqField* k;

    int p() const { return k->p(); }
    Elem zero() const { return k->zero(); }
    Elem one() const { return k->one(); }
    Elem from_int(long long v) const { return k->from_int(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
};

struct LaurentRing {
    using Elem = LaurentSeries;
    const FqField* k;

    int p() const { return k->p(); }
    Elem zero() const { return LaurentSeries(*k); }
    Elem one() const { return LaurentSeries::constant(k->one()); }
    Elem from_int(long long v) const { return LaurentSeries::constant(k->from_int(v)); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool is_zero(const Elem& a) const { return !a.has_terms(); }
};

// Truncated binomial coefficient polynomial x(x-1)...(x-i+1)/i!, defined for
// 0 <= i <= p-1 so that i! is invertible.
template <CoeffRing R>
typename R::Elem binom_poly(const R& r, const typename R::Elem& x, int i) {
    int p = r.p();
    if (i < 0 || i >= p)
        raise(ErrorCode::IndexOutOfRange,
              "binomial index " + std::to_string(i) + " must lie in [0, p-1]");
    if (i == 0) return r.one();
    typename R::Elem acc = x;
    long long fact = 1;
    for (int j = 1; j < i; ++j) {
        acc = r.mul(acc, r.sub(x, r.from_int(j)));
        fact = fact * (j + 1) % p;
    }
    // multiply by 1/i! in F_p
    long long inv = 1, b = fact, e = p - 2;
    while (e > 0) {
        if (e & 1) inv = inv * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r.mul(acc, r.from_int(inv));
}

// n x n matrices in "label space": entry(j, m) is the coefficient of the m-th
// component from the bottom in the j-th component from the bottom of the
// image vector. The paper-style column display is the reverse ordering.
template <CoeffRing R>
class NilMat {
public:
    NilMat(const R& r, int n) : n_(n), a_(static_cast<size_t>(n) * n, r.zero()) {}

    int n() const { return n_; }
    const typename R::Elem& entry(int j, int m) const {
        return a_[static_cast<size_t>(j - 1) * n_ + (m - 1)];
    }
    typename R::Elem& entry(int j, int m) { return a_[static_cast<size_t>(j - 1) * n_ + (m - 1)]; }

private:
    int n_;
    std::vector<typename R::Elem> a_;
};

template <CoeffRing R>
NilMat<R> mat_identity(const R& r, int n) {
    NilMat<R> m(r, n);
    for (int i = 1; i <= n; ++i) m.entry(i, i) = r.one();
    return m;
}

// The generator: component j of A y is y_{j-1}.
template <CoeffRing R>
NilMat<R> shift_matrix(const R& r, int n) {
    NilMat<R> m(r, n);
    for (int j = 2; j <= n; ++j) m.entry(j, j - 1) = r.one();
    return m;
}

template <CoeffRing R>
NilMat<R> mat_mul(const R& r, const NilMat<R>& a, const NilMat<R>& b) {
    int n = a.n();
    NilMat<R> c(r, n);
    for (int j = 1; j <= n; ++j)
        for (int m = 1; m <= n; ++m) {
            typename R::Elem acc = r.zero();
            for (int k = 1; k <= n; ++k)
                acc = r.add(acc, r.mul(a.entry(j, k), b.entry(k, m)));
            c.entry(j, m) = acc;
        }
    return c;
}

template <CoeffRing R>
bool mat_equal(const R& r, const NilMat<R>& a, const NilMat<R>& b) {
    for (int j = 1; j <= a.n(); ++j)
        for (int m = 1; m <= a.n(); ++m)
            if (!r.is_zero(r.sub(a.entry(j, m), b.entry(j, m)))) return false;
    return true;
}

// Vectors are stored bottom-up: index 0 holds the lowest component.
template <CoeffRing R>
std::vector<typename R::Elem> mat_vec(const R& r, const NilMat<R>& a,
                                      const std::vector<typename R::Elem>& y) {
    int n = a.n();
    std::vector<typename R::Elem> out;
    out.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        typename R::Elem acc = r.zero();
        for (int m = 1; m <= n; ++m)
            acc = r.add(acc, r.mul(a.entry(j, m), y[static_cast<size_t>(m - 1)]));
        out.push_back(acc);
    }
    return out;
}

// The truncated binomial exponential of the shift matrix: unit lower
// triangular in label space, entry(j, m) = binom_poly(x, j - m).
template <CoeffRing R>
NilMat<R> big_a(const R& r, const typename R::Elem& x, int n) {
    if (n < 2 || n > r.p())
        raise(ErrorCode::InvalidOrder, "order must satisfy 2 <= n <= p");
    NilMat<R> m(r, n);
    std::vector<typename R::Elem> binoms;
    binoms.push_back(r.one());
    for (int i = 1; i <= n - 1; ++i) binoms.push_back(binom_poly(r, x, i));
    for (int j = 1; j <= n; ++j)
        for (int mm = 1; mm <= j; ++mm) m.entry(j, mm) = binoms[static_cast<size_t>(j - mm)];
    return m;
}

// Element (x, y) of the group: block matrix with big_a(x) in the corner and
// the column y. y is stored bottom-up (index 0 = lowest component).
template <CoeffRing R>
struct UnipotentElem {
    typename R::Elem x;
    std::vector<typename R::Elem> y;
};

template <CoeffRing R>
UnipotentElem<R> unip_identity(const R& r, int n) {
    return {r.zero(), std::vector<typename R::Elem>(static_cast<size_t>(n), r.zero())};
}

template <CoeffRing R>
UnipotentElem<R> unip_mul(const R& r, const UnipotentElem<R>& u, const UnipotentElem<R>& w) {
    int n = static_cast<int>(u.y.size());
    NilMat<R> a = big_a(r, u.x, n);
    std::vector<typename R::Elem> y = mat_vec(r, a, w.y);
    for (int i = 0; i < n; ++i)
        y[static_cast<size_t>(i)] = r.add(y[static_cast<size_t>(i)], u.y[static_cast<size_t>(i)]);
    return {r.add(u.x, w.x), std::move(y)};
}

template <CoeffRing R>
UnipotentElem<R> unip_inv(const R& r, const UnipotentElem<R>& u) {
    int n = static_cast<int>(u.y.size());
    NilMat<R> a = big_a(r, r.neg(u.x), n);
    std::vector<typename R::Elem> y = mat_vec(r, a, u.y);
    for (auto& c : y) c = r.neg(c);
    return {r.neg(u.x), std::move(y)};
}

// Largest j with x = 0 and y_1 = ... = y_j = 0; the element then lies in the
// j-th step of the lower central series.
template <CoeffRing R>
int lcs_level(const R& r, const UnipotentElem<R>& u) {
    if (!r.is_zero(u.x)) return 0;
    int j = 0;
    for (const auto& c : u.y) {
        if (!r.is_zero(c)) break;
        ++j;
    }
    return j;
}

// Bottom-up binomial vector: component j equals binom_poly(x, j). Defined
// only for n <= p - 1. Satisfies v(x+y) = v(x) + big_a(x) v(y).
template <CoeffRing R>
std::vector<typename R::Elem> binom_vector(const R& r, const typename R::Elem& x, int n) {
    if (n > r.p() - 1)
        raise(ErrorCode::InvalidOrder, "binomial vector requires n <= p - 1");
    std::vector<typename R::Elem> v;
    v.reserve(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) v.push_back(binom_poly(r, x, j));
    return v;
}

} // namespace ramjump
