#pragma once

#include <set>
#include <vector>

#include "ramjump/artin_schreier.hpp"
#include "ramjump/herbrand.hpp"
#include "ramjump/jumps.hpp"
#include "ramjump/normalize.hpp"
#include "ramjump/unipotent.hpp"

namespace ramjump {

namespace detail {
inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }
} // namespace detail

// Element of a degree-p layer in the basis 1, gamma, ..., gamma^{p-1} over
// the base: co[i] is the coefficient of gamma^i.
template <class BaseElem>
struct LayerElem {
    std::vector<BaseElem> co;
};

// The field L = Base(gamma) with gamma^p - gamma = c for a reduced defining
// element c of conductor m (v(c) = -m < 0, gcd(m, p) = 1). Elements are
// never re-expanded in the layer uniformizer: all arithmetic stays in the
// gamma-basis, where the valuation of sum_i f_i gamma^i is the (always
// uniquely attained) minimum of p v(f_i) - i m.
template <ValuedField Base>
class ASLayer {
public:
    using BaseElem = typename Base::Elem;
    using Elem = LayerElem<BaseElem>;

    ASLayer(Base base, BaseElem c) : base_(std::move(base)), c_(std::move(c)) {
        p_ = base_.p();
        auto v = base_.valuation(c_);
        if (!v || *v >= 0)
            raise(ErrorCode::NotRamified, "defining class must have negative valuation");
        m_ = -*v;
        if (m_ % p_ == 0)
            raise(ErrorCode::NotReduced, "defining element must have conductor prime to p");
        // inverse of m mod p
        inv_m_ = 1;
        for (int t = 1; t < p_; ++t)
            if (t * (m_ % p_) % p_ == 1) { inv_m_ = t; break; }
        // uniformizer exponents: x m = -1 (mod p), pi = gamma^x t^y
        unif_x_ = static_cast<int>(p_ - inv_m_ % p_);
        unif_y_ = (1 + static_cast<long long>(unif_x_) * m_) / p_;
        psi_ = PLFunction::artin_schreier_psi(p_, m_);
        // (gamma + c)^i, i = 0..p-1: the expansion of gamma^{p i}.
        Elem gc = zero();
        gc.co[0] = c_;
        gc.co[1] = base_one();
        gamma_pow_.push_back(one());
        for (int i = 1; i <= p_ - 1; ++i) gamma_pow_.push_back(poly_mul(gamma_pow_.back(), gc));
    }

    const Base& base() const { return base_; }
    const BaseElem& defining_c() const { return c_; }
    long long conductor_m() const { return m_; }
    long long different_valuation() const { return (m_ + 1) * (p_ - 1); }
    const PLFunction& psi() const { return psi_; }
    int uniformizer_gamma_exp() const { return unif_x_; }
    long long uniformizer_base_exp() const { return unif_y_; }

    // --- ValuedField surface ---

    int p() const { return p_; }
    const FqField& residue_field() const { return base_.residue_field(); }
    long long strip_cap() const {
        long long b = base_.strip_cap();
        return b >= kValInf / p_ ? kValInf : b * p_;
    }

    Elem zero() const { return Elem{std::vector<BaseElem>(static_cast<size_t>(p_), base_.zero())}; }

    bool is_zero(const Elem& x) const {
        for (const auto& f : x.co)
            if (!base_.is_zero(f)) return false;
        return true;
    }

    std::optional<long long> valuation(const Elem& x) const {
        std::optional<long long> best;
        for (int i = 0; i < p_; ++i) {
            auto vb = base_.valuation(x.co[static_cast<size_t>(i)]);
            if (!vb) continue;
            long long cand = p_ * *vb - static_cast<long long>(i) * m_;
            if (!best || cand < *best) best = cand;
        }
        return best;
    }

    long long prec_floor(const Elem& x) const {
        long long best = kValInf;
        for (int i = 0; i < p_; ++i) {
            long long fb = base_.prec_floor(x.co[static_cast<size_t>(i)]);
            if (fb == kValInf) continue;
            best = std::min(best, p_ * fb - static_cast<long long>(i) * m_);
        }
        return best;
    }

    Elem add(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < p_; ++i)
            r.co[static_cast<size_t>(i)] = base_.add(a.co[static_cast<size_t>(i)], b.co[static_cast<size_t>(i)]);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r = a;
        for (int i = 0; i < p_; ++i)
            r.co[static_cast<size_t>(i)] = base_.sub(a.co[static_cast<size_t>(i)], b.co[static_cast<size_t>(i)]);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& f : r.co) f = base_.neg(f);
        return r;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        // convolution in gamma, then gamma^{p+k} -> gamma^{k+1} + c gamma^k
        std::vector<BaseElem> conv(static_cast<size_t>(2 * p_ - 1), base_.zero());
        for (int i = 0; i < p_; ++i) {
            if (base_.is_zero(a.co[static_cast<size_t>(i)])) continue;
            for (int j = 0; j < p_; ++j) {
                if (base_.is_zero(b.co[static_cast<size_t>(j)])) continue;
                conv[static_cast<size_t>(i + j)] = base_.add(
                    conv[static_cast<size_t>(i + j)],
                    base_.mul(a.co[static_cast<size_t>(i)], b.co[static_cast<size_t>(j)]));
            }
        }
        for (int d = 2 * p_ - 2; d >= p_; --d) {
            BaseElem top = conv[static_cast<size_t>(d)];
            if (base_.is_zero(top)) continue;
            conv[static_cast<size_t>(d)] = base_.zero();
            conv[static_cast<size_t>(d - p_ + 1)] = base_.add(conv[static_cast<size_t>(d - p_ + 1)], top);
            conv[static_cast<size_t>(d - p_)] =
                base_.add(conv[static_cast<size_t>(d - p_)], base_.mul(c_, top));
        }
        Elem r = zero();
        for (int i = 0; i < p_; ++i) r.co[static_cast<size_t>(i)] = conv[static_cast<size_t>(i)];
        return r;
    }

    Elem pth_power(const Elem& a) const {
        // (sum f_i gamma^i)^p = sum f_i^p (gamma + c)^i
        Elem r = zero();
        for (int i = 0; i < p_; ++i) {
            if (base_.is_zero(a.co[static_cast<size_t>(i)])) continue;
            BaseElem h = base_.pth_power(a.co[static_cast<size_t>(i)]);
            const Elem& gp = gamma_pow_[static_cast<size_t>(i)];
            for (int j = 0; j < p_; ++j) {
                if (base_.is_zero(gp.co[static_cast<size_t>(j)])) continue;
                r.co[static_cast<size_t>(j)] = base_.add(
                    r.co[static_cast<size_t>(j)], base_.mul(h, gp.co[static_cast<size_t>(j)]));
            }
        }
        return r;
    }

    FqElem leading_coeff(const Elem& x) const {
        auto v = valuation(x);
        if (!v) raise(ErrorCode::InvalidInput, "zero element has no leading coefficient");
        int i = gamma_index_of(*v);
        return base_.leading_coeff(x.co[static_cast<size_t>(i)]);
    }

    // The solver target sits at V = v(x)/p with the gamma index forced by
    // V mod p. Raising the candidate monomial to the p-th power walks through
    // gamma^p = gamma + c at every level of the tower, so the coefficient
    // correction is read off the computed power rather than assumed: with
    // mu = lead(w0^p), the root is pth_root(lead(x)/mu) * w0.
    Elem leading_root(const Elem& x) const {
        auto v = valuation(x);
        if (!v || *v >= 0 || (-*v) % p_ != 0)
            raise(ErrorCode::InvalidInput, "leading root requires negative valuation divisible by p");
        long long target = *v / p_;
        Elem w0 = monomial(residue_field().one(), target);
        FqElem mu = leading_coeff(pth_power(w0));
        FqElem u = (leading_coeff(x) * mu.inverse()).pth_root();
        for (auto& f : w0.co) f = base_.mul(f, base_.from_residue(u));
        return w0;
    }

    Elem monomial(const FqElem& c, long long v) const {
        int i = gamma_index_of(v);
        long long j = (v + static_cast<long long>(i) * m_) / p_;
        Elem r = zero();
        r.co[static_cast<size_t>(i)] = base_.monomial(c, j);
        return r;
    }

    Elem part_above(const Elem& x, long long v) const {
        Elem r = zero();
        for (int i = 0; i < p_; ++i)
            r.co[static_cast<size_t>(i)] = base_.part_above(
                x.co[static_cast<size_t>(i)], detail::floor_div(v + static_cast<long long>(i) * m_, p_));
        return r;
    }

    Elem truncate(const Elem& x, long long v) const {
        Elem r = zero();
        for (int i = 0; i < p_; ++i)
            r.co[static_cast<size_t>(i)] = base_.truncate(
                x.co[static_cast<size_t>(i)], detail::ceil_div(v + static_cast<long long>(i) * m_, p_));
        return r;
    }

    FqElem residue(const Elem& x) const { return base_.residue(x.co[0]); }

    Elem from_residue(const FqElem& c) const {
        Elem r = zero();
        r.co[0] = base_.from_residue(c);
        return r;
    }

    Elem inverse(const Elem& x) const {
        auto v = valuation(x);
        if (!v) {
            if (prec_floor(x) == kValInf) raise(ErrorCode::DivisionByZero, "inverse of zero");
            raise(ErrorCode::PrecisionExhausted, "inverse of an element indistinguishable from zero");
        }
        FqElem lam = leading_coeff(x);
        int i = gamma_index_of(*v);
        long long j = (*v + static_cast<long long>(i) * m_) / p_;
        // (lam gamma^i T_j)^{-1} = lam^{-1} (gamma^{-1})^i T_j^{-1}
        Elem lead_inv = from_residue(lam.inverse());
        if (i > 0) {
            Elem gi = gamma_inverse();
            for (int t = 0; t < i; ++t) lead_inv = mul(lead_inv, gi);
        }
        lead_inv = mul(lead_inv, embed(base_.inverse(base_.monomial(residue_field().one(), j))));
        Elem eps = sub(mul(x, lead_inv), one());
        Elem acc = one();
        auto ve = valuation(eps);
        if (ve) {
            if (*ve <= 0) raise(ErrorCode::Internal, "inverse seed failed to cancel the leading term");
            Elem pw = one();
            Elem meps = neg(eps);
            long long cap = strip_cap();
            for (long long k = 1; k * *ve < cap; ++k) {
                pw = mul(pw, meps);
                if (is_zero(pw)) break;
                acc = add(acc, pw);
            }
        }
        return truncate(mul(acc, lead_inv), strip_cap());
    }

    // --- layer-specific operations ---

    Elem embed(const BaseElem& f) const {
        Elem r = zero();
        r.co[0] = f;
        return r;
    }

    Elem gamma() const {
        Elem r = zero();
        r.co[1] = base_one();
        return r;
    }

    Elem one() const { return from_residue(residue_field().one()); }

    // gamma^{-1} = c^{-1} (gamma^{p-1} - 1), from gamma (gamma^{p-1} - 1) = c.
    Elem gamma_inverse() const {
        BaseElem cinv = base_.inverse(c_);
        Elem r = zero();
        r.co[static_cast<size_t>(p_ - 1)] = cinv;
        r.co[0] = base_.neg(cinv);
        return r;
    }

    Elem uniformizer() const {
        Elem r = zero();
        r.co[static_cast<size_t>(unif_x_)] = base_.monomial(residue_field().one(), unif_y_);
        return r;
    }

    // gamma -> gamma + s, the s-th power of the layer's Galois generator.
    Elem galois_shift(const Elem& u, int s = 1) const {
        s = ((s % p_) + p_) % p_;
        if (s == 0) return u;
        Elem r = zero();
        // binomial re-expansion: gamma^i -> sum_j C(i, j) s^{i-j} gamma^j
        for (int i = 0; i < p_; ++i) {
            if (base_.is_zero(u.co[static_cast<size_t>(i)])) continue;
            long long spow = 1;
            for (int j = i; j >= 0; --j) {
                long long cij = binom_mod_p(i, j);
                long long coef = cij * spow % p_;
                if (coef != 0)
                    r.co[static_cast<size_t>(j)] = base_.add(
                        r.co[static_cast<size_t>(j)],
                        base_.mul(u.co[static_cast<size_t>(i)],
                                  base_.from_residue(residue_field().from_int(coef))));
                spow = spow * s % p_;
            }
        }
        return r;
    }

    // v(sigma(pi) - pi) - 1 for the canonical uniformizer: the lower (==
    // upper) ramification jump, measured from first principles.
    long long lower_jump() const {
        Elem pi = uniformizer();
        Elem d = sub(galois_shift(pi, 1), pi);
        auto v = valuation(d);
        if (!v) raise(ErrorCode::PrecisionExhausted, "sigma(pi) - pi vanished");
        return *v - 1;
    }

    // sum over nontrivial sigma of v(sigma(pi) - pi): the valuation of the
    // different.
    long long different_sum() const {
        Elem pi = uniformizer();
        long long total = 0;
        for (int s = 1; s < p_; ++s) {
            Elem d = sub(galois_shift(pi, s), pi);
            auto v = valuation(d);
            if (!v) raise(ErrorCode::PrecisionExhausted, "sigma(pi) - pi vanished");
            total += *v;
        }
        return total;
    }

    Elem pow_elem(const Elem& x, long long e) const {
        Elem r = one();
        Elem b = x;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

private:
    Base base_;
    BaseElem c_;
    int p_ = 0;
    long long m_ = 0;
    long long inv_m_ = 1;
    int unif_x_ = 0;
    long long unif_y_ = 0;
    PLFunction psi_;
    std::vector<Elem> gamma_pow_;

    BaseElem base_one() const { return base_.from_residue(residue_field().one()); }

    int gamma_index_of(long long v) const {
        // unique i in [0, p-1] with -i m = v (mod p)
        long long vm = ((-v % p_) + p_) % p_;
        return static_cast<int>(vm * inv_m_ % p_);
    }

    long long binom_mod_p(int nn, int kk) const {
        long long r = 1;
        for (int t = 0; t < kk; ++t) {
            r = r * ((nn - t) % p_) % p_;
            // divide by t+1
            long long inv = 1, b = (t + 1) % p_, e = p_ - 2;
            while (e > 0) {
                if (e & 1) inv = inv * b % p_;
                b = b * b % p_;
                e >>= 1;
            }
            r = r * inv % p_;
        }
        return r;
    }

    // plain polynomial multiplication in gamma, degrees staying below p
    Elem poly_mul(const Elem& a, const Elem& b) const {
        Elem r = zero();
        for (int i = 0; i < p_; ++i) {
            if (base_.is_zero(a.co[static_cast<size_t>(i)])) continue;
            for (int j = 0; j + i < p_; ++j) {
                if (base_.is_zero(b.co[static_cast<size_t>(j)])) continue;
                r.co[static_cast<size_t>(i + j)] = base_.add(
                    r.co[static_cast<size_t>(i + j)],
                    base_.mul(a.co[static_cast<size_t>(i)], b.co[static_cast<size_t>(j)]));
            }
        }
        return r;
    }
};

static_assert(ValuedField<ASLayer<LaurentField>>);
static_assert(ValuedField<ASLayer<ASLayer<LaurentField>>>);

// Coefficient-ring view of a layer, for the binomial machinery.
template <ValuedField Base>
struct LayerRing {
    using Elem = typename ASLayer<Base>::Elem;
    const ASLayer<Base>* L;

    int p() const { return L->p(); }
    Elem zero() const { return L->zero(); }
    Elem one() const { return L->one(); }
    Elem from_int(long long v) const { return L->from_residue(L->residue_field().from_int(v)); }
    Elem add(const Elem& a, const Elem& b) const { return L->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return L->sub(a, b); }
    Elem mul(const Elem& a, const Elem& b) const { return L->mul(a, b); }
    Elem neg(const Elem& a) const { return L->neg(a); }
    bool is_zero(const Elem& a) const { return L->is_zero(a); }
};

using FirstLayer = ASLayer<LaurentField>;

// lambda = (t^{-1} dt) / (pi^{-1} d pi) has valuation m (p - 1); theta is its
// graded coefficient against powers of the canonical uniformizer.
FqElem theta(const FirstLayer& L);
// Same extraction for a caller-supplied uniformizer and its t-derivative
// (both as layer elements); the graded class must not depend on the choice.
FqElem theta_with(const FirstLayer& L, const FirstLayer::Elem& pi, const FirstLayer::Elem& dpi_dt);
// d pi / dt for the canonical uniformizer gamma^x t^y.
FirstLayer::Elem canonical_dpi_dt(const FirstLayer& L);

// c_j = sum_{i=1}^{j} binom(-a - gamma, j - i) b_i as first-layer elements.
std::vector<FirstLayer::Elem> c_vector(const DefiningPair& pair, const FirstLayer& L);

struct OracleReport {
    std::vector<long long> m_prime; // conductors over the first layer, j = 2..n
    std::vector<Rat> r;             // psi-preimages, j = 2..n
};

// The independent route to the jumps: direct conductor reduction of c_j over
// the explicitly constructed first layer, pulled back through psi. Never
// evaluates the closed-form formula.
OracleReport oracle_all(const DefiningPair& pair);
Rat oracle_r(const DefiningPair& pair, int j);

// Experimental first-principles check for n = 2, p in {2, 3}: builds the
// full two-layer tower above the first layer, brute-forces v(sigma(pi) - pi)
// over the p^2 automorphisms fixing the first layer, and recovers the top
// jump through the composed inverse Herbrand map.
struct FullTowerReport {
    std::set<long long> visible_lower_jumps;
    Rat r2;
};
FullTowerReport experimental_full_tower(const DefiningPair& pair);

} // namespace ramjump
