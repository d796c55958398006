#pragma once

#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramjump/fq.hpp"

namespace ramjump {

// Valuation sentinel for the zero series.
inline constexpr long long kValInf = std::numeric_limits<long long>::max();

// Sparse truncated Laurent series over F_{p^d} with absolute precision
// tracking. Terms are (exponent, coefficient) pairs sorted by exponent with
// no zero coefficients; all stored exponents are < prec(). Finitely supported
// values constructed directly are EXACT (prec() == kExactPrec); truncation
// enters only through inverse() and through witnesses built against it.
class LaurentSeries {
public:
    static constexpr long long kExactPrec = std::numeric_limits<long long>::max();

    LaurentSeries() = default; // unbound
    explicit LaurentSeries(const FqField& k) : field_(&k) {}

    static LaurentSeries monomial(const FqElem& c, long long e);
    static LaurentSeries constant(const FqElem& c) { return monomial(c, 0); }

    bool bound() const { return field_ != nullptr; }
    const FqField& field() const { return *field_; }
    const FqField* field_ptr() const { return field_; }

    long long prec() const { return prec_; }
    bool is_exact() const { return prec_ == kExactPrec; }
    bool has_terms() const { return !terms_.empty(); }
    // Exactly the zero element (as opposed to zero-to-precision).
    bool is_zero_exact() const { return terms_.empty() && is_exact(); }

    const std::vector<std::pair<long long, FqElem>>& terms() const { return terms_; }

    // Least stored exponent; nullopt when there are no stored terms.
    std::optional<long long> val() const;
    // Spec semantics: kValInf for the exact zero series; PrecisionExhausted
    // when the series is indistinguishable from zero at current precision.
    long long valuation() const;

    FqElem leading_coeff() const;
    FqElem coeff_at(long long e) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& h);
    friend LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& h);
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& h);
    friend bool operator==(const LaurentSeries& f, const LaurentSeries& h);
    friend bool operator!=(const LaurentSeries& f, const LaurentSeries& h) { return !(f == h); }

    LaurentSeries scaled(const FqElem& c) const;
    LaurentSeries scaled_int(long long c) const;

    // Multiplicative inverse. Exact for monomials; otherwise truncated at
    // prec - 2 v(f) when truncated, or at `cap` absolute precision when the
    // input is exact and the inverse is an infinite series.
    LaurentSeries inverse(long long cap) const;

    LaurentSeries pth_power() const;
    LaurentSeries derivative() const;   // d/dt
    LaurentSeries t_derivative() const; // t * d/dt

    LaurentSeries truncated(long long new_prec) const;
    // Terms with exponent strictly greater than e; precision is kept.
    LaurentSeries part_above(long long e) const;
    // Terms with exponent strictly below e. Fully known when e <= prec,
    // hence returned exact in that case.
    LaurentSeries part_below(long long e) const;

    std::string str() const;

private:
    std::vector<std::pair<long long, FqElem>> terms_;
    long long prec_ = kExactPrec;
    const FqField* field_ = nullptr;

    void normalize();
    static void check_compatible(const LaurentSeries& f, const LaurentSeries& h);
};

// Representation of a differential as g * t^{-1} dt. Under the filtration
// convention used throughout, -v(chi) = -v(g).
struct DifferentialRep {
    LaurentSeries g;

    bool is_zero() const { return !g.has_terms(); }
    // -v of the differential; nullopt when zero.
    std::optional<long long> neg_val() const {
        auto v = g.val();
        if (!v) return std::nullopt;
        return -*v;
    }
};

// g = t * df/dt, so that df = g * t^{-1} dt.
DifferentialRep dlog_derivative(const LaurentSeries& f);

// Solves w^p = x * t^e for a monomial; e must be divisible by p.
LaurentSeries pth_root_monomial(const FqElem& x, long long e);

} // namespace ramjump
