#pragma once

#include <concepts>
#include <optional>

#include "ramjump/laurent.hpp"

namespace ramjump {

// A complete discretely valued field of characteristic p with residue field
// F_{p^d}, exposed as a handle over an element type. Implemented by the base
// Laurent field and by Artin-Schreier tower layers; generic code (class
// reduction, the conductor machinery) only talks to this surface.
//
//   valuation    : least term valuation; nullopt when no terms are stored
//                  (zero up to the element's precision floor)
//   prec_floor   : everything below this valuation is known exactly
//                  (kValInf for exact elements)
//   leading_root : for v(x) < 0 divisible by p, an element w with
//                  v(w) = v(x)/p whose p-th power matches the leading term
//   monomial     : a canonical element of prescribed valuation and leading
//                  coefficient
//   part_above   : the sub-sum of terms of valuation strictly greater than v
//   residue      : the residue-field image of a valuation->=0 element
template <class F>
concept ValuedField = requires(const F& f, const typename F::Elem& x, const typename F::Elem& y,
                               const FqElem& r, long long v) {
    typename F::Elem;
    { f.p() } -> std::convertible_to<int>;
    { f.residue_field() } -> std::convertible_to<const FqField&>;
    { f.is_zero(x) } -> std::convertible_to<bool>;
    { f.valuation(x) } -> std::convertible_to<std::optional<long long>>;
    { f.prec_floor(x) } -> std::convertible_to<long long>;
    { f.zero() } -> std::convertible_to<typename F::Elem>;
    { f.add(x, y) } -> std::convertible_to<typename F::Elem>;
    { f.sub(x, y) } -> std::convertible_to<typename F::Elem>;
    { f.mul(x, y) } -> std::convertible_to<typename F::Elem>;
    { f.neg(x) } -> std::convertible_to<typename F::Elem>;
    { f.pth_power(x) } -> std::convertible_to<typename F::Elem>;
    { f.leading_coeff(x) } -> std::convertible_to<FqElem>;
    { f.leading_root(x) } -> std::convertible_to<typename F::Elem>;
    { f.monomial(r, v) } -> std::convertible_to<typename F::Elem>;
    { f.part_above(x, v) } -> std::convertible_to<typename F::Elem>;
    { f.residue(x) } -> std::convertible_to<FqElem>;
    { f.from_residue(r) } -> std::convertible_to<typename F::Elem>;
    { f.inverse(x) } -> std::convertible_to<typename F::Elem>;
    { f.truncate(x, v) } -> std::convertible_to<typename F::Elem>;
    { f.strip_cap() } -> std::convertible_to<long long>;
};

// K = k((t)) itself. prec_cap is the absolute truncation exponent used when
// an operation forces an infinite expansion (series inversion, image-of-P
// witnesses for positive-valuation tails).
struct LaurentField {
    using Elem = LaurentSeries;

    const FqField* k = nullptr;
    long long prec_cap = 128;

    int p() const { return k->p(); }
    const FqField& residue_field() const { return *k; }
    long long strip_cap() const { return prec_cap; }

    bool is_zero(const Elem& x) const { return !x.has_terms(); }
    std::optional<long long> valuation(const Elem& x) const { return x.val(); }
    long long prec_floor(const Elem& x) const { return x.prec(); }

    Elem zero() const { return LaurentSeries(*k); }
    Elem one() const { return LaurentSeries::constant(k->one()); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem pth_power(const Elem& a) const { return a.pth_power(); }

    FqElem leading_coeff(const Elem& a) const { return a.leading_coeff(); }
    Elem leading_root(const Elem& a) const {
        long long v = a.valuation();
        return pth_root_monomial(a.leading_coeff(), v);
    }
    Elem monomial(const FqElem& c, long long v) const { return LaurentSeries::monomial(c, v); }
    Elem part_above(const Elem& a, long long v) const { return a.part_above(v); }
    FqElem residue(const Elem& a) const { return a.coeff_at(0); }
    Elem from_residue(const FqElem& c) const { return LaurentSeries::constant(c); }
    Elem inverse(const Elem& a) const { return a.inverse(prec_cap); }
    Elem truncate(const Elem& a, long long v) const { return a.truncated(v); }
};

static_assert(ValuedField<LaurentField>);

} // namespace ramjump
