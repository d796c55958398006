#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramjump/errors.hpp"

namespace ramjump {

// Supported ranges: small characteristic, small degree. Everything is meant
// for exact desk-scale verification, not bulk arithmetic.
inline constexpr int kMaxP = 13;
inline constexpr int kMaxDegree = 8;

class FqField;

// Element of F_{p^d}, stored as coordinates in the basis 1, g, ..., g^{d-1}
// where g is the residue of the generator symbol modulo the field's modulus.
// Elements keep a pointer to their field; mixing fields is an error.
class FqElem {
public:
    FqElem() = default; // unbound; only assignable

    bool bound() const { return field_ != nullptr; }
    const FqField* field_ptr() const { return field_; }

    bool is_zero() const;
    bool is_one() const;
    int coord(int i) const { return c_[static_cast<size_t>(i)]; }

    // True when the element lies in the prime field F_p.
    bool in_prime_field() const;
    // The F_p value of a prime-field element.
    int as_prime_int() const;

    FqElem operator-() const;
    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator-(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    friend FqElem operator/(const FqElem& a, const FqElem& b);
    friend bool operator==(const FqElem& a, const FqElem& b);
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

    FqElem inverse() const;
    FqElem frobenius() const;   // x -> x^p
    FqElem pth_root() const;    // inverse of frobenius
    FqElem pow(long long e) const;

    // x + x^p + ... + x^{p^{d-1}}, returned as an integer in [0, p).
    int trace_to_fp() const;

    std::string str() const;

private:
    friend class FqField;
    std::array<uint8_t, kMaxDegree> c_{};
    const FqField* field_ = nullptr;
};

// The field F_{p^d} = F_p[g]/(modulus). The modulus is supplied as ascending
// coefficients of a monic irreducible polynomial of degree d; irreducibility
// is verified at construction. Non-copyable: elements hold pointers into it.
class FqField {
public:
    FqField(int p, int d, std::vector<int> modulus);
    FqField(const FqField&) = delete;
    FqField& operator=(const FqField&) = delete;

    int p() const { return p_; }
    int d() const { return d_; }
    long long order() const { return order_; }
    const std::vector<int>& modulus() const { return modulus_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem gen() const; // the class of g (requires d >= 2 to be outside F_p)
    FqElem from_int(long long v) const;
    FqElem make(const std::vector<int>& coords) const;

    // Enumeration in base-p digit order; index in [0, order()).
    FqElem element_at(long long index) const;

    // Solve y^p - y = x over the field. Exists iff trace_to_fp(x) == 0.
    std::optional<FqElem> solve_artin_schreier(const FqElem& x) const;

    // Lexicographically smallest monic irreducible of degree d over F_p
    // (ascending coefficients). Computed, not tabulated.
    static std::vector<int> find_irreducible(int p, int d);

private:
    friend class FqElem;
    friend FqElem operator+(const FqElem& a, const FqElem& b);
    friend FqElem operator*(const FqElem& a, const FqElem& b);
    int p_ = 0;
    int d_ = 0;
    long long order_ = 0;
    std::vector<int> modulus_;
    // Reduction rows: coords of g^(d+k) for k in [0, d-2].
    std::vector<std::array<uint8_t, kMaxDegree>> red_;
    // Frobenius matrix: frob_[j] = coords of (g^j)^p.
    std::vector<std::array<uint8_t, kMaxDegree>> frob_;

    void check_same(const FqElem& a, const FqElem& b) const;
};

} // namespace ramjump
