#pragma once

#include <optional>
#include <vector>

#include "ramjump/artin_schreier.hpp"
#include "ramjump/unipotent.hpp"

namespace ramjump {

// A pair (a, b) cutting out the degree-p^{n+1} extension: the bottom scalar
// equation is x^p - x = a, and the vector part is F(y) = big_a(a) y + b.
// b is stored bottom-up (b[0] is the lowest component b_1).
struct DefiningPair {
    LaurentField K;
    LaurentSeries a;
    std::vector<LaurentSeries> b;
    int n = 0;

    const FqField& field() const { return *K.k; }
    int p() const { return K.p(); }
};

DefiningPair make_pair(const LaurentField& K, LaurentSeries a, std::vector<LaurentSeries> b);

struct ConditionsReport {
    bool cond_i = false;   // m_a, m_1 positive and prime to p
    bool cond_ii = false;  // p does not divide any positive m_j, j >= 2
    bool cond_iii = false; // leading images of a, b_1 independent when m_a = m_1 (n <= p-1)
    long long m_a = 0;
    std::vector<std::optional<long long>> m; // -v(b_j); nullopt for zero components

    bool all() const { return cond_i && cond_ii && cond_iii; }
};

ConditionsReport check_conditions(const DefiningPair& pair);

// Replace (a, b) by (a + P(s), big_a(s^p) b) with s chosen so the new a is
// the canonical reduced representative of its class.
DefiningPair fix_a(const DefiningPair& pair);

// Replace (a, b) by (a, b + (1 - big_a(a)) tau + (F(tau) - tau)), choosing
// tau component by component from the bottom so every b_j becomes reduced.
// Never increases -v(b_1).
DefiningPair fix_b(const DefiningPair& pair);

// When n <= p-1, m_a = m_1 and the leading images satisfy lead(b_1) = i *
// lead(a) with i in F_p, replace b by b - i * binom_vector(a). Throws
// NotApplicable when the trigger condition does not hold.
DefiningPair untangle_leading(const DefiningPair& pair);

// Full pipeline: fix_a, fix_b, one conditional untangle_leading followed by
// fix_b again; validates the final conditions.
DefiningPair normalize_pair(const DefiningPair& pair);

// The general equivalence of defining pairs:
//   (a, b) -> (a + P(s), big_a(s^p) b - big_a(a + P(s)) tau + F(tau)).
// Any two pairs related this way cut out the same extension, so all jump
// data must agree.
DefiningPair twist_pair(const DefiningPair& pair, const LaurentSeries& s,
                        const std::vector<LaurentSeries>& tau);

} // namespace ramjump
