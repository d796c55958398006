#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ramjump/herbrand.hpp"
#include "ramjump/normalize.hpp"
#include "ramjump/rational.hpp"

namespace ramjump {

// Upper ramification jump data of the full extension: conductor of a, the
// component valuations, the differential valuations, the jump sequence
// r_1 < ... < r_n and the complete jump set U.
struct JumpProfile {
    int n = 0;
    long long m_a = 0;
    std::vector<std::optional<long long>> m;         // -v(b_j), nullopt for 0
    std::vector<std::optional<long long>> omega_val; // -v(omega_j), nullopt for 0
    std::vector<Rat> r;                              // r_1 .. r_n
    std::vector<Rat> U;                              // sorted jump set
    std::set<long long> u1;                          // jumps of the first layer
};

// The twisted component differentials omega = big_a(-a) db, componentwise in
// the g * t^{-1} dt representation.
std::vector<DifferentialRep> omega(const DefiningPair& pair);

// -v of each omega_j; nullopt where the differential vanishes.
std::vector<std::optional<long long>> omega_vals(const DefiningPair& pair);

// The closed-form top jump of the j-th stage, 2 <= j <= n:
//   max( max_i ((j-i)/p m_a - v(omega_i)), ((j+p-2) m_a + m_1) / p ).
// Requires a normalized pair.
Rat r_formula(const DefiningPair& pair, int j);

// The n = 2 specialization written directly against db_2 - a db_1; must agree
// with r_formula(pair, 2).
Rat r2_formula(const DefiningPair& pair);

// Diagnostic route through the conductor over the first layer: the psi
// preimage of max( max_i ((j-i-p+1) m_a - p v(omega_i)), (j-1) m_a + m_1 ).
// Always equals r_formula.
Rat s_bound(const DefiningPair& pair, int j);

// Assembles the full profile: the first-layer jump set by character sweep,
// the higher jumps by the closed form, with monotonicity enforced.
JumpProfile jump_set(const DefiningPair& pair);

} // namespace ramjump
