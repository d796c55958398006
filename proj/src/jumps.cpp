#include "ramjump/jumps.hpp"

#include <algorithm>

namespace ramjump {

namespace {

long long require_m_a(const DefiningPair& pair) {
    auto v = pair.a.val();
    if (!v || *v >= 0)
        raise(ErrorCode::InvalidInput, "pair is not normalized: a has no negative valuation");
    return -*v;
}

long long require_m_1(const DefiningPair& pair) {
    auto v = pair.b[0].val();
    if (!v || *v >= 0)
        raise(ErrorCode::InvalidInput, "pair is not normalized: b_1 has no negative valuation");
    return -*v;
}

void require_normalized(const DefiningPair& pair) {
    if (!check_conditions(pair).all())
        raise(ErrorCode::InvalidInput, "pair does not satisfy the normalization conditions");
}

} // namespace

std::vector<DifferentialRep> omega(const DefiningPair& pair) {
    LaurentRing R{pair.K.k};
    std::vector<LaurentSeries> db;
    db.reserve(static_cast<size_t>(pair.n));
    for (const auto& bj : pair.b) db.push_back(dlog_derivative(bj).g);
    NilMat<LaurentRing> tw = big_a(R, -pair.a, pair.n);
    std::vector<LaurentSeries> g = mat_vec(R, tw, db);
    std::vector<DifferentialRep> out;
    out.reserve(g.size());
    for (auto& gi : g) out.push_back(DifferentialRep{std::move(gi)});
    return out;
}

std::vector<std::optional<long long>> omega_vals(const DefiningPair& pair) {
    std::vector<std::optional<long long>> out;
    for (const auto& w : omega(pair)) out.push_back(w.neg_val());
    return out;
}

namespace {

Rat r_formula_from_vals(const DefiningPair& pair, int j,
                        const std::vector<std::optional<long long>>& ov) {
    const int p = pair.p();
    if (j < 2 || j > pair.n)
        raise(ErrorCode::InvalidIndex, "stage index must satisfy 2 <= j <= n");
    long long m_a = require_m_a(pair);
    long long m_1 = require_m_1(pair);
    Rat best = Rat((j + p - 2) * m_a + m_1, p);
    for (int i = 1; i <= j; ++i) {
        const auto& v = ov[static_cast<size_t>(i - 1)];
        if (!v) continue; // vanished differential contributes nothing
        Rat term = Rat(static_cast<long long>(j - i) * m_a, p) + Rat(*v);
        best = rat_max(best, term);
    }
    return best;
}

} // namespace

Rat r_formula(const DefiningPair& pair, int j) {
    require_normalized(pair);
    return r_formula_from_vals(pair, j, omega_vals(pair));
}

Rat r2_formula(const DefiningPair& pair) {
    if (pair.n != 2)
        raise(ErrorCode::InvalidIndex, "direct two-stage formula requires n = 2");
    require_normalized(pair);
    const int p = pair.p();
    long long m_a = require_m_a(pair);
    long long m_1 = require_m_1(pair);
    // db_2 - a db_1 in the g * t^{-1} dt representation.
    LaurentSeries g2 = dlog_derivative(pair.b[1]).g - pair.a * dlog_derivative(pair.b[0]).g;
    Rat best = rat_max(Rat(m_a, p) + Rat(m_1), Rat(m_a) + Rat(m_1, p));
    auto v = g2.val();
    if (v) best = rat_max(best, Rat(-*v));
    return best;
}

Rat s_bound(const DefiningPair& pair, int j) {
    require_normalized(pair);
    const int p = pair.p();
    if (j < 2 || j > pair.n)
        raise(ErrorCode::InvalidIndex, "stage index must satisfy 2 <= j <= n");
    long long m_a = require_m_a(pair);
    long long m_1 = require_m_1(pair);
    auto ov = omega_vals(pair);
    Rat best = Rat((j - 1) * m_a + m_1);
    for (int i = 1; i <= j; ++i) {
        const auto& v = ov[static_cast<size_t>(i - 1)];
        if (!v) continue;
        Rat term = Rat(static_cast<long long>(j - i - p + 1) * m_a) + Rat(p) * Rat(*v);
        best = rat_max(best, term);
    }
    PLFunction psi = PLFunction::artin_schreier_psi(p, m_a);
    return psi.inverse().eval(best);
}

JumpProfile jump_set(const DefiningPair& pair) {
    require_normalized(pair);
    JumpProfile prof;
    prof.n = pair.n;
    prof.m_a = require_m_a(pair);
    for (const auto& bj : pair.b) {
        auto v = bj.val();
        prof.m.push_back(v ? std::optional<long long>(-*v) : std::nullopt);
    }
    prof.omega_val = omega_vals(pair);

    SweepResult sweep = character_sweep(pair.K, pair.a, pair.b[0]);
    prof.u1 = sweep.jumps;

    prof.r.push_back(Rat(sweep.r1));
    for (int j = 2; j <= pair.n; ++j)
        prof.r.push_back(r_formula_from_vals(pair, j, prof.omega_val));
    for (size_t i = 1; i < prof.r.size(); ++i)
        if (!(prof.r[i - 1] < prof.r[i]))
            raise(ErrorCode::MonotonicityViolation,
                  "jump sequence is not strictly increasing; the input pair does not define "
                  "an extension of the expected shape");

    std::vector<Rat> U;
    for (long long u : prof.u1) U.push_back(Rat(u));
    for (size_t i = 1; i < prof.r.size(); ++i) U.push_back(prof.r[i]);
    std::sort(U.begin(), U.end());
    U.erase(std::unique(U.begin(), U.end()), U.end());
    prof.U = std::move(U);
    return prof;
}

} // namespace ramjump
