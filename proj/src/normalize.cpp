#include "ramjump/normalize.hpp"

namespace ramjump {

namespace {

LaurentRing ring_of(const DefiningPair& pair) { return LaurentRing{pair.K.k}; }

// -v(b_j) when b_j has terms.
std::optional<long long> neg_val(const LaurentSeries& s) {
    auto v = s.val();
    if (!v) return std::nullopt;
    return -*v;
}

} // namespace

DefiningPair make_pair(const LaurentField& K, LaurentSeries a, std::vector<LaurentSeries> b) {
    int n = static_cast<int>(b.size());
    if (n < 2 || n > K.p())
        raise(ErrorCode::InvalidOrder, "order n must satisfy 2 <= n <= p");
    return DefiningPair{K, std::move(a), std::move(b), n};
}

ConditionsReport check_conditions(const DefiningPair& pair) {
    const int p = pair.p();
    ConditionsReport rep;
    auto ma = neg_val(pair.a);
    rep.m_a = ma.value_or(0);
    for (const auto& bj : pair.b) rep.m.push_back(neg_val(bj));

    auto m1 = rep.m[0];
    rep.cond_i = ma && *ma > 0 && *ma % p != 0 && m1 && *m1 > 0 && *m1 % p != 0;

    rep.cond_ii = true;
    for (int j = 2; j <= pair.n; ++j) {
        auto mj = rep.m[static_cast<size_t>(j - 1)];
        if (mj && *mj > 0 && *mj % p == 0) rep.cond_ii = false;
    }

    rep.cond_iii = true;
    if (pair.n <= p - 1 && rep.cond_i && *ma == *m1) {
        FqElem ratio = pair.b[0].leading_coeff() / pair.a.leading_coeff();
        if (ratio.in_prime_field()) rep.cond_iii = false;
    }
    return rep;
}

DefiningPair fix_a(const DefiningPair& pair) {
    ReducedRep<LaurentField> red = reduce_class(pair.K, pair.a);
    // a + P(s) = a - P(c'') for s = -c''.
    LaurentSeries s = -red.c_dblprime;
    LaurentRing R = ring_of(pair);
    NilMat<LaurentRing> tw = big_a(R, s.pth_power(), pair.n);
    DefiningPair out = pair;
    out.a = red.c_prime;
    out.b = mat_vec(R, tw, pair.b);
    return out;
}

DefiningPair fix_b(const DefiningPair& pair) {
    LaurentRing R = ring_of(pair);
    DefiningPair out = pair;
    std::vector<LaurentSeries> tau;
    tau.reserve(static_cast<size_t>(pair.n));

    auto old_m1 = neg_val(pair.b[0]);

    for (int j = 1; j <= pair.n; ++j) {
        // Component j of (1 - big_a(a)) tau depends only on tau_1..tau_{j-1}.
        LaurentSeries bracket(pair.field());
        for (int m = 1; m < j; ++m)
            bracket = bracket - binom_poly(R, pair.a, j - m) * tau[static_cast<size_t>(m - 1)];
        LaurentSeries vj = pair.b[static_cast<size_t>(j - 1)] + bracket;
        ReducedRep<LaurentField> red = reduce_class(pair.K, vj);
        tau.push_back(-red.c_dblprime);
        out.b[static_cast<size_t>(j - 1)] = red.c_prime;
    }

    auto new_m1 = neg_val(out.b[0]);
    if (old_m1 && *old_m1 > 0 && new_m1 && *new_m1 > *old_m1)
        raise(ErrorCode::Internal, "component fix increased -v(b_1)");
    return out;
}

DefiningPair untangle_leading(const DefiningPair& pair) {
    const int p = pair.p();
    if (pair.n > p - 1)
        raise(ErrorCode::NotApplicable, "requires n <= p - 1");
    auto ma = neg_val(pair.a);
    auto m1 = neg_val(pair.b[0]);
    if (!ma || !m1 || *ma <= 0 || *ma != *m1 || *ma % p == 0)
        raise(ErrorCode::NotApplicable, "requires m_a = m_1 > 0 prime to p");
    FqElem ratio = pair.b[0].leading_coeff() / pair.a.leading_coeff();
    if (!ratio.in_prime_field())
        raise(ErrorCode::NotApplicable, "leading images already independent");
    int i = ratio.as_prime_int();

    LaurentRing R = ring_of(pair);
    std::vector<LaurentSeries> v = binom_vector(R, pair.a, pair.n);
    DefiningPair out = pair;
    for (int j = 0; j < pair.n; ++j)
        out.b[static_cast<size_t>(j)] =
            pair.b[static_cast<size_t>(j)] - v[static_cast<size_t>(j)].scaled_int(i);
    return out;
}

DefiningPair twist_pair(const DefiningPair& pair, const LaurentSeries& s,
                        const std::vector<LaurentSeries>& tau) {
    if (tau.size() != static_cast<size_t>(pair.n))
        raise(ErrorCode::InvalidInput, "tau must have n components");
    LaurentRing R = ring_of(pair);
    LaurentSeries new_a = pair.a + s.pth_power() - s;
    std::vector<LaurentSeries> nb = mat_vec(R, big_a(R, s.pth_power(), pair.n), pair.b);
    std::vector<LaurentSeries> at = mat_vec(R, big_a(R, new_a, pair.n), tau);
    for (int j = 0; j < pair.n; ++j)
        nb[static_cast<size_t>(j)] =
            nb[static_cast<size_t>(j)] - at[static_cast<size_t>(j)] +
            tau[static_cast<size_t>(j)].pth_power();
    DefiningPair out = pair;
    out.a = std::move(new_a);
    out.b = std::move(nb);
    return out;
}

DefiningPair normalize_pair(const DefiningPair& pair) {
    DefiningPair cur = fix_a(pair);
    cur = fix_b(cur);
    try {
        cur = untangle_leading(cur);
        cur = fix_b(cur);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotApplicable) throw;
    }

    // Validate. The a-class must be ramified, the b_1-class ramified and
    // independent of a where required.
    auto ma = neg_val(cur.a);
    if (!ma || *ma <= 0)
        raise(ErrorCode::NotTotallyRamified, "class of a is unramified or trivial");
    auto m1 = neg_val(cur.b[0]);
    if (!m1)
        raise(ErrorCode::DegenerateGroup, "class of b_1 is trivial");
    if (*m1 <= 0)
        raise(ErrorCode::NotTotallyRamified, "class of b_1 is unramified");
    ConditionsReport rep = check_conditions(cur);
    if (!rep.cond_i || !rep.cond_ii)
        raise(ErrorCode::Internal, "normalization left a p-divisible conductor");
    if (!rep.cond_iii)
        raise(ErrorCode::InvalidInput,
              "leading images of a and b_1 remain dependent after untangling");
    return cur;
}

} // namespace ramjump
