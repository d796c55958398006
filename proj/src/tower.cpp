#include "ramjump/tower.hpp"

#include <algorithm>

namespace ramjump {

FirstLayer::Elem canonical_dpi_dt(const FirstLayer& L) {
    const FqField& k = L.residue_field();
    int x = L.uniformizer_gamma_exp();
    long long y = L.uniformizer_base_exp();
    // gamma^p - gamma = c  =>  d gamma = -c'(t) dt in characteristic p
    LaurentSeries dgamma = -L.defining_c().derivative();
    // d(gamma^x t^y)/dt = x gamma^{x-1} dgamma t^y + y gamma^x t^{y-1}
    FirstLayer::Elem first = L.zero();
    first.co[static_cast<size_t>(x - 1)] =
        dgamma.scaled_int(x) * LaurentSeries::monomial(k.one(), y);
    FirstLayer::Elem second = L.zero();
    second.co[static_cast<size_t>(x)] = LaurentSeries::monomial(k.from_int(y % k.p()), y - 1);
    return L.add(first, second);
}

FqElem theta_with(const FirstLayer& L, const FirstLayer::Elem& pi, const FirstLayer::Elem& dpi_dt) {
    const FqField& k = L.residue_field();
    long long expected = L.conductor_m() * (L.p() - 1);
    // lambda = (pi / t) * (d pi / d t)^{-1}
    FirstLayer::Elem pi_over_t =
        L.mul(pi, L.embed(LaurentSeries::monomial(k.one(), -1)));
    FirstLayer::Elem lambda = L.mul(pi_over_t, L.inverse(dpi_dt));
    auto v = L.valuation(lambda);
    if (!v) raise(ErrorCode::PrecisionExhausted, "lambda vanished to working precision");
    if (*v != expected)
        raise(ErrorCode::Internal,
              "lambda has valuation " + std::to_string(*v) + ", expected m(p-1) = " +
                  std::to_string(expected));
    // graded coefficient against the canonical uniformizer power
    FirstLayer::Elem piinv = L.inverse(L.uniformizer());
    FirstLayer::Elem normalized = L.mul(lambda, L.pow_elem(piinv, expected));
    return L.residue(normalized);
}

FqElem theta(const FirstLayer& L) { return theta_with(L, L.uniformizer(), canonical_dpi_dt(L)); }

std::vector<FirstLayer::Elem> c_vector(const DefiningPair& pair, const FirstLayer& L) {
    LayerRing<LaurentField> R{&L};
    FirstLayer::Elem shifted = L.sub(L.neg(L.embed(pair.a)), L.gamma()); // -a - gamma
    std::vector<FirstLayer::Elem> c;
    c.reserve(static_cast<size_t>(pair.n));
    for (int j = 1; j <= pair.n; ++j) {
        FirstLayer::Elem cj = L.zero();
        for (int i = 1; i <= j; ++i)
            cj = L.add(cj, L.mul(binom_poly(R, shifted, j - i),
                                 L.embed(pair.b[static_cast<size_t>(i - 1)])));
        c.push_back(std::move(cj));
    }
    return c;
}

OracleReport oracleimpl(const DefiningPair& pair) {
    auto va = pair.a.val();
    if (!va || *va >= 0)
        raise(ErrorCode::InvalidInput, "pair is not normalized: a is not ramified");
    long long m_a = -*va;
    FirstLayer L(pair.K, pair.a);
    std::vector<FirstLayer::Elem> c = c_vector(pair, L);
    PLFunction psi_inv = L.psi().inverse();

    OracleReport rep;
    long long prev = m_a;
    for (int j = 2; j <= pair.n; ++j) {
        ReducedRep<FirstLayer> red = reduce_class(L, c[static_cast<size_t>(j - 1)]);
        if (red.status != ClassStatus::ramified)
            raise(ErrorCode::NotRamified,
                  "stage-" + std::to_string(j) + " class is not ramified over the first layer");
        if (red.m % pair.p() == 0)
            raise(ErrorCode::Internal, "layer conductor divisible by p");
        if (red.m <= prev)
            raise(ErrorCode::MonotonicityViolation,
                  "layer conductors are not strictly increasing");
        prev = red.m;
        rep.m_prime.push_back(red.m);
        rep.r.push_back(psi_inv.eval(Rat(red.m)));
    }
    return rep;
}

OracleReport oracle_all(const DefiningPair& pair) { return oracleimpl(pair); }

Rat oracle_r(const DefiningPair& pair, int j) {
    if (j < 2 || j > pair.n)
        raise(ErrorCode::InvalidIndex, "stage index must satisfy 2 <= j <= n");
    return oracleimpl(pair).r[static_cast<size_t>(j - 2)];
}

namespace {

// psi of an elementary abelian p^2-extension from its (one or two) upper
// jumps: a composite of two degree-p psi maps.
PLFunction psi_bilayer(int p, const std::set<long long>& jumps) {
    if (jumps.empty() || jumps.size() > 2)
        raise(ErrorCode::Internal, "a p^2 bilayer has one or two upper jumps");
    auto it = jumps.begin();
    long long u1 = *it;
    long long u2 = jumps.size() > 1 ? *std::next(it) : u1;
    PLFunction inner = PLFunction::artin_schreier_psi(p, u1);
    long long outer_m = inner.eval(Rat(u2)).num_ll();
    return compose(PLFunction::artin_schreier_psi(p, outer_m), inner);
}

} // namespace

FullTowerReport experimental_full_tower(const DefiningPair& pair) {
    const int p = pair.p();
    if (pair.n != 2 || p > 3)
        raise(ErrorCode::InvalidInput, "full-tower brute force is limited to n = 2, p in {2, 3}");
    if (!check_conditions(pair).all())
        raise(ErrorCode::InvalidInput, "pair must be normalized");

    long long m_a = -pair.a.val().value();
    FirstLayer L(pair.K, pair.a);
    using SecondLayer = ASLayer<FirstLayer>;
    using ThirdLayer = ASLayer<SecondLayer>;

    // Layer the two vector components above L, keeping the reduction
    // witnesses: gamma_j' = gamma_j - w_j generates the same step.
    std::vector<FirstLayer::Elem> c = c_vector(pair, L);
    ReducedRep<FirstLayer> red1 = reduce_class(L, c[0]);
    if (red1.status != ClassStatus::ramified)
        raise(ErrorCode::NotRamified, "bottom class is not ramified over the first layer");
    SecondLayer T1(L, red1.c_prime);

    SecondLayer::Elem c2 = T1.embed(c[1]);
    ReducedRep<SecondLayer> red2 = reduce_class(T1, c2);
    if (red2.status != ClassStatus::ramified)
        raise(ErrorCode::NotRamified, "top class is not ramified over the second layer");
    ThirdLayer T2(T1, red2.c_prime);
    const SecondLayer::Elem& w2 = red2.c_dblprime;

    // Upper jumps of the abelian part above L, swept over the layer.
    SweepResult ml = character_sweep(L, c[0], c[1]);
    PLFunction psi_MK = compose(psi_bilayer(p, ml.jumps),
                                PLFunction::artin_schreier_psi(p, m_a));

    ThirdLayer::Elem pi = T2.uniformizer();
    FullTowerReport rep;
    long long max_jump = 0;
    for (int s = 0; s < p; ++s) {
        for (int u = 0; u < p; ++u) {
            if (s == 0 && u == 0) continue;
            // sigma: gamma_1' += s;  gamma_2' += u + (w2 - sigma_s(w2))
            SecondLayer::Elem delta = T1.sub(w2, T1.galois_shift(w2, s));
            SecondLayer::Elem beta =
                T1.add(T1.from_residue(T1.residue_field().from_int(u)), delta);
            ThirdLayer::Elem shifted_gen = T2.gamma();
            shifted_gen.co[0] = T1.add(shifted_gen.co[0], beta);
            // apply to pi coordinatewise
            ThirdLayer::Elem image = T2.zero();
            ThirdLayer::Elem genpow = T2.one();
            for (int d = 0; d < p; ++d) {
                SecondLayer::Elem coef = T1.galois_shift(pi.co[static_cast<size_t>(d)], s);
                ThirdLayer::Elem term = genpow;
                for (auto& tc : term.co) tc = T1.mul(tc, coef);
                image = T2.add(image, term);
                if (d + 1 < p) genpow = T2.mul(genpow, shifted_gen);
            }
            auto v = T2.valuation(T2.sub(image, pi));
            if (!v) raise(ErrorCode::PrecisionExhausted, "sigma(pi) - pi vanished");
            rep.visible_lower_jumps.insert(*v - 1);
            max_jump = std::max(max_jump, *v - 1);
        }
    }
    rep.r2 = psi_MK.inverse().eval(Rat(max_jump));
    return rep;
}

} // namespace ramjump
