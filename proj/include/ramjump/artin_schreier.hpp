#pragma once

#include <set>
#include <string>

#include "ramjump/valued_field.hpp"

namespace ramjump {

enum class ClassStatus { ramified, unramified, trivial };

inline const char* class_status_name(ClassStatus s) {
    switch (s) {
        case ClassStatus::ramified: return "ramified";
        case ClassStatus::unramified: return "unramified";
        case ClassStatus::trivial: return "trivial";
    }
    return "?";
}

// Reduced representative of the class of c modulo { x^p - x }. Satisfies
// c - (c''^p - c'') = c' exactly (to working precision). For ramified classes
// v(c') = -m < 0 with gcd(m, p) = 1; otherwise m = 0 and v(c') >= 0.
template <ValuedField F>
struct ReducedRep {
    typename F::Elem c_prime;
    typename F::Elem c_dblprime;
    long long m = 0;
    ClassStatus status = ClassStatus::trivial;
};

// x^p - x.
template <ValuedField F>
typename F::Elem artin_schreier_p(const F& f, const typename F::Elem& x) {
    return f.sub(f.pth_power(x), x);
}

// Canonical reduction. While the leading valuation -N is negative with p | N,
// a leading p-th root w is split off and c is replaced by c - P(w); the loop
// stops at the first leading valuation that is negative and prime to p.
// Otherwise the strictly-positive-valuation tail (contained in P) is stripped
// into the witness and the residue constant is classified by its trace.
template <ValuedField F>
ReducedRep<F> reduce_class(const F& field, typename F::Elem c) {
    ReducedRep<F> out{field.zero(), field.zero(), 0, ClassStatus::trivial};
    const int p = field.p();

    long long prev_lead = -(static_cast<long long>(1) << 62);
    while (true) {
        auto v = field.valuation(c);
        if (!v) {
            if (field.prec_floor(c) <= 0)
                raise(ErrorCode::PrecisionExhausted,
                      "class accumulator vanished below working precision before classification");
            // Zero up to a positive precision floor: the class is trivial.
            out.c_prime = c;
            out.status = ClassStatus::trivial;
            out.m = 0;
            return out;
        }
        if (*v >= 0) break;
        if (*v <= prev_lead)
            raise(ErrorCode::Internal, "reduction failed to strictly descend");
        prev_lead = *v;
        long long n = -*v;
        if (n % p != 0) {
            out.c_prime = c;
            out.status = ClassStatus::ramified;
            out.m = n;
            return out;
        }
        typename F::Elem w = field.leading_root(c);
        c = field.sub(c, artin_schreier_p(field, w));
        out.c_dblprime = field.add(out.c_dblprime, w);
    }

    // Non-negative leading valuation: strip the positive tail through the
    // convergent witness y = -(x + x^p + x^{p^2} + ...), P(y) = x.
    typename F::Elem pos = field.part_above(c, 0);
    if (!field.is_zero(pos)) {
        typename F::Elem y = field.zero();
        typename F::Elem term = pos;
        long long cap = field.strip_cap();
        while (!field.is_zero(term)) {
            auto tv = field.valuation(term);
            if (!tv || *tv >= cap) break;
            y = field.sub(y, term);
            term = field.pth_power(term);
        }
        c = field.sub(c, artin_schreier_p(field, y));
        // The witness is truncated, so the subtraction leaves a tail beyond
        // the cap; drop it and record the precision floor instead.
        c = field.truncate(c, field.strip_cap());
        out.c_dblprime = field.add(out.c_dblprime, y);
    }

    FqElem r = field.residue(c);
    if (!r.is_zero() && r.trace_to_fp() == 0) {
        auto y0 = field.residue_field().solve_artin_schreier(r);
        if (!y0) raise(ErrorCode::Internal, "trace-zero residue with no Artin-Schreier preimage");
        typename F::Elem ylift = field.from_residue(*y0);
        c = field.sub(c, artin_schreier_p(field, ylift));
        out.c_dblprime = field.add(out.c_dblprime, ylift);
        r = field.residue_field().zero();
    }
    out.c_prime = c;
    out.m = 0;
    out.status = r.is_zero() ? ClassStatus::trivial : ClassStatus::unramified;
    return out;
}

// The unique upper ramification jump of the extension cut out by x^p - x = c
// for ramified classes; 0 for unramified or trivial classes.
template <ValuedField F>
long long conductor(const F& field, const typename F::Elem& c) {
    return reduce_class(field, c).m;
}

struct SweepResult {
    std::set<long long> jumps; // distinct conductors over all nonzero classes
    long long r1 = 0;          // the largest
};

// Conductors of every nonzero F_p-combination i*a + j*b1. A trivial
// combination means the two classes are dependent (the group degenerates);
// an unramified one means the composite is not totally ramified.
template <ValuedField F>
SweepResult character_sweep(const F& field, const typename F::Elem& a, const typename F::Elem& b1) {
    const int p = field.p();
    SweepResult res;
    for (int i = 0; i < p; ++i) {
        for (int j = 0; j < p; ++j) {
            if (i == 0 && j == 0) continue;
            typename F::Elem cls =
                field.add(field.mul(field.from_residue(field.residue_field().from_int(i)), a),
                          field.mul(field.from_residue(field.residue_field().from_int(j)), b1));
            ReducedRep<F> red = reduce_class(field, cls);
            if (red.status == ClassStatus::trivial)
                raise(ErrorCode::DegenerateGroup,
                      "classes are F_p-dependent: " + std::to_string(i) + "*a + " +
                          std::to_string(j) + "*b1 is trivial");
            if (red.status == ClassStatus::unramified)
                raise(ErrorCode::NotTotallyRamified,
                      "combination " + std::to_string(i) + "*a + " + std::to_string(j) +
                          "*b1 is unramified");
            res.jumps.insert(red.m);
        }
    }
    res.r1 = *res.jumps.rbegin();
    return res;
}

} // namespace ramjump
