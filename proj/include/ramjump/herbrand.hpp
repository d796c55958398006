#pragma once

#include <utility>
#include <vector>

#include "ramjump/rational.hpp"

namespace ramjump {

// Exact piecewise-linear function on the domain [-1, oo): an anchor value at
// x = -1, strictly increasing breakpoints where the slope changes, and one
// slope per segment (positive rationals; composites of ramification psi maps
// have positive integer slopes). Canonical form: no two adjacent segments
// share a slope.
class PLFunction {
public:
    PLFunction() = default;

    static PLFunction identity();
    // psi of a totally ramified degree-p extension with conductor m:
    // x -> max(x, p x - (p-1) m). Requires m > 0 and gcd(m, p) = 1.
    static PLFunction artin_schreier_psi(int p, long long m);
    // From raw data: value at -1, breakpoint xs (strictly increasing, > -1)
    // and values, one slope per segment.
    static PLFunction from_data(Rat y_at_minus1, std::vector<std::pair<Rat, Rat>> bps,
                                std::vector<Rat> slopes);

    Rat eval(const Rat& x) const;
    PLFunction inverse() const;

    const std::vector<std::pair<Rat, Rat>>& breakpoints() const { return bps_; }
    const std::vector<Rat>& slopes() const { return slopes_; }
    Rat value_at_minus1() const { return y0_; }

    // Slope of the segment containing points immediately to the right of x.
    Rat slope_right_of(const Rat& x) const;

    bool strictly_increasing() const;
    bool convex() const;
    bool fixes_zero() const;

    friend bool operator==(const PLFunction& a, const PLFunction& b);
    friend bool operator!=(const PLFunction& a, const PLFunction& b) { return !(a == b); }

private:
    Rat y0_;                                  // value at x = -1
    std::vector<std::pair<Rat, Rat>> bps_;    // (x, y), x > -1 strictly increasing
    std::vector<Rat> slopes_;                 // size bps_.size() + 1

    void canonicalize();
};

// compose(f, g)(x) = f(g(x)).
PLFunction compose(const PLFunction& f, const PLFunction& g);

} // namespace ramjump
