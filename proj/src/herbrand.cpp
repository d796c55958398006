#include "ramjump/herbrand.hpp"

#include <algorithm>

namespace ramjump {

void PLFunction::canonicalize() {
    std::vector<std::pair<Rat, Rat>> bps;
    std::vector<Rat> slopes;
    slopes.push_back(slopes_.front());
    for (size_t i = 0; i < bps_.size(); ++i) {
        const Rat& next_slope = slopes_[i + 1];
        if (next_slope == slopes.back()) continue; // collinear, not a real breakpoint
        bps.push_back(bps_[i]);
        slopes.push_back(next_slope);
    }
    bps_ = std::move(bps);
    slopes_ = std::move(slopes);
}

PLFunction PLFunction::identity() {
    PLFunction f;
    f.y0_ = Rat(-1);
    f.slopes_ = {Rat(1)};
    return f;
}

PLFunction PLFunction::artin_schreier_psi(int p, long long m) {
    if (m <= 0 || m % p == 0)
        raise(ErrorCode::InvalidConductor,
              "conductor must be positive and prime to p (got m = " + std::to_string(m) + ")");
    PLFunction f;
    f.y0_ = Rat(-1);
    f.bps_ = {{Rat(m), Rat(m)}};
    f.slopes_ = {Rat(1), Rat(p)};
    return f;
}

PLFunction PLFunction::from_data(Rat y_at_minus1, std::vector<std::pair<Rat, Rat>> bps,
                                 std::vector<Rat> slopes) {
    if (slopes.size() != bps.size() + 1)
        raise(ErrorCode::InvalidInput, "need one slope per segment");
    for (const Rat& s : slopes)
        if (!(s > Rat(0))) raise(ErrorCode::InvalidInput, "slopes must be positive");
    for (size_t i = 0; i < bps.size(); ++i) {
        if (!(bps[i].first > Rat(-1)))
            raise(ErrorCode::InvalidInput, "breakpoints must lie in (-1, oo)");
        if (i && !(bps[i].first > bps[i - 1].first))
            raise(ErrorCode::InvalidInput, "breakpoints must be strictly increasing");
    }
    PLFunction f;
    f.y0_ = std::move(y_at_minus1);
    f.bps_ = std::move(bps);
    f.slopes_ = std::move(slopes);
    f.canonicalize();
    return f;
}

Rat PLFunction::eval(const Rat& x) const {
    if (x < Rat(-1))
        raise(ErrorCode::InvalidInput, "evaluation below the domain [-1, oo)");
    Rat px(-1), py = y0_;
    for (size_t i = 0; i < bps_.size(); ++i) {
        if (x <= bps_[i].first)
            return py + slopes_[i] * (x - px);
        px = bps_[i].first;
        py = bps_[i].second;
    }
    return py + slopes_.back() * (x - px);
}

Rat PLFunction::slope_right_of(const Rat& x) const {
    size_t i = 0;
    while (i < bps_.size() && !(x < bps_[i].first)) ++i;
    return slopes_[i];
}

PLFunction PLFunction::inverse() const {
    if (y0_ != Rat(-1))
        raise(ErrorCode::InvalidInput, "inverse requires a function fixing -1");
    PLFunction f;
    f.y0_ = Rat(-1);
    f.bps_.reserve(bps_.size());
    for (const auto& bp : bps_) f.bps_.emplace_back(bp.second, bp.first);
    f.slopes_.reserve(slopes_.size());
    for (const Rat& s : slopes_) f.slopes_.push_back(Rat(1) / s);
    return f;
}

bool PLFunction::strictly_increasing() const {
    for (const Rat& s : slopes_)
        if (!(s > Rat(0))) return false;
    return true;
}

bool PLFunction::convex() const {
    for (size_t i = 1; i < slopes_.size(); ++i)
        if (slopes_[i] < slopes_[i - 1]) return false;
    return true;
}

bool PLFunction::fixes_zero() const { return eval(Rat(0)) == Rat(0); }

bool operator==(const PLFunction& a, const PLFunction& b) {
    return a.y0_ == b.y0_ && a.bps_ == b.bps_ && a.slopes_ == b.slopes_;
}

PLFunction compose(const PLFunction& f, const PLFunction& g) {
    // Candidate slope changes: breakpoints of g, plus preimages under g of
    // breakpoints of f that land inside the domain.
    std::vector<Rat> xs;
    for (const auto& bp : g.breakpoints()) xs.push_back(bp.first);
    PLFunction ginv = g.inverse();
    for (const auto& bp : f.breakpoints()) {
        if (bp.first < g.eval(Rat(-1))) continue;
        xs.push_back(ginv.eval(bp.first));
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    while (!xs.empty() && !(xs.front() > Rat(-1))) xs.erase(xs.begin());

    std::vector<std::pair<Rat, Rat>> bps;
    bps.reserve(xs.size());
    for (const Rat& x : xs) bps.emplace_back(x, f.eval(g.eval(x)));
    std::vector<Rat> slopes;
    Rat prev(-1);
    for (size_t i = 0; i <= xs.size(); ++i) {
        // chain rule on the segment starting at prev, which lies inside one
        // linear piece of g and one of f
        slopes.push_back(f.slope_right_of(g.eval(prev)) * g.slope_right_of(prev));
        if (i < xs.size()) prev = xs[i];
    }
    return PLFunction::from_data(f.eval(g.eval(Rat(-1))), std::move(bps), std::move(slopes));
}

} // namespace ramjump
