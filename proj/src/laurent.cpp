#include "ramjump/laurent.hpp"

#include <algorithm>
#include <map>

namespace ramjump {

namespace {

long long sat_add(long long a, long long b) {
    if (a == LaurentSeries::kExactPrec || b == LaurentSeries::kExactPrec)
        return LaurentSeries::kExactPrec;
    return a + b;
}

long long sat_mul_small(long long a, int m) {
    if (a == LaurentSeries::kExactPrec) return a;
    return a * m;
}

} // namespace

void LaurentSeries::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long long, FqElem>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (t.first >= prec_) continue;
        if (!out.empty() && out.back().first == t.first) {
            out.back().second = out.back().second + t.second;
        } else {
            out.push_back(t);
        }
    }
    terms_.clear();
    for (auto& t : out)
        if (!t.second.is_zero()) terms_.push_back(std::move(t));
}

void LaurentSeries::check_compatible(const LaurentSeries& f, const LaurentSeries& h) {
    if (!f.bound() || !h.bound())
        raise(ErrorCode::InvalidInput, "unbound series operand");
    if (f.field_ptr() != h.field_ptr())
        raise(ErrorCode::FieldMismatch, "series over different residue fields");
}

LaurentSeries LaurentSeries::monomial(const FqElem& c, long long e) {
    if (!c.bound()) raise(ErrorCode::InvalidInput, "unbound coefficient");
    LaurentSeries s(*c.field_ptr());
    if (!c.is_zero()) s.terms_.emplace_back(e, c);
    return s;
}

std::optional<long long> LaurentSeries::val() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
}

long long LaurentSeries::valuation() const {
    if (terms_.empty()) {
        if (is_exact()) return kValInf;
        raise(ErrorCode::PrecisionExhausted,
              "series is indistinguishable from zero at precision O(t^" +
                  std::to_string(prec_) + ")");
    }
    return terms_.front().first;
}

FqElem LaurentSeries::leading_coeff() const {
    if (terms_.empty()) raise(ErrorCode::InvalidInput, "zero series has no leading coefficient");
    return terms_.front().second;
}

FqElem LaurentSeries::coeff_at(long long e) const {
    for (const auto& t : terms_)
        if (t.first == e) return t.second;
    return field_->zero();
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& h) {
    LaurentSeries::check_compatible(f, h);
    LaurentSeries r(*f.field_ptr());
    r.prec_ = std::min(f.prec_, h.prec_);
    r.terms_.reserve(f.terms_.size() + h.terms_.size());
    for (const auto& t : f.terms_) r.terms_.push_back(t);
    for (const auto& t : h.terms_) r.terms_.push_back(t);
    r.normalize();
    return r;
}

LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& h) { return f + (-h); }

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& h) {
    LaurentSeries::check_compatible(f, h);
    if (f.is_zero_exact() || h.is_zero_exact()) return LaurentSeries(*f.field_ptr());

    // Result precision: min(prec_f + v(h), prec_h + v(f)). An empty truncated
    // factor has unknown valuation; the result is then unknown everywhere the
    // other factor could contribute.
    auto vf = f.val();
    auto vh = h.val();
    long long prec = LaurentSeries::kExactPrec;
    if (f.prec_ != LaurentSeries::kExactPrec) {
        if (!vh) raise(ErrorCode::PrecisionExhausted, "product with two unknown-valuation factors");
        prec = std::min(prec, sat_add(f.prec_, *vh));
    }
    if (h.prec_ != LaurentSeries::kExactPrec) {
        if (!vf) raise(ErrorCode::PrecisionExhausted, "product with two unknown-valuation factors");
        prec = std::min(prec, sat_add(h.prec_, *vf));
    }

    std::map<long long, FqElem> acc;
    for (const auto& a : f.terms_) {
        for (const auto& b : h.terms_) {
            long long e = a.first + b.first;
            if (e >= prec) continue;
            FqElem c = a.second * b.second;
            auto it = acc.find(e);
            if (it == acc.end()) acc.emplace(e, c);
            else it->second = it->second + c;
        }
    }
    LaurentSeries r(*f.field_ptr());
    r.prec_ = prec;
    for (auto& kv : acc)
        if (!kv.second.is_zero()) r.terms_.emplace_back(kv.first, kv.second);
    return r;
}

bool operator==(const LaurentSeries& f, const LaurentSeries& h) {
    if (f.field_ptr() != h.field_ptr()) return false;
    if (f.prec_ != h.prec_) return false;
    if (f.terms_.size() != h.terms_.size()) return false;
    for (size_t i = 0; i < f.terms_.size(); ++i)
        if (f.terms_[i].first != h.terms_[i].first || f.terms_[i].second != h.terms_[i].second)
            return false;
    return true;
}

LaurentSeries LaurentSeries::scaled(const FqElem& c) const {
    if (c.field_ptr() != field_)
        raise(ErrorCode::FieldMismatch, "scalar from a different field");
    if (c.is_zero()) return LaurentSeries(*field_);
    LaurentSeries r = *this;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
}

LaurentSeries LaurentSeries::scaled_int(long long c) const {
    return scaled(field_->from_int(c));
}

LaurentSeries LaurentSeries::inverse(long long cap) const {
    if (is_zero_exact()) raise(ErrorCode::DivisionByZero, "inverse of zero series");
    if (terms_.empty())
        raise(ErrorCode::PrecisionExhausted, "inverse of a series indistinguishable from zero");
    long long v = terms_.front().first;
    FqElem lead = terms_.front().second;
    if (terms_.size() == 1) {
        // Monomial: exact inverse.
        LaurentSeries r = monomial(lead.inverse(), -v);
        if (!is_exact()) r.prec_ = prec_ - 2 * v;
        return r;
    }
    long long window = is_exact() ? cap : prec_ - 2 * v; // absolute precision of the result
    // f = lead * t^v * (1 + u), v(u) >= 1
    LaurentSeries unit = monomial(lead.inverse(), -v);
    LaurentSeries u = (*this * unit) - constant(field_->one());
    // sum_{k} (-u)^k while it can still contribute below window + v
    LaurentSeries sum = constant(field_->one());
    LaurentSeries pw = constant(field_->one());
    LaurentSeries mu = -u;
    long long vu = mu.terms_.empty() ? kValInf : mu.terms_.front().first;
    if (vu != kValInf) {
        for (long long k = 1; k * vu < window + v; ++k) {
            pw = pw * mu;
            if (!pw.has_terms()) break;
            sum = sum + pw;
        }
    }
    LaurentSeries r = sum * unit;
    return r.truncated(window);
}

LaurentSeries LaurentSeries::pth_power() const {
    int p = field_->p();
    LaurentSeries r(*field_);
    r.prec_ = sat_mul_small(prec_, p);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.emplace_back(t.first * p, t.second.pow(p));
    return r;
}

LaurentSeries LaurentSeries::derivative() const {
    int p = field_->p();
    LaurentSeries r(*field_);
    r.prec_ = prec_ == kExactPrec ? kExactPrec : prec_ - 1;
    for (const auto& t : terms_) {
        long long e = ((t.first % p) + p) % p;
        FqElem c = t.second * field_->from_int(e);
        if (!c.is_zero()) r.terms_.emplace_back(t.first - 1, c);
    }
    return r;
}

LaurentSeries LaurentSeries::t_derivative() const {
    int p = field_->p();
    LaurentSeries r(*field_);
    r.prec_ = prec_;
    for (const auto& t : terms_) {
        long long e = ((t.first % p) + p) % p;
        FqElem c = t.second * field_->from_int(e);
        if (!c.is_zero()) r.terms_.emplace_back(t.first, c);
    }
    return r;
}

LaurentSeries LaurentSeries::truncated(long long new_prec) const {
    LaurentSeries r = *this;
    r.prec_ = std::min(prec_, new_prec);
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::part_above(long long e) const {
    LaurentSeries r(*field_);
    r.prec_ = prec_;
    for (const auto& t : terms_)
        if (t.first > e) r.terms_.push_back(t);
    return r;
}

LaurentSeries LaurentSeries::part_below(long long e) const {
    LaurentSeries r(*field_);
    if (e <= prec_) r.prec_ = kExactPrec;
    else r.prec_ = prec_;
    for (const auto& t : terms_)
        if (t.first < e) r.terms_.push_back(t);
    return r;
}

std::string LaurentSeries::str() const {
    std::string s;
    for (const auto& t : terms_) {
        if (!s.empty()) s += " + ";
        s += t.second.str() + "*t^" + std::to_string(t.first);
    }
    if (s.empty()) s = "0";
    if (!is_exact()) s += " + O(t^" + std::to_string(prec_) + ")";
    return s;
}

DifferentialRep dlog_derivative(const LaurentSeries& f) {
    return DifferentialRep{f.t_derivative()};
}

LaurentSeries pth_root_monomial(const FqElem& x, long long e) {
    if (!x.bound()) raise(ErrorCode::InvalidInput, "unbound coefficient");
    int p = x.field_ptr()->p();
    long long r = ((e % p) + p) % p;
    if (r != 0)
        raise(ErrorCode::ExponentNotDivisible,
              "exponent " + std::to_string(e) + " is not divisible by p = " + std::to_string(p));
    return LaurentSeries::monomial(x.pth_root(), e / p);
}

} // namespace ramjump
