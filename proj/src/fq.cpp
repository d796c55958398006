#include "ramjump/fq.hpp"

#include <algorithm>

namespace ramjump {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

int mod_inverse(int a, int p) {
    // Fermat; p is a small prime and a != 0 mod p.
    int r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

using Poly = std::vector<int>; // ascending coefficients over F_p

Poly poly_trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, int p) {
    Poly c(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    // mod is monic of degree deg
    size_t deg = mod.size() - 1;
    for (size_t i = c.size(); i-- > deg;) {
        int q = c[i];
        if (q == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < deg; ++j)
            c[i - deg + j] = ((c[i - deg + j] - q * mod[j]) % p + p) % p;
    }
    c.resize(deg);
    return c;
}

Poly poly_powmod_x(long long e, const Poly& mod, int p) {
    // x^e mod (mod)
    Poly result{1};
    result.resize(mod.size() - 1, 0);
    Poly base{0, 1};
    base.resize(mod.size() - 1, 0);
    if (mod.size() == 2) {
        // degree-1 modulus: x is a constant
        base = poly_mulmod(Poly{0, 1}, Poly{1}, mod, p);
    }
    while (e > 0) {
        if (e & 1) result = poly_mulmod(result, base, mod, p);
        base = poly_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, int p) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // a mod b
        int inv_lead = mod_inverse(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            int q = a.back() * inv_lead % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - q * b[i]) % p + p) % p;
            a = poly_trim(std::move(a));
        }
        std::swap(a, b);
    }
    return a;
}

long long ipow(int b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

bool poly_irreducible(const Poly& f, int p) {
    int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    // x^(p^d) == x mod f, and gcd(x^(p^(d/q)) - x, f) == 1 for prime q | d.
    Poly xpd = poly_powmod_x(ipow(p, d), f, p);
    Poly x{0, 1};
    x.resize(f.size() - 1, 0);
    if (poly_trim(xpd) != poly_trim(x)) return false;
    for (int q = 2; q <= d; ++q) {
        if (d % q != 0 || !is_prime(q)) continue;
        Poly g = poly_powmod_x(ipow(p, d / q), f, p);
        g.resize(f.size() - 1, 0);
        for (size_t i = 0; i < g.size(); ++i)
            g[i] = ((g[i] - (i == 1 ? 1 : 0)) % p + p) % p;
        Poly gc = poly_gcd(g, f, p);
        if (gc.size() != 1) return false;
    }
    return true;
}

} // namespace

FqField::FqField(int p, int d, std::vector<int> modulus) : p_(p), d_(d) {
    if (!is_prime(p) || p > kMaxP)
        raise(ErrorCode::InvalidInput, "p must be a prime <= " + std::to_string(kMaxP));
    if (d < 1 || d > kMaxDegree)
        raise(ErrorCode::InvalidInput, "d must be in [1, " + std::to_string(kMaxDegree) + "]");
    if (modulus.size() != static_cast<size_t>(d) + 1)
        raise(ErrorCode::InvalidInput, "modulus must have d+1 coefficients");
    for (int& c : modulus) c = ((c % p) + p) % p;
    if (modulus.back() != 1)
        raise(ErrorCode::InvalidInput, "modulus must be monic");
    if (!poly_irreducible(modulus, p))
        raise(ErrorCode::InvalidInput, "modulus is reducible over F_p");
    modulus_ = std::move(modulus);
    order_ = ipow(p_, d_);

    // g^(d+k) rows for reduction of products.
    std::array<uint8_t, kMaxDegree> cur{};
    // g^d = -modulus_[0..d-1]
    for (int i = 0; i < d_; ++i)
        cur[static_cast<size_t>(i)] = static_cast<uint8_t>(((-modulus_[static_cast<size_t>(i)]) % p_ + p_) % p_);
    red_.push_back(cur);
    for (int k = 1; k <= d_ - 2; ++k) {
        std::array<uint8_t, kMaxDegree> next{};
        int top = cur[static_cast<size_t>(d_ - 1)];
        for (int i = d_ - 1; i >= 1; --i) next[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        next[0] = 0;
        if (top != 0)
            for (int i = 0; i < d_; ++i)
                next[static_cast<size_t>(i)] = static_cast<uint8_t>((next[static_cast<size_t>(i)] + top * red_[0][static_cast<size_t>(i)]) % p_);
        red_.push_back(next);
        cur = next;
    }

    // Frobenius matrix.
    frob_.resize(static_cast<size_t>(d_));
    for (int j = 0; j < d_; ++j) {
        std::vector<int> gj(static_cast<size_t>(d_), 0);
        gj[static_cast<size_t>(j)] = 1;
        FqElem e = make(gj);
        FqElem f = e.pow(p_);
        std::array<uint8_t, kMaxDegree> col{};
        for (int i = 0; i < d_; ++i) col[static_cast<size_t>(i)] = static_cast<uint8_t>(f.coord(i));
        frob_[static_cast<size_t>(j)] = col;
    }
}

void FqField::check_same(const FqElem& a, const FqElem& b) const {
    if (a.field_ptr() != this || b.field_ptr() != this)
        raise(ErrorCode::FieldMismatch, "operands belong to different fields");
}

FqElem FqField::zero() const {
    FqElem e;
    e.field_ = this;
    return e;
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::gen() const {
    std::vector<int> c(static_cast<size_t>(d_), 0);
    if (d_ >= 2) c[1] = 1;
    else c[0] = 1; // d = 1: the generator image is 1
    return make(c);
}

FqElem FqField::from_int(long long v) const {
    FqElem e = zero();
    e.c_[0] = static_cast<uint8_t>(((v % p_) + p_) % p_);
    return e;
}

FqElem FqField::make(const std::vector<int>& coords) const {
    if (coords.size() != static_cast<size_t>(d_))
        raise(ErrorCode::InvalidInput, "coordinate vector must have length d");
    FqElem e = zero();
    for (int i = 0; i < d_; ++i)
        e.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(((coords[static_cast<size_t>(i)] % p_) + p_) % p_);
    return e;
}

FqElem FqField::element_at(long long index) const {
    FqElem e = zero();
    for (int i = 0; i < d_ && index > 0; ++i) {
        e.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(index % p_);
        index /= p_;
    }
    return e;
}

std::optional<FqElem> FqField::solve_artin_schreier(const FqElem& x) const {
    if (x.field_ptr() != this)
        raise(ErrorCode::FieldMismatch, "element from a different field");
    // y^p - y = x is F_p-linear in y; solve (F - I) y = x by elimination.
    int n = d_;
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n) + 1, 0));
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                ((frob_[static_cast<size_t>(j)][static_cast<size_t>(i)] - (i == j ? 1 : 0)) % p_ + p_) % p_;
    for (int i = 0; i < n; ++i)
        m[static_cast<size_t>(i)][static_cast<size_t>(n)] = x.coord(i);

    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(pr)], m[static_cast<size_t>(row)]);
        int inv = mod_inverse(m[static_cast<size_t>(row)][static_cast<size_t>(col)], p_);
        for (int c = col; c <= n; ++c)
            m[static_cast<size_t>(row)][static_cast<size_t>(c)] =
                m[static_cast<size_t>(row)][static_cast<size_t>(c)] * inv % p_;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            int f = m[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f == 0) continue;
            for (int c = col; c <= n; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    ((m[static_cast<size_t>(r)][static_cast<size_t>(c)] - f * m[static_cast<size_t>(row)][static_cast<size_t>(c)]) % p_ + p_) % p_;
        }
        pivot_col[static_cast<size_t>(row)] = col;
        ++row;
    }
    // Inconsistent rows mean no solution (trace != 0).
    for (int r = row; r < n; ++r)
        if (m[static_cast<size_t>(r)][static_cast<size_t>(n)] != 0) return std::nullopt;
    std::vector<int> y(static_cast<size_t>(n), 0);
    for (int r = 0; r < row; ++r)
        y[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = m[static_cast<size_t>(r)][static_cast<size_t>(n)];
    return make(y);
}

std::vector<int> FqField::find_irreducible(int p, int d) {
    if (!is_prime(p) || p > kMaxP || d < 1 || d > kMaxDegree)
        raise(ErrorCode::InvalidInput, "unsupported (p, d)");
    std::vector<int> f(static_cast<size_t>(d) + 1, 0);
    f.back() = 1;
    long long total = ipow(p, d);
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (int i = 0; i < d; ++i) {
            f[static_cast<size_t>(i)] = static_cast<int>(v % p);
            v /= p;
        }
        if (poly_irreducible(f, p)) return f;
    }
    raise(ErrorCode::Internal, "no irreducible polynomial found");
}

bool FqElem::is_zero() const {
    if (!bound()) raise(ErrorCode::InvalidInput, "unbound field element");
    for (int i = 0; i < field_->d(); ++i)
        if (c_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

bool FqElem::is_one() const {
    if (c_[0] != 1) return false;
    for (int i = 1; i < field_->d(); ++i)
        if (c_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

bool FqElem::in_prime_field() const {
    for (int i = 1; i < field_->d(); ++i)
        if (c_[static_cast<size_t>(i)] != 0) return false;
    return true;
}

int FqElem::as_prime_int() const {
    if (!in_prime_field())
        raise(ErrorCode::InvalidInput, "element is not in the prime field");
    return c_[0];
}

FqElem FqElem::operator-() const {
    FqElem r = *this;
    int p = field_->p();
    for (int i = 0; i < field_->d(); ++i)
        r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>((p - c_[static_cast<size_t>(i)]) % p);
    return r;
}

FqElem operator+(const FqElem& a, const FqElem& b) {
    a.field_->check_same(a, b);
    FqElem r = a;
    int p = a.field_->p();
    for (int i = 0; i < a.field_->d(); ++i)
        r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>((a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)]) % p);
    return r;
}

FqElem operator-(const FqElem& a, const FqElem& b) { return a + (-b); }

FqElem operator*(const FqElem& a, const FqElem& b) {
    a.field_->check_same(a, b);
    const FqField& k = *a.field_;
    int p = k.p(), d = k.d();
    std::array<int, 2 * kMaxDegree> prod{};
    for (int i = 0; i < d; ++i) {
        if (a.c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[static_cast<size_t>(i + j)] =
                (prod[static_cast<size_t>(i + j)] + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)]) % p;
    }
    FqElem r = k.zero();
    for (int i = 0; i < d; ++i) r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(prod[static_cast<size_t>(i)]);
    for (int kk = 0; kk <= d - 2; ++kk) {
        int coef = prod[static_cast<size_t>(d + kk)];
        if (coef == 0) continue;
        for (int i = 0; i < d; ++i)
            r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(
                (r.c_[static_cast<size_t>(i)] + coef * k.red_[static_cast<size_t>(kk)][static_cast<size_t>(i)]) % p);
    }
    return r;
}

FqElem operator/(const FqElem& a, const FqElem& b) { return a * b.inverse(); }

bool operator==(const FqElem& a, const FqElem& b) {
    if (a.field_ptr() != b.field_ptr()) return false;
    for (int i = 0; i < a.field_->d(); ++i)
        if (a.c_[static_cast<size_t>(i)] != b.c_[static_cast<size_t>(i)]) return false;
    return true;
}

FqElem FqElem::inverse() const {
    if (is_zero()) raise(ErrorCode::DivisionByZero, "inverse of zero");
    const FqField& k = *field_;
    int p = k.p();
    // Extended Euclid in F_p[x] against the modulus.
    Poly r0(k.modulus().begin(), k.modulus().end());
    Poly r1;
    for (int i = 0; i < k.d(); ++i) r1.push_back(c_[static_cast<size_t>(i)]);
    r1 = poly_trim(std::move(r1));
    Poly s0{0}, s1{1};
    while (true) {
        r0 = poly_trim(std::move(r0));
        if (r1.empty()) raise(ErrorCode::Internal, "gcd with modulus is not constant");
        if (r1.size() == 1) break;
        // r0 = q*r1 + rem
        Poly rem = r0;
        Poly q(r0.size(), 0);
        int inv_lead = mod_inverse(r1.back(), p);
        while (rem.size() >= r1.size() && !rem.empty()) {
            int qc = rem.back() * inv_lead % p;
            size_t shift = rem.size() - r1.size();
            q[shift] = qc;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - qc * r1[i]) % p + p) % p;
            rem = poly_trim(std::move(rem));
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        Poly qs(q.size() + s1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j)
                qs[i + j] = (qs[i + j] + q[i] * s1[j]) % p;
        }
        Poly s2(std::max(s0.size(), qs.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
        r0 = std::move(r1);
        r1 = poly_trim(std::move(rem));
        s0 = std::move(s1);
        s1 = poly_trim(std::move(s2));
    }
    int c = mod_inverse(r1[0], p);
    Poly res(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) res[i] = s1[i] * c % p;
    res.resize(static_cast<size_t>(k.d()), 0);
    std::vector<int> coords(res.begin(), res.end());
    return k.make(coords);
}

FqElem FqElem::frobenius() const {
    const FqField& k = *field_;
    FqElem r = k.zero();
    int p = k.p();
    for (int j = 0; j < k.d(); ++j) {
        int cj = c_[static_cast<size_t>(j)];
        if (cj == 0) continue;
        for (int i = 0; i < k.d(); ++i)
            r.c_[static_cast<size_t>(i)] = static_cast<uint8_t>(
                (r.c_[static_cast<size_t>(i)] + cj * k.frob_[static_cast<size_t>(j)][static_cast<size_t>(i)]) % p);
    }
    return r;
}

FqElem FqElem::pth_root() const {
    FqElem r = *this;
    for (int i = 0; i < field_->d() - 1; ++i) r = r.frobenius();
    return r;
}

FqElem FqElem::pow(long long e) const {
    const FqField& k = *field_;
    if (e < 0) return inverse().pow(-e);
    FqElem r = k.one();
    FqElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int FqElem::trace_to_fp() const {
    FqElem acc = *this;
    FqElem cur = *this;
    for (int i = 1; i < field_->d(); ++i) {
        cur = cur.frobenius();
        acc = acc + cur;
    }
    if (!acc.in_prime_field())
        raise(ErrorCode::Internal, "trace left the prime field");
    return acc.as_prime_int();
}

std::string FqElem::str() const {
    std::string s = "[";
    for (int i = 0; i < field_->d(); ++i) {
        if (i) s += ",";
        s += std::to_string(coord(i));
    }
    return s + "]";
}

} // namespace ramjump
