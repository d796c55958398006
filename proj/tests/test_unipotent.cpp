#include "doctest.h"

#include <random>

#include "ramjump/unipotent.hpp"

using namespace ramjump;

namespace {

LaurentSeries mono(const FqField& k, int c, long long e) {
    return LaurentSeries::monomial(k.from_int(c), e);
}

long long int_binom_mod(int n, int k, int p) {
    // Pascal triangle oracle
    std::vector<std::vector<long long>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        c[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            c[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                (c[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                 c[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]) % p;
    }
    return k <= n ? c[static_cast<size_t>(n)][static_cast<size_t>(k)] : 0;
}

} // namespace

TEST_CASE("binomial polynomial values") {
    FqField k(3, 1, {1, 1});
    FqRing R{&k};
    CHECK(binom_poly(R, k.from_int(2), 0) == k.one());
    CHECK_THROWS_AS((void)binom_poly(R, k.one(), 3), Error);

    // over F_3((t)): binom(t^-1, 2) = 2(t^-2 - t^-1) = 2 t^-2 + t^-1
    LaurentRing LR{&k};
    CHECK(binom_poly(LR, mono(k, 1, -1), 2) == mono(k, 2, -2) + mono(k, 1, -1));

    // prime-field arguments match integer binomials mod p
    for (int p : {2, 3, 5, 7}) {
        FqField kp(p, 1, FqField::find_irreducible(p, 1));
        FqRing Rp{&kp};
        for (int c = 0; c < p; ++c)
            for (int i = 0; i < p; ++i)
                CHECK(binom_poly(Rp, kp.from_int(c), i) == kp.from_int(int_binom_mod(c, i, p)));
    }
}

TEST_CASE("shift matrix is nilpotent of the right order") {
    FqField k(5, 1, FqField::find_irreducible(5, 1));
    FqRing R{&k};
    auto is_zero_mat = [&](const NilMat<FqRing>& m) {
        for (int j = 1; j <= m.n(); ++j)
            for (int c = 1; c <= m.n(); ++c)
                if (!R.is_zero(m.entry(j, c))) return false;
        return true;
    };
    for (int n = 2; n <= 5; ++n) {
        NilMat<FqRing> a = shift_matrix(R, n);
        NilMat<FqRing> pw = mat_identity(R, n);
        for (int i = 0; i < n - 1; ++i) pw = mat_mul(R, pw, a);
        CHECK(!is_zero_mat(pw)); // A^{n-1} != 0
        pw = mat_mul(R, pw, a);
        CHECK(is_zero_mat(pw)); // A^n = 0
    }
}

TEST_CASE("matrix exponential values") {
    FqField k(3, 1, {1, 1});
    FqRing R{&k};
    // n = 2, x = 1: identity plus the shift
    NilMat<FqRing> a = big_a(R, k.one(), 2);
    CHECK(a.entry(1, 1) == k.one());
    CHECK(a.entry(2, 2) == k.one());
    CHECK(a.entry(2, 1) == k.one());
    // x = 0 gives the identity
    CHECK(mat_equal(R, big_a(R, k.zero(), 2), mat_identity(R, 2)));

    // n = 3 over series: first superdiagonal x, deep entry binom(x, 2)
    LaurentRing LR{&k};
    LaurentSeries x = mono(k, 1, -1);
    NilMat<LaurentRing> m = big_a(LR, x, 3);
    CHECK(m.entry(2, 1) == x);
    CHECK(m.entry(3, 2) == x);
    CHECK(m.entry(3, 1) == mono(k, 2, -2) + mono(k, 1, -1));

    CHECK_THROWS_AS((void)big_a(LR, x, 5), Error); // n > p
}

TEST_CASE("matrix exponential is additive-to-multiplicative") {
    // exhaustive over F_p for small p
    for (int p : {2, 3, 5}) {
        FqField k(p, 1, FqField::find_irreducible(p, 1));
        FqRing R{&k};
        int n = p;
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) {
                NilMat<FqRing> lhs = big_a(R, k.from_int(x + y), n);
                NilMat<FqRing> rhs = mat_mul(R, big_a(R, k.from_int(x), n), big_a(R, k.from_int(y), n));
                CHECK(mat_equal(R, lhs, rhs));
            }
    }
    // random over F_{p^d} and over series
    FqField k(5, 2, FqField::find_irreducible(5, 2));
    FqRing R{&k};
    LaurentRing LR{&k};
    std::mt19937_64 gen(31);
    for (int it = 0; it < 100; ++it) {
        FqElem x = k.element_at(static_cast<long long>(gen() % k.order()));
        FqElem y = k.element_at(static_cast<long long>(gen() % k.order()));
        CHECK(mat_equal(R, big_a(R, x + y, 4),
                        mat_mul(R, big_a(R, x, 4), big_a(R, y, 4))));
        // inverse law
        CHECK(mat_equal(R, mat_mul(R, big_a(R, x, 4), big_a(R, -x, 4)), mat_identity(R, 4)));

        LaurentSeries f = mono(k, 1, -static_cast<long long>(1 + gen() % 6)) +
                          LaurentSeries::monomial(k.element_at(static_cast<long long>(gen() % k.order())),
                                                  -static_cast<long long>(1 + gen() % 6));
        LaurentSeries h = mono(k, 2, -static_cast<long long>(1 + gen() % 6));
        CHECK(mat_equal(LR, big_a(LR, f + h, 4),
                        mat_mul(LR, big_a(LR, f, 4), big_a(LR, h, 4))));
    }
}

TEST_CASE("group multiplication and inversion") {
    FqField k(3, 2, {2, 2, 1});
    FqRing R{&k};
    std::mt19937_64 gen(37);
    auto rand_elem = [&]() {
        UnipotentElem<FqRing> u{k.element_at(static_cast<long long>(gen() % k.order())), {}};
        for (int i = 0; i < 3; ++i)
            u.y.push_back(k.element_at(static_cast<long long>(gen() % k.order())));
        return u;
    };
    UnipotentElem<FqRing> id = unip_identity(R, 3);
    for (int it = 0; it < 200; ++it) {
        UnipotentElem<FqRing> u = rand_elem();
        UnipotentElem<FqRing> prod = unip_mul(R, u, id);
        CHECK(prod.x == u.x);
        CHECK(prod.y == u.y);
        UnipotentElem<FqRing> inv = unip_mul(R, u, unip_inv(R, u));
        CHECK(lcs_level(R, inv) == 3);
        // x-components add
        UnipotentElem<FqRing> w = rand_elem();
        CHECK(unip_mul(R, u, w).x == u.x + w.x);
        // associativity spot check
        UnipotentElem<FqRing> v = rand_elem();
        UnipotentElem<FqRing> l = unip_mul(R, unip_mul(R, u, w), v);
        UnipotentElem<FqRing> r = unip_mul(R, u, unip_mul(R, w, v));
        CHECK(l.x == r.x);
        CHECK(l.y == r.y);
    }
}

TEST_CASE("central series membership") {
    FqField k(3, 1, {1, 1});
    FqRing R{&k};
    UnipotentElem<FqRing> id = unip_identity(R, 3);
    CHECK(lcs_level(R, id) == 3);
    UnipotentElem<FqRing> u{k.one(), {k.zero(), k.zero(), k.zero()}};
    CHECK(lcs_level(R, u) == 0);
    // only the top coordinate set: two central steps deep
    UnipotentElem<FqRing> w{k.zero(), {k.zero(), k.zero(), k.one()}};
    CHECK(lcs_level(R, w) == 2);

    // commutators go one step deeper
    std::mt19937_64 gen(41);
    auto rand_elem = [&]() {
        UnipotentElem<FqRing> e{k.element_at(static_cast<long long>(gen() % 3)), {}};
        for (int i = 0; i < 3; ++i)
            e.y.push_back(k.element_at(static_cast<long long>(gen() % 3)));
        return e;
    };
    for (int it = 0; it < 300; ++it) {
        UnipotentElem<FqRing> u1 = rand_elem();
        UnipotentElem<FqRing> w1 = rand_elem();
        UnipotentElem<FqRing> comm =
            unip_mul(R, unip_mul(R, u1, w1), unip_inv(R, unip_mul(R, w1, u1)));
        int lu = lcs_level(R, w1);
        CHECK(lcs_level(R, comm) >= std::min(3, lu + 1));
    }
}

TEST_CASE("binomial vector identity") {
    FqField k(3, 2, {2, 2, 1});
    FqRing R{&k};
    CHECK_THROWS_AS((void)binom_vector(R, k.one(), 3), Error); // n > p-1

    // v(0) = 0 and the n = 2 shape (x, binom(x, 2)) bottom-up
    auto v0 = binom_vector(R, k.zero(), 2);
    CHECK(v0[0].is_zero());
    CHECK(v0[1].is_zero());
    FqElem g = k.gen();
    auto vg = binom_vector(R, g, 2);
    CHECK(vg[0] == g);
    CHECK(vg[1] == binom_poly(R, g, 2));

    // v(x+y) = v(x) + big_a(x) v(y), and the Frobenius twist of it
    std::mt19937_64 gen(43);
    for (int it = 0; it < 200; ++it) {
        FqElem x = k.element_at(static_cast<long long>(gen() % k.order()));
        FqElem y = k.element_at(static_cast<long long>(gen() % k.order()));
        auto vx = binom_vector(R, x, 2);
        auto vy = binom_vector(R, y, 2);
        auto vxy = binom_vector(R, x + y, 2);
        auto rhs = mat_vec(R, big_a(R, x, 2), vy);
        for (int i = 0; i < 2; ++i) rhs[static_cast<size_t>(i)] = rhs[static_cast<size_t>(i)] + vx[static_cast<size_t>(i)];
        CHECK(vxy == rhs);

        // F(v(x)) - big_a(x^p - x) v(x) = v(x^p - x)
        FqElem px = x.frobenius() - x;
        std::vector<FqElem> fv{vx[0].frobenius(), vx[1].frobenius()};
        auto tw = mat_vec(R, big_a(R, px, 2), vx);
        std::vector<FqElem> lhs{fv[0] - tw[0], fv[1] - tw[1]};
        CHECK(lhs == binom_vector(R, px, 2));
    }
}

TEST_CASE("alternating sum-product identity") {
    // sum_{i=1..j} (-1)^{i-1} y / ((j-i)! (i-1)! (x + (i-1) y))
    //   = prod_{i=1..j} y / (x + (i-1) y), whenever no denominator vanishes
    for (int p : {3, 5}) {
        FqField k(p, 1, FqField::find_irreducible(p, 1));
        for (int j = 1; j <= p - 1; ++j) {
            for (int xi = 0; xi < p; ++xi) {
                for (int yi = 0; yi < p; ++yi) {
                    FqElem x = k.from_int(xi), y = k.from_int(yi);
                    bool ok = true;
                    for (int i = 1; i <= j; ++i)
                        if ((x + y * k.from_int(i - 1)).is_zero()) ok = false;
                    if (!ok) continue;
                    FqElem sum = k.zero();
                    long long fact = 1;
                    std::vector<long long> factorials{1};
                    for (int t = 1; t <= j; ++t) {
                        fact = fact * t % p;
                        factorials.push_back(fact);
                    }
                    for (int i = 1; i <= j; ++i) {
                        FqElem denom = k.from_int(factorials[static_cast<size_t>(j - i)]) *
                                       k.from_int(factorials[static_cast<size_t>(i - 1)]) *
                                       (x + y * k.from_int(i - 1));
                        FqElem term = y / denom;
                        if (i % 2 == 0) term = -term;
                        sum = sum + term;
                    }
                    FqElem prod = k.one();
                    for (int i = 1; i <= j; ++i) prod = prod * (y / (x + y * k.from_int(i - 1)));
                    CHECK(sum == prod);
                }
            }
        }
    }
}
