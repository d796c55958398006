#include "doctest.h"

#include <random>

#include "ramjump/herbrand.hpp"

using namespace ramjump;

TEST_CASE("degree-p psi evaluation") {
    PLFunction psi = PLFunction::artin_schreier_psi(3, 4);
    CHECK(psi.eval(Rat(13, 3)) == Rat(5)); // 3*(13/3) - 8
    CHECK(psi.eval(Rat(2)) == Rat(2));     // below the breakpoint
    CHECK(psi.eval(Rat(4)) == Rat(4));     // at the breakpoint
    CHECK(PLFunction::artin_schreier_psi(2, 1).eval(Rat(3)) == Rat(5));

    CHECK_THROWS_AS((void)PLFunction::artin_schreier_psi(3, 0), Error);
    CHECK_THROWS_AS((void)PLFunction::artin_schreier_psi(3, 6), Error);
    CHECK_THROWS_AS((void)psi.eval(Rat(-2)), Error);
}

TEST_CASE("inverse and composition") {
    PLFunction psi34 = PLFunction::artin_schreier_psi(3, 4);
    CHECK(psi34.inverse().eval(Rat(5)) == Rat(13, 3));

    PLFunction psi35 = PLFunction::artin_schreier_psi(3, 5);
    PLFunction comp = compose(psi35, psi34);
    // stepwise: inner 6 -> 10, outer 10 -> 20
    CHECK(psi34.eval(Rat(6)) == Rat(10));
    CHECK(psi35.eval(Rat(10)) == Rat(20));
    CHECK(comp.eval(Rat(6)) == Rat(20));

    CHECK(compose(psi34, PLFunction::identity()) == psi34);
    CHECK(compose(PLFunction::identity(), psi34) == psi34);
}

TEST_CASE("inverse round trips at random rationals") {
    std::mt19937_64 gen(23);
    std::vector<PLFunction> fs;
    fs.push_back(PLFunction::artin_schreier_psi(3, 4));
    fs.push_back(PLFunction::artin_schreier_psi(5, 7));
    fs.push_back(compose(PLFunction::artin_schreier_psi(3, 13),
                         PLFunction::artin_schreier_psi(3, 1)));
    fs.push_back(compose(PLFunction::artin_schreier_psi(5, 11),
                         compose(PLFunction::artin_schreier_psi(5, 7),
                                 PLFunction::artin_schreier_psi(5, 2))));
    for (const auto& f : fs) {
        PLFunction finv = f.inverse();
        for (int it = 0; it < 100; ++it) {
            long long num = static_cast<long long>(gen() % 600) - 3;
            long long den = 1 + static_cast<long long>(gen() % 25);
            Rat x(num, den);
            if (x < Rat(-1)) x = -x;
            CHECK(finv.eval(f.eval(x)) == x);
            CHECK(f.eval(finv.eval(x)) == x);
        }
    }
}

TEST_CASE("composites of psi maps are convex increasing and fix 0") {
    std::vector<std::pair<int, long long>> stages{{3, 1}, {3, 4}, {3, 13}};
    PLFunction f = PLFunction::identity();
    for (auto [p, m] : stages) {
        f = compose(PLFunction::artin_schreier_psi(p, m), f);
        CHECK(f.strictly_increasing());
        CHECK(f.convex());
        CHECK(f.fixes_zero());
        CHECK(f.eval(Rat(-1)) == Rat(-1));
    }
}

TEST_CASE("breakpoints of a composite") {
    // breakpoints of psi_outer o psi_inner are {m_inner} union
    // psi_inner^{-1}(breakpoints of psi_outer)
    PLFunction inner = PLFunction::artin_schreier_psi(3, 4);
    PLFunction outer = PLFunction::artin_schreier_psi(3, 13);
    PLFunction comp = compose(outer, inner);
    REQUIRE(comp.breakpoints().size() == 2);
    CHECK(comp.breakpoints()[0].first == Rat(4));
    CHECK(comp.breakpoints()[1].first == inner.inverse().eval(Rat(13)));
    // slopes multiply through the chain
    CHECK(comp.slopes() == std::vector<Rat>{Rat(1), Rat(3), Rat(9)});

    // collinear breakpoints coalesce: composing with identity adds nothing
    CHECK(compose(comp, PLFunction::identity()).breakpoints().size() == 2);
}
