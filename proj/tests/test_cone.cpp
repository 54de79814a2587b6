#include <doctest.h>

#include "helpers.hpp"
#include "mpd/cone.hpp"

using namespace mpd;
using mpd::testutil::fig_filtration;
using mpd::testutil::staircase;

TEST_CASE("default zeta") {
    FreeComplex c(2, 2, 0, {{Grade{0, 3}, Grade{2, 1}}}, {});
    CHECK(default_zeta(c).zeta == Grade{2, 3});
    CHECK(default_zeta(koszul(2, 2)).zeta == Grade{1, 1});
    FreeComplex fig = chain_complex(fig_filtration(), 2, true);
    CHECK(default_zeta(fig).zeta == Grade{2, 2});
    CHECK_THROWS_AS(default_zeta(FreeComplex(2, 2)), DomainError);
}

TEST_CASE("cone rank count and generator grades") {
    for (uint32_t p : {2u, 3u, 5u}) {
        FreeComplex c = staircase(3, p);
        ConeThreshold t = default_zeta(c);
        FreeComplex hat = cone_complex(c, t);
        CHECK_NOTHROW(hat.validate());
        CHECK(hat.lo() == c.lo());
        CHECK(hat.hi() == c.hi() + 2);
        auto binom = [](int n, int k) {
            if (k < 0 || k > n) return 0;
            int b = 1;
            for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
            return b;
        };
        for (int d = hat.lo(); d <= hat.hi(); ++d) {
            int want = 0;
            for (int i = 0; i <= 2; ++i) want += binom(2, i) * c.rank(d - i);
            CHECK(hat.rank(d) == want);
        }
        // every generator grade is g joined with zeta+1 on some axes
        Grade bump = t.zeta + Grade::ones(2);
        for (int d = hat.lo(); d <= hat.hi(); ++d)
            for (const Grade& g : hat.gens(d))
                for (int i = 0; i < 2; ++i) CHECK((g[i] <= t.zeta[i] || g[i] == bump[i]));
    }
}

TEST_CASE("inadmissible threshold is rejected") {
    FreeComplex c = koszul(2, 2);
    CHECK_THROWS_AS(cone_complex(c, ConeThreshold{Grade{0, 0}}), DomainError);
    CHECK_THROWS_AS(cone_complex(c, ConeThreshold{Grade{1}}), DimensionError);
    // strictly larger thresholds are allowed
    CHECK_NOTHROW(cone_complex(c, ConeThreshold{Grade{5, 7}}));
}

TEST_CASE("restrict inverts the cone exactly") {
    for (uint32_t p : {2u, 3u}) {
        for (int n = 1; n <= 3; ++n) {
            FreeComplex c = koszul(n, p);
            ConeThreshold t = default_zeta(c);
            CHECK(restrict(cone_complex(c, t), t) == c);
        }
        FreeComplex s = staircase(3, p);
        ConeThreshold t = default_zeta(s);
        CHECK(restrict(cone_complex(s, t), t) == s);
        FreeComplex fig = chain_complex(fig_filtration(), p, true);
        ConeThreshold tf = default_zeta(fig);
        CHECK(restrict(cone_complex(fig, tf), tf) == fig);
        // also with a larger threshold
        ConeThreshold big{t.zeta + Grade::constant(2, 3)};
        CHECK(restrict(cone_complex(s, big), big) == s);
    }
}

TEST_CASE("restrict is the identity when all generators fit") {
    FreeComplex c = koszul(2, 3);
    CHECK(restrict(c, ConeThreshold{Grade{1, 1}}) == c);
    CHECK(restrict(c, ConeThreshold{Grade{9, 9}}) == c);
}

TEST_CASE("restriction of a valid complex stays valid") {
    FreeComplex c = staircase(4, 5);
    for (int32_t a = 0; a <= 4; ++a) {
        FreeComplex r = restrict(c, ConeThreshold{Grade{a, a}});
        CHECK_NOTHROW(r.validate());
    }
    // restricting everything away yields the empty complex
    FreeComplex none = restrict(c, ConeThreshold{Grade{-1, -1}});
    CHECK(none.empty());
}

TEST_CASE("cone is eventually acyclic and agrees with C below zeta") {
    for (uint32_t p : {2u, 3u}) {
        FreeComplex c = chain_complex(fig_filtration(), p, true);
        ConeThreshold t = default_zeta(c);
        FreeComplex hat = cone_complex(c, t);
        GridBox box = default_box(hat, t);
        HilbertFunction hhat = hilbert_homology_all(hat, box);
        HilbertFunction hc = hilbert_homology_all(c, box);
        for (int64_t i = 0; i < box.size(); ++i) {
            Grade z = box.at(i);
            for (int d = hat.lo(); d <= hat.hi(); ++d) {
                if (!grade_leq(z, t.zeta)) {
                    CHECK(hhat.at(d, z) == 0);
                } else {
                    CHECK(hhat.at(d, z) == hc.at(d, z));
                }
            }
        }
    }
}

TEST_CASE("default box spans the activity window") {
    FreeComplex c = staircase(2, 2);
    ConeThreshold t = default_zeta(c);
    GridBox box = default_box(c, t);
    CHECK(box.lo == Grade{-1, -1});
    CHECK(box.hi == t.zeta + Grade{2, 2});
}

TEST_CASE("betti table restriction") {
    BettiTable b;
    b.add(0, Grade{0, 0});
    b.add(0, Grade{3, 0});
    b.add(1, Grade{1, 1});
    BettiTable r = restrict(b, ConeThreshold{Grade{2, 2}});
    BettiTable want;
    want.add(0, Grade{0, 0});
    want.add(1, Grade{1, 1});
    want.normalize();
    CHECK(r == want);
}
