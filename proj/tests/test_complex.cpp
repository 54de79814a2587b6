#include <doctest.h>

#include "mpd/complex.hpp"

using namespace mpd;

namespace {

// Two vertices joined by an edge, entering at staggered grades.
Multifiltration segment() {
    Multifiltration k;
    k.params = 2;
    k.simplices = {
        {{0}, Grade{0, 0}},
        {{1}, Grade{1, 0}},
        {{0, 1}, Grade{1, 1}},
    };
    return k;
}

// Triangle boundary plus the filled triangle.
Multifiltration triangle() {
    Multifiltration k;
    k.params = 2;
    k.simplices = {
        {{0}, Grade{0, 0}},
        {{1}, Grade{0, 0}},
        {{2}, Grade{0, 0}},
        {{0, 1}, Grade{1, 0}},
        {{0, 2}, Grade{0, 1}},
        {{1, 2}, Grade{1, 1}},
        {{0, 1, 2}, Grade{2, 2}},
    };
    return k;
}

}  // namespace

TEST_CASE("multifiltration validation") {
    Multifiltration k = segment();
    CHECK_NOTHROW(k.validate());

    Multifiltration missing = k;
    missing.simplices.erase(missing.simplices.begin() + 1);
    CHECK_THROWS_AS(missing.validate(), FiltrationError);

    Multifiltration late = k;
    late.simplices[2].grade = Grade{0, 0};  // edge before vertex 1
    CHECK_THROWS_AS(late.validate(), FiltrationError);

    Multifiltration dup = k;
    dup.simplices.push_back({{0}, Grade{2, 2}});
    CHECK_THROWS_AS(dup.validate(), FiltrationError);

    Multifiltration unsorted = k;
    unsorted.simplices[2].vertices = {1, 0};
    CHECK_THROWS_AS(unsorted.validate(), FiltrationError);
}

TEST_CASE("chain complex of a segment") {
    FreeComplex c = chain_complex(segment(), 2, false);
    CHECK(c.lo() == 0);
    CHECK(c.hi() == 1);
    CHECK(c.rank(0) == 2);
    CHECK(c.rank(1) == 1);
    CHECK(c.gens(0) == std::vector<Grade>{Grade{0, 0}, Grade{1, 0}});
    CHECK(c.gens(1) == std::vector<Grade>{Grade{1, 1}});
    GradedMatrix d1 = c.diff(1);
    // boundary of [0,1] is [1] - [0]
    CHECK(d1.entry(0, 0) == 1);  // -1 = 1 mod 2
    CHECK(d1.entry(1, 0) == 1);
    CHECK(c.diff(0).num_rows() == 0);
    CHECK(c.diff(2).num_cols() == 0);
    CHECK(c.total_rank() == 3);

    FreeComplex c3 = chain_complex(segment(), 3, false);
    CHECK(c3.diff(1).entry(0, 0) == 2);
    CHECK(c3.diff(1).entry(1, 0) == 1);
}

TEST_CASE("reduced chain complex") {
    FreeComplex c = chain_complex(segment(), 3, true);
    CHECK(c.lo() == -1);
    CHECK(c.rank(-1) == 1);
    CHECK(c.gens(-1)[0] == Grade{0, 0});  // meet of vertex grades
    GradedMatrix d0 = c.diff(0);
    CHECK(d0.entry(0, 0) == 1);
    CHECK(d0.entry(0, 1) == 1);
    CHECK_NOTHROW(c.validate());

    // No vertex at the meet: vertices at (0,1) and (1,0), meet (0,0).
    Multifiltration k;
    k.params = 2;
    k.simplices = {{{0}, Grade{0, 1}}, {{1}, Grade{1, 0}}};
    CHECK_THROWS_AS(chain_complex(k, 3, true), AugmentationError);
    CHECK_NOTHROW(chain_complex(k, 3, false));
}

TEST_CASE("chain complex of a filled triangle satisfies boundary squared zero") {
    for (uint32_t p : {2u, 3u, 5u}) {
        FreeComplex c = chain_complex(triangle(), p, false);
        CHECK(c.hi() == 2);
        CHECK_NOTHROW(c.validate());
        CHECK(GradedMatrix::compose(c.diff(1), c.diff(2)).is_zero());
        FreeComplex r = chain_complex(triangle(), p, true);
        CHECK_NOTHROW(r.validate());
    }
}

TEST_CASE("validate rejects broken complexes") {
    FreeComplex c = chain_complex(triangle(), 5, false);
    // break boundary squared = 0
    std::vector<std::vector<Grade>> gens;
    std::vector<GradedMatrix> diffs;
    for (int d = 0; d <= 2; ++d) gens.push_back(c.gens(d));
    for (int d = 1; d <= 2; ++d) diffs.push_back(c.diff(d));
    diffs[1].set_entry(0, 0, diffs[1].entry(0, 0) + 1);
    FreeComplex broken(2, 5, 0, gens, diffs);
    CHECK_THROWS_AS(broken.validate(), DomainError);
}

TEST_CASE("dagger") {
    FreeComplex c = chain_complex(segment(), 3, false);
    FreeComplex d = dagger(c);
    CHECK(d.lo() == -1);
    CHECK(d.hi() == 0);
    // degree 0 gens are 1 - z for the vertices
    CHECK(d.gens(0) == std::vector<Grade>{Grade{1, 1}, Grade{0, 1}});
    CHECK(d.gens(-1) == std::vector<Grade>{Grade{0, 0}});
    GradedMatrix d0 = d.diff(0);
    CHECK(d0.entry(0, 0) == 2);
    CHECK(d0.entry(0, 1) == 1);
    CHECK_NOTHROW(d.validate());
}

TEST_CASE("dagger is an involution") {
    for (uint32_t p : {2u, 5u}) {
        FreeComplex c = chain_complex(triangle(), p, true);
        CHECK(dagger(dagger(c)) == c);
        FreeComplex k = koszul(3, p);
        CHECK(dagger(dagger(k)) == k);
    }
}

TEST_CASE("shifts") {
    FreeComplex c = chain_complex(segment(), 2, false);
    FreeComplex s = shift_homological(c, 2);
    CHECK(s.lo() == -2);
    CHECK(s.hi() == -1);
    CHECK(s.gens(-2) == c.gens(0));
    CHECK(s.diff(-1) == c.diff(1));
    CHECK(shift_homological(s, -2) == c);

    FreeComplex g = shift_graded(c, Grade{1, 1});
    CHECK(g.gens(0)[0] == Grade{-1, -1});
    CHECK(g.gens(1)[0] == Grade{0, 0});
    CHECK_NOTHROW(g.validate());
    CHECK(shift_graded(g, Grade{-1, -1}) == c);
}

TEST_CASE("koszul complexes") {
    FreeComplex k1 = koszul(1, 2);
    CHECK(k1.rank(0) == 1);
    CHECK(k1.rank(1) == 1);
    CHECK(k1.gens(1)[0] == Grade{1});
    CHECK(k1.diff(1).entry(0, 0) == 1);

    FreeComplex k2 = koszul(2, 5);
    CHECK(k2.gens(1) == std::vector<Grade>{Grade{1, 0}, Grade{0, 1}});
    CHECK(k2.gens(2) == std::vector<Grade>{Grade{1, 1}});
    // d1 = (1 1), d2 = (1, -1)^T
    CHECK(k2.diff(1).entry(0, 0) == 1);
    CHECK(k2.diff(1).entry(0, 1) == 1);
    CHECK(k2.diff(2).entry(0, 0) == 1);
    CHECK(k2.diff(2).entry(1, 0) == 4);

    for (int n = 1; n <= 5; ++n) {
        for (uint32_t p : {2u, 3u, 7u}) {
            FreeComplex k = koszul(n, p);
            CHECK_NOTHROW(k.validate());
            int binom = 1;
            for (int d = 0; d <= n; ++d) {
                CHECK(k.rank(d) == binom);
                binom = binom * (n - d) / (d + 1);
            }
            CHECK(k.diff(1).is_minimal());
            for (int d = 1; d <= n; ++d) CHECK(k.diff(d).is_minimal());
        }
    }
}
