#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mpd/field.hpp"
#include "mpd/grade.hpp"
#include "mpd/graded_matrix.hpp"

using namespace mpd;

TEST_CASE("grade partial order") {
    Grade a{1, 2}, b{2, 2}, c{0, 3};
    CHECK(grade_leq(a, b));
    CHECK(!grade_leq(b, a));
    CHECK(!grade_leq(a, c));
    CHECK(!grade_leq(c, a));
    CHECK(grade_leq(a, a));
    CHECK(grade_lt(a, b));
    CHECK(!grade_lt(a, a));
    CHECK(join(a, c) == Grade{1, 3});
    CHECK(meet(a, c) == Grade{0, 2});
    CHECK_THROWS_AS(grade_leq(a, Grade{1}), DimensionError);
}

TEST_CASE("grade partial order properties on a grid") {
    // reflexive, antisymmetric, transitive; join/meet are lub/glb
    std::vector<Grade> pts;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y) pts.push_back(Grade{x, y});
    for (const Grade& a : pts) {
        CHECK(grade_leq(a, a));
        for (const Grade& b : pts) {
            if (grade_leq(a, b) && grade_leq(b, a)) CHECK(a == b);
            CHECK(grade_leq(a, join(a, b)));
            CHECK(grade_leq(b, join(a, b)));
            CHECK(grade_leq(meet(a, b), a));
            CHECK(grade_leq(meet(a, b), b));
            for (const Grade& c : pts) {
                if (grade_leq(a, b) && grade_leq(b, c)) CHECK(grade_leq(a, c));
                if (grade_leq(a, c) && grade_leq(b, c)) CHECK(grade_leq(join(a, b), c));
                if (grade_leq(c, a) && grade_leq(c, b)) CHECK(grade_leq(c, meet(a, b)));
            }
        }
    }
}

TEST_CASE("masked join") {
    Grade a{1, 5, 2}, b{4, 0, 7};
    CHECK(join_masked(a, b, {}) == a);
    CHECK(join_masked(a, b, {1, 3}) == Grade{4, 5, 7});
    CHECK(join_masked(a, b, {2}) == a);
    CHECK(join_masked(a, b, {1, 2, 3}) == join(a, b));
    CHECK_THROWS_AS(join_masked(a, b, {0}), DimensionError);
    CHECK_THROWS_AS(join_masked(a, b, {4}), DimensionError);
}

TEST_CASE("grade arithmetic and formatting") {
    Grade a{1, -2};
    CHECK(a + Grade{2, 2} == Grade{3, 0});
    CHECK(a - Grade{1, 1} == Grade{0, -3});
    CHECK(-a == Grade{-1, 2});
    CHECK(a.str() == "(1,-2)");
}

TEST_CASE("extended grades") {
    ExtendedGrade lo(std::vector<int64_t>{ExtendedGrade::kMinusInf, 3});
    ExtendedGrade hi(std::vector<int64_t>{5, ExtendedGrade::kPlusInf});
    CHECK(!lo.is_finite());
    CHECK(grade_leq(lo, hi));
    CHECK(!grade_leq(hi, lo));
    CHECK_THROWS_AS(lo.to_grade(), DomainError);
    ExtendedGrade f(std::vector<int64_t>{2, 3});
    CHECK(f.to_grade() == Grade{2, 3});
    CHECK(grade_leq(ExtendedGrade(Grade{1, 3}), f));
}

TEST_CASE("field axioms, exhaustive for small p") {
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        Fp f(p);
        for (uint32_t a = 0; a < p; ++a) {
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a) CHECK(f.mul(a, f.inv(a)) == 1);
            for (uint32_t b = 0; b < p; ++b) {
                CHECK(f.add(a, b) == (a + b) % p);
                CHECK(f.sub(a, b) == (a + p - b) % p);
                CHECK(f.mul(a, b) == a * b % p);
                for (uint32_t c = 0; c < p; ++c)
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            }
        }
        CHECK(f.from_int(-1) == p - 1);
        CHECK(f.from_int(static_cast<int64_t>(p) * 7) == 0);
    }
    CHECK_THROWS_AS(Fp(1), DomainError);
    CHECK_THROWS_AS(Fp(4), DomainError);
    CHECK_THROWS_AS(Fp(9), DomainError);
    CHECK(Fp::is_prime(2147483647));
}

TEST_CASE("sparse axpy") {
    Fp f(5);
    SparseVec y = {{0, 1}, {2, 3}};
    axpy(f, y, 2, {{1, 1}, {2, 1}});
    CHECK(y == SparseVec{{0, 1}, {1, 2}});  // 3 + 2*1 = 0 mod 5, dropped
}

TEST_CASE("sparse axpy drops cancelled entries") {
    Fp f(5);
    SparseVec y = {{0, 1}, {2, 3}};
    axpy(f, y, 1, {{2, 2}});
    CHECK(y == SparseVec{{0, 1}});
    CHECK(pivot_row(y) == 0);
    CHECK(pivot_row(SparseVec{}) == -1);
}

TEST_CASE("graded matrix basics") {
    GradedMatrix m(3, {Grade{0, 0}, Grade{1, 0}}, {Grade{1, 1}, Grade{1, 0}});
    CHECK(m.is_zero());
    m.set_entry(0, 0, 4);  // = 1 mod 3
    m.set_entry(1, 0, -1);
    m.set_entry(1, 1, 2);
    CHECK(m.entry(0, 0) == 1);
    CHECK(m.entry(1, 0) == 2);
    CHECK(m.entry(0, 1) == 0);
    CHECK(!m.is_zero());
    CHECK(m.is_valid());
    CHECK(!m.is_minimal());  // entry (1,1) has row grade == col grade
    m.set_entry(1, 1, 0);
    CHECK(m.is_minimal());
    m.set_entry(0, 1, 1);  // (0,0) <= (1,0) strictly
    CHECK(m.is_minimal());
    m.set_entry(1, 0, 0);
    m.set_entry(1, 1, 3);  // multiple of p clears
    CHECK(m.entry(1, 1) == 0);
}

TEST_CASE("validity detects grade violations") {
    GradedMatrix m(2, {Grade{2, 0}}, {Grade{1, 1}});
    m.set_entry(0, 0, 1);
    CHECK(!m.is_valid());
}

TEST_CASE("transpose negates and swaps grades") {
    GradedMatrix m(5, {Grade{0, 1}, Grade{1, 0}}, {Grade{2, 2}});
    m.set_entry(0, 0, 2);
    m.set_entry(1, 0, 3);
    GradedMatrix t = m.transpose();
    CHECK(t.num_rows() == 1);
    CHECK(t.num_cols() == 2);
    CHECK(t.row_grade(0) == Grade{-2, -2});
    CHECK(t.col_grade(0) == Grade{0, -1});
    CHECK(t.col_grade(1) == Grade{-1, 0});
    CHECK(t.entry(0, 0) == 2);
    CHECK(t.entry(0, 1) == 3);
    CHECK(t.is_valid());  // transpose of a valid matrix is valid
    CHECK(t.transpose() == m);
}

TEST_CASE("shift moves all grades down by z") {
    GradedMatrix m(2, {Grade{0, 1}}, {Grade{2, 2}});
    m.set_entry(0, 0, 1);
    GradedMatrix s = m.shifted(Grade{1, -1});
    CHECK(s.row_grade(0) == Grade{-1, 2});
    CHECK(s.col_grade(0) == Grade{1, 3});
    CHECK(s.entry(0, 0) == 1);
}

TEST_CASE("compose") {
    // a: F(1,1) -> F(0,0)^2, b: F(2,2) -> F(1,1)
    GradedMatrix a(7, {Grade{0, 0}, Grade{0, 0}}, {Grade{1, 1}});
    a.set_entry(0, 0, 2);
    a.set_entry(1, 0, 3);
    GradedMatrix b(7, {Grade{1, 1}}, {Grade{2, 2}});
    b.set_entry(0, 0, 4);
    GradedMatrix c = GradedMatrix::compose(a, b);
    CHECK(c.num_rows() == 2);
    CHECK(c.num_cols() == 1);
    CHECK(c.entry(0, 0) == 1);  // 2*4 = 8 = 1 mod 7
    CHECK(c.entry(1, 0) == 5);
    CHECK(c.is_valid());

    GradedMatrix bad(5, {Grade{1, 1}}, {Grade{2, 2}});
    CHECK_THROWS_AS(GradedMatrix::compose(a, bad), CompositionError);
    GradedMatrix mism(7, {Grade{0, 1}}, {Grade{2, 2}});
    CHECK_THROWS_AS(GradedMatrix::compose(a, mism), CompositionError);
}

TEST_CASE("compose is associative on random triples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        uint32_t p = (trial % 2) ? 2 : 5;
        auto rand_grades = [&](int n, int level) {
            std::vector<Grade> gs;
            for (int i = 0; i < n; ++i)
                gs.push_back(Grade{static_cast<int32_t>(level + rng() % 2),
                                   static_cast<int32_t>(level + rng() % 2)});
            return gs;
        };
        std::vector<Grade> g0 = rand_grades(3, 0), g1 = rand_grades(4, 2),
                           g2 = rand_grades(3, 4), g3 = rand_grades(2, 6);
        auto rand_mat = [&](const std::vector<Grade>& rg, const std::vector<Grade>& cg) {
            GradedMatrix m(p, rg, cg);
            for (int i = 0; i < m.num_rows(); ++i)
                for (int j = 0; j < m.num_cols(); ++j) m.set_entry(i, j, static_cast<int64_t>(rng() % p));
            return m;
        };
        GradedMatrix a = rand_mat(g0, g1), b = rand_mat(g1, g2), c = rand_mat(g2, g3);
        CHECK(GradedMatrix::compose(GradedMatrix::compose(a, b), c) ==
              GradedMatrix::compose(a, GradedMatrix::compose(b, c)));
        CHECK(GradedMatrix::compose(a, b).is_valid());
    }
}

TEST_CASE("identity") {
    std::vector<Grade> gs = {Grade{0, 1}, Grade{1, 0}};
    GradedMatrix id = GradedMatrix::identity(3, gs);
    CHECK(id.is_valid());
    CHECK(!id.is_minimal());
    GradedMatrix m(3, gs, {Grade{1, 1}});
    m.set_entry(0, 0, 1);
    m.set_entry(1, 0, 2);
    CHECK(GradedMatrix::compose(id, m) == m);
}
