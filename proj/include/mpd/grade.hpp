#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "mpd/errors.hpp"

namespace mpd {

// An element of Z^N with the product partial order.
struct Grade {
    std::vector<int32_t> c;

    Grade() = default;
    explicit Grade(std::vector<int32_t> coords) : c(std::move(coords)) {}
    Grade(std::initializer_list<int32_t> coords) : c(coords) {}

    static Grade zero(int n) { return Grade(std::vector<int32_t>(n, 0)); }
    static Grade ones(int n) { return Grade(std::vector<int32_t>(n, 1)); }
    static Grade constant(int n, int32_t v) { return Grade(std::vector<int32_t>(n, v)); }

    int size() const { return static_cast<int>(c.size()); }
    int32_t operator[](int i) const { return c[static_cast<size_t>(i)]; }
    int32_t& operator[](int i) { return c[static_cast<size_t>(i)]; }

    bool operator==(const Grade&) const = default;

    // Lexicographic; a total order used for canonical sorting only.
    bool operator<(const Grade& o) const { return c < o.c; }

    std::string str() const;
};

void check_same_length(const Grade& a, const Grade& b);

// Componentwise partial order a <= b.
bool grade_leq(const Grade& a, const Grade& b);

// Strict inequality in the poset: a <= b and a != b.
bool grade_lt(const Grade& a, const Grade& b);

Grade join(const Grade& a, const Grade& b);
Grade meet(const Grade& a, const Grade& b);

// (a v_S b)_i = max(a_i, b_i) for i in S, a_i otherwise.  Indices in S are
// 1-based positions into {1,...,N}.
Grade join_masked(const Grade& a, const Grade& b, const std::vector<int>& mask);

Grade operator+(const Grade& a, const Grade& b);
Grade operator-(const Grade& a, const Grade& b);
Grade operator-(const Grade& a);

// An element of (Z u {-inf,+inf})^N.  Arithmetic with infinite entries is
// not defined; only comparisons are.
struct ExtendedGrade {
    static constexpr int64_t kMinusInf = std::numeric_limits<int64_t>::min();
    static constexpr int64_t kPlusInf = std::numeric_limits<int64_t>::max();

    std::vector<int64_t> c;

    ExtendedGrade() = default;
    explicit ExtendedGrade(std::vector<int64_t> coords) : c(std::move(coords)) {}
    explicit ExtendedGrade(const Grade& g) : c(g.c.begin(), g.c.end()) {}

    int size() const { return static_cast<int>(c.size()); }
    bool is_finite() const;
    Grade to_grade() const;  // throws DomainError on infinite entries

    bool operator==(const ExtendedGrade&) const = default;
    std::string str() const;
};

bool grade_leq(const ExtendedGrade& a, const ExtendedGrade& b);

}  // namespace mpd
