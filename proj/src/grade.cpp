#include "mpd/grade.hpp"

#include <algorithm>
#include <sstream>

namespace mpd {

std::string Grade::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

void check_same_length(const Grade& a, const Grade& b) {
    if (a.size() != b.size())
        throw DimensionError("grade length mismatch: " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
}

bool grade_leq(const Grade& a, const Grade& b) {
    check_same_length(a, b);
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool grade_lt(const Grade& a, const Grade& b) { return grade_leq(a, b) && a != b; }

Grade join(const Grade& a, const Grade& b) {
    check_same_length(a, b);
    Grade r = a;
    for (int i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Grade meet(const Grade& a, const Grade& b) {
    check_same_length(a, b);
    Grade r = a;
    for (int i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

Grade join_masked(const Grade& a, const Grade& b, const std::vector<int>& mask) {
    check_same_length(a, b);
    Grade r = a;
    for (int i : mask) {
        if (i < 1 || i > a.size())
            throw DimensionError("mask index " + std::to_string(i) + " out of range [1," +
                                 std::to_string(a.size()) + "]");
        r[i - 1] = std::max(a[i - 1], b[i - 1]);
    }
    return r;
}

Grade operator+(const Grade& a, const Grade& b) {
    check_same_length(a, b);
    Grade r = a;
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Grade operator-(const Grade& a, const Grade& b) {
    check_same_length(a, b);
    Grade r = a;
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Grade operator-(const Grade& a) {
    Grade r = a;
    for (int i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool ExtendedGrade::is_finite() const {
    return std::none_of(c.begin(), c.end(),
                        [](int64_t v) { return v == kMinusInf || v == kPlusInf; });
}

Grade ExtendedGrade::to_grade() const {
    if (!is_finite()) throw DomainError("infinite grade entry where a finite grade is required");
    std::vector<int32_t> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = static_cast<int32_t>(c[i]);
    return Grade(std::move(r));
}

std::string ExtendedGrade::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        if (c[i] == kMinusInf)
            os << "-inf";
        else if (c[i] == kPlusInf)
            os << "inf";
        else
            os << c[i];
    }
    os << ')';
    return os.str();
}

bool grade_leq(const ExtendedGrade& a, const ExtendedGrade& b) {
    if (a.size() != b.size()) throw DimensionError("extended grade length mismatch");
    for (int i = 0; i < a.size(); ++i)
        if (a.c[static_cast<size_t>(i)] > b.c[static_cast<size_t>(i)]) return false;
    return true;
}

}  // namespace mpd
