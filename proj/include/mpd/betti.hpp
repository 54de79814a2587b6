#pragma once

#include <map>
#include <vector>

#include "mpd/grade.hpp"

namespace mpd {

// Multiset of generator grades per homological degree (the graded ranks of
// a minimal free resolution).
struct BettiTable {
    std::map<int, std::vector<Grade>> rows;

    void add(int d, const Grade& g) { rows[d].push_back(g); }
    void normalize();  // sort each multiset, drop empty degrees

    bool operator==(const BettiTable&) const = default;
};

}  // namespace mpd
