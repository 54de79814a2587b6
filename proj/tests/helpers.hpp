#pragma once

#include "mpd/complex.hpp"

namespace mpd::testutil {

// Staircase complex with one-dimensional homology k at (d+1, d+1) in each
// degree d below the top: C_{-1} = F(0,0), C_0 = F(0,1) + F(1,0),
// C_d = F(d,d+1) + F(d+1,d), with d_0 = (1 1) and
// d_d = [[(-1)^d, 1], [1, (-1)^d]].
inline FreeComplex staircase(int hi, uint32_t p) {
    Fp fp(p);
    std::vector<std::vector<Grade>> gens;
    gens.push_back({Grade{0, 0}});
    for (int d = 0; d <= hi; ++d) gens.push_back({Grade{d, d + 1}, Grade{d + 1, d}});
    std::vector<GradedMatrix> diffs;
    {
        GradedMatrix d0(p, gens[0], gens[1]);
        d0.set_entry(0, 0, 1);
        d0.set_entry(0, 1, 1);
        diffs.push_back(std::move(d0));
    }
    for (int d = 1; d <= hi; ++d) {
        GradedMatrix m(p, gens[static_cast<size_t>(d)], gens[static_cast<size_t>(d + 1)]);
        int64_t s = (d % 2 == 0) ? 1 : -1;
        m.set_entry(0, 0, s);
        m.set_entry(1, 0, 1);
        m.set_entry(0, 1, 1);
        m.set_entry(1, 1, s);
        diffs.push_back(std::move(m));
    }
    FreeComplex c(2, p, -1, std::move(gens), std::move(diffs));
    c.validate();
    return c;
}

// The running bifiltration example: triangle with staggered edge grades and
// a late 2-cell at (2,2).
inline Multifiltration fig_filtration() {
    Multifiltration k;
    k.params = 2;
    k.simplices = {
        {{0}, Grade{0, 0}},
        {{1}, Grade{1, 0}},
        {{2}, Grade{0, 1}},
        {{0, 1}, Grade{1, 0}},
        {{0, 2}, Grade{0, 1}},
        {{1, 2}, Grade{1, 1}},
        {{0, 1, 2}, Grade{2, 2}},
    };
    return k;
}

}  // namespace mpd::testutil
