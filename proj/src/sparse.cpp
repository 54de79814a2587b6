#include "mpd/sparse.hpp"

#include <algorithm>

namespace mpd {

void axpy(const Fp& fp, SparseVec& y, uint32_t c, const SparseVec& x) {
    if (c == 0 || x.empty()) return;
    SparseVec out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() && j < x.size()) {
        if (y[i].row < x[j].row) {
            out.push_back(y[i++]);
        } else if (y[i].row > x[j].row) {
            out.push_back({x[j].row, fp.mul(c, x[j].val)});
            ++j;
        } else {
            uint32_t v = fp.add(y[i].val, fp.mul(c, x[j].val));
            if (v) out.push_back({y[i].row, v});
            ++i, ++j;
        }
    }
    for (; i < y.size(); ++i) out.push_back(y[i]);
    for (; j < x.size(); ++j) out.push_back({x[j].row, fp.mul(c, x[j].val)});
    y = std::move(out);
}

uint32_t sparse_entry(const SparseVec& v, int row) {
    auto it = std::lower_bound(v.begin(), v.end(), row,
                               [](const Entry& e, int r) { return e.row < r; });
    return (it != v.end() && it->row == row) ? it->val : 0;
}

SparseVec scaled(const Fp& fp, const SparseVec& v, uint32_t c) {
    SparseVec out;
    if (c == 0) return out;
    out.reserve(v.size());
    for (const Entry& e : v) out.push_back({e.row, fp.mul(c, e.val)});
    return out;
}

}  // namespace mpd
