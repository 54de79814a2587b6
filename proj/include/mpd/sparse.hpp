#pragma once

#include <cstdint>
#include <vector>

#include "mpd/field.hpp"

namespace mpd {

// One nonzero entry of a sparse column.
struct Entry {
    int row;
    uint32_t val;  // residue in [1, p)

    bool operator==(const Entry&) const = default;
};

// Sparse vector: entries sorted by ascending row, values nonzero.
using SparseVec = std::vector<Entry>;

// y += c * x over F_p.
void axpy(const Fp& fp, SparseVec& y, uint32_t c, const SparseVec& x);

// Largest row index with a nonzero entry, or -1 for the zero vector.
inline int pivot_row(const SparseVec& v) { return v.empty() ? -1 : v.back().row; }

uint32_t sparse_entry(const SparseVec& v, int row);

SparseVec scaled(const Fp& fp, const SparseVec& v, uint32_t c);

}  // namespace mpd
