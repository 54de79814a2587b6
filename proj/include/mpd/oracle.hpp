#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "mpd/complex.hpp"

namespace mpd {

// A finite product of integer intervals [lo_i, hi_i], iterated in
// lexicographic order (first coordinate slowest).
struct GridBox {
    Grade lo, hi;

    GridBox(Grade lo_, Grade hi_);

    int params() const { return lo.size(); }
    int64_t size() const;
    bool contains(const Grade& z) const;
    int64_t index(const Grade& z) const;  // position in lexicographic iteration
    Grade at(int64_t idx) const;
    GridBox negated() const { return GridBox(-hi, -lo); }

    bool operator==(const GridBox&) const = default;
};

// Dense matrix over F_p, row-major.  Oracle-internal; everything outside
// this module stays sparse.
struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<uint32_t> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    uint32_t& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
    uint32_t at(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }

    int rank(const Fp& fp) const;
    static DenseMatrix multiply(const Fp& fp, const DenseMatrix& x, const DenseMatrix& y);
    static DenseMatrix identity(int n);

    bool operator==(const DenseMatrix&) const = default;
};

// Grade-indexed dimensions over a box, per homological degree.
struct HilbertFunction {
    GridBox box;
    std::map<int, std::vector<int>> values;  // degree -> dims by box index

    explicit HilbertFunction(GridBox b) : box(std::move(b)) {}

    int at(int d, const Grade& z) const;

    bool operator==(const HilbertFunction&) const = default;
};

// A persistence module evaluated pointwise on a box: dimensions plus the
// structure maps along each coordinate step.
struct PointwiseModule {
    GridBox box;
    uint32_t p;
    std::vector<int> dims;                        // by box index
    std::vector<std::vector<DenseMatrix>> steps;  // steps[i][idx]: z -> z + e_i

    PointwiseModule(GridBox b, uint32_t p_);

    int dim(const Grade& z) const { return dims[static_cast<size_t>(box.index(z))]; }
    const DenseMatrix& step(const Grade& z, int i) const;

    // Asserts the commuting-square identity; throws DomainError.
    void validate() const;
};

struct Interval {
    static constexpr int64_t kInf = std::numeric_limits<int64_t>::max();

    int64_t b;
    int64_t d;  // kInf for unbounded

    bool bounded() const { return d != kInf; }
    auto operator<=>(const Interval&) const = default;
};

// Multiset of intervals [b, d), b < d.
struct Barcode {
    std::vector<Interval> intervals;

    void add(int64_t b, int64_t d, int mult = 1);
    void normalize();  // sort
    int dim_at(int64_t z) const;

    bool operator==(const Barcode&) const = default;
};

// rank of (m at z) for every z in the box, where "at z" keeps the columns
// (and hence, for valid m, all relevant rows) of grade <= z.
std::vector<int> rank_grid(const GradedMatrix& m, const GridBox& box);

// number of grades in gs that are <= z, for every z in the box.
std::vector<int> count_grid(const std::vector<Grade>& gs, const GridBox& box);

// dim H_d(C)_z = #{g in gens[d] : g <= z} - rank(d_d at z) - rank(d_{d+1} at z).
HilbertFunction hilbert_homology(const FreeComplex& c, const GridBox& box, int d);

// All degrees lo..hi at once.
HilbertFunction hilbert_homology_all(const FreeComplex& c, const GridBox& box);

// Explicit pointwise homology with induced structure maps; deterministic
// given generator order.
PointwiseModule homology_functor(const FreeComplex& c, const GridBox& box, int d);

// Graded Betti numbers via Koszul homology: multiplicity of z in beta_d is
// dim H_d of the complex with terms directsum_{|S|=d} P_{z-e_S} and signed
// structure maps of P.  The cube {z - e_S} must lie in P.box.
std::map<int, int> koszul_betti(const PointwiseModule& p, const Grade& z);

// Barcode of H_d(C) for N = 1 via column reduction in grade order.
Barcode barcode_1d(const FreeComplex& c, int d);

// Barcode of the relative cohomology H^q of (union of K, K) as a persistence
// module, via pointwise ranks and interval inclusion-exclusion.  N = 1.
Barcode relative_barcode_1d(const Multifiltration& k, int q, uint32_t p = 2);

}  // namespace mpd
