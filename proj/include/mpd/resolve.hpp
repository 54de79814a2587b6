#pragma once

#include <limits>

#include "mpd/betti.hpp"
#include "mpd/complex.hpp"

namespace mpd {

// Graded presentation of a persistence module: rows = generators,
// columns = relations.
struct Presentation {
    int params = 1;
    GradedMatrix matrix;

    bool operator==(const Presentation&) const = default;
};

// Sentinel returned by resolution_length for the zero complex (-infinity).
inline constexpr int kLengthOfZero = std::numeric_limits<int>::min();

// Repeatedly eliminate invertible pivots (nonzero entries with
// row_grade == col_grade, smallest (row, column) first) by the Gaussian
// change of basis, deleting the paired generators, until every differential
// is minimal.  Homotopy equivalence: the homology is unchanged.
FreeComplex minimize(const FreeComplex& c);

// A free basis of ker M as a persistence module: a valid matrix K with
// row_grades = M.col_grades such that compose(M, K) = 0 and, at every grade
// z, the columns of K with grade <= z are independent and span ker(M at z).
// Supported for at most two parameters (UnsupportedParameterError beyond).
GradedMatrix kernel_basis(const GradedMatrix& m);

// Minimal presentation of H_d(C): generators a kernel basis of the d-th
// differential, relations the columns of the (d+1)-st differential expressed
// in that basis, then minimized.  At most two parameters.
Presentation minimal_presentation(const FreeComplex& c, int d);

// Minimal free resolution of coker P for minimal P: degree 0 and 1 from P
// itself, degree 2 a kernel basis of P, then minimized.  Length at most the
// parameter count.  At most two parameters.
FreeComplex free_resolution(const Presentation& p);

// For a free resolution G of length exactly N concentrated in degrees
// [0, N]: the complex with degree-k part dual to G_{N-k} and k-th
// differential transpose(G.diff(N-k+1)) with grades sent to 1 - grade.
// An involution; resolves the dual module.  LengthError if the length
// differs from N.
FreeComplex dual_resolution(const FreeComplex& g);

// Minimal free resolution of H_d(C) via minimal_presentation +
// free_resolution.  At most two parameters.
FreeComplex mfr_direct(const FreeComplex& c, int d);

// Minimal free resolution of H_d(C) computed on the dual side: cone C at
// the default threshold, pass to the dual complex, resolve the dual module
// directly, dualize the resolution back and restrict below the threshold.
// At most two parameters.
FreeComplex mfr_cohomological(const FreeComplex& c, int d);

// Maximal degree with nonzero rank; kLengthOfZero for the zero complex.
int resolution_length(const FreeComplex& g);

// Graded ranks per homological degree.
BettiTable betti_table(const FreeComplex& g);

}  // namespace mpd
