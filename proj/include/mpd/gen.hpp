#pragma once

#include <random>

#include "mpd/complex.hpp"

namespace mpd {

// Degree-wise direct sum; block-diagonal differentials.
FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b);

// Random valid free complex with boundary-squared zero by construction:
// a direct sum of lone generators, two-term interval pieces and shifted
// Koszul complexes, mixed by random valid changes of basis.  Total rank at
// most max_total_rank, generator grades within [0, gmax]^n.
FreeComplex random_complex(std::mt19937_64& rng, int n, uint32_t p, int max_total_rank,
                           int32_t gmax);

// Random one-critical simplicial filtration (n = 1 or 2) with at most
// max_simplices simplices and grades in [0, gmax]^n; dimension at most 2.
// One vertex sits at the meet of all vertex grades, so the reduced chain
// complex always exists.
Multifiltration random_filtration(std::mt19937_64& rng, int n, int max_simplices, int32_t gmax);

}  // namespace mpd
