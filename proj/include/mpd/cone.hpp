#pragma once

#include "mpd/betti.hpp"
#include "mpd/complex.hpp"
#include "mpd/oracle.hpp"

namespace mpd {

// Threshold for the eventually-acyclic replacement; admissible for C when
// it dominates every generator grade.
struct ConeThreshold {
    Grade zeta;

    bool operator==(const ConeThreshold&) const = default;
};

// Componentwise maximum of all generator grades (the minimal admissible
// threshold).  Throws DomainError on an empty complex.
ConeThreshold default_zeta(const FreeComplex& c);

// Eventually-acyclic replacement: the total complex over the P_S-shifted
// copies of C, indexed by subsets S of the parameter axes.  Degree d holds
// one copy of C_{d-|S|} per S with generator grades g joined with zeta+1 on
// the axes in S; blocks are ordered by |S|, then S lexicographically, then
// original generator order.
FreeComplex cone_complex(const FreeComplex& c, const ConeThreshold& t);

// Delete every generator whose grade is not <= zeta, together with its
// matrix rows and columns.  Left inverse of cone_complex for admissible
// thresholds: restrict(cone_complex(C, t), t) == C.
FreeComplex restrict(const FreeComplex& c, const ConeThreshold& t);
BettiTable restrict(const BettiTable& b, const ConeThreshold& t);

// Verification window: all Hilbert-function activity of the coned complex
// lies in [meet of generator grades - 1, zeta + 2].
GridBox default_box(const FreeComplex& c, const ConeThreshold& t);

}  // namespace mpd
