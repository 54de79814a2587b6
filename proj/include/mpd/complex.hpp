#pragma once

#include <vector>

#include "mpd/graded_matrix.hpp"

namespace mpd {

// A chain complex of finite rank free Z^N-persistence modules: generator
// grades per homological degree plus the differential matrices.  Cochain
// complexes are stored with negated homological degrees.
class FreeComplex {
  public:
    // Empty complex (hi < lo).
    FreeComplex(int params, uint32_t p) : params_(params), p_(p), lo_(0), hi_(-1) {}

    // gens[k] holds the generator grades of degree lo+k; diffs[k] is the
    // differential C_{lo+k+1} -> C_{lo+k} (so diffs has one element fewer).
    FreeComplex(int params, uint32_t p, int lo, std::vector<std::vector<Grade>> gens,
                std::vector<GradedMatrix> diffs);

    int params() const { return params_; }
    uint32_t p() const { return p_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    bool empty() const { return hi_ < lo_; }

    int rank(int d) const;        // number of generators in degree d (0 outside range)
    int total_rank() const;
    const std::vector<Grade>& gens(int d) const;

    // Differential C_d -> C_{d-1}.  Outside (lo, hi] this is a zero matrix
    // of the appropriate shape.
    GradedMatrix diff(int d) const;
    bool has_stored_diff(int d) const { return d > lo_ && d <= hi_; }
    const GradedMatrix& stored_diff(int d) const;

    // Checks grade bookkeeping, validity of every differential and
    // boundary-squared = 0; throws DomainError on violation.
    void validate() const;

    bool operator==(const FreeComplex&) const = default;

  private:
    int params_;
    uint32_t p_;
    int lo_, hi_;
    std::vector<std::vector<Grade>> gens_;
    std::vector<GradedMatrix> diffs_;

    static const std::vector<Grade> kNoGens;
};

// A one-critical simplicial Z^N-filtration: every simplex with its unique
// minimal entry grade.
struct Simplex {
    std::vector<int> vertices;  // sorted, distinct, nonnegative
    Grade grade;

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const Simplex&) const = default;
};

struct Multifiltration {
    int params = 1;
    std::vector<Simplex> simplices;

    // Closure under faces, grade monotonicity, one-criticality.
    void validate() const;

    bool operator==(const Multifiltration&) const = default;
};

// Filtered (augmented if reduced) simplicial chain complex; generators keep
// the input order of the simplices within each dimension.
FreeComplex chain_complex(const Multifiltration& k, uint32_t p, bool reduced);

// Global dual Hom(-, F(1)), stored as a chain complex with negated
// degrees: cohomological degree q of the dual corresponds to homological
// degree -q of the returned complex.
FreeComplex dagger(const FreeComplex& c);

// C[i]_d = C_{i+d}.
FreeComplex shift_homological(const FreeComplex& c, int i);

// All generator grades decreased by z.
FreeComplex shift_graded(const FreeComplex& c, const Grade& z);

// Minimal free resolution of the simple module k at 0: rank C(N,d) in
// degree d with generators at the grades e_S, |S| = d, S in lexicographic
// order.
FreeComplex koszul(int n, uint32_t p);

}  // namespace mpd
