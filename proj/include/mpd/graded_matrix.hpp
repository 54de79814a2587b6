#pragma once

#include <cstdint>
#include <vector>

#include "mpd/field.hpp"
#include "mpd/grade.hpp"
#include "mpd/sparse.hpp"

namespace mpd {

// A matrix over F_p with a grade attached to every row and column,
// representing a morphism between free persistence modules (columns =
// domain generators, rows = codomain generators).  Stored column-major
// sparse; constructors accept arbitrary data, validity is a checked
// property, not an enforced invariant.
class GradedMatrix {
  public:
    GradedMatrix() : p_(2) {}
    GradedMatrix(uint32_t p, std::vector<Grade> row_grades, std::vector<Grade> col_grades);

    uint32_t p() const { return p_; }
    int num_rows() const { return static_cast<int>(row_grades_.size()); }
    int num_cols() const { return static_cast<int>(col_grades_.size()); }

    const std::vector<Grade>& row_grades() const { return row_grades_; }
    const std::vector<Grade>& col_grades() const { return col_grades_; }
    const Grade& row_grade(int i) const { return row_grades_[static_cast<size_t>(i)]; }
    const Grade& col_grade(int j) const { return col_grades_[static_cast<size_t>(j)]; }

    const SparseVec& col(int j) const { return cols_[static_cast<size_t>(j)]; }
    SparseVec& col_mut(int j) { return cols_[static_cast<size_t>(j)]; }

    uint32_t entry(int i, int j) const { return sparse_entry(col(j), i); }
    // Sets entry (i, j); v is reduced mod p, v = 0 clears the entry.
    void set_entry(int i, int j, int64_t v);

    bool is_zero() const;
    bool is_valid() const;
    bool is_minimal() const;

    GradedMatrix transpose() const;
    GradedMatrix shifted(const Grade& z) const;

    static GradedMatrix identity(uint32_t p, const std::vector<Grade>& grades);
    static GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

    bool operator==(const GradedMatrix&) const = default;

  private:
    uint32_t p_;
    std::vector<Grade> row_grades_;
    std::vector<Grade> col_grades_;
    std::vector<SparseVec> cols_;
};

}  // namespace mpd
