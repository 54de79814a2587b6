#include "mpd/graded_matrix.hpp"

#include <algorithm>

namespace mpd {

GradedMatrix::GradedMatrix(uint32_t p, std::vector<Grade> row_grades,
                           std::vector<Grade> col_grades)
    : p_(p), row_grades_(std::move(row_grades)), col_grades_(std::move(col_grades)),
      cols_(col_grades_.size()) {
    Fp fp(p);  // validates primality
    (void)fp;
}

void GradedMatrix::set_entry(int i, int j, int64_t v) {
    Fp fp(p_);
    uint32_t r = fp.from_int(v);
    SparseVec& c = cols_[static_cast<size_t>(j)];
    auto it = std::lower_bound(c.begin(), c.end(), i,
                               [](const Entry& e, int row) { return e.row < row; });
    if (it != c.end() && it->row == i) {
        if (r)
            it->val = r;
        else
            c.erase(it);
    } else if (r) {
        c.insert(it, {i, r});
    }
}

bool GradedMatrix::is_zero() const {
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool GradedMatrix::is_valid() const {
    for (int j = 0; j < num_cols(); ++j)
        for (const Entry& e : col(j))
            if (!grade_leq(row_grade(e.row), col_grade(j))) return false;
    return true;
}

bool GradedMatrix::is_minimal() const {
    for (int j = 0; j < num_cols(); ++j)
        for (const Entry& e : col(j))
            if (!grade_lt(row_grade(e.row), col_grade(j))) return false;
    return true;
}

GradedMatrix GradedMatrix::transpose() const {
    std::vector<Grade> rg, cg;
    rg.reserve(col_grades_.size());
    cg.reserve(row_grades_.size());
    for (const Grade& g : col_grades_) rg.push_back(-g);
    for (const Grade& g : row_grades_) cg.push_back(-g);
    GradedMatrix t(p_, std::move(rg), std::move(cg));
    for (int j = 0; j < num_cols(); ++j)
        for (const Entry& e : col(j)) t.cols_[static_cast<size_t>(e.row)].push_back({j, e.val});
    // rows were visited in ascending column order, so each column of the
    // transpose is already sorted
    return t;
}

GradedMatrix GradedMatrix::shifted(const Grade& z) const {
    GradedMatrix m = *this;
    for (Grade& g : m.row_grades_) g = g - z;
    for (Grade& g : m.col_grades_) g = g - z;
    return m;
}

GradedMatrix GradedMatrix::identity(uint32_t p, const std::vector<Grade>& grades) {
    GradedMatrix m(p, grades, grades);
    for (int i = 0; i < m.num_cols(); ++i) m.cols_[static_cast<size_t>(i)] = {{i, 1}};
    return m;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& a, const GradedMatrix& b) {
    if (a.p_ != b.p_) throw CompositionError("field characteristic mismatch");
    if (a.col_grades_ != b.row_grades_)
        throw CompositionError("inner grade vectors do not match");
    Fp fp(a.p_);
    GradedMatrix c(a.p_, a.row_grades_, b.col_grades_);
    for (int j = 0; j < b.num_cols(); ++j) {
        SparseVec acc;
        for (const Entry& e : b.col(j)) axpy(fp, acc, e.val, a.col(e.row));
        c.cols_[static_cast<size_t>(j)] = std::move(acc);
    }
    return c;
}

}  // namespace mpd
