#include "mpd/resolve.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "mpd/cone.hpp"

namespace mpd {

namespace {

// Column-major mutable matrix used by the elimination routines.
struct WorkCols {
    std::vector<SparseVec> cols;

    void remove_col(int j) { cols.erase(cols.begin() + j); }

    // Drops row i and reindexes the rows above it.
    void remove_row(int i) {
        for (SparseVec& col : cols) {
            auto it = col.begin();
            while (it != col.end() && it->row < i) ++it;
            if (it != col.end() && it->row == i) it = col.erase(it);
            for (; it != col.end(); ++it) --(it->row);
        }
    }
};

// Schur complement step for an invertible pivot at (i, j): afterwards row i
// and column j carry the only nonzero entries they need and can be deleted
// together with the paired generators.
void schur_eliminate(const Fp& fp, WorkCols& m, int i, int j) {
    uint32_t u = sparse_entry(m.cols[static_cast<size_t>(j)], i);
    uint32_t uinv = fp.inv(u);
    for (size_t j2 = 0; j2 < m.cols.size(); ++j2) {
        if (static_cast<int>(j2) == j) continue;
        uint32_t a = sparse_entry(m.cols[j2], i);
        if (a) axpy(fp, m.cols[j2], fp.neg(fp.mul(a, uinv)), m.cols[static_cast<size_t>(j)]);
    }
    m.remove_col(j);
    m.remove_row(i);
}

GradedMatrix to_matrix(uint32_t p, const std::vector<Grade>& rg, const std::vector<Grade>& cg,
                       const WorkCols& m) {
    GradedMatrix out(p, rg, cg);
    for (size_t j = 0; j < m.cols.size(); ++j) out.col_mut(static_cast<int>(j)) = m.cols[j];
    return out;
}

bool colex_less(const Grade& a, const Grade& b) {
    for (int i = a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Reduces v against unit-pivot echelon columns; returns the remainder.
SparseVec reduce_by(const Fp& fp, const std::map<int, SparseVec>& ech, SparseVec v) {
    while (!v.empty()) {
        auto it = ech.find(pivot_row(v));
        if (it == ech.end()) break;
        axpy(fp, v, fp.neg(v.back().val), it->second);
    }
    return v;
}

void check_param_count(int n) {
    if (n >= 3)
        throw UnsupportedParameterError("resolutions are supported for at most 2 parameters, got " +
                                        std::to_string(n));
}

// Minimal presentation cleanup: eliminate invertible pivots, then drop every
// relation lying in the submodule generated by the others at its own grade.
GradedMatrix minimize_presentation(const GradedMatrix& m0) {
    Fp fp(m0.p());
    std::vector<Grade> rg = m0.row_grades(), cg = m0.col_grades();
    WorkCols m;
    m.cols.reserve(static_cast<size_t>(m0.num_cols()));
    for (int j = 0; j < m0.num_cols(); ++j) m.cols.push_back(m0.col(j));

    for (;;) {
        int bi = -1, bj = -1;
        for (size_t j = 0; j < m.cols.size(); ++j)
            for (const Entry& e : m.cols[j])
                if (rg[static_cast<size_t>(e.row)] == cg[j] &&
                    (bi < 0 || e.row < bi || (e.row == bi && static_cast<int>(j) < bj))) {
                    bi = e.row;
                    bj = static_cast<int>(j);
                }
        if (bi < 0) break;
        schur_eliminate(fp, m, bi, bj);
        rg.erase(rg.begin() + bi);
        cg.erase(cg.begin() + bj);
    }

    std::vector<char> keep(m.cols.size(), 1);
    std::vector<Grade> zs = cg;
    std::sort(zs.begin(), zs.end(), colex_less);
    zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
    for (const Grade& z : zs) {
        std::map<int, SparseVec> ech;
        auto insert = [&](const SparseVec& c) {
            SparseVec r = reduce_by(fp, ech, c);
            if (r.empty()) return false;
            int pr = pivot_row(r);
            ech.emplace(pr, scaled(fp, r, fp.inv(r.back().val)));
            return true;
        };
        for (size_t j = 0; j < m.cols.size(); ++j)
            if (keep[j] && cg[j] != z && grade_leq(cg[j], z)) insert(m.cols[j]);
        for (size_t j = 0; j < m.cols.size(); ++j)
            if (cg[j] == z && !insert(m.cols[j])) keep[j] = 0;
    }
    std::vector<Grade> kcg;
    WorkCols kept;
    for (size_t j = 0; j < m.cols.size(); ++j)
        if (keep[j]) {
            kcg.push_back(cg[j]);
            kept.cols.push_back(std::move(m.cols[j]));
        }
    return to_matrix(m0.p(), rg, kcg, kept);
}

}  // namespace

FreeComplex minimize(const FreeComplex& c) {
    if (c.empty()) return c;
    Fp fp(c.p());
    int lo = c.lo();
    int top = c.hi() - c.lo();  // degrees lo .. lo+top
    std::vector<std::vector<Grade>> gens(static_cast<size_t>(top) + 1);
    for (int k = 0; k <= top; ++k) gens[static_cast<size_t>(k)] = c.gens(lo + k);
    std::vector<WorkCols> diffs(static_cast<size_t>(top));
    for (int t = 0; t < top; ++t) {
        GradedMatrix d = c.diff(lo + t + 1);
        for (int j = 0; j < d.num_cols(); ++j) diffs[static_cast<size_t>(t)].cols.push_back(d.col(j));
    }

    for (;;) {
        int bt = -1, bi = -1, bj = -1;
        for (int t = 0; t < top && bt < 0; ++t) {
            const auto& rg = gens[static_cast<size_t>(t)];
            const auto& cg = gens[static_cast<size_t>(t) + 1];
            for (size_t j = 0; j < diffs[static_cast<size_t>(t)].cols.size(); ++j)
                for (const Entry& e : diffs[static_cast<size_t>(t)].cols[j])
                    if (rg[static_cast<size_t>(e.row)] == cg[j] &&
                        (bi < 0 || e.row < bi || (e.row == bi && static_cast<int>(j) < bj))) {
                        bi = e.row;
                        bj = static_cast<int>(j);
                    }
            if (bi >= 0) bt = t;
        }
        if (bt < 0) break;
        schur_eliminate(fp, diffs[static_cast<size_t>(bt)], bi, bj);
        if (bt + 1 < top) diffs[static_cast<size_t>(bt) + 1].remove_row(bj);
        if (bt > 0) diffs[static_cast<size_t>(bt) - 1].remove_col(bi);
        gens[static_cast<size_t>(bt) + 1].erase(gens[static_cast<size_t>(bt) + 1].begin() + bj);
        gens[static_cast<size_t>(bt)].erase(gens[static_cast<size_t>(bt)].begin() + bi);
    }

    int a = 0, b = top;
    while (a <= b && gens[static_cast<size_t>(a)].empty()) ++a;
    while (b >= a && gens[static_cast<size_t>(b)].empty()) --b;
    if (a > b) return FreeComplex(c.params(), c.p());
    std::vector<std::vector<Grade>> og(gens.begin() + a, gens.begin() + b + 1);
    std::vector<GradedMatrix> od;
    for (int t = a; t < b; ++t)
        od.push_back(to_matrix(c.p(), gens[static_cast<size_t>(t)], gens[static_cast<size_t>(t) + 1],
                               diffs[static_cast<size_t>(t)]));
    FreeComplex out(c.params(), c.p(), lo + a, std::move(og), std::move(od));
    out.validate();
    return out;
}

GradedMatrix kernel_basis(const GradedMatrix& m) {
    int n = m.num_cols() > 0  ? m.col_grade(0).size()
            : m.num_rows() > 0 ? m.row_grade(0).size()
                               : 1;
    check_param_count(n);
    if (!m.is_valid()) throw DomainError("kernel basis of an invalid graded matrix");
    Fp fp(m.p());
    int nc = m.num_cols();

    std::vector<int32_t> levels;
    if (n == 2) {
        for (int j = 0; j < nc; ++j) levels.push_back(m.col_grade(j)[1]);
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    }
    if (levels.empty()) levels.push_back(0);

    std::vector<int> order(static_cast<size_t>(nc));
    for (int j = 0; j < nc; ++j) order[static_cast<size_t>(j)] = j;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m.col_grade(a)[0] < m.col_grade(b)[0]; });

    std::vector<char> dead(static_cast<size_t>(nc), 0);
    std::vector<Grade> kcg;
    WorkCols kcols;
    for (int32_t y : levels) {
        // fresh left-to-right reduction over the columns active at this level;
        // a column's first death yields a kernel generator via the slave
        std::map<int, std::pair<SparseVec, SparseVec>> piv;
        for (int j : order) {
            if (dead[static_cast<size_t>(j)]) continue;
            if (n == 2 && m.col_grade(j)[1] > y) continue;
            SparseVec v = m.col(j);
            SparseVec s{{j, 1u}};
            while (!v.empty()) {
                auto it = piv.find(pivot_row(v));
                if (it == piv.end()) break;
                uint32_t f = fp.neg(v.back().val);
                axpy(fp, v, f, it->second.first);
                axpy(fp, s, f, it->second.second);
            }
            if (v.empty()) {
                dead[static_cast<size_t>(j)] = 1;
                Grade g = m.col_grade(j);
                if (n == 2) g[1] = y;
                kcg.push_back(g);
                kcols.cols.push_back(std::move(s));
            } else {
                uint32_t inv = fp.inv(v.back().val);
                int pr = pivot_row(v);
                piv.emplace(pr, std::make_pair(scaled(fp, v, inv), scaled(fp, s, inv)));
            }
        }
    }
    return to_matrix(m.p(), m.col_grades(), kcg, kcols);
}

Presentation minimal_presentation(const FreeComplex& c, int d) {
    check_param_count(c.params());
    Fp fp(c.p());
    GradedMatrix k = kernel_basis(c.diff(d));
    GradedMatrix up = c.diff(d + 1);

    // echelonize the kernel basis, tracking coordinates in its columns
    std::map<int, std::pair<SparseVec, SparseVec>> piv;
    for (int e = 0; e < k.num_cols(); ++e) {
        SparseVec v = k.col(e);
        SparseVec t{{e, 1u}};
        while (!v.empty()) {
            auto it = piv.find(pivot_row(v));
            if (it == piv.end()) break;
            uint32_t f = fp.neg(v.back().val);
            axpy(fp, v, f, it->second.first);
            axpy(fp, t, f, it->second.second);
        }
        if (v.empty()) throw DomainError("kernel basis columns are linearly dependent");
        uint32_t inv = fp.inv(v.back().val);
        int pr = pivot_row(v);
        piv.emplace(pr, std::make_pair(scaled(fp, v, inv), scaled(fp, t, inv)));
    }

    GradedMatrix pres(c.p(), k.col_grades(), up.col_grades());
    for (int j = 0; j < up.num_cols(); ++j) {
        SparseVec r = up.col(j);
        SparseVec acc;
        while (!r.empty()) {
            auto it = piv.find(pivot_row(r));
            if (it == piv.end())
                throw DomainError("differential column does not lie in the kernel below it");
            uint32_t f = r.back().val;
            axpy(fp, r, fp.neg(f), it->second.first);
            axpy(fp, acc, f, it->second.second);
        }
        pres.col_mut(j) = std::move(acc);
    }
    return {c.params(), minimize_presentation(pres)};
}

FreeComplex free_resolution(const Presentation& pr) {
    check_param_count(pr.params);
    const GradedMatrix& m = pr.matrix;
    if (m.num_rows() == 0) return FreeComplex(pr.params, m.p());
    std::vector<std::vector<Grade>> gens{m.row_grades()};
    std::vector<GradedMatrix> diffs;
    if (m.num_cols() > 0) {
        gens.push_back(m.col_grades());
        diffs.push_back(m);
        GradedMatrix k = kernel_basis(m);
        if (k.num_cols() > 0) {
            gens.push_back(k.col_grades());
            diffs.push_back(std::move(k));
        }
    }
    return minimize(FreeComplex(pr.params, m.p(), 0, std::move(gens), std::move(diffs)));
}

FreeComplex dual_resolution(const FreeComplex& g) {
    int n = g.params();
    if (g.lo() != 0 || resolution_length(g) != n)
        throw LengthError("dual resolution requires a resolution of length exactly " +
                          std::to_string(n));
    Grade one = Grade::ones(n);
    std::vector<std::vector<Grade>> gens(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        for (const Grade& z : g.gens(n - k)) gens[static_cast<size_t>(k)].push_back(one - z);
    std::vector<GradedMatrix> diffs;
    for (int k = 1; k <= n; ++k) diffs.push_back(g.diff(n - k + 1).transpose().shifted(-one));
    return FreeComplex(n, g.p(), 0, std::move(gens), std::move(diffs));
}

FreeComplex mfr_direct(const FreeComplex& c, int d) {
    return free_resolution(minimal_presentation(minimize(c), d));
}

FreeComplex mfr_cohomological(const FreeComplex& c, int d) {
    check_param_count(c.params());
    int n = c.params();
    FreeComplex cm = minimize(c);
    if (cm.empty()) return cm;
    ConeThreshold t = default_zeta(cm);
    FreeComplex hat = cone_complex(cm, t);
    FreeComplex dual = dagger(hat);
    FreeComplex g = mfr_direct(dual, -(d + n));
    if (g.empty()) return g;
    return restrict(dual_resolution(g), t);
}

int resolution_length(const FreeComplex& g) {
    for (int d = g.hi(); d >= g.lo(); --d)
        if (g.rank(d) > 0) return d;
    return kLengthOfZero;
}

BettiTable betti_table(const FreeComplex& g) {
    BettiTable out;
    for (int d = g.lo(); d <= g.hi(); ++d)
        for (const Grade& z : g.gens(d)) out.add(d, z);
    out.normalize();
    return out;
}

}  // namespace mpd
