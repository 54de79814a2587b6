#include "mpd/gen.hpp"

#include <algorithm>

namespace mpd {

namespace {

Grade random_grade(std::mt19937_64& rng, int n, int32_t lo, int32_t hi) {
    Grade g = Grade::zero(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo + static_cast<int32_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
    return g;
}

// Random change of basis inside one degree: add a multiple of a generator
// onto one of larger-or-equal grade.  Keeps validity and boundary-squared.
void mix_basis(std::mt19937_64& rng, std::vector<std::vector<Grade>>& gens,
               std::vector<GradedMatrix>& diffs, int lo, uint32_t p) {
    Fp fp(p);
    int top = static_cast<int>(gens.size()) - 1;
    int rounds = 0;
    for (const auto& gs : gens) rounds += 2 * static_cast<int>(gs.size());
    for (int r = 0; r < rounds; ++r) {
        int k = static_cast<int>(rng() % gens.size());
        auto& gs = gens[static_cast<size_t>(k)];
        if (gs.size() < 2) continue;
        int i = static_cast<int>(rng() % gs.size());
        int j = static_cast<int>(rng() % gs.size());
        if (i == j || !grade_leq(gs[static_cast<size_t>(i)], gs[static_cast<size_t>(j)])) continue;
        uint32_t c = 1 + static_cast<uint32_t>(rng() % (p - 1));
        // e_j <- e_j + c e_i: column op below, inverse row op above
        if (k > 0) {
            GradedMatrix& m = diffs[static_cast<size_t>(k - 1)];
            SparseVec ci = m.col(i);
            axpy(fp, m.col_mut(j), c, ci);
        }
        if (k < top) {
            GradedMatrix& m = diffs[static_cast<size_t>(k)];
            for (int q = 0; q < m.num_cols(); ++q) {
                uint32_t vj = m.entry(j, q);
                if (vj)
                    m.set_entry(i, q,
                                static_cast<int64_t>(fp.sub(m.entry(i, q), fp.mul(c, vj))));
            }
        }
        (void)lo;
    }
}

}  // namespace

FreeComplex direct_sum(const FreeComplex& a, const FreeComplex& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.params() != b.params() || a.p() != b.p())
        throw DomainError("direct sum of complexes over different gradings or fields");
    int lo = std::min(a.lo(), b.lo()), hi = std::max(a.hi(), b.hi());
    std::vector<std::vector<Grade>> gens;
    for (int d = lo; d <= hi; ++d) {
        std::vector<Grade> gs = a.gens(d);
        const std::vector<Grade>& bs = b.gens(d);
        gs.insert(gs.end(), bs.begin(), bs.end());
        gens.push_back(std::move(gs));
    }
    std::vector<GradedMatrix> diffs;
    for (int d = lo + 1; d <= hi; ++d) {
        GradedMatrix da = a.diff(d), db = b.diff(d);
        GradedMatrix m(a.p(), gens[static_cast<size_t>(d - 1 - lo)],
                       gens[static_cast<size_t>(d - lo)]);
        for (int j = 0; j < da.num_cols(); ++j) m.col_mut(j) = da.col(j);
        int ro = da.num_rows(), co = da.num_cols();
        for (int j = 0; j < db.num_cols(); ++j) {
            SparseVec col = db.col(j);
            for (Entry& e : col) e.row += ro;
            m.col_mut(co + j) = std::move(col);
        }
        diffs.push_back(std::move(m));
    }
    return FreeComplex(a.params(), a.p(), lo, std::move(gens), std::move(diffs));
}

FreeComplex random_complex(std::mt19937_64& rng, int n, uint32_t p, int max_total_rank,
                           int32_t gmax) {
    Fp fp(p);
    FreeComplex acc(n, p);
    int budget = 2 + static_cast<int>(rng() % static_cast<uint64_t>(std::max(1, max_total_rank - 1)));
    while (acc.total_rank() < budget) {
        int room = budget - acc.total_rank();
        int d = static_cast<int>(rng() % 3);
        uint64_t kind = rng() % 10;
        if (kind < 3 || room < 2) {
            // lone generator
            std::vector<std::vector<Grade>> gs = {{random_grade(rng, n, 0, gmax)}};
            acc = direct_sum(acc, FreeComplex(n, p, d, std::move(gs), {}));
        } else if (kind < 7 || room < (1 << n)) {
            // interval piece F(g') -> F(g)
            Grade g = random_grade(rng, n, 0, gmax - 1);
            Grade g2 = g;
            for (int i = 0; i < n; ++i)
                g2[i] = std::min<int32_t>(gmax, g2[i] + static_cast<int32_t>(rng() % 3));
            std::vector<std::vector<Grade>> gs = {{g}, {g2}};
            GradedMatrix m(p, gs[0], gs[1]);
            m.set_entry(0, 0, static_cast<int64_t>(1 + rng() % (p - 1)));
            acc = direct_sum(acc, FreeComplex(n, p, d, std::move(gs), {std::move(m)}));
        } else {
            // shifted Koszul block
            Grade g = random_grade(rng, n, 0, gmax - 1);
            acc = direct_sum(acc, shift_graded(shift_homological(koszul(n, p), -d), -g));
        }
    }
    std::vector<std::vector<Grade>> gens;
    for (int d = acc.lo(); d <= acc.hi(); ++d) gens.push_back(acc.gens(d));
    std::vector<GradedMatrix> diffs;
    for (int d = acc.lo() + 1; d <= acc.hi(); ++d) diffs.push_back(acc.diff(d));
    mix_basis(rng, gens, diffs, acc.lo(), p);
    FreeComplex out(n, p, acc.lo(), std::move(gens), std::move(diffs));
    out.validate();
    return out;
}

Multifiltration random_filtration(std::mt19937_64& rng, int n, int max_simplices, int32_t gmax) {
    Multifiltration k;
    k.params = n;
    int nv = n == 1 ? 4 + static_cast<int>(rng() % 5u) : 12 + static_cast<int>(rng() % 11u);
    for (int v = 0; v < nv; ++v)
        k.simplices.push_back({{v}, random_grade(rng, n, 0, std::max<int32_t>(0, gmax - 2))});
    // put vertex 0 at the meet of all vertex grades so that the augmented
    // (reduced) chain complex of the filtration always exists
    Grade m0 = k.simplices[0].grade;
    for (int v = 1; v < nv; ++v) m0 = meet(m0, k.simplices[static_cast<size_t>(v)].grade);
    k.simplices[0].grade = m0;
    std::vector<std::vector<int>> edge_at(static_cast<size_t>(nv), std::vector<int>(static_cast<size_t>(nv), -1));
    auto bumped_join = [&](const Grade& a, const Grade& b) {
        Grade g = join(a, b);
        for (int i = 0; i < n; ++i)
            g[i] = std::min<int32_t>(gmax, g[i] + static_cast<int32_t>(rng() % 2));
        return g;
    };
    for (int a = 0; a < nv && static_cast<int>(k.simplices.size()) < max_simplices; ++a)
        for (int b = a + 1; b < nv && static_cast<int>(k.simplices.size()) < max_simplices; ++b) {
            if (rng() % 2) continue;
            edge_at[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                static_cast<int>(k.simplices.size());
            k.simplices.push_back({{a, b},
                                   bumped_join(k.simplices[static_cast<size_t>(a)].grade,
                                               k.simplices[static_cast<size_t>(b)].grade)});
        }
    for (int a = 0; a < nv; ++a)
        for (int b = a + 1; b < nv; ++b)
            for (int c = b + 1; c < nv; ++c) {
                if (static_cast<int>(k.simplices.size()) >= max_simplices) break;
                int ab = edge_at[static_cast<size_t>(a)][static_cast<size_t>(b)];
                int ac = edge_at[static_cast<size_t>(a)][static_cast<size_t>(c)];
                int bc = edge_at[static_cast<size_t>(b)][static_cast<size_t>(c)];
                if (ab < 0 || ac < 0 || bc < 0 || rng() % 5 < 3) continue;
                Grade g = bumped_join(k.simplices[static_cast<size_t>(ab)].grade,
                                      join(k.simplices[static_cast<size_t>(ac)].grade,
                                           k.simplices[static_cast<size_t>(bc)].grade));
                k.simplices.push_back({{a, b, c}, g});
            }
    k.validate();
    return k;
}

}  // namespace mpd
