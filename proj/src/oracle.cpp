#include "mpd/oracle.hpp"

#include <algorithm>
#include <unordered_map>

namespace mpd {

GridBox::GridBox(Grade lo_, Grade hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (!grade_leq(lo, hi)) throw DomainError("empty grid box " + lo.str() + ".." + hi.str());
}

int64_t GridBox::size() const {
    int64_t s = 1;
    for (int i = 0; i < params(); ++i) s *= hi[i] - lo[i] + 1;
    return s;
}

bool GridBox::contains(const Grade& z) const { return grade_leq(lo, z) && grade_leq(z, hi); }

int64_t GridBox::index(const Grade& z) const {
    if (!contains(z)) throw DomainError("grade " + z.str() + " outside box");
    int64_t idx = 0;
    for (int i = 0; i < params(); ++i) idx = idx * (hi[i] - lo[i] + 1) + (z[i] - lo[i]);
    return idx;
}

Grade GridBox::at(int64_t idx) const {
    Grade z = lo;
    for (int i = params() - 1; i >= 0; --i) {
        int64_t ext = hi[i] - lo[i] + 1;
        z[i] = lo[i] + static_cast<int32_t>(idx % ext);
        idx /= ext;
    }
    return z;
}

int DenseMatrix::rank(const Fp& fp) const {
    DenseMatrix m = *this;
    int r = 0;
    for (int j = 0; j < m.cols && r < m.rows; ++j) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, j)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int jj = 0; jj < m.cols; ++jj) std::swap(m.at(piv, jj), m.at(r, jj));
        uint32_t inv = fp.inv(m.at(r, j));
        for (int i = r + 1; i < m.rows; ++i) {
            uint32_t f = m.at(i, j);
            if (!f) continue;
            f = fp.mul(f, inv);
            for (int jj = j; jj < m.cols; ++jj)
                m.at(i, jj) = fp.sub(m.at(i, jj), fp.mul(f, m.at(r, jj)));
        }
        ++r;
    }
    return r;
}

DenseMatrix DenseMatrix::multiply(const Fp& fp, const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols != y.rows) throw DimensionError("dense matrix shape mismatch in multiply");
    DenseMatrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            uint32_t v = x.at(i, k);
            if (!v) continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = fp.add(z.at(i, j), fp.mul(v, y.at(k, j)));
        }
    return z;
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

int HilbertFunction::at(int d, const Grade& z) const {
    auto it = values.find(d);
    if (it == values.end()) return 0;
    return it->second[static_cast<size_t>(box.index(z))];
}

PointwiseModule::PointwiseModule(GridBox b, uint32_t p_)
    : box(std::move(b)), p(p_), dims(static_cast<size_t>(box.size()), 0),
      steps(static_cast<size_t>(box.params()),
            std::vector<DenseMatrix>(static_cast<size_t>(box.size()))) {}

const DenseMatrix& PointwiseModule::step(const Grade& z, int i) const {
    Grade z2 = z;
    z2[i] += 1;
    if (!box.contains(z) || !box.contains(z2))
        throw DomainError("step " + z.str() + " axis " + std::to_string(i + 1) + " leaves the box");
    return steps[static_cast<size_t>(i)][static_cast<size_t>(box.index(z))];
}

void PointwiseModule::validate() const {
    Fp fp(p);
    int n = box.params();
    for (int64_t idx = 0; idx < box.size(); ++idx) {
        Grade z = box.at(idx);
        for (int i = 0; i < n; ++i) {
            Grade zi = z;
            zi[i] += 1;
            if (!box.contains(zi)) continue;
            for (int j = i + 1; j < n; ++j) {
                Grade zj = z, zij = zi;
                zj[j] += 1;
                zij[j] += 1;
                if (!box.contains(zij)) continue;
                if (DenseMatrix::multiply(fp, step(zi, j), step(z, i)) !=
                    DenseMatrix::multiply(fp, step(zj, i), step(z, j)))
                    throw DomainError("structure maps fail to commute at " + z.str());
            }
        }
    }
}

void Barcode::add(int64_t b, int64_t d, int mult) {
    if (b >= d) throw DomainError("empty interval in barcode");
    for (int t = 0; t < mult; ++t) intervals.push_back({b, d});
}

void Barcode::normalize() { std::sort(intervals.begin(), intervals.end()); }

int Barcode::dim_at(int64_t z) const {
    int n = 0;
    for (const Interval& iv : intervals)
        if (iv.b <= z && z < iv.d) ++n;
    return n;
}

namespace {

// Reduce v against unit-pivot columns in piv; returns v fully reduced.
void reduce_by(const Fp& fp, const std::unordered_map<int, SparseVec>& piv, SparseVec& v) {
    while (!v.empty()) {
        auto it = piv.find(pivot_row(v));
        if (it == piv.end()) return;
        axpy(fp, v, fp.neg(v.back().val), it->second);
    }
}

// Same, applying the mirrored operations to a slave vector.
void reduce_by_tracked(const Fp& fp,
                       const std::unordered_map<int, std::pair<SparseVec, SparseVec>>& piv,
                       SparseVec& v, SparseVec& s) {
    while (!v.empty()) {
        auto it = piv.find(pivot_row(v));
        if (it == piv.end()) return;
        uint32_t f = fp.neg(v.back().val);
        axpy(fp, v, f, it->second.first);
        axpy(fp, s, f, it->second.second);
    }
}

void make_unit_pivot(const Fp& fp, SparseVec& v) {
    uint32_t inv = fp.inv(v.back().val);
    if (inv != 1) v = scaled(fp, v, inv);
}

std::vector<std::vector<int>> subsets(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int i = next; i <= n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

std::vector<int> rank_grid(const GradedMatrix& m, const GridBox& box) {
    Fp fp(m.p());
    int n = box.params();
    std::vector<int> out(static_cast<size_t>(box.size()), 0);
    int64_t rest = 1;
    for (int i = 1; i < n; ++i) rest *= box.hi[i] - box.lo[i] + 1;

    for (int64_t ri = 0; ri < rest; ++ri) {
        // decode coordinates 2..N of this slice
        Grade y = box.lo;
        int64_t t = ri;
        for (int i = n - 1; i >= 1; --i) {
            int64_t ext = box.hi[i] - box.lo[i] + 1;
            y[i] = box.lo[i] + static_cast<int32_t>(t % ext);
            t /= ext;
        }
        // columns active somewhere in this slice, ordered by first coordinate
        std::vector<std::pair<int32_t, int>> sel;
        for (int j = 0; j < m.num_cols(); ++j) {
            const Grade& g = m.col_grade(j);
            if (g[0] > box.hi[0]) continue;
            bool ok = true;
            for (int i = 1; i < n; ++i)
                if (g[i] > y[i]) {
                    ok = false;
                    break;
                }
            if (ok) sel.emplace_back(g[0], j);
        }
        std::sort(sel.begin(), sel.end());

        std::unordered_map<int, SparseVec> piv;
        int rank = 0;
        size_t ptr = 0;
        for (int32_t x = box.lo[0]; x <= box.hi[0]; ++x) {
            while (ptr < sel.size() && sel[ptr].first <= x) {
                SparseVec v = m.col(sel[ptr].second);
                reduce_by(fp, piv, v);
                if (!v.empty()) {
                    make_unit_pivot(fp, v);
                    int pr = pivot_row(v);
                    piv.emplace(pr, std::move(v));
                    ++rank;
                }
                ++ptr;
            }
            out[static_cast<size_t>((x - box.lo[0]) * rest + ri)] = rank;
        }
    }
    return out;
}

std::vector<int> count_grid(const std::vector<Grade>& gs, const GridBox& box) {
    std::vector<int> out(static_cast<size_t>(box.size()), 0);
    for (int64_t idx = 0; idx < box.size(); ++idx) {
        Grade z = box.at(idx);
        int c = 0;
        for (const Grade& g : gs)
            if (grade_leq(g, z)) ++c;
        out[static_cast<size_t>(idx)] = c;
    }
    return out;
}

HilbertFunction hilbert_homology(const FreeComplex& c, const GridBox& box, int d) {
    HilbertFunction h(box);
    std::vector<int> cnt = count_grid(c.gens(d), box);
    std::vector<int> rd = c.has_stored_diff(d) ? rank_grid(c.stored_diff(d), box)
                                               : std::vector<int>(cnt.size(), 0);
    std::vector<int> rd1 = c.has_stored_diff(d + 1) ? rank_grid(c.stored_diff(d + 1), box)
                                                    : std::vector<int>(cnt.size(), 0);
    std::vector<int> v(cnt.size());
    for (size_t i = 0; i < cnt.size(); ++i) v[i] = cnt[i] - rd[i] - rd1[i];
    h.values[d] = std::move(v);
    return h;
}

HilbertFunction hilbert_homology_all(const FreeComplex& c, const GridBox& box) {
    HilbertFunction h(box);
    if (c.empty()) return h;
    std::vector<std::vector<int>> ranks;  // ranks[k] = rank grid of diff(lo+k+1)
    for (int d = c.lo() + 1; d <= c.hi(); ++d) ranks.push_back(rank_grid(c.stored_diff(d), box));
    for (int d = c.lo(); d <= c.hi(); ++d) {
        std::vector<int> v = count_grid(c.gens(d), box);
        if (d > c.lo()) {
            const std::vector<int>& r = ranks[static_cast<size_t>(d - c.lo() - 1)];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= r[i];
        }
        if (d < c.hi()) {
            const std::vector<int>& r = ranks[static_cast<size_t>(d - c.lo())];
            for (size_t i = 0; i < v.size(); ++i) v[i] -= r[i];
        }
        h.values[d] = std::move(v);
    }
    return h;
}

namespace {

struct HomologyPoint {
    std::unordered_map<int, SparseVec> img;   // echelon basis of boundaries
    std::unordered_map<int, int> rep_index;   // pivot row -> rep position
    std::vector<SparseVec> reps;              // homology representative cycles
};

HomologyPoint homology_at(const Fp& fp, const GradedMatrix& dd, const GradedMatrix& dd1,
                          const std::vector<Grade>& gens_d, const Grade& z) {
    HomologyPoint h;
    // image of the incoming differential
    for (int j = 0; j < dd1.num_cols(); ++j) {
        if (!grade_leq(dd1.col_grade(j), z)) continue;
        SparseVec v = dd1.col(j);
        reduce_by(fp, h.img, v);
        if (!v.empty()) {
            make_unit_pivot(fp, v);
            int pr = pivot_row(v);
            h.img.emplace(pr, std::move(v));
        }
    }
    // kernel of the outgoing differential, with slave tracking
    std::unordered_map<int, std::pair<SparseVec, SparseVec>> kpiv;
    std::vector<SparseVec> kernel;
    for (int j = 0; j < dd.num_cols(); ++j) {
        if (!grade_leq(gens_d[static_cast<size_t>(j)], z)) continue;
        SparseVec v = dd.col(j);
        SparseVec s = {{j, 1}};
        reduce_by_tracked(fp, kpiv, v, s);
        if (v.empty()) {
            kernel.push_back(std::move(s));
        } else {
            uint32_t inv = fp.inv(v.back().val);
            if (inv != 1) {
                v = scaled(fp, v, inv);
                s = scaled(fp, s, inv);
            }
            int pr = pivot_row(v);
            kpiv.emplace(pr, std::make_pair(std::move(v), std::move(s)));
        }
    }
    // representatives: kernel modulo image, echelonized
    std::unordered_map<int, SparseVec> repEch;
    for (SparseVec& k : kernel) {
        // interleave: cancelling a representative pivot can expose a
        // boundary pivot again, and vice versa
        while (!k.empty()) {
            int pr = pivot_row(k);
            auto im = h.img.find(pr);
            if (im != h.img.end()) {
                axpy(fp, k, fp.neg(k.back().val), im->second);
                continue;
            }
            auto it = repEch.find(pr);
            if (it == repEch.end()) break;
            axpy(fp, k, fp.neg(k.back().val), it->second);
        }
        if (k.empty()) continue;
        make_unit_pivot(fp, k);
        h.rep_index.emplace(pivot_row(k), static_cast<int>(h.reps.size()));
        repEch.emplace(pivot_row(k), k);
        h.reps.push_back(std::move(k));
    }
    return h;
}

// Coordinates of the cycle v in the homology basis at the target point.
std::vector<uint32_t> express(const Fp& fp, const HomologyPoint& tgt, SparseVec v) {
    std::vector<uint32_t> coeff(tgt.reps.size(), 0);
    while (!v.empty()) {
        int pr = pivot_row(v);
        auto im = tgt.img.find(pr);
        if (im != tgt.img.end()) {
            axpy(fp, v, fp.neg(v.back().val), im->second);
            continue;
        }
        auto it = tgt.rep_index.find(pr);
        if (it == tgt.rep_index.end())
            throw DomainError("cycle does not lie in the span of the homology basis");
        uint32_t c = v.back().val;
        coeff[static_cast<size_t>(it->second)] = c;
        axpy(fp, v, fp.neg(c), tgt.reps[static_cast<size_t>(it->second)]);
    }
    return coeff;
}

}  // namespace

PointwiseModule homology_functor(const FreeComplex& c, const GridBox& box, int d) {
    Fp fp(c.p());
    PointwiseModule pm(box, c.p());
    GradedMatrix dd = c.diff(d), dd1 = c.diff(d + 1);
    const std::vector<Grade>& gd = c.gens(d);

    std::vector<HomologyPoint> pts;
    pts.reserve(static_cast<size_t>(box.size()));
    for (int64_t idx = 0; idx < box.size(); ++idx) {
        pts.push_back(homology_at(fp, dd, dd1, gd, box.at(idx)));
        pm.dims[static_cast<size_t>(idx)] = static_cast<int>(pts.back().reps.size());
    }
    for (int64_t idx = 0; idx < box.size(); ++idx) {
        Grade z = box.at(idx);
        for (int i = 0; i < box.params(); ++i) {
            Grade z2 = z;
            z2[i] += 1;
            if (!box.contains(z2)) continue;
            const HomologyPoint& src = pts[static_cast<size_t>(idx)];
            const HomologyPoint& tgt = pts[static_cast<size_t>(box.index(z2))];
            DenseMatrix m(static_cast<int>(tgt.reps.size()), static_cast<int>(src.reps.size()));
            for (int j = 0; j < m.cols; ++j) {
                std::vector<uint32_t> col = express(fp, tgt, src.reps[static_cast<size_t>(j)]);
                for (int i2 = 0; i2 < m.rows; ++i2) m.at(i2, j) = col[static_cast<size_t>(i2)];
            }
            pm.steps[static_cast<size_t>(i)][static_cast<size_t>(idx)] = std::move(m);
        }
    }
    return pm;
}

std::map<int, int> koszul_betti(const PointwiseModule& p, const Grade& z) {
    int n = p.box.params();
    Fp fp(p.p);
    if (!p.box.contains(z) || !p.box.contains(z - Grade::ones(n)))
        throw DomainError("koszul cube at " + z.str() + " leaves the module box");

    auto corner = [&](const std::vector<int>& s) {
        Grade g = z;
        for (int i : s) g[i - 1] -= 1;
        return g;
    };

    // per degree: subsets, offsets into the direct sum, total dimension
    std::vector<std::vector<std::vector<int>>> subs;
    std::vector<std::vector<int>> offs;
    std::vector<int> total(static_cast<size_t>(n) + 1, 0);
    std::vector<std::map<std::vector<int>, int>> pos(static_cast<size_t>(n) + 1);
    for (int d = 0; d <= n; ++d) {
        subs.push_back(subsets(n, d));
        std::vector<int> o;
        for (size_t si = 0; si < subs.back().size(); ++si) {
            pos[static_cast<size_t>(d)][subs.back()[si]] = static_cast<int>(si);
            o.push_back(total[static_cast<size_t>(d)]);
            total[static_cast<size_t>(d)] += p.dim(corner(subs.back()[si]));
        }
        offs.push_back(std::move(o));
    }

    std::vector<int> ranks(static_cast<size_t>(n) + 2, 0);  // ranks[d] = rank of the map into degree d-1
    for (int d = 1; d <= n; ++d) {
        DenseMatrix m(total[static_cast<size_t>(d - 1)], total[static_cast<size_t>(d)]);
        for (size_t si = 0; si < subs[static_cast<size_t>(d)].size(); ++si) {
            const std::vector<int>& s = subs[static_cast<size_t>(d)][si];
            int co = offs[static_cast<size_t>(d)][si];
            for (int t = 0; t < d; ++t) {
                std::vector<int> face = s;
                face.erase(face.begin() + t);
                int ro = offs[static_cast<size_t>(d - 1)]
                             [static_cast<size_t>(pos[static_cast<size_t>(d - 1)].at(face))];
                uint32_t sign = ((t + 1 + d) % 2 == 0) ? 1 : fp.neg(1);
                const DenseMatrix& blk = p.step(corner(s), s[static_cast<size_t>(t)] - 1);
                for (int i = 0; i < blk.rows; ++i)
                    for (int j = 0; j < blk.cols; ++j)
                        m.at(ro + i, co + j) = fp.mul(sign, blk.at(i, j));
            }
        }
        ranks[static_cast<size_t>(d)] = m.rank(fp);
    }

    std::map<int, int> beta;
    for (int d = 0; d <= n; ++d) {
        int b = total[static_cast<size_t>(d)] - ranks[static_cast<size_t>(d)] -
                ranks[static_cast<size_t>(d + 1)];
        if (b) beta[d] = b;
    }
    return beta;
}

Barcode barcode_1d(const FreeComplex& c, int d) {
    if (c.params() != 1)
        throw UnsupportedParameterError("barcodes are defined for one parameter only");
    Barcode out;
    if (c.empty() || d < c.lo() || d > c.hi()) return out;
    Fp fp(c.p());
    GradedMatrix dd = c.diff(d), dd1 = c.diff(d + 1);
    const std::vector<Grade>& gd = c.gens(d);

    // kernel basis of the outgoing differential, in grade order
    std::vector<int> order(gd.size());
    for (size_t i = 0; i < gd.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return gd[static_cast<size_t>(a)][0] < gd[static_cast<size_t>(b)][0]; });
    std::unordered_map<int, std::pair<SparseVec, SparseVec>> kpiv;
    std::vector<SparseVec> cycles;
    std::vector<int64_t> birth;
    for (int j : order) {
        SparseVec v = dd.col(j);
        SparseVec s = {{j, 1}};
        reduce_by_tracked(fp, kpiv, v, s);
        if (v.empty()) {
            cycles.push_back(std::move(s));
            birth.push_back(gd[static_cast<size_t>(j)][0]);
        } else {
            uint32_t inv = fp.inv(v.back().val);
            if (inv != 1) {
                v = scaled(fp, v, inv);
                s = scaled(fp, s, inv);
            }
            int pr = pivot_row(v);
            kpiv.emplace(pr, std::make_pair(std::move(v), std::move(s)));
        }
    }

    // echelonize the cycle basis, remembering cycle-basis coordinates
    std::unordered_map<int, std::pair<SparseVec, SparseVec>> cycEch;
    for (size_t t = 0; t < cycles.size(); ++t) {
        SparseVec v = cycles[t];
        SparseVec s = {{static_cast<int>(t), 1}};
        reduce_by_tracked(fp, cycEch, v, s);
        if (v.empty()) throw DomainError("dependent kernel basis");
        uint32_t inv = fp.inv(v.back().val);
        if (inv != 1) {
            v = scaled(fp, v, inv);
            s = scaled(fp, s, inv);
        }
        int pr = pivot_row(v);
        cycEch.emplace(pr, std::make_pair(std::move(v), std::move(s)));
    }

    // persistence pairing of the boundary columns against the cycles
    const std::vector<Grade>& gd1 = c.gens(d + 1);
    std::vector<int> border(gd1.size());
    for (size_t i = 0; i < gd1.size(); ++i) border[i] = static_cast<int>(i);
    std::stable_sort(border.begin(), border.end(), [&](int a, int b) {
        return gd1[static_cast<size_t>(a)][0] < gd1[static_cast<size_t>(b)][0];
    });
    std::unordered_map<int, SparseVec> ppiv;
    std::vector<bool> paired(cycles.size(), false);
    for (int j : border) {
        // coordinates of the boundary in the cycle basis
        SparseVec v = dd1.col(j);
        SparseVec u;
        while (!v.empty()) {
            auto it = cycEch.find(pivot_row(v));
            if (it == cycEch.end()) throw DomainError("boundary column is not a cycle");
            uint32_t f = fp.neg(v.back().val);
            axpy(fp, v, f, it->second.first);
            axpy(fp, u, f, it->second.second);
        }
        u = scaled(fp, u, fp.neg(1));
        reduce_by(fp, ppiv, u);
        if (u.empty()) continue;
        int r = pivot_row(u);
        int64_t db = gd1[static_cast<size_t>(j)][0];
        if (birth[static_cast<size_t>(r)] < db) out.add(birth[static_cast<size_t>(r)], db);
        paired[static_cast<size_t>(r)] = true;
        make_unit_pivot(fp, u);
        ppiv.emplace(r, std::move(u));
    }
    for (size_t t = 0; t < cycles.size(); ++t)
        if (!paired[t]) out.add(birth[t], Interval::kInf);
    out.normalize();
    return out;
}

Barcode relative_barcode_1d(const Multifiltration& k, int q, uint32_t p) {
    if (k.params != 1)
        throw UnsupportedParameterError("relative barcodes are defined for one parameter only");
    k.validate();
    Barcode out;
    if (k.simplices.empty() || q < 0) return out;
    Fp fp(p);

    // simplices by dimension; N = 1 grades are plain integers
    auto collect = [&](int dim) {
        std::vector<const Simplex*> v;
        for (const Simplex& s : k.simplices)
            if (s.dim() == dim) v.push_back(&s);
        return v;
    };
    std::vector<const Simplex*> sq = collect(q), sq1 = collect(q + 1),
                                sqm = q > 0 ? collect(q - 1) : std::vector<const Simplex*>{};
    std::map<std::vector<int>, int> posq, posq1;
    for (size_t i = 0; i < sq.size(); ++i) posq[sq[i]->vertices] = static_cast<int>(i);
    for (size_t i = 0; i < sq1.size(); ++i) posq1[sq1[i]->vertices] = static_cast<int>(i);

    // coboundary columns in the full complex: delta(sigma^*) over the
    // (q+1)-simplices, and delta(rho^*) over the q-simplices.  A cochain
    // supported on simplices absent from K_w has coboundary supported on
    // simplices absent from K_w, so these restrict to every relative pair.
    auto coboundary = [&](const std::vector<const Simplex*>& lower,
                          const std::map<std::vector<int>, int>& lowpos,
                          const std::vector<const Simplex*>& upper) {
        std::vector<SparseVec> cols(lower.size());
        for (size_t t = 0; t < upper.size(); ++t) {
            const Simplex* s = upper[t];
            for (size_t i = 0; i < s->vertices.size(); ++i) {
                std::vector<int> face = s->vertices;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                int f = lowpos.at(face);
                uint32_t sign = (i % 2 == 0) ? 1 : fp.neg(1);
                cols[static_cast<size_t>(f)].push_back({static_cast<int>(t), sign});
            }
        }
        for (SparseVec& c : cols)
            std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
        return cols;
    };
    std::vector<SparseVec> dq = coboundary(sq, posq, sq1);  // delta^q columns, per q-simplex
    std::vector<SparseVec> dqm = q > 0 ? coboundary(sqm, [&] {
        std::map<std::vector<int>, int> m;
        for (size_t i = 0; i < sqm.size(); ++i) m[sqm[i]->vertices] = static_cast<int>(i);
        return m;
    }(), sq)
                                       : std::vector<SparseVec>{};

    int32_t gmin = k.simplices[0].grade[0], gmax = gmin;
    for (const Simplex& s : k.simplices) {
        gmin = std::min(gmin, s.grade[0]);
        gmax = std::max(gmax, s.grade[0]);
    }
    // the module L_z = H^q(union K, K_{-z}) is 0 at z = zlo and constant
    // (identity structure maps) from z = zhi on
    int64_t zlo = -static_cast<int64_t>(gmax) - 1;
    int64_t zhi = -static_cast<int64_t>(gmin) + 1;
    int m = static_cast<int>(zhi - zlo + 1);

    // cocycle bases per z: kernel of delta^q on the active q-simplices
    auto active_q = [&](int64_t z) {
        std::vector<int> v;
        for (size_t s = 0; s < sq.size(); ++s)
            if (sq[s]->grade[0] > -z) v.push_back(static_cast<int>(s));
        return v;
    };
    std::vector<std::vector<SparseVec>> cocycles(static_cast<size_t>(m));
    for (int a = 0; a < m; ++a) {
        std::unordered_map<int, std::pair<SparseVec, SparseVec>> piv;
        for (int s : active_q(zlo + a)) {
            SparseVec v = dq[static_cast<size_t>(s)];
            SparseVec sl = {{s, 1}};
            reduce_by_tracked(fp, piv, v, sl);
            if (v.empty()) {
                cocycles[static_cast<size_t>(a)].push_back(std::move(sl));
            } else {
                uint32_t inv = fp.inv(v.back().val);
                if (inv != 1) {
                    v = scaled(fp, v, inv);
                    sl = scaled(fp, sl, inv);
                }
                int pr = pivot_row(v);
                piv.emplace(pr, std::make_pair(std::move(v), std::move(sl)));
            }
        }
    }

    // r(a, b) = rank of L_a -> L_b = dim(Z_a + B_b) - dim(B_b)
    std::vector<std::vector<int>> r(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
    for (int b = 0; b < m; ++b) {
        std::unordered_map<int, SparseVec> bpiv;
        int dimB = 0;
        if (q > 0)
            for (size_t rho = 0; rho < sqm.size(); ++rho) {
                if (sqm[rho]->grade[0] <= -(zlo + b)) continue;
                SparseVec v = dqm[rho];
                reduce_by(fp, bpiv, v);
                if (!v.empty()) {
                    make_unit_pivot(fp, v);
                    int pr = pivot_row(v);
                bpiv.emplace(pr, std::move(v));
                    ++dimB;
                }
            }
        // reduced cochains: once K_w is empty the augmentation cochain is
        // relative, and its coboundary hits every vertex
        if (q == 0 && -(zlo + b) < gmin) {
            SparseVec v;
            for (int s = 0; s < static_cast<int>(sq.size()); ++s) v.push_back({s, 1});
            reduce_by(fp, bpiv, v);
            if (!v.empty()) {
                make_unit_pivot(fp, v);
                int pr = pivot_row(v);
                bpiv.emplace(pr, std::move(v));
                ++dimB;
            }
        }
        for (int a = 0; a <= b; ++a) {
            std::unordered_map<int, SparseVec> piv = bpiv;
            int extra = 0;
            for (const SparseVec& cyc : cocycles[static_cast<size_t>(a)]) {
                SparseVec v = cyc;
                reduce_by(fp, piv, v);
                if (!v.empty()) {
                    make_unit_pivot(fp, v);
                    int pr = pivot_row(v);
                    piv.emplace(pr, std::move(v));
                    ++extra;
                }
            }
            r[static_cast<size_t>(a)][static_cast<size_t>(b)] = extra;
            (void)dimB;
        }
    }

    for (int a = 1; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            int mult = r[static_cast<size_t>(a)][static_cast<size_t>(b - 1)] -
                       r[static_cast<size_t>(a)][static_cast<size_t>(b)] -
                       r[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)] +
                       r[static_cast<size_t>(a - 1)][static_cast<size_t>(b)];
            if (mult < 0) throw DomainError("negative interval multiplicity");
            if (mult) out.add(zlo + a, zlo + b, mult);
        }
        int unb = r[static_cast<size_t>(a)][static_cast<size_t>(m - 1)] -
                  r[static_cast<size_t>(a - 1)][static_cast<size_t>(m - 1)];
        if (unb < 0) throw DomainError("negative interval multiplicity");
        if (unb) out.add(zlo + a, Interval::kInf, unb);
    }
    out.normalize();
    return out;
}

}  // namespace mpd
