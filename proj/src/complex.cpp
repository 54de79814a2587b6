#include "mpd/complex.hpp"

#include <algorithm>
#include <map>

namespace mpd {

const std::vector<Grade> FreeComplex::kNoGens;

FreeComplex::FreeComplex(int params, uint32_t p, int lo, std::vector<std::vector<Grade>> gens,
                         std::vector<GradedMatrix> diffs)
    : params_(params), p_(p), lo_(lo), hi_(lo + static_cast<int>(gens.size()) - 1),
      gens_(std::move(gens)), diffs_(std::move(diffs)) {
    if (!gens_.empty() && diffs_.size() + 1 != gens_.size())
        throw DomainError("free complex needs one differential less than degrees");
}

int FreeComplex::rank(int d) const { return static_cast<int>(gens(d).size()); }

int FreeComplex::total_rank() const {
    int r = 0;
    for (int d = lo_; d <= hi_; ++d) r += rank(d);
    return r;
}

const std::vector<Grade>& FreeComplex::gens(int d) const {
    if (d < lo_ || d > hi_) return kNoGens;
    return gens_[static_cast<size_t>(d - lo_)];
}

const GradedMatrix& FreeComplex::stored_diff(int d) const {
    return diffs_[static_cast<size_t>(d - lo_ - 1)];
}

GradedMatrix FreeComplex::diff(int d) const {
    if (has_stored_diff(d)) return stored_diff(d);
    return GradedMatrix(p_, gens(d - 1), gens(d));
}

void FreeComplex::validate() const {
    for (int d = lo_; d <= hi_; ++d)
        for (const Grade& g : gens(d))
            if (g.size() != params_)
                throw DomainError("generator grade length differs from parameter count");
    for (int d = lo_ + 1; d <= hi_; ++d) {
        const GradedMatrix& m = stored_diff(d);
        if (m.p() != p_) throw DomainError("differential characteristic mismatch");
        if (m.row_grades() != gens(d - 1) || m.col_grades() != gens(d))
            throw DomainError("differential grades disagree with generator lists in degree " +
                              std::to_string(d));
        if (!m.is_valid()) throw DomainError("invalid differential in degree " + std::to_string(d));
    }
    for (int d = lo_ + 2; d <= hi_; ++d)
        if (!GradedMatrix::compose(stored_diff(d - 1), stored_diff(d)).is_zero())
            throw DomainError("boundary squared nonzero between degrees " + std::to_string(d) +
                              " and " + std::to_string(d - 2));
}

void Multifiltration::validate() const {
    std::map<std::vector<int>, const Simplex*> index;
    for (const Simplex& s : simplices) {
        if (s.vertices.empty()) throw FiltrationError("empty simplex");
        if (!std::is_sorted(s.vertices.begin(), s.vertices.end()) ||
            std::adjacent_find(s.vertices.begin(), s.vertices.end()) != s.vertices.end())
            throw FiltrationError("simplex vertices must be sorted and distinct");
        if (s.vertices.front() < 0) throw FiltrationError("negative vertex id");
        if (s.grade.size() != params)
            throw FiltrationError("simplex grade length differs from parameter count");
        if (!index.emplace(s.vertices, &s).second)
            throw FiltrationError("duplicate simplex (one-criticality violated)");
    }
    for (const Simplex& s : simplices) {
        if (s.dim() == 0) continue;
        for (size_t i = 0; i < s.vertices.size(); ++i) {
            std::vector<int> face = s.vertices;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            auto it = index.find(face);
            if (it == index.end()) throw FiltrationError("missing face of a simplex");
            if (!grade_leq(it->second->grade, s.grade))
                throw FiltrationError("face enters the filtration after its coface");
        }
    }
}

FreeComplex chain_complex(const Multifiltration& k, uint32_t p, bool reduced) {
    k.validate();
    if (k.simplices.empty()) throw FiltrationError("empty filtration");

    int dim = 0;
    for (const Simplex& s : k.simplices) dim = std::max(dim, s.dim());

    // simplex -> index within its dimension, in input order
    std::vector<std::vector<const Simplex*>> by_dim(static_cast<size_t>(dim) + 1);
    std::map<std::vector<int>, int> pos;
    for (const Simplex& s : k.simplices) {
        auto& bucket = by_dim[static_cast<size_t>(s.dim())];
        pos[s.vertices] = static_cast<int>(bucket.size());
        bucket.push_back(&s);
    }

    int lo = reduced ? -1 : 0;
    std::vector<std::vector<Grade>> gens(static_cast<size_t>(dim - lo) + 1);
    if (reduced) {
        Grade g0 = by_dim[0][0]->grade;
        for (const Simplex* v : by_dim[0]) g0 = meet(g0, v->grade);
        bool found = std::any_of(by_dim[0].begin(), by_dim[0].end(),
                                 [&](const Simplex* v) { return v->grade == g0; });
        if (!found)
            throw AugmentationError("no vertex at the meet of all vertex grades " + g0.str());
        gens[0] = {g0};
    }
    for (int d = 0; d <= dim; ++d)
        for (const Simplex* s : by_dim[static_cast<size_t>(d)])
            gens[static_cast<size_t>(d - lo)].push_back(s->grade);

    Fp fp(p);
    std::vector<GradedMatrix> diffs;
    for (int d = lo + 1; d <= dim; ++d) {
        GradedMatrix m(p, gens[static_cast<size_t>(d - 1 - lo)], gens[static_cast<size_t>(d - lo)]);
        for (int j = 0; j < static_cast<int>(by_dim[static_cast<size_t>(d)].size()); ++j) {
            const Simplex* s = by_dim[static_cast<size_t>(d)][static_cast<size_t>(j)];
            if (d == 0) {
                m.set_entry(0, j, 1);  // augmentation
                continue;
            }
            for (size_t i = 0; i < s->vertices.size(); ++i) {
                std::vector<int> face = s->vertices;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m.set_entry(pos.at(face), j, (i % 2 == 0) ? 1 : -1);
            }
        }
        (void)fp;
        diffs.push_back(std::move(m));
    }

    FreeComplex c(k.params, p, lo, std::move(gens), std::move(diffs));
    c.validate();
    return c;
}

FreeComplex dagger(const FreeComplex& c) {
    if (c.empty()) return FreeComplex(c.params(), c.p());
    Grade one = Grade::ones(c.params());
    std::vector<std::vector<Grade>> gens(static_cast<size_t>(c.hi() - c.lo()) + 1);
    std::vector<GradedMatrix> diffs;
    // degree -d of the result comes from degree d of the input
    for (int e = -c.hi(); e <= -c.lo(); ++e) {
        std::vector<Grade>& gs = gens[static_cast<size_t>(e + c.hi())];
        for (const Grade& g : c.gens(-e)) gs.push_back(one - g);
    }
    for (int e = -c.hi() + 1; e <= -c.lo(); ++e) {
        // D_e -> D_{e-1} is the dual of C_{-e+1} -> C_{-e}
        diffs.push_back(c.stored_diff(-e + 1).transpose().shifted(-one));
    }
    FreeComplex d(c.params(), c.p(), -c.hi(), std::move(gens), std::move(diffs));
    d.validate();
    return d;
}

FreeComplex shift_homological(const FreeComplex& c, int i) {
    if (c.empty()) return c;
    std::vector<std::vector<Grade>> gens;
    std::vector<GradedMatrix> diffs;
    for (int d = c.lo(); d <= c.hi(); ++d) gens.push_back(c.gens(d));
    for (int d = c.lo() + 1; d <= c.hi(); ++d) diffs.push_back(c.stored_diff(d));
    return FreeComplex(c.params(), c.p(), c.lo() - i, std::move(gens), std::move(diffs));
}

FreeComplex shift_graded(const FreeComplex& c, const Grade& z) {
    if (c.empty()) return c;
    std::vector<std::vector<Grade>> gens;
    std::vector<GradedMatrix> diffs;
    for (int d = c.lo(); d <= c.hi(); ++d) {
        std::vector<Grade> gs;
        for (const Grade& g : c.gens(d)) gs.push_back(g - z);
        gens.push_back(std::move(gs));
    }
    for (int d = c.lo() + 1; d <= c.hi(); ++d) diffs.push_back(c.stored_diff(d).shifted(z));
    return FreeComplex(c.params(), c.p(), c.lo(), std::move(gens), std::move(diffs));
}

namespace {

// all size-d subsets of {1,...,n}, lexicographic
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

Grade indicator(int n, const std::vector<int>& s) {
    Grade g = Grade::zero(n);
    for (int i : s) g[i - 1] = 1;
    return g;
}

}  // namespace

FreeComplex koszul(int n, uint32_t p) {
    if (n < 1) throw DomainError("koszul complex needs at least one parameter");
    std::vector<std::vector<std::vector<int>>> subs;
    std::vector<std::vector<Grade>> gens;
    std::map<std::vector<int>, int> pos;
    for (int d = 0; d <= n; ++d) {
        subs.push_back(subsets(n, d));
        std::vector<Grade> gs;
        for (int i = 0; i < static_cast<int>(subs.back().size()); ++i) {
            pos[subs.back()[static_cast<size_t>(i)]] = i;
            gs.push_back(indicator(n, subs.back()[static_cast<size_t>(i)]));
        }
        gens.push_back(std::move(gs));
    }
    std::vector<GradedMatrix> diffs;
    for (int d = 1; d <= n; ++d) {
        GradedMatrix m(p, gens[static_cast<size_t>(d - 1)], gens[static_cast<size_t>(d)]);
        for (int j = 0; j < static_cast<int>(subs[static_cast<size_t>(d)].size()); ++j) {
            const std::vector<int>& s = subs[static_cast<size_t>(d)][static_cast<size_t>(j)];
            for (int t = 0; t < d; ++t) {
                std::vector<int> face = s;
                face.erase(face.begin() + t);
                // sign (-1)^{(t+1)+d}; reproduces (1 1) and (1,-1)^T for N=2
                m.set_entry(pos.at(face), j, ((t + 1 + d) % 2 == 0) ? 1 : -1);
            }
        }
        diffs.push_back(std::move(m));
    }
    FreeComplex c(n, p, 0, std::move(gens), std::move(diffs));
    c.validate();
    return c;
}

}  // namespace mpd
