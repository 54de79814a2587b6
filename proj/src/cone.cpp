#include "mpd/cone.hpp"

#include <algorithm>
#include <map>

namespace mpd {

namespace {

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

ConeThreshold default_zeta(const FreeComplex& c) {
    if (c.total_rank() == 0) throw DomainError("threshold of an empty complex");
    Grade z;
    bool first = true;
    for (int d = c.lo(); d <= c.hi(); ++d)
        for (const Grade& g : c.gens(d)) {
            z = first ? g : join(z, g);
            first = false;
        }
    return {z};
}

FreeComplex cone_complex(const FreeComplex& c, const ConeThreshold& t) {
    int n = c.params();
    if (t.zeta.size() != n) throw DimensionError("threshold grade length mismatch");
    for (int d = c.lo(); d <= c.hi(); ++d)
        for (const Grade& g : c.gens(d))
            if (!grade_leq(g, t.zeta))
                throw DomainError("threshold " + t.zeta.str() +
                                  " does not dominate generator grade " + g.str());
    if (c.empty()) return c;
    Fp fp(c.p());
    Grade bump = t.zeta + Grade::ones(n);

    // enumerate subsets by |S| then lexicographically
    std::vector<std::vector<int>> all;
    for (int s = 0; s <= n; ++s)
        for (auto& sub : subsets(n, s)) all.push_back(sub);

    int lo = c.lo(), hi = c.hi() + n;
    // block offsets: block (d, S-index) -> first generator position in cone degree d
    std::vector<std::vector<Grade>> gens(static_cast<size_t>(hi - lo) + 1);
    std::vector<std::vector<int>> offs(static_cast<size_t>(hi - lo) + 1,
                                       std::vector<int>(all.size(), -1));
    for (int d = lo; d <= hi; ++d) {
        for (size_t si = 0; si < all.size(); ++si) {
            const std::vector<int>& s = all[si];
            int i = d - static_cast<int>(s.size());
            if (c.rank(i) == 0) continue;
            offs[static_cast<size_t>(d - lo)][si] = static_cast<int>(gens[static_cast<size_t>(d - lo)].size());
            for (const Grade& g : c.gens(i))
                gens[static_cast<size_t>(d - lo)].push_back(join_masked(g, bump, s));
        }
    }

    std::vector<GradedMatrix> diffs;
    for (int d = lo + 1; d <= hi; ++d) {
        GradedMatrix m(c.p(), gens[static_cast<size_t>(d - 1 - lo)], gens[static_cast<size_t>(d - lo)]);
        for (size_t si = 0; si < all.size(); ++si) {
            const std::vector<int>& s = all[si];
            int i = d - static_cast<int>(s.size());
            int co = offs[static_cast<size_t>(d - lo)][si];
            if (co < 0) continue;
            // horizontal block: the original differential, unchanged
            int ro = offs[static_cast<size_t>(d - 1 - lo)][si];
            if (ro >= 0 && c.has_stored_diff(i)) {
                const GradedMatrix& dc = c.stored_diff(i);
                for (int j = 0; j < dc.num_cols(); ++j)
                    for (const Entry& e : dc.col(j)) m.set_entry(ro + e.row, co + j, e.val);
            }
            // vertical blocks: inclusions dropping one axis of S, signed
            // (-1)^{i} * (-1)^{position of the dropped axis}
            for (size_t jpos = 0; jpos < s.size(); ++jpos) {
                std::vector<int> face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(jpos));
                auto it = std::find(all.begin(), all.end(), face);
                int fi = static_cast<int>(it - all.begin());
                int ro2 = offs[static_cast<size_t>(d - 1 - lo)][static_cast<size_t>(fi)];
                if (ro2 < 0) continue;
                int64_t sign = ((i + static_cast<int>(jpos) + 1) % 2 == 0) ? 1 : -1;
                for (int j = 0; j < c.rank(i); ++j) m.set_entry(ro2 + j, co + j, sign);
            }
        }
        diffs.push_back(std::move(m));
    }

    FreeComplex out(n, c.p(), lo, std::move(gens), std::move(diffs));
    out.validate();
    return out;
}

FreeComplex restrict(const FreeComplex& c, const ConeThreshold& t) {
    if (c.empty()) return c;
    std::vector<std::vector<int>> keep(static_cast<size_t>(c.hi() - c.lo()) + 1);
    std::vector<std::vector<Grade>> gens(keep.size());
    for (int d = c.lo(); d <= c.hi(); ++d) {
        const std::vector<Grade>& gs = c.gens(d);
        for (size_t i = 0; i < gs.size(); ++i)
            if (grade_leq(gs[i], t.zeta)) {
                keep[static_cast<size_t>(d - c.lo())].push_back(static_cast<int>(i));
                gens[static_cast<size_t>(d - c.lo())].push_back(gs[i]);
            }
    }
    std::vector<GradedMatrix> diffs;
    for (int d = c.lo() + 1; d <= c.hi(); ++d) {
        const std::vector<int>& kr = keep[static_cast<size_t>(d - 1 - c.lo())];
        const std::vector<int>& kc = keep[static_cast<size_t>(d - c.lo())];
        std::map<int, int> rowpos;
        for (size_t i = 0; i < kr.size(); ++i) rowpos[kr[i]] = static_cast<int>(i);
        GradedMatrix m(c.p(), gens[static_cast<size_t>(d - 1 - c.lo())],
                       gens[static_cast<size_t>(d - c.lo())]);
        const GradedMatrix& src = c.stored_diff(d);
        for (size_t j = 0; j < kc.size(); ++j)
            for (const Entry& e : src.col(kc[j]))
                if (auto it = rowpos.find(e.row); it != rowpos.end())
                    m.set_entry(it->second, static_cast<int>(j), e.val);
        diffs.push_back(std::move(m));
    }
    // trim empty degrees at both ends
    int a = 0, b = static_cast<int>(gens.size()) - 1;
    while (a <= b && gens[static_cast<size_t>(a)].empty()) ++a;
    while (b >= a && gens[static_cast<size_t>(b)].empty()) --b;
    if (a > b) return FreeComplex(c.params(), c.p());
    std::vector<std::vector<Grade>> tg(gens.begin() + a, gens.begin() + b + 1);
    std::vector<GradedMatrix> td(diffs.begin() + a, diffs.begin() + b);
    return FreeComplex(c.params(), c.p(), c.lo() + a, std::move(tg), std::move(td));
}

BettiTable restrict(const BettiTable& b, const ConeThreshold& t) {
    BettiTable out;
    for (const auto& [d, gs] : b.rows)
        for (const Grade& g : gs)
            if (grade_leq(g, t.zeta)) out.add(d, g);
    out.normalize();
    return out;
}

GridBox default_box(const FreeComplex& c, const ConeThreshold& t) {
    if (c.total_rank() == 0) throw DomainError("default box of an empty complex");
    Grade m;
    bool first = true;
    for (int d = c.lo(); d <= c.hi(); ++d)
        for (const Grade& g : c.gens(d)) {
            m = first ? g : meet(m, g);
            first = false;
        }
    return GridBox(m - Grade::ones(c.params()), t.zeta + Grade::constant(c.params(), 2));
}

}  // namespace mpd
