#include "mpd/io.hpp"

#include <algorithm>
#include <sstream>

namespace mpd {

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

// Content lines with comments stripped and surrounding whitespace trimmed.
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = raw.find_last_not_of(" \t\r");
        out.push_back({number, raw.substr(a, b - a + 1)});
    }
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int64_t to_int(const Line& ln, const std::string& t) {
    size_t pos = 0;
    int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        fail(ln.number, "expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) fail(ln.number, "expected an integer, got '" + t + "'");
    return v;
}

uint32_t checked_prime(const Line& ln, int64_t p) {
    if (p < 2) fail(ln.number, "field order must be a prime >= 2");
    try {
        Fp fp(static_cast<uint32_t>(p));
    } catch (const DomainError&) {
        fail(ln.number, "field order " + std::to_string(p) + " is not prime");
    }
    return static_cast<uint32_t>(p);
}

Grade parse_grade(const Line& ln, const std::vector<std::string>& ts, size_t from, int n) {
    Grade g = Grade::zero(n);
    for (int i = 0; i < n; ++i) g[i] = static_cast<int32_t>(to_int(ln, ts[from + static_cast<size_t>(i)]));
    return g;
}

}  // namespace

Multifiltration parse_filtration(const std::string& text, uint32_t* p_out) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty document, expected 'mpfil <N> <p>' header");
    std::vector<std::string> head = tokens(lines[0].text);
    if (head.size() != 3 || head[0] != "mpfil")
        fail(lines[0].number, "expected header 'mpfil <N> <p>'");
    int n = static_cast<int>(to_int(lines[0], head[1]));
    if (n < 1) fail(lines[0].number, "parameter count must be positive");
    uint32_t p = checked_prime(lines[0], to_int(lines[0], head[2]));
    if (p_out) *p_out = p;

    Multifiltration k;
    k.params = n;
    for (size_t li = 1; li < lines.size(); ++li) {
        const Line& ln = lines[li];
        std::vector<std::string> ts = tokens(ln.text);
        if (static_cast<int>(ts.size()) < n + 2 || ts[static_cast<size_t>(n)] != ";")
            fail(ln.number, "expected '<g1> ... <gN> ; <v0> ...'");
        Simplex s;
        s.grade = parse_grade(ln, ts, 0, n);
        for (size_t t = static_cast<size_t>(n) + 1; t < ts.size(); ++t) {
            int64_t v = to_int(ln, ts[t]);
            if (v < 0) fail(ln.number, "vertex ids must be nonnegative");
            s.vertices.push_back(static_cast<int>(v));
        }
        k.simplices.push_back(std::move(s));
    }
    if (k.simplices.empty()) throw ParseError("filtration has no simplices");
    k.validate();
    return k;
}

std::string serialize_filtration(const Multifiltration& k, uint32_t p) {
    std::ostringstream out;
    out << "mpfil " << k.params << ' ' << p << '\n';
    for (const Simplex& s : k.simplices) {
        for (int i = 0; i < k.params; ++i) out << s.grade[i] << ' ';
        out << ';';
        for (int v : s.vertices) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

FreeComplex parse_complex(const std::string& text, bool verify) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty document, expected 'fcc <N> <p> <lo> <hi>' header");
    std::vector<std::string> head = tokens(lines[0].text);
    if (head.size() != 5 || head[0] != "fcc")
        fail(lines[0].number, "expected header 'fcc <N> <p> <lo> <hi>'");
    int n = static_cast<int>(to_int(lines[0], head[1]));
    if (n < 1) fail(lines[0].number, "parameter count must be positive");
    uint32_t p = checked_prime(lines[0], to_int(lines[0], head[2]));
    int lo = static_cast<int>(to_int(lines[0], head[3]));
    int hi = static_cast<int>(to_int(lines[0], head[4]));
    if (hi < lo) {
        if (lines.size() > 1) fail(lines[1].number, "content after an empty complex header");
        return FreeComplex(n, p);
    }

    size_t li = 1;
    std::vector<std::vector<Grade>> gens;
    for (int d = lo; d <= hi; ++d) {
        if (li >= lines.size()) throw ParseError("unexpected end of file, expected 'gens " +
                                                 std::to_string(d) + ":'");
        const Line& ln = lines[li];
        std::vector<std::string> ts = tokens(ln.text);
        if (ts.size() != 2 || ts[0] != "gens" || ts[1] != std::to_string(d) + ":")
            fail(ln.number, "expected 'gens " + std::to_string(d) + ":'");
        ++li;
        std::vector<Grade> gs;
        while (li < lines.size()) {
            std::vector<std::string> gt = tokens(lines[li].text);
            if (gt[0] == "gens" || gt[0] == "map") break;
            if (static_cast<int>(gt.size()) != n)
                fail(lines[li].number, "expected a grade tuple of " + std::to_string(n) + " integers");
            gs.push_back(parse_grade(lines[li], gt, 0, n));
            ++li;
        }
        gens.push_back(std::move(gs));
    }

    std::vector<GradedMatrix> diffs;
    for (int d = lo + 1; d <= hi; ++d) {
        if (li >= lines.size())
            throw ParseError("unexpected end of file, expected 'map " + std::to_string(d) + "'");
        const Line& ln = lines[li];
        std::vector<std::string> ts = tokens(ln.text);
        if (ts.size() != 2 || ts[0] != "map" || ts[1] != std::to_string(d))
            fail(ln.number, "expected 'map " + std::to_string(d) + "'");
        ++li;
        const std::vector<Grade>& rg = gens[static_cast<size_t>(d - 1 - lo)];
        const std::vector<Grade>& cg = gens[static_cast<size_t>(d - lo)];
        GradedMatrix m(p, rg, cg);
        for (int j = 0; j < static_cast<int>(cg.size()); ++j) {
            if (li >= lines.size())
                throw ParseError("unexpected end of file, expected 'col " + std::to_string(j) + ":'");
            const Line& cl = lines[li];
            std::vector<std::string> ct = tokens(cl.text);
            if (ct.size() < 2 || ct[0] != "col" || ct[1] != std::to_string(j) + ":")
                fail(cl.number, "expected 'col " + std::to_string(j) + ":'");
            int prev = -1;
            for (size_t t = 2; t < ct.size(); ++t) {
                size_t colon = ct[t].find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == ct[t].size())
                    fail(cl.number, "expected '<row>:<coeff>', got '" + ct[t] + "'");
                int64_t i = to_int(cl, ct[t].substr(0, colon));
                int64_t c = to_int(cl, ct[t].substr(colon + 1));
                if (i < 0 || i >= static_cast<int64_t>(rg.size()))
                    fail(cl.number, "row index " + std::to_string(i) + " out of range in map " +
                                        std::to_string(d));
                if (c < 1 || c >= p)
                    fail(cl.number, "coefficient " + std::to_string(c) + " outside [1, " +
                                        std::to_string(p) + ")");
                if (static_cast<int>(i) <= prev) fail(cl.number, "rows must be strictly ascending");
                if (verify && !grade_leq(rg[static_cast<size_t>(i)], cg[static_cast<size_t>(j)]))
                    fail(cl.number, "map " + std::to_string(d) + " entry (" + std::to_string(i) +
                                        ", " + std::to_string(j) +
                                        "): row grade does not precede column grade");
                prev = static_cast<int>(i);
                m.set_entry(static_cast<int>(i), j, c);
            }
            ++li;
        }
        diffs.push_back(std::move(m));
    }
    if (li < lines.size()) fail(lines[li].number, "trailing content");

    FreeComplex c(n, p, lo, std::move(gens), std::move(diffs));
    if (verify) c.validate();
    return c;
}

std::string serialize_complex(const FreeComplex& c) {
    std::ostringstream out;
    out << "fcc " << c.params() << ' ' << c.p() << ' ' << c.lo() << ' ' << c.hi() << '\n';
    for (int d = c.lo(); d <= c.hi(); ++d) {
        out << "gens " << d << ":\n";
        for (const Grade& g : c.gens(d)) {
            for (int i = 0; i < c.params(); ++i) out << (i ? " " : "") << g[i];
            out << '\n';
        }
    }
    for (int d = c.lo() + 1; d <= c.hi(); ++d) {
        out << "map " << d << '\n';
        GradedMatrix m = c.diff(d);
        for (int j = 0; j < m.num_cols(); ++j) {
            out << "col " << j << ':';
            for (const Entry& e : m.col(j)) out << ' ' << e.row << ':' << e.val;
            out << '\n';
        }
    }
    return out.str();
}

std::string emit_betti(const BettiTable& t, int params) {
    std::ostringstream out;
    out << "degree";
    for (int i = 1; i <= params; ++i) out << ",g" << i;
    out << ",multiplicity\n";
    for (const auto& [d, gs] : t.rows) {
        std::vector<Grade> sorted = gs;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size();) {
            size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            out << d;
            for (int q = 0; q < params; ++q) out << ',' << sorted[i][q];
            out << ',' << (j - i) << '\n';
            i = j;
        }
    }
    return out.str();
}

std::string emit_hilbert(const HilbertFunction& h) {
    int n = h.box.params();
    std::ostringstream out;
    out << 'd';
    for (int i = 1; i <= n; ++i) out << ",z" << i;
    out << ",dim\n";
    for (const auto& [d, dims] : h.values)
        for (int64_t idx = 0; idx < h.box.size(); ++idx) {
            Grade z = h.box.at(idx);
            out << d;
            for (int i = 0; i < n; ++i) out << ',' << z[i];
            out << ',' << dims[static_cast<size_t>(idx)] << '\n';
        }
    return out.str();
}

std::string emit_barcode(const Barcode& b, int degree) {
    std::vector<Interval> sorted = b.intervals;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    out << "degree,birth,death\n";
    for (const Interval& iv : sorted) {
        out << degree << ',' << iv.b << ',';
        if (iv.bounded())
            out << iv.d;
        else
            out << "inf";
        out << '\n';
    }
    return out.str();
}

}  // namespace mpd
