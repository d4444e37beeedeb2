#include "superfat/horace.hpp"

#include <algorithm>
#include <stdexcept>

namespace superfat {

int trace_degree(const PrimeField& field, const SchemeUnion& u, const LinearForm& r) {
    int t = 0;
    for (const SchemeComponent& c : u.components()) t += trace_degree(field, c, r);
    return t;
}

SchemeUnion residue(const PrimeField& field, const SchemeUnion& u, const LinearForm& r) {
    SchemeUnion out;
    for (const SchemeComponent& c : u.components())
        if (auto res = residue_component(field, c, r)) out.add(field, std::move(*res));
    return out;
}

long line_system_dim(int t, int d) {
    if (t < 0) throw std::invalid_argument("line_system_dim: negative trace");
    return std::max(0L, static_cast<long>(d) + 1 - t);
}

HoraceCheck horace_inequality(const PrimeField& field, const SchemeUnion& u, const LinearForm& r, int d) {
    if (d < 1) throw std::invalid_argument("horace_inequality: degree must be positive");
    HoraceCheck h;
    h.trace = trace_degree(field, u, r);
    h.lhs = ideal_dim(field, u, d);
    h.rhs = ideal_dim(field, residue(field, u, r), d - 1) + line_system_dim(h.trace, d);
    h.holds = h.lhs <= h.rhs;
    h.exact = h.trace >= d + 1;
    return h;
}

bool HoraceStep::ok() const {
    if (trace_degree != expected_trace) return false;
    if (length_after + static_cast<std::size_t>(trace_degree) != length_before) return false;
    if (dim_before > dim_after + line_dim) return false;
    // L * I(Res)_{d-1} always sits inside I(X)_d
    if (dim_before < dim_after) return false;
    return trace_degree < degree + 1 || dim_before == dim_after;
}

namespace {

enum Tag : std::uint64_t { kDispari = 1, kPari, kLemma24, kTriple, kObstruction };

ScalarStream replay_stream(const PrimeField& field, std::uint64_t seed, Tag tag, int d, int s) {
    return ScalarStream(field, mix_seed(mix_seed(seed, tag), static_cast<std::uint64_t>(d) * 1000 + s));
}

struct Lines {
    LinearForm r, m;
    ProjPoint p;
};

Lines coordinate_lines(const PrimeField& field) {
    return {make_line(field, 0, 1, 0), make_line(field, 1, 0, 0), make_point(field, 0, 0, 1)};
}

template <class Make>
void add_redraw(const PrimeField& field, SchemeUnion& u, Make make) {
    for (;;) {
        try {
            u.add(field, make());
            return;
        } catch (const SchemeError&) {
        }
    }
}

// A point of the line {x = 0} or {y = 0} away from P = [0:0:1].
ProjPoint point_on(ScalarStream& s, bool on_m) {
    const Elem t = s.next();
    return on_m ? ProjPoint{{0, 1, t}} : ProjPoint{{1, 0, t}};
}

LinearForm transversal_at(ScalarStream& s, const ProjPoint& pt, const LinearForm& line) {
    for (;;) {
        const LinearForm n = random_line_through(s, pt);
        if (!proportional(s.field(), n.c, line.c)) return n;
    }
}

SchemeComponent square_1a(ScalarStream& s, const ProjPoint& pt, const LinearForm& line) {
    return specialize_1a(s.field(), pt, line, transversal_at(s, pt, line));
}

SchemeComponent square_1b(ScalarStream& s, const ProjPoint& pt, const LinearForm& line, LinearForm* jet_line) {
    const LinearForm n = transversal_at(s, pt, line);
    if (jet_line) *jet_line = n;
    return specialize_1b(s.field(), pt, line, n, s.next_nonzero());
}

// Generic square whose support avoids both coordinate lines.
SchemeComponent square_off_lines(ScalarStream& s) {
    for (;;) {
        const Frame fr = random_frame(s);
        if (fr.support.c[0] != 0 && fr.support.c[1] != 0) return two_square(s.field(), fr);
    }
}

ProjPoint point_off_lines(ScalarStream& s) {
    for (;;) {
        const ProjPoint p = random_point(s);
        if (p.c[0] != 0 && p.c[1] != 0) return p;
    }
}

struct PlannedStep {
    const char* name;
    LinearForm line;
    int expected_trace;
};

// Runs the chain from degree d downward; returns the last residue.
SchemeUnion run_chain(const PrimeField& field, SchemeUnion u, int d, const std::vector<PlannedStep>& plan,
                      std::vector<HoraceStep>& steps) {
    for (const PlannedStep& p : plan) {
        HoraceStep st;
        st.line = p.name;
        st.form = p.line;
        st.degree = d;
        st.expected_trace = p.expected_trace;
        st.trace_degree = trace_degree(field, u, p.line);
        st.output = residue(field, u, p.line);
        st.length_before = u.length();
        st.length_after = st.output.length();
        st.dim_before = ideal_dim(field, u, d);
        st.dim_after = ideal_dim(field, st.output, d - 1);
        st.line_dim = line_system_dim(st.trace_degree, d);
        st.input = std::move(u);
        u = st.output;
        steps.push_back(std::move(st));
        --d;
    }
    return u;
}

void finish(const PrimeField& field, ReductionReport& rep, const SchemeUnion& chain_end) {
    rep.lhs = ideal_dim(field, rep.specialized, rep.d);
    rep.rhs = ideal_dim(field, rep.terminal, rep.terminal_degree);
    bool ok = rep.lhs == rep.rhs;
    for (const HoraceStep& st : rep.steps) ok = ok && st.ok();
    ok = ok && chain_end.length() == rep.terminal.length();
    if (rep.expected >= 0) ok = ok && rep.lhs == rep.expected;
    rep.pass = ok;
}

long theorem_value(int d, int s, int extra) { return expected_dim(static_cast<std::size_t>(4 * s + extra), d); }

}  // namespace

ReductionReport replay_dispari(const PrimeField& field, int d, int s2, std::uint64_t seed) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("replay_dispari: d must be odd and at least 3");
    if (s2 < 0) throw std::invalid_argument("replay_dispari: negative square count");
    const Lines L = coordinate_lines(field);
    const int on_r = (d + 1) / 2;
    ScalarStream s = replay_stream(field, seed, kDispari, d, s2);

    ReductionReport rep;
    rep.lemma = "dispari";
    rep.d = d;
    rep.s = on_r + s2;
    rep.terminal_degree = d - 2;

    ProjPoint p1;
    add_redraw(field, rep.specialized, [&] {
        p1 = point_on(s, false);
        return square_1b(s, p1, L.r, nullptr);
    });
    for (int i = 1; i < on_r; ++i) add_redraw(field, rep.specialized, [&] { return square_1a(s, point_on(s, false), L.r); });
    std::vector<SchemeComponent> generic;
    for (int i = 0; i < s2; ++i) {
        add_redraw(field, rep.specialized, [&] { return square_off_lines(s); });
        generic.push_back(rep.specialized.components().back());
    }

    const SchemeUnion end =
        run_chain(field, rep.specialized, d, {{"r", L.r, d + 1}, {"r", L.r, d}}, rep.steps);

    for (const SchemeComponent& c : generic) rep.terminal.add(field, c);
    rep.terminal.add(field, simple_point(field, p1));
    rep.note = "terminal X2 + P";
    finish(field, rep, end);
    rep.expected = theorem_value(d, rep.s, 0);
    return rep;
}

ReductionReport replay_pari(const PrimeField& field, int d, int s3, std::uint64_t seed) {
    if (d < 6 || d % 2 != 0) throw std::invalid_argument("replay_pari: d must be even and at least 6");
    if (s3 < 0) throw std::invalid_argument("replay_pari: negative square count");
    const Lines L = coordinate_lines(field);
    const int half = d / 2;
    ScalarStream s = replay_stream(field, seed, kPari, d, s3);

    ReductionReport rep;
    rep.lemma = "pari";
    rep.d = d;
    rep.s = d + s3;
    rep.terminal_degree = d - 4;

    // Y with distinguished line r; its first frame line x + g y keeps m = {x = 0}
    // away from the two special directions of the residue.
    Elem g;
    do g = s.next(); while (g == 0 || g == 1);
    rep.specialized.add(field, collision_component(field, Frame{L.p, LinearForm{{1, g, 0}}, L.r}));

    for (int i = 0; i < half - 2; ++i) add_redraw(field, rep.specialized, [&] { return square_1a(s, point_on(s, false), L.r); });
    ProjPoint p1, p2;
    add_redraw(field, rep.specialized, [&] {
        p1 = point_on(s, false);
        return square_1b(s, p1, L.r, nullptr);
    });
    for (int i = 0; i < half - 2; ++i) add_redraw(field, rep.specialized, [&] { return square_1a(s, point_on(s, true), L.m); });
    add_redraw(field, rep.specialized, [&] {
        p2 = point_on(s, true);
        return square_1b(s, p2, L.m, nullptr);
    });
    std::vector<SchemeComponent> generic;
    for (int i = 0; i < s3; ++i) {
        add_redraw(field, rep.specialized, [&] { return square_off_lines(s); });
        generic.push_back(rep.specialized.components().back());
    }

    const SchemeUnion end = run_chain(field, rep.specialized, d,
                                      {{"r", L.r, d + 1}, {"m", L.m, d}, {"r", L.r, d - 1}, {"m", L.m, d - 2}},
                                      rep.steps);

    rep.terminal.add(field, simple_point(field, p1));
    rep.terminal.add(field, simple_point(field, p2));
    for (const SchemeComponent& c : generic) rep.terminal.add(field, c);
    rep.note = "terminal P1 + P2 + X3";
    finish(field, rep, end);
    rep.expected = theorem_value(d, rep.s, 0);
    return rep;
}

std::vector<ReductionReport> replay_lemma24(const PrimeField& field, std::uint64_t seed) {
    const Lines L = coordinate_lines(field);
    const Frame yframe{L.p, L.m, L.r};
    std::vector<ReductionReport> out;

    {
        ScalarStream s = replay_stream(field, seed, kLemma24, 2, 1);
        ReductionReport rep;
        rep.lemma = "24";
        rep.label = "(2,1)";
        rep.d = 2;
        rep.s = 1;
        rep.specialized.add(field, two_square(field, random_frame(s)));
        rep.terminal = rep.specialized;
        rep.terminal_degree = 2;
        rep.expected = 2;
        rep.note = "one square, length 4";
        finish(field, rep, rep.terminal);
        out.push_back(std::move(rep));
    }
    {
        ReductionReport rep;
        rep.lemma = "24";
        rep.label = "(2,2)";
        rep.d = 2;
        rep.s = 2;
        rep.specialized.add(field, collision_component(field, yframe));
        rep.terminal = rep.specialized;
        rep.terminal_degree = 2;
        rep.expected = 0;
        rep.note = "collision Y has no conic";
        finish(field, rep, rep.terminal);
        out.push_back(std::move(rep));
    }
    {
        ScalarStream s = replay_stream(field, seed, kLemma24, 4, 3);
        ReductionReport rep;
        rep.lemma = "24";
        rep.label = "(4,3)";
        rep.d = 4;
        rep.s = 3;
        rep.specialized.add(field, collision_component(field, yframe));
        add_redraw(field, rep.specialized, [&] { return square_1a(s, point_on(s, false), L.r); });
        const SchemeUnion end = run_chain(field, rep.specialized, 4, {{"r", L.r, 5}, {"r", L.r, 4}}, rep.steps);
        rep.terminal.add(field, fat_point(field, L.p, 2));
        rep.terminal_degree = 2;
        rep.expected = 3;
        rep.note = "terminal 2P";
        finish(field, rep, end);
        out.push_back(std::move(rep));
    }
    {
        ScalarStream s = replay_stream(field, seed, kLemma24, 4, 4);
        ReductionReport rep;
        rep.lemma = "24";
        rep.label = "(4,4)";
        rep.d = 4;
        rep.s = 4;
        rep.specialized.add(field, collision_component(field, yframe));
        add_redraw(field, rep.specialized, [&] { return square_1a(s, point_on(s, false), L.r); });
        add_redraw(field, rep.specialized, [&] { return square_off_lines(s); });
        const SchemeUnion mid = run_chain(field, rep.specialized, 4, {{"r", L.r, 5}, {"r", L.r, 4}}, rep.steps);

        // 2P + Z4 in degree 2: move Z4 onto r in position (1.b) and cut once more
        SchemeUnion moved;
        moved.add(field, fat_point(field, L.p, 2));
        ProjPoint p4;
        LinearForm jet;
        add_redraw(field, moved, [&] {
            p4 = point_on(s, false);
            return square_1b(s, p4, L.r, &jet);
        });
        const SchemeUnion end = run_chain(field, moved, 2, {{"r", L.r, 4}}, rep.steps);
        rep.steps.back().respecialized = true;

        rep.terminal.add(field, simple_point(field, L.p));
        rep.terminal.add(field, two_jet(field, p4, jet));
        rep.terminal_degree = 1;
        rep.expected = 0;
        rep.note = "terminal P + Z4' after moving Z4 onto r";
        finish(field, rep, end);
        // the moved union may only be more special than the generic one
        rep.pass = rep.pass && rep.steps[1].dim_after <= rep.steps[2].dim_before && mid.length() == moved.length();
        out.push_back(std::move(rep));
    }
    return out;
}

ReductionReport replay_triple(const PrimeField& field, int d, int s, std::uint64_t seed) {
    if (d < 5) throw std::invalid_argument("replay_triple: d must be at least 5");
    const bool even = d % 2 == 0;
    const int k = even ? d / 2 : (d + 1) / 2;
    const int on_r = even ? k - 1 : k;
    if (s < on_r) throw std::invalid_argument("replay_triple: too few squares for the specialization");
    const Lines L = coordinate_lines(field);
    ScalarStream st = replay_stream(field, seed, kTriple, d, s);

    ReductionReport rep;
    rep.lemma = "triple";
    rep.d = d;
    rep.s = s;
    rep.terminal_degree = d - 2;
    rep.expected = -1;

    for (int i = 0; i < k - 1; ++i) add_redraw(field, rep.specialized, [&] { return square_1a(st, point_on(st, false), L.r); });
    ProjPoint pk, q;
    if (even) {
        add_redraw(field, rep.specialized, [&] {
            q = point_on(st, false);
            return fat_point(field, q, 3);
        });
    } else {
        add_redraw(field, rep.specialized, [&] {
            pk = point_on(st, false);
            return square_1b(st, pk, L.r, nullptr);
        });
        add_redraw(field, rep.specialized, [&] {
            q = point_off_lines(st);
            return fat_point(field, q, 3);
        });
    }
    std::vector<SchemeComponent> generic;
    for (int i = on_r; i < s; ++i) {
        add_redraw(field, rep.specialized, [&] { return square_off_lines(st); });
        generic.push_back(rep.specialized.components().back());
    }

    const SchemeUnion end = run_chain(field, rep.specialized, d, {{"r", L.r, d + 1}, {"r", L.r, d}}, rep.steps);

    if (even) {
        for (const SchemeComponent& c : generic) rep.terminal.add(field, c);
        rep.terminal.add(field, simple_point(field, q));
        rep.note = "terminal Z_k + ... + Z_s + Q";
    } else {
        rep.terminal.add(field, simple_point(field, pk));
        for (const SchemeComponent& c : generic) rep.terminal.add(field, c);
        rep.terminal.add(field, fat_point(field, q, 3));
        rep.note = "terminal P_k + Z_(k+1) + ... + Z_s + 3Q";
    }
    finish(field, rep, end);
    rep.expected = theorem_value(d, s, 6);
    return rep;
}

ObstructionReport naive_specialization(const PrimeField& field, std::uint64_t seed) {
    const Lines L = coordinate_lines(field);
    ScalarStream s = replay_stream(field, seed, kObstruction, 6, 7);
    ObstructionReport rep;
    SchemeUnion u;
    for (int i = 0; i < rep.on_line; ++i) add_redraw(field, u, [&] { return square_1a(s, point_on(s, false), L.r); });
    for (int i = 0; i < rep.generic; ++i) add_redraw(field, u, [&] { return square_off_lines(s); });
    rep.trace = trace_degree(field, u, L.r);
    const SchemeUnion res = residue(field, u, L.r);
    rep.residue_length = res.length();
    rep.residue_space = form_dim(rep.d - 1);
    rep.residue_dim = ideal_dim(field, res, rep.d - 1);
    rep.target = theorem_value(rep.d, rep.on_line + rep.generic, 0);
    rep.obstructed = rep.residue_dim >= 1 && rep.residue_dim > rep.target;
    return rep;
}

}  // namespace superfat
