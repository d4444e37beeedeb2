// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Reference values are recomputed here from closed formulas or literal ideals.

#include "superfat/horace.hpp"
#include "superfat/interp.hpp"
#include "superfat/postulation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace superfat;

namespace {

constexpr std::uint64_t kSeed = 0;
constexpr std::uint64_t kAltPrime = 1000003;

long binom2(int n) { return n < 2 ? 0 : static_cast<long>(n) * (n - 1) / 2; }

// max{0, C(d+2,2) - 4s - extra}
long target(int d, int s, int extra) { return std::max(0L, binom2(d + 2) - 4L * s - extra); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

void info(const std::string& line) { std::printf("       %s\n", line.c_str()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct SweepOutcome {
    bool ok = true;
    std::size_t rows = 0;
    double secs = 0;
    std::string first_bad;
    std::vector<Certificate> certs;
};

SweepOutcome run_sweep(const PrimeField& f, int d_max, bool triple) {
    SweepOutcome o;
    const auto t0 = std::chrono::steady_clock::now();
    o.certs = sweep({f}, d_max, SweepMode::Full, triple ? Extras{{3}} : Extras{}, 3, kSeed, 0);
    o.secs = seconds_since(t0);
    o.rows = o.certs.size();
    for (const Certificate& c : o.certs) {
        const bool exceptional = triple && c.d == 3 && c.s == 1;
        const long want = exceptional ? 1 : target(c.d, c.s, triple ? 6 : 0);
        const Status status = exceptional ? Status::ExceptionalMatch : Status::Certified;
        if (c.computed != want || c.status != status || c.trials_used > 3) {
            o.ok = false;
            if (o.first_bad.empty())
                o.first_bad = "d=" + std::to_string(c.d) + " s=" + std::to_string(c.s) + " computed " +
                              std::to_string(c.computed) + " want " + std::to_string(want);
        }
    }
    // rows must cover 1 <= s <= s_upper + 2 for every degree
    std::size_t want_rows = 0;
    for (int d = 1; d <= d_max; ++d) {
        const long room = binom2(d + 2) - (triple ? 6 : 0);
        want_rows += static_cast<std::size_t>(room <= 0 ? 2 : (room + 3) / 4 + 2);
    }
    o.ok = o.ok && o.rows == want_rows;
    return o;
}

std::string sweep_detail(const SweepOutcome& o) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu rows, %.2f s%s%s", o.rows, o.secs, o.first_bad.empty() ? "" : ", first mismatch ",
                  o.first_bad.c_str());
    return buf;
}

// ---------------------------------------------------------------------------

void criterion_1_2(const PrimeField& f, std::vector<Certificate>& plain, std::vector<Certificate>& triple) {
    const SweepOutcome a = run_sweep(f, 20, false);
    report(1, "generic 2-squares, all d <= 20 and s <= s_upper + 2", a.ok && a.secs < 60.0, sweep_detail(a));
    plain = a.certs;
    const SweepOutcome b = run_sweep(f, 20, true);
    report(2, "2-squares plus a triple point, same range", b.ok && b.secs < 60.0, sweep_detail(b));
    triple = b.certs;
}

// Generators written out literally in x, y (local chart z = 1).
LocalPoly lp(const PrimeField& f, std::initializer_list<std::tuple<std::int64_t, int, int>> t) { return make_local(f, t); }

FormVec form(const PrimeField& f, int d, std::initializer_list<Term> t) { return make_form(f, d, t); }

bool colon_equal(const PrimeField& f, const std::vector<FormVec>& gens, const std::vector<FormVec>& target_gens,
                 int max_degree) {
    const LinearForm y = make_line(f, 0, 1, 0);
    for (int e = 0; e <= max_degree; ++e)
        if (!same_span(f, colon_piece(f, ideal_piece(f, gens, e + 1), y, e), ideal_piece(f, target_gens, e), e))
            return false;
    return true;
}

void criterion_3(const PrimeField& f) {
    bool ok = true;
    std::string detail;

    const std::vector<std::pair<std::string, std::pair<std::vector<LocalPoly>, std::size_t>>> duals{
        {"square", {{lp(f, {{1, 2, 0}}), lp(f, {{1, 0, 2}})}, 4}},
        {"Y", {{lp(f, {{1, 2, 1}, {-1, 1, 2}}), lp(f, {{1, 3, 0}, {-1, 0, 3}}), lp(f, {{1, 0, 4}})}, 8}},
        {"Res Y", {{lp(f, {{1, 2, 0}, {-1, 1, 1}}), lp(f, {{1, 1, 2}}), lp(f, {{1, 0, 3}})}, 5}},
        {"2P", {{lp(f, {{1, 2, 0}}), lp(f, {{1, 1, 1}}), lp(f, {{1, 0, 2}})}, 3}},
        {"3P", {{lp(f, {{1, 3, 0}}), lp(f, {{1, 2, 1}}), lp(f, {{1, 1, 2}}), lp(f, {{1, 0, 3}})}, 6}},
    };
    detail += "duals";
    for (const auto& [name, spec] : duals) {
        const std::size_t n = macaulay_dual(f, spec.first).size();
        ok = ok && n == spec.second;
        detail += " " + name + "=" + std::to_string(n);
    }

    const auto x2 = form(f, 2, {{1, {2, 0, 0}}});
    const auto y2 = form(f, 2, {{1, {0, 2, 0}}});
    const auto xy = form(f, 2, {{1, {1, 1, 0}}});
    const FormVec x = form(f, 1, {{1, {1, 0, 0}}});
    const FormVec y = form(f, 1, {{1, {0, 1, 0}}});
    const std::vector<FormVec> yideal{form(f, 3, {{1, {2, 1, 0}}, {-1, {1, 2, 0}}}), form(f, 3, {{1, {3, 0, 0}}, {-1, {0, 3, 0}}}),
                                      form(f, 4, {{1, {0, 4, 0}}})};
    const std::vector<FormVec> res{form(f, 2, {{1, {2, 0, 0}}, {-1, {1, 1, 0}}}), form(f, 3, {{1, {1, 2, 0}}}),
                                   form(f, 3, {{1, {0, 3, 0}}})};
    const bool c1 = colon_equal(f, {x2, y2}, {x2, y}, 8);
    const bool c2 = colon_equal(f, {form(f, 2, {{1, {2, 0, 0}}, {-2, {1, 1, 0}}, {1, {0, 2, 0}}}),
                                    form(f, 2, {{1, {2, 0, 0}}, {2, {1, 1, 0}}, {1, {0, 2, 0}}})},
                                {x, y2}, 8);
    const bool c3 = colon_equal(f, yideal, res, 8);
    const bool c4 = colon_equal(f, res, {x2, xy, y2}, 8);
    ok = ok && c1 && c2 && c3 && c4;
    detail += std::string(", colons ") + (c1 && c2 && c3 && c4 ? "4/4" : "FAILED");

    const Frame std_frame = standard_frame(f);
    const LinearForm r = make_line(f, 0, 1, 0);
    const SchemeComponent yc = collision_component(f, std_frame);
    const SchemeComponent rc = collision_residue_component(f, std_frame);
    const int t_y = trace_degree(f, yc, r);
    const int t_res = trace_degree(f, rc, r);
    ok = ok && t_y == 3 && numeric_trace_degree(f, yc, r, 10) == 3;
    ok = ok && t_res == 2 && numeric_trace_degree(f, rc, r, 10) == 2;
    std::string alphas;
    for (std::int64_t a : {0, -1, 1, 2, 3, 17, -5}) {
        const LinearForm m = make_line(f, 1, a, 0);
        const int sym = trace_degree(f, rc, m);
        const int num = numeric_trace_degree(f, rc, m, 10);
        const int want = (a == 0 || a == -1) ? 3 : 2;
        ok = ok && sym == want && num == want;
        alphas += " " + std::to_string(a) + ":" + std::to_string(num);
    }
    detail += ", traces Y=" + std::to_string(t_y) + " ResY=" + std::to_string(t_res) + " on m (alpha:trace)" + alphas;
    report(3, "local chain of the square and collision schemes", ok, detail);
}

void criterion_4(const PrimeField& f) {
    const ObstructionReport o = naive_specialization(f, kSeed);
    const bool ok = o.trace == 8 && o.residue_length == 20 && o.residue_space == 21 && o.residue_dim >= 1 &&
                    o.target == 0 && o.obstructed;
    report(4, "four squares (1.a) on a line in degree 6 are obstructed", ok,
           "trace " + std::to_string(o.trace) + ", residue length " + std::to_string(o.residue_length) +
               " < dim S_5 = " + std::to_string(o.residue_space) + ", dim I(Res)_5 = " + std::to_string(o.residue_dim) +
               ", generic target " + std::to_string(o.target));
}

void criterion_5(const PrimeField& f) {
    int total = 0, passed = 0;
    std::string bad;
    auto take = [&](const ReductionReport& r, bool extra_ok) {
        ++total;
        // both sides of the terminal equality are rank computations; recheck them here
        const bool sides = r.lhs == ideal_dim(f, r.specialized, r.d) && r.rhs == ideal_dim(f, r.terminal, r.terminal_degree);
        if (r.pass && sides && extra_ok)
            ++passed;
        else if (bad.empty())
            bad = " first failure " + r.lemma + " d=" + std::to_string(r.d) + " s=" + std::to_string(r.s);
    };

    const std::vector<long> stated{2, 0, 3, 0};
    const auto l24 = replay_lemma24(f, kSeed);
    for (std::size_t i = 0; i < l24.size(); ++i) take(l24[i], l24[i].lhs == stated[i]);

    for (int d : {3, 5, 7, 9, 11}) {
        const SquareCountBounds b = s_star_bounds(d, 0);
        for (int s : {b.lower, b.upper}) {
            const ReductionReport r = replay_dispari(f, d, s - (d + 1) / 2, kSeed);
            take(r, r.lhs == target(d, s, 0));
        }
    }
    for (int d : {6, 8, 10, 12}) {
        const SquareCountBounds b = s_star_bounds(d, 0);
        for (int s : {b.lower, b.upper}) {
            const ReductionReport r = replay_pari(f, d, s - d, kSeed);
            std::vector<int> tr;
            for (const HoraceStep& st : r.steps) tr.push_back(st.trace_degree);
            take(r, r.lhs == target(d, s, 0) && tr == std::vector<int>{d + 1, d, d - 1, d - 2});
        }
    }
    for (int d = 5; d <= 12; ++d) {
        const SquareCountBounds b = s_star_bounds(d, 6);
        for (int s : {b.lower, b.upper}) {
            const ReductionReport r = replay_triple(f, d, s, kSeed);
            take(r, r.lhs == target(d, s, 6));
        }
    }
    report(5, "Horace replays (initial cases, odd, even, triple point)", passed == total,
           std::to_string(passed) + "/" + std::to_string(total) + " reports pass" + bad);
}

void criterion_6(const PrimeField& f) {
    bool ok = true;
    std::string detail;
    int strict = 0;
    for (auto [s, d] : std::vector<std::pair<int, int>>{{3, 4}, {5, 5}, {9, 7}}) {
        const DoublePointReport r = verify_double_points(f, s, d, 100, kSeed);
        const long want_dim = target(d, s, 0);
        ok = ok && r.dim == want_dim && r.pass;
        int symmetric = 0;
        for (const SupportCounts& c : r.supports) symmetric += c.by_tag[static_cast<std::size_t>(SingularityTag::SymmetricNode)];
        if (r.strict) ++strict;
        detail += " (" + std::to_string(s) + "," + std::to_string(d) + "): dim " + std::to_string(r.dim) +
                  (r.strict ? ", " + std::to_string(symmetric) + "/" + std::to_string(100 * s) +
                                  " symmetric nodes, drops " + (r.tangent_drop_ok ? "1" : "x") + "/" +
                                  (r.triple_drop_ok ? "2" : "x")
                            : ", " + (r.note.empty() ? std::string("reported") : r.note)) +
                  ";";
    }
    ok = ok && strict >= 1;
    report(6, "double points of curves through generic squares", ok, detail);
    // further instances in the dim >= 2 branch
    for (auto [s, d] : std::vector<std::pair<int, int>>{{5, 6}, {9, 8}, {2, 3}}) {
        const DoublePointReport r = verify_double_points(f, s, d, 100, kSeed);
        info("(" + std::to_string(s) + "," + std::to_string(d) + ") dim " + std::to_string(r.dim) +
             (r.pass ? " pass" : " FAIL"));
    }
}

void criterion_7(const PrimeField& f, const std::vector<Certificate>& plain, const std::vector<Certificate>& triple) {
    ScalarStream s(f, 7007);
    bool invariance = true;
    for (int t = 0; t < 20; ++t) {
        ProjChange phi;
        do {
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) phi.a(i, j) = s.next();
        } while (determinant(f, phi) == 0);
        const SchemeUnion u = random_union(s, 1 + t % 6, t % 2 ? Extras{{3}} : Extras{});
        const SchemeUnion v = transport(f, u, phi);
        for (int d = 1; d <= 8; ++d) invariance = invariance && ideal_dim(f, u, d) == ideal_dim(f, v, d);
    }

    bool monotone = true;
    for (int t = 0; t < 50; ++t) {
        const int d = 2 + t % 8;
        SchemeUnion u = random_union(s, t % 5, Extras{});
        const long before = ideal_dim(f, u, d);
        try {
            u.add(f, t % 2 ? two_square(f, random_frame(s)) : fat_point(f, random_point(s), 1 + t % 3));
        } catch (const SchemeError&) {
            continue;
        }
        monotone = monotone && ideal_dim(f, u, d) <= before;
    }

    bool hilbert = true;
    for (int t = 0; t < 30; ++t) {
        const SchemeUnion u = random_union(s, t % 8, t % 3 ? Extras{} : Extras{{3}});
        for (int d = 0; d <= 10; ++d)
            hilbert = hilbert && hilbert_function(f, u, d) + ideal_dim(f, u, d) == binom2(d + 2);
    }

    const PrimeField alt(kAltPrime);
    bool cross = true;
    std::size_t compared = 0;
    for (bool with_triple : {false, true}) {
        const auto& base = with_triple ? triple : plain;
        const auto other = sweep({alt}, 12, SweepMode::Full, with_triple ? Extras{{3}} : Extras{}, 3, kSeed, 0);
        for (const Certificate& c : other) {
            const auto it = std::find_if(base.begin(), base.end(), [&](const Certificate& b) { return b.d == c.d && b.s == c.s; });
            cross = cross && it != base.end() && it->computed == c.computed && it->status == c.status;
            ++compared;
        }
    }

    report(7, "invariance, monotonicity, Hilbert identity, second prime", invariance && monotone && hilbert && cross,
           std::string("transports ") + (invariance ? "ok" : "FAILED") + ", monotone " + (monotone ? "ok" : "FAILED") +
               ", H+dim " + (hilbert ? "ok" : "FAILED") + ", p=" + std::to_string(kAltPrime) + " on " +
               std::to_string(compared) + " rows " + (cross ? "agrees" : "DISAGREES"));
}

}  // namespace

int main() {
    const PrimeField f;
    std::printf("# prime=%llu seed=%llu trials=3\n", static_cast<unsigned long long>(f.modulus()),
                static_cast<unsigned long long>(kSeed));
    std::vector<Certificate> plain, triple;
    const std::vector<std::function<void()>> criteria{
        [&] { criterion_1_2(f, plain, triple); },
        [&] { criterion_3(f); },
        [&] { criterion_4(f); },
        [&] { criterion_5(f); },
        [&] { criterion_6(f); },
        [&] { criterion_7(f, plain, triple); },
    };
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            std::printf("[FAIL] exception: %s\n", e.what());
            ++failures;
        }
    }
    std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
