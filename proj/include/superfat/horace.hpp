#pragma once

// Trace and residue calculus on unions, and instance replays of the Horace
// reductions used for 2-squares with and without a triple point.
//
// Replays use r = {y = 0}, m = {x = 0} and P = [0:0:1]. Every reduction is
// checked numerically: the left side is dim I(X)_d of the specialized union
// and the right side is the rank engine applied to an independently built
// terminal union.

#include "superfat/postulation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace superfat {

int trace_degree(const PrimeField& field, const SchemeUnion& u, const LinearForm& r);
SchemeUnion residue(const PrimeField& field, const SchemeUnion& u, const LinearForm& r);

/// Forms of degree d on a line vanishing on a trace of length t.
long line_system_dim(int t, int d);

struct HoraceCheck {
    long lhs = 0;  // dim I(X)_d
    long rhs = 0;  // dim I(Res)_{d-1} + line_system_dim(trace, d)
    int trace = 0;
    bool holds = false;
    bool exact = false;  // trace >= d + 1, so the two sides must agree
};
HoraceCheck horace_inequality(const PrimeField& field, const SchemeUnion& u, const LinearForm& r, int d);

struct HoraceStep {
    std::string line;  // "r" or "m"
    LinearForm form;
    int degree = 0;  // degree of the input; the residue is read in degree - 1
    int trace_degree = 0;
    int expected_trace = 0;
    std::size_t length_before = 0;
    std::size_t length_after = 0;
    long dim_before = 0;
    long dim_after = 0;
    long line_dim = 0;
    bool respecialized = false;  // input was moved to special position before this step
    SchemeUnion input;
    SchemeUnion output;

    bool ok() const;
};

struct ReductionReport {
    std::string lemma;
    std::string label;  // case description, e.g. "(4,3)"
    int d = 0;
    int s = 0;
    std::vector<HoraceStep> steps;
    SchemeUnion specialized;
    SchemeUnion terminal;
    int terminal_degree = 0;
    long lhs = 0;
    long rhs = 0;
    long expected = -1;  // stated value, -1 if none
    bool pass = false;
    std::string note;
};

/// d odd >= 3: (d+1)/2 squares on r, the first in position (1.b), plus s2
/// generic squares. Two steps on r; terminal X2 + P in degree d - 2.
ReductionReport replay_dispari(const PrimeField& field, int d, int s2, std::uint64_t seed);

/// d even >= 6: collision Y at r ∩ m, d/2 - 1 squares on r, d/2 - 1 on m, s3
/// generic squares. Steps r, m, r, m; terminal P1 + P2 + X3 in degree d - 4.
ReductionReport replay_pari(const PrimeField& field, int d, int s3, std::uint64_t seed);

/// The cases (d, s) = (2,1), (2,2), (4,3), (4,4) with stated dimensions 2, 0, 3, 0.
std::vector<ReductionReport> replay_lemma24(const PrimeField& field, std::uint64_t seed);

/// d >= 5, s squares plus a triple point. Even d = 2k: k - 1 squares (1.a) and
/// the triple point on r. Odd d = 2k - 1: k - 1 squares (1.a) and one (1.b)
/// on r, triple point generic. Two steps on r.
ReductionReport replay_triple(const PrimeField& field, int d, int s, std::uint64_t seed);

struct ObstructionReport {
    int d = 6;
    int on_line = 4;
    int generic = 3;
    int trace = 0;
    std::size_t residue_length = 0;
    std::size_t residue_space = 0;  // dim S_{d-1}
    long residue_dim = 0;
    long target = 0;  // generic dim I(X)_d
    bool obstructed = false;  // residue_dim >= 1 > target
};
/// Four squares (1.a) on r and three generic squares in degree 6.
ObstructionReport naive_specialization(const PrimeField& field, std::uint64_t seed);

}  // namespace superfat
