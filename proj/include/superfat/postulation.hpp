#pragma once

// Dimension engine and one-sided certificates of generic good postulation.
//
// A random placement can only make dim I(X)_d larger than the generic value,
// and the generic value is never below the expected max{0, dim S_d - length}.
// So a single random placement attaining the expected value certifies the
// generic one; a miss proves nothing and is reported as INCONCLUSIVE.

#include "superfat/schemes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace superfat {

long ideal_dim(const PrimeField& field, const SchemeUnion& u, int d);
long hilbert_function(const PrimeField& field, const SchemeUnion& u, int d);

long expected_dim(std::size_t length, int d);
long expected_dim(const SchemeUnion& u, int d);

struct SquareCountBounds {
    int lower;  // floor((dim S_d - extra) / 4)
    int upper;  // ceil((dim S_d - extra) / 4)
};
SquareCountBounds s_star_bounds(int d, int extra_length);

/// Components added to the s random 2-squares, given by fat multiplicities
/// (1 is a simple point, 3 a triple point).
struct Extras {
    std::vector<int> fat;

    int length() const;
    bool empty() const { return fat.empty(); }
};

/// Generic-position union: s 2-squares with random frames plus the extras at
/// random points. Coincident supports are redrawn.
SchemeUnion random_union(ScalarStream& stream, int s, const Extras& extras);

enum class Status { Certified, Inconclusive, ExceptionalMatch };
std::string to_string(Status s);

/// Known failure of the expected value: one 2-square plus a triple point in
/// degree 3 has a unique cubic (the cube of the line through both supports).
std::optional<long> exceptional_target(int d, int s, const Extras& extras);

struct Certificate {
    int d = 0;
    int s = 0;
    int extra_length = 0;
    long expected = 0;
    long computed = 0;
    int trials_used = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> primes;
    Status status = Status::Inconclusive;

    bool ok() const { return status != Status::Inconclusive; }
};

/// Draws up to `trials` random unions per prime. The stream for trial t is
/// seeded from (seed, d, s, t), so a row can be re-run on its own. With
/// several primes the row is certified only if every prime certifies it.
Certificate certify_generic(const std::vector<PrimeField>& fields, int d, int s, const Extras& extras, int trials,
                            std::uint64_t seed);
Certificate certify_generic(const PrimeField& field, int d, int s, const Extras& extras, int trials,
                            std::uint64_t seed);

enum class SweepMode { Critical, Full };

/// Rows ordered by (d, s). Critical mode runs s in {lower, upper}; full mode
/// runs 1 <= s <= upper + 2. Rows are computed on `jobs` threads (0 = all cores).
std::vector<Certificate> sweep(const std::vector<PrimeField>& fields, int d_max, SweepMode mode, const Extras& extras,
                               int trials, std::uint64_t seed, unsigned jobs = 1);

/// The (d, s) rows a sweep visits, in output order.
std::vector<std::pair<int, int>> sweep_rows(int d_max, SweepMode mode, int extra_length);

}  // namespace superfat
