#pragma once

// Exact dense linear algebra over a prime field F_p.
//
// Entries are stored as unsigned 64-bit integers in [0, p) inside ordinary
// Eigen containers; every arithmetic step goes through a PrimeField, which
// carries the (runtime) modulus. The modulus is restricted to p < 2^32 so a
// product of two residues plus a residue never overflows 64 bits.

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace superfat {

using Elem = std::uint64_t;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Elem>;
using Vector = VectorX<Elem>;

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;  // 2^31 - 1
inline constexpr std::uint64_t kMinPrime = 1000000ULL;

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

class PrimeField {
public:
    /// Throws std::invalid_argument unless p is a prime with 10^6 < p < 2^32.
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const { return p_; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    /// a + b*c mod p
    Elem fma(Elem a, Elem b, Elem c) const { return (a + b * c) % p_; }
    Elem pow(Elem a, std::uint64_t e) const;
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Reduces a signed integer into [0, p).
    Elem from_int(std::int64_t v) const;
    /// Symmetric representative in (-p/2, p/2], handy for printing small values.
    std::int64_t to_signed(Elem a) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

/// Incremental row echelon basis. Each stored row is monic at its pivot and
/// has zeros at the pivots of all rows stored before it.
class RowReducer {
public:
    RowReducer(const PrimeField& field, std::size_t cols);

    /// Reduces `row` against the stored basis; stores it and returns true if
    /// it was independent.
    bool insert(Vector row);
    /// Same as insert but leaves the basis untouched.
    bool is_independent(Vector row) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    bool full() const { return rows_.size() == cols_; }

private:
    void reduce(Vector& row) const;

    const PrimeField* field_;
    std::size_t cols_;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

struct EchelonForm {
    Matrix reduced;                   // reduced row echelon form, rank rows
    std::vector<std::size_t> pivots;  // pivot column per row
};

EchelonForm rref(const PrimeField& field, const Matrix& m);

std::size_t rank(const PrimeField& field, const Matrix& m);

/// Basis of {v : m v = 0}; exactly cols - rank vectors, one per free column.
std::vector<Vector> kernel_basis(const PrimeField& field, const Matrix& m);

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b);
Vector multiply(const PrimeField& field, const Matrix& a, const Vector& v);

/// Stacks vectors as the rows of a matrix with `cols` columns.
Matrix stack_rows(const std::vector<Vector>& rows, std::size_t cols);

/// Reproducible stream of uniform field elements. Uses rejection sampling on
/// top of mt19937_64 so the sequence is identical on every platform.
class ScalarStream {
public:
    ScalarStream(const PrimeField& field, std::uint64_t seed);

    Elem next();
    Elem next_nonzero();

    const PrimeField& field() const { return *field_; }

private:
    const PrimeField* field_;
    std::mt19937_64 engine_;
    std::uint64_t limit_;
};

/// splitmix64 finalizer; used to derive independent per-job seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace superfat
