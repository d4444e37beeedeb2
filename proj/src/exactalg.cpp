#include "superfat/exactalg.hpp"

#include <stdexcept>
#include <string>

namespace superfat {

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p <= kMinPrime || p >= (1ULL << 32))
        throw std::invalid_argument("modulus " + std::to_string(p) + " outside (10^6, 2^32)");
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem PrimeField::inv(Elem a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = v % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
}

std::int64_t PrimeField::to_signed(Elem a) const {
    auto v = static_cast<std::int64_t>(a);
    return a > p_ / 2 ? v - static_cast<std::int64_t>(p_) : v;
}

// ---------------------------------------------------------------------------

RowReducer::RowReducer(const PrimeField& field, std::size_t cols) : field_(&field), cols_(cols) {}

void RowReducer::reduce(Vector& row) const {
    const Elem p = field_->modulus();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t piv = pivots_[i];
        const Elem c = row[piv];
        if (c == 0) continue;
        const Elem negc = p - c;
        const Elem* src = rows_[i].data();
        Elem* dst = row.data();
        for (std::size_t k = piv; k < cols_; ++k) dst[k] = (dst[k] + negc * src[k]) % p;
    }
}

bool RowReducer::insert(Vector row) {
    if (static_cast<std::size_t>(row.size()) != cols_) throw std::invalid_argument("row length mismatch");
    if (full()) return false;
    reduce(row);
    std::size_t piv = 0;
    while (piv < cols_ && row[piv] == 0) ++piv;
    if (piv == cols_) return false;
    const Elem s = field_->inv(row[piv]);
    for (std::size_t k = piv; k < cols_; ++k) row[k] = field_->mul(row[k], s);
    rows_.push_back(std::move(row));
    pivots_.push_back(piv);
    return true;
}

bool RowReducer::is_independent(Vector row) const {
    if (full()) return false;
    reduce(row);
    for (Eigen::Index k = 0; k < row.size(); ++k)
        if (row[k] != 0) return true;
    return false;
}

EchelonForm rref(const PrimeField& field, const Matrix& m) {
    Matrix a = m;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    const Elem p = field.modulus();
    EchelonForm out;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index sel = r;
        while (sel < rows && a(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r) a.row(sel).swap(a.row(r));
        const Elem s = field.inv(a(r, c));
        for (Eigen::Index k = c; k < cols; ++k) a(r, k) = field.mul(a(r, k), s);
        for (Eigen::Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Elem negf = p - a(i, c);
            for (Eigen::Index k = c; k < cols; ++k) a(i, k) = (a(i, k) + negf * a(r, k)) % p;
        }
        out.pivots.push_back(static_cast<std::size_t>(c));
        ++r;
    }
    out.reduced = a.topRows(r);
    return out;
}

std::size_t rank(const PrimeField& field, const Matrix& m) {
    RowReducer red(field, static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows() && !red.full(); ++i) red.insert(m.row(i).transpose());
    return red.rank();
}

std::vector<Vector> kernel_basis(const PrimeField& field, const Matrix& m) {
    const EchelonForm e = rref(field, m);
    const auto cols = static_cast<std::size_t>(m.cols());
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v = Vector::Zero(static_cast<Eigen::Index>(cols));
        v[static_cast<Eigen::Index>(free)] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[static_cast<Eigen::Index>(e.pivots[i])] =
                field.neg(e.reduced(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(free)));
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
    const Elem p = field.modulus();
    Matrix out = Matrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const Elem aik = a(i, k);
            if (aik == 0) continue;
            for (Eigen::Index j = 0; j < b.cols(); ++j) out(i, j) = (out(i, j) + aik * b(k, j)) % p;
        }
    return out;
}

Vector multiply(const PrimeField& field, const Matrix& a, const Vector& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("multiply: shape mismatch");
    const Elem p = field.modulus();
    Vector out = Vector::Zero(a.rows());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Elem acc = 0;
        for (Eigen::Index k = 0; k < a.cols(); ++k) acc = (acc + a(i, k) * v[k]) % p;
        out[i] = acc;
    }
    return out;
}

Matrix stack_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<std::size_t>(rows[i].size()) != cols) throw std::invalid_argument("stack_rows: length mismatch");
        m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return m;
}

// ---------------------------------------------------------------------------

ScalarStream::ScalarStream(const PrimeField& field, std::uint64_t seed)
    : field_(&field), engine_(seed) {
    const std::uint64_t p = field.modulus();
    // largest multiple of p representable; draws at or above it are rejected
    limit_ = (~0ULL / p) * p;
}

Elem ScalarStream::next() {
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit_);
    return x % field_->modulus();
}

Elem ScalarStream::next_nonzero() {
    Elem x;
    do {
        x = next();
    } while (x == 0);
    return x;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed ^ (salt + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace superfat
