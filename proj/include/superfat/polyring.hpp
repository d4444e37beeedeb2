#pragma once

// The graded ring S = F_p[x, y, z].
//
// Monomials of a fixed degree d are ordered lexicographically with x > y > z:
// x^d, x^{d-1}y, x^{d-1}z, x^{d-2}y^2, ..., z^d. Every coefficient vector,
// condition row and serialized form in this project uses that order.

#include "superfat/exactalg.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace superfat {

struct Monomial {
    int x = 0;
    int y = 0;
    int z = 0;

    constexpr int degree() const { return x + y + z; }
    bool operator==(const Monomial&) const = default;
};

/// dim S_d = C(d+2, 2)
constexpr std::size_t form_dim(int d) {
    return d < 0 ? 0 : static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d + 2) / 2;
}

std::vector<Monomial> monomial_basis(int d);

/// Position of `m` inside monomial_basis(m.degree()).
constexpr std::size_t monomial_index(const Monomial& m) {
    const int d = m.degree();
    const auto k = static_cast<std::size_t>(d - m.x);
    return k * (k + 1) / 2 + static_cast<std::size_t>(d - m.x - m.y);
}

/// Homogeneous form of a fixed degree, as a coefficient vector.
struct FormVec {
    int degree = 0;
    Vector coeffs;

    static FormVec zero(int d);
    static FormVec monomial(int d, const Monomial& m);

    Elem coeff(const Monomial& m) const { return coeffs[static_cast<Eigen::Index>(monomial_index(m))]; }
    bool is_zero() const;
    bool operator==(const FormVec& o) const { return degree == o.degree && coeffs == o.coeffs; }
};

struct Term {
    std::int64_t coef;
    Monomial mono;
};

/// Builds a form from integer-coefficient terms, e.g. {{1, {2,0,0}}, {-1, {0,2,0}}} is x^2 - y^2.
FormVec make_form(const PrimeField& field, int d, std::initializer_list<Term> terms);

FormVec add(const PrimeField& field, const FormVec& f, const FormVec& g);
FormVec scale(const PrimeField& field, Elem c, const FormVec& f);
FormVec multiply(const PrimeField& field, const FormVec& f, const FormVec& g);
FormVec power(const PrimeField& field, const FormVec& f, int e);

struct LinearForm {
    std::array<Elem, 3> c{};  // c[0] x + c[1] y + c[2] z

    FormVec as_form() const;
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

struct ProjPoint {
    std::array<Elem, 3> c{};

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
};

LinearForm make_line(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c);
ProjPoint make_point(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c);

/// Pairing L(P); zero iff P lies on the line.
Elem evaluate(const PrimeField& field, const LinearForm& l, const ProjPoint& pt);
Elem evaluate(const PrimeField& field, const FormVec& f, const ProjPoint& pt);

/// Cross product; used for join of points, meet of lines and proportionality tests.
std::array<Elem, 3> cross(const PrimeField& field, const std::array<Elem, 3>& a, const std::array<Elem, 3>& b);
bool proportional(const PrimeField& field, const std::array<Elem, 3>& a, const std::array<Elem, 3>& b);

/// Line through two distinct points.
LinearForm join(const PrimeField& field, const ProjPoint& p, const ProjPoint& q);
/// Intersection point of two distinct lines.
ProjPoint meet(const PrimeField& field, const LinearForm& l, const LinearForm& m);

/// Projective coordinate change x_i -> sum_j a(i,j) x_j, acting on forms by
/// substitution: pullback(f)(v) = f(a v).
struct ProjChange {
    Eigen::Matrix<Elem, 3, 3, Eigen::RowMajor> a;

    static ProjChange identity();
    /// Rows of the matrix are the images of x, y, z.
    static ProjChange from_images(const LinearForm& x_img, const LinearForm& y_img, const LinearForm& z_img);
};

Elem determinant(const PrimeField& field, const ProjChange& phi);
/// Throws std::domain_error if the matrix is singular.
ProjChange inverse(const PrimeField& field, const ProjChange& phi);
/// compose(phi, psi) pulls back by phi first, then by psi.
ProjChange compose(const PrimeField& field, const ProjChange& phi, const ProjChange& psi);

FormVec pullback(const PrimeField& field, const FormVec& f, const ProjChange& phi);

/// Image of a line (as a degree-1 form) under pullback.
LinearForm pullback(const PrimeField& field, const LinearForm& l, const ProjChange& phi);
/// Point q with pullback(f)(q) == f(pt), i.e. a^{-1} pt.
ProjPoint transport(const PrimeField& field, const ProjPoint& pt, const ProjChange& phi);

/// Matrix of S_e -> S_{e+1}, f -> L f, in the monomial bases.
Matrix mult_by_linear(const PrimeField& field, const LinearForm& l, int e);

/// Basis of the degree-d piece of the ideal generated by `generators`.
std::vector<FormVec> ideal_piece(const PrimeField& field, const std::vector<FormVec>& generators, int d);

/// Basis of {f in S_e : L f in span(piece)}, where piece lives in S_{e+1}.
std::vector<FormVec> colon_piece(const PrimeField& field, const std::vector<FormVec>& piece,
                                 const LinearForm& l, int e);

/// Rank of a list of forms of the same degree.
std::size_t span_dim(const PrimeField& field, const std::vector<FormVec>& forms, int d);
/// True iff both lists span the same subspace of S_d.
bool same_span(const PrimeField& field, const std::vector<FormVec>& a, const std::vector<FormVec>& b, int d);
/// Independent subset spanning the same subspace as `forms`.
std::vector<FormVec> reduce_to_basis(const PrimeField& field, const std::vector<FormVec>& forms, int d);

std::string to_string(const PrimeField& field, const FormVec& f);

}  // namespace superfat
