#pragma once

// Local 0-dimensional schemes in P^2 and the linear conditions they impose.
//
// Every component is placed by a Frame: a support point P and two independent
// lines (L1, L2) through P. Writing u = L1, w = L2 and choosing a third
// coordinate t with t(P) != 0, the component is described in the affine chart
// t = 1 by an ideal of F_p[u, w] supported at the origin:
//
//   SimplePoint     (u, w)
//   FatPoint(m)     (u, w)^m
//   TwoJet          (u, w^2)           the jet lies on the line L1
//   TwoSquare       (u^2, w^2)
//   LocalDual       given by a Macaulay inverse system (contraction action)
//
// A form f of degree d lies in I(component)_d iff its local expansion at P
// pairs to zero with every dual functional; condition_rows returns those
// functionals as rows over the degree-d monomial basis.

#include "superfat/polyring.hpp"

#include <memory>
#include <optional>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superfat {

class SchemeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Polynomial in two affine variables, sum of coef * u^a w^b.
struct LocalTerm {
    Elem coef;
    int a;
    int b;
};
using LocalPoly = std::vector<LocalTerm>;

LocalPoly make_local(const PrimeField& field, std::initializer_list<std::tuple<std::int64_t, int, int>> terms);
/// Sets z = 1 in a form.
LocalPoly dehomogenize(const FormVec& f);

/// Inverse system of the ideal generated by `generators`: all dual polynomials
/// of degree <= bound killed by contraction with every element of the ideal.
/// bound < 0 means the sum of generator degrees. Throws SchemeError if the
/// dual dimension has not stabilized by `bound`.
std::vector<LocalPoly> macaulay_dual(const PrimeField& field, const std::vector<LocalPoly>& generators,
                                     int bound = -1);

struct Frame {
    ProjPoint support;
    LinearForm first;
    LinearForm second;
};

/// Throws SchemeError unless both lines pass through the support and are distinct.
void validate_frame(const PrimeField& field, const Frame& frame);

/// Standard frame: support [0:0:1], lines x and y.
Frame standard_frame(const PrimeField& field);

/// Deterministic frame at a point, built from coordinate lines.
Frame default_frame(const PrimeField& field, const ProjPoint& support);

/// Coefficients (a, b) with line = a*first + b*second; the line must pass
/// through the support.
std::pair<Elem, Elem> frame_coordinates(const PrimeField& field, const Frame& frame, const LinearForm& line);

enum class Kind { SimplePoint, FatPoint, TwoJet, TwoSquare, LocalDual };

enum class LocalTag {
    Collision,          // limit of two colliding 2-squares, length 8
    CollisionResidue,   // residue of the collision by L2, length 5
    Custom,
};

struct LocalDualScheme {
    LocalTag tag = LocalTag::Custom;
    std::vector<LocalPoly> dual_basis;
    int max_degree = 0;
};

class SchemeComponent {
public:
    Kind kind() const { return kind_; }
    const ProjPoint& support() const { return frame_.support; }
    const Frame& frame() const { return frame_; }
    int multiplicity() const { return multiplicity_; }
    /// Line containing a TwoJet (its frame's first line).
    const LinearForm& jet_line() const { return frame_.first; }
    const LocalDualScheme& local() const { return *local_; }

    std::size_t length() const;
    std::string describe() const;

    friend SchemeComponent simple_point(const PrimeField&, const ProjPoint&);
    friend SchemeComponent fat_point(const PrimeField&, const ProjPoint&, int);
    friend SchemeComponent two_jet(const PrimeField&, const ProjPoint&, const LinearForm&);
    friend SchemeComponent two_square(const PrimeField&, const Frame&);
    friend SchemeComponent local_dual(const PrimeField&, const Frame&, LocalDualScheme);

private:
    SchemeComponent() = default;

    Kind kind_ = Kind::SimplePoint;
    Frame frame_;
    int multiplicity_ = 1;
    std::shared_ptr<const LocalDualScheme> local_;
};

SchemeComponent simple_point(const PrimeField& field, const ProjPoint& support);
/// m == 1 yields a SimplePoint.
SchemeComponent fat_point(const PrimeField& field, const ProjPoint& support, int m);
SchemeComponent two_jet(const PrimeField& field, const ProjPoint& support, const LinearForm& containing_line);
SchemeComponent two_square(const PrimeField& field, const Frame& frame);
SchemeComponent local_dual(const PrimeField& field, const Frame& frame, LocalDualScheme scheme);

/// Local generators of the collision scheme Y: (u^2 w - u w^2, u^3 - w^3, w^4).
std::vector<LocalPoly> collision_generators(const PrimeField& field);
/// Local generators of its residue by w: (u^2 - u w, u w^2, w^3).
std::vector<LocalPoly> collision_residue_generators(const PrimeField& field);

SchemeComponent collision_component(const PrimeField& field, const Frame& frame);
SchemeComponent collision_residue_component(const PrimeField& field, const Frame& frame);

/// 2-square on the line r at a point of r: frame (n, r), residue is a jet in r.
SchemeComponent specialize_1a(const PrimeField& field, const ProjPoint& support, const LinearForm& r,
                              const LinearForm& transversal);
/// 2-square on r with frame lines (n - c r, n + c r), symmetric about r.
SchemeComponent specialize_1b(const PrimeField& field, const ProjPoint& support, const LinearForm& r,
                              const LinearForm& transversal, Elem c);

/// Local expansion rows: for every (a, b) with a + b <= order, the functional
/// on S_d returning the coefficient of u^a w^b of f in the frame's chart.
struct JetRows {
    int order = 0;
    Matrix rows;
    static std::size_t index(int a, int b);  // graded: (0,0),(1,0),(0,1),(2,0),(1,1),(0,2),...
};
JetRows jet_rows(const PrimeField& field, const Frame& frame, int d, int order);

/// Rows whose common kernel is I(c)_d.
Matrix condition_rows(const PrimeField& field, const SchemeComponent& c, int d);

/// Residue with respect to a line. Returns the component unchanged if its
/// support is off the line, std::nullopt if the residue is empty. Throws
/// SchemeError for placements whose residue is not catalogued.
std::optional<SchemeComponent> residue_component(const PrimeField& field, const SchemeComponent& c,
                                                 const LinearForm& r);

/// Length of the schematic intersection with the line (0 off the line).
int trace_degree(const PrimeField& field, const SchemeComponent& c, const LinearForm& r);

class SchemeUnion {
public:
    SchemeUnion() = default;

    /// Throws SchemeError if the support coincides with an existing one.
    void add(const PrimeField& field, SchemeComponent c);

    const std::vector<SchemeComponent>& components() const { return components_; }
    std::size_t size() const { return components_.size(); }
    std::size_t length() const;

private:
    std::vector<SchemeComponent> components_;
};

/// Stacked condition rows of all components.
Matrix condition_matrix(const PrimeField& field, const SchemeUnion& u, int d);

/// Basis of I(c)_d, the kernel of the condition rows.
std::vector<FormVec> ideal_piece(const PrimeField& field, const SchemeComponent& c, int d);
std::vector<FormVec> ideal_piece(const PrimeField& field, const SchemeUnion& u, int d);

/// Moves every frame by the coordinate change (a form f vanishes on the new
/// scheme iff pullback(f, phi) vanishes on the old one).
SchemeComponent transport(const PrimeField& field, const SchemeComponent& c, const ProjChange& phi);
SchemeUnion transport(const PrimeField& field, const SchemeUnion& u, const ProjChange& phi);

/// Numeric trace length: dim S_d - dim(I(c)_d + L S_{d-1}), valid for d >= length.
int numeric_trace_degree(const PrimeField& field, const SchemeComponent& c, const LinearForm& r, int d);

/// True iff condition rows of the symbolic residue cut out colon_piece(I(c)_{e+1}, r, e)
/// for all e in [0, max_degree).
bool residue_matches_colon(const PrimeField& field, const SchemeComponent& c, const LinearForm& r, int max_degree);

/// Random placement helpers drawing from a seeded stream.
ProjPoint random_point(ScalarStream& stream);
/// Random line through the point.
LinearForm random_line_through(ScalarStream& stream, const ProjPoint& pt);
Frame random_frame(ScalarStream& stream);
Frame random_frame_at(ScalarStream& stream, const ProjPoint& pt);

}  // namespace superfat
