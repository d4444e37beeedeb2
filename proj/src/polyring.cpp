#include "superfat/polyring.hpp"

#include <sstream>
#include <stdexcept>

namespace superfat {

std::vector<Monomial> monomial_basis(int d) {
    if (d < 0) throw std::invalid_argument("monomial_basis: negative degree");
    std::vector<Monomial> out;
    out.reserve(form_dim(d));
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

FormVec FormVec::zero(int d) {
    return FormVec{d, Vector::Zero(static_cast<Eigen::Index>(form_dim(d)))};
}

FormVec FormVec::monomial(int d, const Monomial& m) {
    if (m.degree() != d) throw std::invalid_argument("FormVec::monomial: degree mismatch");
    FormVec f = zero(d);
    f.coeffs[static_cast<Eigen::Index>(monomial_index(m))] = 1;
    return f;
}

bool FormVec::is_zero() const {
    for (Eigen::Index i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    return true;
}

FormVec make_form(const PrimeField& field, int d, std::initializer_list<Term> terms) {
    FormVec f = FormVec::zero(d);
    for (const Term& t : terms) {
        if (t.mono.degree() != d) throw std::invalid_argument("make_form: term of wrong degree");
        auto i = static_cast<Eigen::Index>(monomial_index(t.mono));
        f.coeffs[i] = field.add(f.coeffs[i], field.from_int(t.coef));
    }
    return f;
}

FormVec add(const PrimeField& field, const FormVec& f, const FormVec& g) {
    if (f.degree != g.degree) throw std::invalid_argument("add: degree mismatch");
    FormVec h = f;
    for (Eigen::Index i = 0; i < h.coeffs.size(); ++i) h.coeffs[i] = field.add(h.coeffs[i], g.coeffs[i]);
    return h;
}

FormVec scale(const PrimeField& field, Elem c, const FormVec& f) {
    FormVec h = f;
    for (Eigen::Index i = 0; i < h.coeffs.size(); ++i) h.coeffs[i] = field.mul(c, h.coeffs[i]);
    return h;
}

FormVec multiply(const PrimeField& field, const FormVec& f, const FormVec& g) {
    const auto fb = monomial_basis(f.degree);
    const auto gb = monomial_basis(g.degree);
    FormVec h = FormVec::zero(f.degree + g.degree);
    const Elem p = field.modulus();
    for (std::size_t i = 0; i < fb.size(); ++i) {
        const Elem fi = f.coeffs[static_cast<Eigen::Index>(i)];
        if (fi == 0) continue;
        for (std::size_t j = 0; j < gb.size(); ++j) {
            const Elem gj = g.coeffs[static_cast<Eigen::Index>(j)];
            if (gj == 0) continue;
            const Monomial m{fb[i].x + gb[j].x, fb[i].y + gb[j].y, fb[i].z + gb[j].z};
            Elem& slot = h.coeffs[static_cast<Eigen::Index>(monomial_index(m))];
            slot = (slot + fi * gj) % p;
        }
    }
    return h;
}

FormVec power(const PrimeField& field, const FormVec& f, int e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    FormVec r = FormVec::monomial(0, {0, 0, 0});
    for (int i = 0; i < e; ++i) r = multiply(field, r, f);
    return r;
}

FormVec LinearForm::as_form() const {
    FormVec f = FormVec::zero(1);
    f.coeffs << c[0], c[1], c[2];
    return f;
}

LinearForm make_line(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c) {
    return LinearForm{{field.from_int(a), field.from_int(b), field.from_int(c)}};
}

ProjPoint make_point(const PrimeField& field, std::int64_t a, std::int64_t b, std::int64_t c) {
    return ProjPoint{{field.from_int(a), field.from_int(b), field.from_int(c)}};
}

Elem evaluate(const PrimeField& field, const LinearForm& l, const ProjPoint& pt) {
    Elem acc = 0;
    for (int i = 0; i < 3; ++i) acc = field.fma(acc, l.c[i], pt.c[i]);
    return acc;
}

Elem evaluate(const PrimeField& field, const FormVec& f, const ProjPoint& pt) {
    const auto basis = monomial_basis(f.degree);
    Elem acc = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Elem c = f.coeffs[static_cast<Eigen::Index>(i)];
        if (c == 0) continue;
        Elem term = field.mul(c, field.pow(pt.c[0], static_cast<std::uint64_t>(basis[i].x)));
        term = field.mul(term, field.pow(pt.c[1], static_cast<std::uint64_t>(basis[i].y)));
        term = field.mul(term, field.pow(pt.c[2], static_cast<std::uint64_t>(basis[i].z)));
        acc = field.add(acc, term);
    }
    return acc;
}

std::array<Elem, 3> cross(const PrimeField& f, const std::array<Elem, 3>& a, const std::array<Elem, 3>& b) {
    return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])),
            f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
            f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

bool proportional(const PrimeField& field, const std::array<Elem, 3>& a, const std::array<Elem, 3>& b) {
    const auto c = cross(field, a, b);
    return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

LinearForm join(const PrimeField& field, const ProjPoint& p, const ProjPoint& q) {
    LinearForm l{cross(field, p.c, q.c)};
    if (l.is_zero()) throw std::invalid_argument("join: points coincide");
    return l;
}

ProjPoint meet(const PrimeField& field, const LinearForm& l, const LinearForm& m) {
    ProjPoint p{cross(field, l.c, m.c)};
    if (p.is_zero()) throw std::invalid_argument("meet: lines coincide");
    return p;
}

ProjChange ProjChange::identity() {
    ProjChange phi;
    phi.a.setZero();
    phi.a(0, 0) = phi.a(1, 1) = phi.a(2, 2) = 1;
    return phi;
}

ProjChange ProjChange::from_images(const LinearForm& x_img, const LinearForm& y_img, const LinearForm& z_img) {
    ProjChange phi;
    for (int j = 0; j < 3; ++j) {
        phi.a(0, j) = x_img.c[j];
        phi.a(1, j) = y_img.c[j];
        phi.a(2, j) = z_img.c[j];
    }
    return phi;
}

Elem determinant(const PrimeField& f, const ProjChange& phi) {
    const auto& a = phi.a;
    const std::array<Elem, 3> r0{a(0, 0), a(0, 1), a(0, 2)};
    const std::array<Elem, 3> r1{a(1, 0), a(1, 1), a(1, 2)};
    const auto c = cross(f, r1, std::array<Elem, 3>{a(2, 0), a(2, 1), a(2, 2)});
    Elem acc = 0;
    for (int i = 0; i < 3; ++i) acc = f.fma(acc, r0[i], c[i]);
    return acc;
}

ProjChange inverse(const PrimeField& f, const ProjChange& phi) {
    const Elem det = determinant(f, phi);
    if (det == 0) throw std::domain_error("inverse: singular coordinate change");
    const Elem s = f.inv(det);
    const auto& a = phi.a;
    // adjugate: column j of the inverse is the cross product of the other two rows
    ProjChange out;
    for (int j = 0; j < 3; ++j) {
        const int r1 = (j + 1) % 3, r2 = (j + 2) % 3;
        const auto c = cross(f, {a(r1, 0), a(r1, 1), a(r1, 2)}, {a(r2, 0), a(r2, 1), a(r2, 2)});
        for (int i = 0; i < 3; ++i) out.a(i, j) = f.mul(c[i], s);
    }
    return out;
}

ProjChange compose(const PrimeField& f, const ProjChange& phi, const ProjChange& psi) {
    // pullback by phi then psi: g(v) = f(a_phi a_psi v)
    ProjChange out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Elem acc = 0;
            for (int k = 0; k < 3; ++k) acc = f.fma(acc, phi.a(i, k), psi.a(k, j));
            out.a(i, j) = acc;
        }
    return out;
}

FormVec pullback(const PrimeField& field, const FormVec& f, const ProjChange& phi) {
    const int d = f.degree;
    std::array<std::vector<FormVec>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        const LinearForm img{{phi.a(i, 0), phi.a(i, 1), phi.a(i, 2)}};
        const FormVec lf = img.as_form();
        pows[i].push_back(FormVec::monomial(0, {0, 0, 0}));
        for (int e = 1; e <= d; ++e) pows[i].push_back(multiply(field, pows[i].back(), lf));
    }
    const auto basis = monomial_basis(d);
    FormVec out = FormVec::zero(d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Elem c = f.coeffs[static_cast<Eigen::Index>(i)];
        if (c == 0) continue;
        const Monomial& m = basis[i];
        const FormVec t = multiply(field, multiply(field, pows[0][m.x], pows[1][m.y]), pows[2][m.z]);
        out = add(field, out, scale(field, c, t));
    }
    return out;
}

LinearForm pullback(const PrimeField& field, const LinearForm& l, const ProjChange& phi) {
    const FormVec g = pullback(field, l.as_form(), phi);
    return LinearForm{{g.coeffs[0], g.coeffs[1], g.coeffs[2]}};
}

ProjPoint transport(const PrimeField& field, const ProjPoint& pt, const ProjChange& phi) {
    const ProjChange inv = inverse(field, phi);
    ProjPoint q;
    for (int i = 0; i < 3; ++i) {
        Elem acc = 0;
        for (int j = 0; j < 3; ++j) acc = field.fma(acc, inv.a(i, j), pt.c[j]);
        q.c[i] = acc;
    }
    return q;
}

Matrix mult_by_linear(const PrimeField& field, const LinearForm& l, int e) {
    if (e < 0) throw std::invalid_argument("mult_by_linear: negative degree");
    const auto src = monomial_basis(e);
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(form_dim(e + 1)), static_cast<Eigen::Index>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j) {
        const Monomial& s = src[j];
        const std::array<Monomial, 3> targets{Monomial{s.x + 1, s.y, s.z}, Monomial{s.x, s.y + 1, s.z},
                                              Monomial{s.x, s.y, s.z + 1}};
        for (int v = 0; v < 3; ++v) {
            auto row = static_cast<Eigen::Index>(monomial_index(targets[v]));
            m(row, static_cast<Eigen::Index>(j)) = field.add(m(row, static_cast<Eigen::Index>(j)), l.c[v]);
        }
    }
    return m;
}

namespace {

Matrix forms_as_rows(const std::vector<FormVec>& forms, int d) {
    Matrix m(static_cast<Eigen::Index>(forms.size()), static_cast<Eigen::Index>(form_dim(d)));
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].degree != d) throw std::invalid_argument("forms of mixed degree");
        m.row(static_cast<Eigen::Index>(i)) = forms[i].coeffs.transpose();
    }
    return m;
}

}  // namespace

std::vector<FormVec> reduce_to_basis(const PrimeField& field, const std::vector<FormVec>& forms, int d) {
    RowReducer red(field, form_dim(d));
    std::vector<FormVec> out;
    for (const FormVec& f : forms) {
        if (f.degree != d) throw std::invalid_argument("reduce_to_basis: degree mismatch");
        if (red.insert(f.coeffs)) out.push_back(f);
    }
    return out;
}

std::vector<FormVec> ideal_piece(const PrimeField& field, const std::vector<FormVec>& generators, int d) {
    std::vector<FormVec> spanning;
    for (const FormVec& g : generators) {
        if (g.degree > d) continue;
        for (const Monomial& m : monomial_basis(d - g.degree))
            spanning.push_back(multiply(field, g, FormVec::monomial(m.degree(), m)));
    }
    return reduce_to_basis(field, spanning, d);
}

std::vector<FormVec> colon_piece(const PrimeField& field, const std::vector<FormVec>& piece,
                                 const LinearForm& l, int e) {
    // span(piece) = ker(C) where the rows of C span its annihilator; the colon
    // piece is then ker(C * M_L).
    const Matrix gens = forms_as_rows(piece, e + 1);
    const std::vector<Vector> annihilator = kernel_basis(field, gens);
    const Matrix c = stack_rows(annihilator, form_dim(e + 1));
    const Matrix cm = multiply(field, c, mult_by_linear(field, l, e));
    std::vector<FormVec> out;
    for (Vector& v : kernel_basis(field, cm)) out.push_back(FormVec{e, std::move(v)});
    return out;
}

std::size_t span_dim(const PrimeField& field, const std::vector<FormVec>& forms, int d) {
    return rank(field, forms_as_rows(forms, d));
}

bool same_span(const PrimeField& field, const std::vector<FormVec>& a, const std::vector<FormVec>& b, int d) {
    std::vector<FormVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    const std::size_t r = span_dim(field, both, d);
    return r == span_dim(field, a, d) && r == span_dim(field, b, d);
}

std::string to_string(const PrimeField& field, const FormVec& f) {
    std::ostringstream os;
    bool first = true;
    const auto basis = monomial_basis(f.degree);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::int64_t c = field.to_signed(f.coeffs[static_cast<Eigen::Index>(i)]);
        if (c == 0) continue;
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        const std::int64_t a = c < 0 ? -c : c;
        const Monomial& m = basis[i];
        const bool unit = m.degree() == 0;
        if (a != 1 || unit) os << a;
        const char* names[3] = {"x", "y", "z"};
        const int exps[3] = {m.x, m.y, m.z};
        for (int v = 0; v < 3; ++v) {
            if (exps[v] == 0) continue;
            os << names[v];
            if (exps[v] > 1) os << '^' << exps[v];
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace superfat
