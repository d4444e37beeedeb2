#include "superfat/schemes.hpp"

#include <algorithm>
#include <sstream>

namespace superfat {

LocalPoly make_local(const PrimeField& field, std::initializer_list<std::tuple<std::int64_t, int, int>> terms) {
    LocalPoly out;
    for (const auto& [c, a, b] : terms) out.push_back({field.from_int(c), a, b});
    return out;
}

LocalPoly dehomogenize(const FormVec& f) {
    LocalPoly out;
    const auto basis = monomial_basis(f.degree);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const Elem c = f.coeffs[static_cast<Eigen::Index>(i)];
        if (c != 0) out.push_back({c, basis[i].x, basis[i].y});
    }
    return out;
}

std::size_t JetRows::index(int a, int b) {
    const auto deg = static_cast<std::size_t>(a + b);
    return deg * (deg + 1) / 2 + static_cast<std::size_t>(b);
}

namespace {

constexpr std::size_t local_count(int order) {
    return static_cast<std::size_t>(order + 1) * static_cast<std::size_t>(order + 2) / 2;
}

int poly_degree(const LocalPoly& g) {
    int d = 0;
    for (const LocalTerm& t : g)
        if (t.coef != 0) d = std::max(d, t.a + t.b);
    return d;
}

std::vector<LocalPoly> inverse_system_upto(const PrimeField& field, const std::vector<LocalPoly>& gens, int bound) {
    const std::size_t n = local_count(bound);
    std::vector<Vector> rows;
    for (const LocalPoly& h : gens) {
        for (int deg = 0; deg <= bound; ++deg) {
            for (int i = deg; i >= 0; --i) {
                const int j = deg - i;
                // pairing of u^i w^j h with the unknown dual polynomial
                Vector row = Vector::Zero(static_cast<Eigen::Index>(n));
                bool any = false;
                for (const LocalTerm& t : h) {
                    const int a = t.a + i, b = t.b + j;
                    if (a + b > bound || t.coef == 0) continue;
                    auto k = static_cast<Eigen::Index>(JetRows::index(a, b));
                    row[k] = field.add(row[k], t.coef);
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        }
    }
    std::vector<LocalPoly> out;
    const Matrix m = stack_rows(rows, n);
    for (const Vector& v : kernel_basis(field, m)) {
        LocalPoly g;
        for (int deg = 0; deg <= bound; ++deg)
            for (int b = 0; b <= deg; ++b) {
                const Elem c = v[static_cast<Eigen::Index>(JetRows::index(deg - b, b))];
                if (c != 0) g.push_back({c, deg - b, b});
            }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::vector<LocalPoly> macaulay_dual(const PrimeField& field, const std::vector<LocalPoly>& generators, int bound) {
    if (bound < 0) {
        bound = 0;
        for (const LocalPoly& g : generators) bound += poly_degree(g);
    }
    std::size_t prev = 0;
    for (int d = 0; d <= bound; ++d) {
        std::vector<LocalPoly> dual = inverse_system_upto(field, generators, d);
        // no new dual element in degree d means none in any higher degree
        if (d > 0 && dual.size() == prev) return dual;
        prev = dual.size();
    }
    throw SchemeError("macaulay_dual: dual dimension still growing at degree bound " + std::to_string(bound));
}

// ---------------------------------------------------------------------------

void validate_frame(const PrimeField& field, const Frame& frame) {
    if (frame.support.is_zero()) throw SchemeError("frame: zero support point");
    if (frame.first.is_zero() || frame.second.is_zero()) throw SchemeError("frame: zero line");
    if (evaluate(field, frame.first, frame.support) != 0 || evaluate(field, frame.second, frame.support) != 0)
        throw SchemeError("frame: line does not pass through the support");
    if (proportional(field, frame.first.c, frame.second.c)) throw SchemeError("frame: lines coincide");
}

Frame standard_frame(const PrimeField& field) {
    return Frame{make_point(field, 0, 0, 1), make_line(field, 1, 0, 0), make_line(field, 0, 1, 0)};
}

namespace {

// Coordinate lines P x e_i through P, in order, skipping zero and repeated ones.
std::vector<LinearForm> coordinate_lines_through(const PrimeField& field, const ProjPoint& pt) {
    std::vector<LinearForm> out;
    for (int i = 0; i < 3; ++i) {
        std::array<Elem, 3> e{0, 0, 0};
        e[i] = 1;
        LinearForm l{cross(field, pt.c, e)};
        if (l.is_zero()) continue;
        bool repeated = false;
        for (const LinearForm& o : out) repeated = repeated || proportional(field, o.c, l.c);
        if (!repeated) out.push_back(l);
    }
    return out;
}

}  // namespace

Frame default_frame(const PrimeField& field, const ProjPoint& support) {
    if (support.is_zero()) throw SchemeError("default_frame: zero point");
    const auto lines = coordinate_lines_through(field, support);
    return Frame{support, lines.at(0), lines.at(1)};
}

std::pair<Elem, Elem> frame_coordinates(const PrimeField& field, const Frame& frame, const LinearForm& line) {
    const auto base = cross(field, frame.first.c, frame.second.c);
    const auto ca = cross(field, line.c, frame.second.c);
    const auto cb = cross(field, frame.first.c, line.c);
    for (int k = 0; k < 3; ++k) {
        if (base[k] == 0) continue;
        const Elem s = field.inv(base[k]);
        return {field.mul(ca[k], s), field.mul(cb[k], s)};
    }
    throw SchemeError("frame_coordinates: degenerate frame");
}

// ---------------------------------------------------------------------------

std::size_t SchemeComponent::length() const {
    switch (kind_) {
        case Kind::SimplePoint: return 1;
        case Kind::FatPoint: return static_cast<std::size_t>(multiplicity_ * (multiplicity_ + 1) / 2);
        case Kind::TwoJet: return 2;
        case Kind::TwoSquare: return 4;
        case Kind::LocalDual: return local_->dual_basis.size();
    }
    return 0;
}

std::string SchemeComponent::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::SimplePoint: os << "point"; break;
        case Kind::FatPoint: os << multiplicity_ << "-fat"; break;
        case Kind::TwoJet: os << "jet"; break;
        case Kind::TwoSquare: os << "square"; break;
        case Kind::LocalDual:
            os << (local_->tag == LocalTag::Collision          ? "collision"
                   : local_->tag == LocalTag::CollisionResidue ? "collision-residue"
                                                               : "local");
            break;
    }
    os << "@[" << frame_.support.c[0] << ':' << frame_.support.c[1] << ':' << frame_.support.c[2] << ']';
    return os.str();
}

SchemeComponent simple_point(const PrimeField& field, const ProjPoint& support) {
    SchemeComponent c;
    c.kind_ = Kind::SimplePoint;
    c.frame_ = default_frame(field, support);
    return c;
}

SchemeComponent fat_point(const PrimeField& field, const ProjPoint& support, int m) {
    if (m < 1) throw SchemeError("fat_point: multiplicity must be positive");
    if (m == 1) return simple_point(field, support);
    SchemeComponent c;
    c.kind_ = Kind::FatPoint;
    c.frame_ = default_frame(field, support);
    c.multiplicity_ = m;
    return c;
}

SchemeComponent two_jet(const PrimeField& field, const ProjPoint& support, const LinearForm& containing_line) {
    SchemeComponent c;
    c.kind_ = Kind::TwoJet;
    Frame f{support, containing_line, {}};
    for (const LinearForm& l : coordinate_lines_through(field, support)) {
        if (!proportional(field, l.c, containing_line.c)) {
            f.second = l;
            break;
        }
    }
    validate_frame(field, f);
    c.frame_ = f;
    return c;
}

SchemeComponent two_square(const PrimeField& field, const Frame& frame) {
    validate_frame(field, frame);
    SchemeComponent c;
    c.kind_ = Kind::TwoSquare;
    c.frame_ = frame;
    return c;
}

SchemeComponent local_dual(const PrimeField& field, const Frame& frame, LocalDualScheme scheme) {
    validate_frame(field, frame);
    scheme.max_degree = 0;
    for (const LocalPoly& g : scheme.dual_basis) scheme.max_degree = std::max(scheme.max_degree, poly_degree(g));
    SchemeComponent c;
    c.kind_ = Kind::LocalDual;
    c.frame_ = frame;
    c.local_ = std::make_shared<const LocalDualScheme>(std::move(scheme));
    return c;
}

std::vector<LocalPoly> collision_generators(const PrimeField& field) {
    return {make_local(field, {{1, 2, 1}, {-1, 1, 2}}),
            make_local(field, {{1, 3, 0}, {-1, 0, 3}}),
            make_local(field, {{1, 0, 4}})};
}

std::vector<LocalPoly> collision_residue_generators(const PrimeField& field) {
    return {make_local(field, {{1, 2, 0}, {-1, 1, 1}}),
            make_local(field, {{1, 1, 2}}),
            make_local(field, {{1, 0, 3}})};
}

SchemeComponent collision_component(const PrimeField& field, const Frame& frame) {
    return local_dual(field, frame, LocalDualScheme{LocalTag::Collision, macaulay_dual(field, collision_generators(field)), 0});
}

SchemeComponent collision_residue_component(const PrimeField& field, const Frame& frame) {
    return local_dual(field, frame,
                      LocalDualScheme{LocalTag::CollisionResidue, macaulay_dual(field, collision_residue_generators(field)), 0});
}

SchemeComponent specialize_1a(const PrimeField& field, const ProjPoint& support, const LinearForm& r,
                              const LinearForm& transversal) {
    return two_square(field, Frame{support, transversal, r});
}

SchemeComponent specialize_1b(const PrimeField& field, const ProjPoint& support, const LinearForm& r,
                              const LinearForm& transversal, Elem c) {
    if (c == 0) throw SchemeError("specialize_1b: zero offset");
    LinearForm l1, l2;
    for (int i = 0; i < 3; ++i) {
        l1.c[i] = field.sub(transversal.c[i], field.mul(c, r.c[i]));
        l2.c[i] = field.add(transversal.c[i], field.mul(c, r.c[i]));
    }
    return two_square(field, Frame{support, l1, l2});
}

// ---------------------------------------------------------------------------

JetRows jet_rows(const PrimeField& field, const Frame& frame, int d, int order) {
    if (d < 0 || order < 0) throw std::invalid_argument("jet_rows: negative degree");
    validate_frame(field, frame);
    int k = 0;
    while (frame.support.c[k] == 0) ++k;
    LinearForm third;
    third.c[k] = 1;
    const ProjChange chart = inverse(field, ProjChange::from_images(frame.first, frame.second, third));

    const std::size_t t = local_count(order);
    // products of graded local monomials, truncated at `order`
    std::vector<std::array<std::size_t, 3>> table;  // (i, j, i*j)
    std::vector<std::pair<int, int>> exps(t);
    for (int deg = 0; deg <= order; ++deg)
        for (int b = 0; b <= deg; ++b) exps[JetRows::index(deg - b, b)] = {deg - b, b};
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < t; ++j) {
            const int a = exps[i].first + exps[j].first, b = exps[i].second + exps[j].second;
            if (a + b <= order) table.push_back({i, j, JetRows::index(a, b)});
        }
    const Elem p = field.modulus();
    auto mul = [&](const std::vector<Elem>& f, const std::vector<Elem>& g) {
        std::vector<Elem> h(t, 0);
        for (const auto& [i, j, ij] : table) {
            if (f[i] == 0 || g[j] == 0) continue;
            h[ij] = (h[ij] + f[i] * g[j]) % p;
        }
        return h;
    };

    // x_i = chart(i,0) u + chart(i,1) w + chart(i,2) in the chart t = 1
    std::array<std::vector<std::vector<Elem>>, 3> pows;
    for (int i = 0; i < 3; ++i) {
        std::vector<Elem> one(t, 0), lin(t, 0);
        one[0] = 1;
        lin[0] = chart.a(i, 2);
        if (order >= 1) {
            lin[JetRows::index(1, 0)] = chart.a(i, 0);
            lin[JetRows::index(0, 1)] = chart.a(i, 1);
        }
        pows[i].push_back(one);
        for (int e = 1; e <= d; ++e) pows[i].push_back(mul(pows[i].back(), lin));
    }

    JetRows out;
    out.order = order;
    out.rows = Matrix::Zero(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(form_dim(d)));
    for (int a = d; a >= 0; --a) {
        for (int b = d - a; b >= 0; --b) {
            const std::vector<Elem> s = mul(mul(pows[0][a], pows[1][b]), pows[2][d - a - b]);
            const auto col = static_cast<Eigen::Index>(monomial_index({a, b, d - a - b}));
            for (std::size_t r = 0; r < t; ++r) out.rows(static_cast<Eigen::Index>(r), col) = s[r];
        }
    }
    return out;
}

Matrix condition_rows(const PrimeField& field, const SchemeComponent& c, int d) {
    auto select = [](const JetRows& jr, std::initializer_list<std::pair<int, int>> which) {
        Matrix m(static_cast<Eigen::Index>(which.size()), jr.rows.cols());
        Eigen::Index r = 0;
        for (const auto& [a, b] : which) m.row(r++) = jr.rows.row(static_cast<Eigen::Index>(JetRows::index(a, b)));
        return m;
    };
    switch (c.kind()) {
        case Kind::SimplePoint: return select(jet_rows(field, c.frame(), d, 0), {{0, 0}});
        case Kind::FatPoint: return jet_rows(field, c.frame(), d, c.multiplicity() - 1).rows;
        case Kind::TwoJet: return select(jet_rows(field, c.frame(), d, 1), {{0, 0}, {0, 1}});
        case Kind::TwoSquare: return select(jet_rows(field, c.frame(), d, 2), {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
        case Kind::LocalDual: {
            const LocalDualScheme& loc = c.local();
            const JetRows jr = jet_rows(field, c.frame(), d, loc.max_degree);
            const Elem p = field.modulus();
            Matrix m = Matrix::Zero(static_cast<Eigen::Index>(loc.dual_basis.size()), jr.rows.cols());
            for (std::size_t i = 0; i < loc.dual_basis.size(); ++i)
                for (const LocalTerm& term : loc.dual_basis[i]) {
                    const auto src = static_cast<Eigen::Index>(JetRows::index(term.a, term.b));
                    for (Eigen::Index col = 0; col < m.cols(); ++col)
                        m(static_cast<Eigen::Index>(i), col) =
                            (m(static_cast<Eigen::Index>(i), col) + term.coef * jr.rows(src, col)) % p;
                }
            return m;
        }
    }
    throw std::logic_error("condition_rows: unknown kind");
}

// ---------------------------------------------------------------------------

namespace {

LinearForm combine(const PrimeField& field, Elem a, const LinearForm& l1, Elem b, const LinearForm& l2) {
    LinearForm out;
    for (int i = 0; i < 3; ++i) out.c[i] = field.add(field.mul(a, l1.c[i]), field.mul(b, l2.c[i]));
    return out;
}

bool on_line(const PrimeField& field, const SchemeComponent& c, const LinearForm& r) {
    return evaluate(field, r, c.support()) == 0;
}

}  // namespace

std::optional<SchemeComponent> residue_component(const PrimeField& field, const SchemeComponent& c,
                                                 const LinearForm& r) {
    if (r.is_zero()) throw SchemeError("residue: zero line");
    if (!on_line(field, c, r)) return c;
    const auto [a, b] = frame_coordinates(field, c.frame(), r);
    switch (c.kind()) {
        case Kind::SimplePoint: return std::nullopt;
        case Kind::FatPoint: return fat_point(field, c.support(), c.multiplicity() - 1);
        case Kind::TwoJet:
            // (u, w^2) : (a u + b w) is the whole ring when b == 0, else (u, w)
            if (b == 0) return std::nullopt;
            return simple_point(field, c.support());
        case Kind::TwoSquare:
            // (u^2, w^2) : (a u + b w) = (a u - b w, w^2) or (u, w^2) when a or b vanishes
            if (b == 0) return two_jet(field, c.support(), c.frame().first);
            if (a == 0) return two_jet(field, c.support(), c.frame().second);
            return two_jet(field, c.support(), combine(field, a, c.frame().first, field.neg(b), c.frame().second));
        case Kind::LocalDual: {
            const LocalTag tag = c.local().tag;
            if (tag == LocalTag::Collision && a == 0) return collision_residue_component(field, c.frame());
            if (tag == LocalTag::CollisionResidue) {
                if (a == 0) return fat_point(field, c.support(), 2);
                // r = u + alpha w
                const Elem alpha = field.div(b, a);
                const LinearForm& u = c.frame().first;
                const LinearForm& w = c.frame().second;
                if (alpha == 0) return two_jet(field, c.support(), combine(field, 1, u, field.neg(1), w));
                if (alpha == field.neg(1)) return two_jet(field, c.support(), u);
                return fat_point(field, c.support(), 2);
            }
            throw SchemeError("unsupported specialization position");
        }
    }
    throw std::logic_error("residue_component: unknown kind");
}

int trace_degree(const PrimeField& field, const SchemeComponent& c, const LinearForm& r) {
    if (!on_line(field, c, r)) return 0;
    const auto [a, b] = frame_coordinates(field, c.frame(), r);
    switch (c.kind()) {
        case Kind::SimplePoint: return 1;
        case Kind::FatPoint: return c.multiplicity();
        case Kind::TwoJet: return b == 0 ? 2 : 1;
        case Kind::TwoSquare: return 2;
        case Kind::LocalDual: {
            const LocalTag tag = c.local().tag;
            if (tag == LocalTag::Collision && a == 0) return 3;
            if (tag == LocalTag::CollisionResidue) {
                if (a == 0) return 2;
                const Elem alpha = field.div(b, a);
                return (alpha == 0 || alpha == field.neg(1)) ? 3 : 2;
            }
            throw SchemeError("unsupported specialization position");
        }
    }
    throw std::logic_error("trace_degree: unknown kind");
}

// ---------------------------------------------------------------------------

void SchemeUnion::add(const PrimeField& field, SchemeComponent c) {
    for (const SchemeComponent& o : components_)
        if (proportional(field, o.support().c, c.support().c)) throw SchemeError("overlapping supports");
    components_.push_back(std::move(c));
}

std::size_t SchemeUnion::length() const {
    std::size_t n = 0;
    for (const SchemeComponent& c : components_) n += c.length();
    return n;
}

Matrix condition_matrix(const PrimeField& field, const SchemeUnion& u, int d) {
    std::vector<Matrix> blocks;
    Eigen::Index rows = 0;
    for (const SchemeComponent& c : u.components()) {
        blocks.push_back(condition_rows(field, c, d));
        rows += blocks.back().rows();
    }
    Matrix m(rows, static_cast<Eigen::Index>(form_dim(d)));
    Eigen::Index at = 0;
    for (const Matrix& b : blocks) {
        m.middleRows(at, b.rows()) = b;
        at += b.rows();
    }
    return m;
}

namespace {

std::vector<FormVec> kernel_forms(const PrimeField& field, const Matrix& rows, int d) {
    std::vector<FormVec> out;
    for (Vector& v : kernel_basis(field, rows)) out.push_back(FormVec{d, std::move(v)});
    return out;
}

}  // namespace

std::vector<FormVec> ideal_piece(const PrimeField& field, const SchemeComponent& c, int d) {
    return kernel_forms(field, condition_rows(field, c, d), d);
}

std::vector<FormVec> ideal_piece(const PrimeField& field, const SchemeUnion& u, int d) {
    return kernel_forms(field, condition_matrix(field, u, d), d);
}

SchemeComponent transport(const PrimeField& field, const SchemeComponent& c, const ProjChange& phi) {
    const ProjChange inv = inverse(field, phi);
    Frame f{transport(field, c.support(), inv), pullback(field, c.frame().first, inv),
            pullback(field, c.frame().second, inv)};
    switch (c.kind()) {
        case Kind::SimplePoint: return simple_point(field, f.support);
        case Kind::FatPoint: return fat_point(field, f.support, c.multiplicity());
        case Kind::TwoJet: return two_jet(field, f.support, f.first);
        case Kind::TwoSquare: return two_square(field, f);
        case Kind::LocalDual: return local_dual(field, f, c.local());
    }
    throw std::logic_error("transport: unknown kind");
}

SchemeUnion transport(const PrimeField& field, const SchemeUnion& u, const ProjChange& phi) {
    SchemeUnion out;
    for (const SchemeComponent& c : u.components()) out.add(field, transport(field, c, phi));
    return out;
}

int numeric_trace_degree(const PrimeField& field, const SchemeComponent& c, const LinearForm& r, int d) {
    RowReducer red(field, form_dim(d));
    for (const FormVec& f : ideal_piece(field, c, d)) red.insert(f.coeffs);
    const Matrix ml = mult_by_linear(field, r, d - 1);
    for (Eigen::Index j = 0; j < ml.cols(); ++j) red.insert(ml.col(j));
    return static_cast<int>(form_dim(d) - red.rank());
}

bool residue_matches_colon(const PrimeField& field, const SchemeComponent& c, const LinearForm& r, int max_degree) {
    const std::optional<SchemeComponent> res = residue_component(field, c, r);
    for (int e = 0; e < max_degree; ++e) {
        const std::vector<FormVec> colon = colon_piece(field, ideal_piece(field, c, e + 1), r, e);
        std::vector<FormVec> expected;
        if (res) {
            expected = ideal_piece(field, *res, e);
        } else {
            for (const Monomial& m : monomial_basis(e)) expected.push_back(FormVec::monomial(e, m));
        }
        if (!same_span(field, colon, expected, e)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

ProjPoint random_point(ScalarStream& stream) {
    ProjPoint p;
    do {
        for (auto& v : p.c) v = stream.next();
    } while (p.is_zero());
    return p;
}

LinearForm random_line_through(ScalarStream& stream, const ProjPoint& pt) {
    const PrimeField& field = stream.field();
    for (;;) {
        const ProjPoint q = random_point(stream);
        LinearForm l{cross(field, pt.c, q.c)};
        if (!l.is_zero()) return l;
    }
}

Frame random_frame_at(ScalarStream& stream, const ProjPoint& pt) {
    const PrimeField& field = stream.field();
    const LinearForm l1 = random_line_through(stream, pt);
    for (;;) {
        const LinearForm l2 = random_line_through(stream, pt);
        if (!proportional(field, l1.c, l2.c)) return Frame{pt, l1, l2};
    }
}

Frame random_frame(ScalarStream& stream) { return random_frame_at(stream, random_point(stream)); }

}  // namespace superfat
