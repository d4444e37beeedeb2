#include "superfat/interp.hpp"

#include <stdexcept>

namespace superfat {

LinearSystem system_basis(const PrimeField& field, const SchemeUnion& squares, int d) {
    for (const SchemeComponent& c : squares.components())
        if (c.kind() != Kind::TwoSquare) throw SchemeError("system_basis: every component must be a 2-square");
    LinearSystem sys;
    sys.degree = d;
    sys.basis = ideal_piece(field, squares, d);
    sys.squares = squares;
    return sys;
}

namespace {

Elem apply_row(const PrimeField& field, const Matrix& rows, std::size_t i, const FormVec& f) {
    Elem acc = 0;
    const auto r = static_cast<Eigen::Index>(i);
    for (Eigen::Index j = 0; j < rows.cols(); ++j) acc = field.fma(acc, rows(r, j), f.coeffs[j]);
    return acc;
}

}  // namespace

LocalQuadratic local_quadratic(const PrimeField& field, const FormVec& f, const SchemeComponent& c) {
    const JetRows jr = jet_rows(field, c.frame(), f.degree, 2);
    auto at = [&](int a, int b) { return apply_row(field, jr.rows, JetRows::index(a, b), f); };
    return {at(0, 0), at(1, 0), at(0, 1), at(2, 0), at(1, 1), at(0, 2)};
}

std::string to_string(SingularityTag t) {
    switch (t) {
        case SingularityTag::NotSingular: return "NotSingular";
        case SingularityTag::SymmetricNode: return "SymmetricNode";
        case SingularityTag::DoubleTangent: return "DoubleTangent";
        case SingularityTag::Degenerate: return "Degenerate";
    }
    return "?";
}

SingularityClass classify_singularity(const PrimeField& field, const FormVec& f, const SchemeComponent& c) {
    if (c.kind() != Kind::TwoSquare) throw SchemeError("classify_singularity: component must be a 2-square");
    const LocalQuadratic q = local_quadratic(field, f, c);
    if (q.c0 || q.cu || q.cv || q.cuv) throw std::invalid_argument("classify_singularity: form is not in the system");
    SingularityClass out;
    out.a = q.cuu;
    out.b = q.cvv;
    if (q.cuu && q.cvv)
        out.tag = SingularityTag::SymmetricNode;
    else if (q.cuu || q.cvv) {
        out.tag = SingularityTag::DoubleTangent;
        out.axis = q.cuu ? 1 : 2;
    } else {
        out.tag = SingularityTag::Degenerate;
    }
    return out;
}

DoublePointReport verify_double_points(const PrimeField& field, int s, int d, int samples, std::uint64_t seed) {
    if (s < 1 || d < 1 || samples < 0) throw std::invalid_argument("verify_double_points: s, d must be positive");
    DoublePointReport rep;
    rep.s = s;
    rep.d = d;
    rep.samples = samples;
    rep.seed = seed;
    rep.prime = field.modulus();
    rep.expected = expected_dim(static_cast<std::size_t>(4 * s), d);

    ScalarStream stream(field, mix_seed(seed, (static_cast<std::uint64_t>(s) << 32) | static_cast<std::uint64_t>(d)));
    const SchemeUnion u = random_union(stream, s, Extras{});
    const LinearSystem sys = system_basis(field, u, d);
    rep.dim = static_cast<long>(sys.dim());
    rep.strict = rep.dim >= 2;
    rep.supports.resize(u.size());
    if (rep.dim == 0) {
        rep.note = "empty system";
        return rep;
    }

    for (int k = 0; k < samples; ++k) {
        FormVec f = FormVec::zero(d);
        for (const FormVec& b : sys.basis) f = add(field, f, scale(field, stream.next(), b));
        bool degenerate = false;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const SingularityTag t = classify_singularity(field, f, u.components()[i]).tag;
            ++rep.supports[i].by_tag[static_cast<std::size_t>(t)];
            degenerate = degenerate || t != SingularityTag::SymmetricNode;
        }
        rep.degenerate_samples += degenerate;
    }
    rep.all_symmetric = rep.degenerate_samples == 0;

    // generic value of s - 1 squares plus a triple point, including the one exception
    const long tripled_dim = exceptional_target(d, s - 1, Extras{{3}}).value_or(std::max(0L, rep.dim - 2));
    const long triple_target = rep.dim - tripled_dim;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const SchemeComponent& c = u.components()[i];
        Matrix row(1, static_cast<Eigen::Index>(sys.dim()));
        for (std::size_t j = 0; j < sys.dim(); ++j) row(0, static_cast<Eigen::Index>(j)) = local_quadratic(field, sys.basis[j], c).cuu;
        rep.supports[i].tangent_drop = static_cast<long>(rank(field, row));

        SchemeUnion tripled;
        for (std::size_t j = 0; j < u.size(); ++j)
            tripled.add(field, j == i ? fat_point(field, c.support(), 3) : u.components()[j]);
        rep.supports[i].triple_drop = rep.dim - ideal_dim(field, tripled, d);

        rep.tangent_drop_ok = rep.tangent_drop_ok && rep.supports[i].tangent_drop == 1;
        rep.triple_drop_ok = rep.triple_drop_ok && rep.supports[i].triple_drop == triple_target;
    }

    if (rep.strict) {
        rep.pass = rep.all_symmetric && rep.tangent_drop_ok && rep.triple_drop_ok;
    } else {
        rep.note = "dim 1: classification reported, not asserted";
    }
    return rep;
}

}  // namespace superfat
