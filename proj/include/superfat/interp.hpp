#pragma once

// Degree-d curves through s 2-squares and the shape of their double points.
//
// At a 2-square with frame (L1, L2) every member of the system has local
// expansion c_uu u^2 + c_vv v^2 + (order >= 3) in u = L1, v = L2. Both
// coefficients nonzero gives a node with tangents symmetric about the frame
// lines; exactly one nonzero gives a double tangent along a frame line.

#include "superfat/postulation.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace superfat {

struct LinearSystem {
    int degree = 0;
    std::vector<FormVec> basis;
    SchemeUnion squares;

    std::size_t dim() const { return basis.size(); }
};

/// Throws SchemeError unless every component is a 2-square.
LinearSystem system_basis(const PrimeField& field, const SchemeUnion& squares, int d);

struct LocalQuadratic {
    Elem c0 = 0, cu = 0, cv = 0, cuu = 0, cuv = 0, cvv = 0;
};
LocalQuadratic local_quadratic(const PrimeField& field, const FormVec& f, const SchemeComponent& c);

enum class SingularityTag { NotSingular, SymmetricNode, DoubleTangent, Degenerate };
std::string to_string(SingularityTag t);

struct SingularityClass {
    SingularityTag tag = SingularityTag::NotSingular;
    Elem a = 0;     // c_uu
    Elem b = 0;     // c_vv
    int axis = 0;   // DoubleTangent: 1 if the cone is L1^2, 2 if L2^2
};

/// Throws std::invalid_argument if f does not satisfy the 2-square conditions
/// of c (c0, c_u, c_v, c_uv must vanish).
SingularityClass classify_singularity(const PrimeField& field, const FormVec& f, const SchemeComponent& c);

struct SupportCounts {
    std::array<int, 4> by_tag{};  // indexed by SingularityTag
    long tangent_drop = 0;        // dim V - dim {c_uu = 0}
    long triple_drop = 0;         // dim V - dim I(..., 3P, ...)_d
};

struct DoublePointReport {
    int s = 0;
    int d = 0;
    long dim = 0;
    long expected = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    std::vector<SupportCounts> supports;
    int degenerate_samples = 0;  // samples with any non-node classification
    bool strict = false;         // dim >= 2: every check is asserted
    bool tangent_drop_ok = true;
    bool triple_drop_ok = true;
    bool all_symmetric = true;
    bool pass = true;
    std::string note;
};

/// Random union of s squares, `samples` random members of V_d classified at
/// every support, and the two codimension checks at every support. Failures
/// are recorded in the report; nothing is thrown for unlucky draws.
DoublePointReport verify_double_points(const PrimeField& field, int s, int d, int samples, std::uint64_t seed);

}  // namespace superfat
