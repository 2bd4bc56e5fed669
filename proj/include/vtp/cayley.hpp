#pragma once

#include "vtp/builder.hpp"
#include "vtp/enumerator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtp {

struct Stabilizer {
    enum class Kind { Trivial, Cyclic, Dihedral };
    int rotation_order = 1;
    bool has_reflection = false;
    Kind kind = Kind::Trivial;
    int order() const { return rotation_order * (has_reflection ? 2 : 1); }
};
std::string to_string(Stabilizer::Kind k);
Stabilizer stabilizer(const LabelingScheme &s);

inline constexpr int kMaxMultipliedDegree = 12;

// k copies of the vectors around the vertex.
LabelingScheme multiply(const LabelingScheme &s, int k, int max_degree = kMaxMultipliedDegree);

struct Division {
    LabelingScheme base;
    int k = 1;
};
Division divide(const LabelingScheme &s);

enum class Taxonomy { FaceEdgeTransitive, Cayley };
std::string to_string(Taxonomy t);
Taxonomy prime_degree_taxonomy(const LabelingScheme &s, const TypeVector &tv);

enum class Verdict { Cayley, NotCayley, Undetermined };
std::string to_string(Verdict v);

struct CayleyReport {
    Verdict verdict = Verdict::Undetermined;
    std::optional<LabelingScheme> witness;
    TypeVector witness_tv;
    std::string certificate;
    std::vector<std::pair<LabelingScheme, TypeVector>> same_ball;  // schemes sharing the ball
};

// Candidates default to the enumerated schemes of the same degree.
CayleyReport is_cayley(const LabelingScheme &s, const TypeVector &tv, int search_radius = 3,
                       const std::vector<SchemeFamily> *candidates = nullptr);

// Rooted unlabeled code of the ball, expanding vertices closer than depth.
std::vector<int> ball_code(const GraphBall &b, int depth, int start_slot, int dir);
bool same_rooted_ball(const GraphBall &a, const GraphBall &b, int depth);

} // namespace vtp
