#pragma once

#include "vtp/vector_pair.hpp"

#include <map>
#include <string>
#include <vector>

namespace vtp {

// Two stars joined by a central edge of one color. Both extremities are read
// counterclockwise in the plane with the central edge at slot 0.
struct EdgeNeighborhood {
    int color = 0;
    VectorPair first;
    VectorPair second;
    bool operator==(const EdgeNeighborhood &) const = default;
    auto operator<=>(const EdgeNeighborhood &) const = default;
};

EdgeNeighborhood make_neighborhood(const VectorPair &pair, int pos1, int dir1, int pos2, int dir2);

// Faces on both sides of the central edge agree.
bool locked(const EdgeNeighborhood &nb);
// (face on the counterclockwise side of the edge seen from first, other side)
std::pair<int, int> separator(const EdgeNeighborhood &nb);

EdgeNeighborhood neighborhood_invert(const EdgeNeighborhood &nb);
EdgeNeighborhood neighborhood_reflect(const EdgeNeighborhood &nb);
EdgeNeighborhood neighborhood_twist(const EdgeNeighborhood &nb, int extremity, int block);
EdgeNeighborhood canonical_neighborhood(const EdgeNeighborhood &nb);
bool coherent(const EdgeNeighborhood &nb, const VectorPair &pair);

struct LabelingScheme {
    VectorPair pair;
    std::vector<EdgeNeighborhood> neighborhoods;  // one per edge color, sorted by color
    int degree() const { return pair.degree(); }
    const EdgeNeighborhood *neighborhood_for(int color) const;
    bool operator==(const LabelingScheme &) const = default;
};

struct ValidationReport {
    std::vector<std::string> shape;         // vector lengths, locking, colors
    std::vector<std::string> class_count;   // more than two classes for a color
    std::vector<std::string> neighborhood;  // missing, extra, incoherent, misplaced
    bool ok() const { return shape.empty() && class_count.empty() && neighborhood.empty(); }
    std::vector<std::string> all() const;
};
ValidationReport validate_scheme(const LabelingScheme &s);

// Flag of the pair matching slot 0 of an extremity read in direction +.
// Returns {-1, 0} when the extremity is not isomorphic to the pair.
std::pair<int, int> match_extremity(const VectorPair &pair, const VectorPair &ext);

// Class-level inversion relation of the scheme (class -> set of classes).
std::vector<std::vector<int>> inversion(const LabelingScheme &s, const FlagClasses &fc);

// Canonical key of a scheme up to isomorphism and color renaming.
struct SchemeKey {
    VectorPair pair;
    std::vector<int> inv;
    bool operator==(const SchemeKey &) const = default;
    auto operator<=>(const SchemeKey &) const = default;
};
SchemeKey scheme_key(const VectorPair &pair, const FlagClasses &fc, const std::vector<int> &inv);
SchemeKey scheme_key(const LabelingScheme &s);
bool isomorphic(const LabelingScheme &a, const LabelingScheme &b);

} // namespace vtp
