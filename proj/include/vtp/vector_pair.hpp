#pragma once

#include <compare>
#include <string>
#include <vector>

namespace vtp {

// Face color used for infinite faces. Larger than every ordinary color so that
// lexicographic minima put finite faces first.
inline constexpr int kInfinite = 1000;

inline int wrap(int i, int d) { return ((i % d) + d) % d; }

// Edge and face colors around a vertex, counterclockwise.
// phi[i] is the face between xi[i] and xi[i+1].
struct VectorPair {
    std::vector<int> xi;
    std::vector<int> phi;

    int degree() const { return static_cast<int>(xi.size()); }
    int infinite_count() const;
    bool operator==(const VectorPair &) const = default;
    auto operator<=>(const VectorPair &) const = default;
};

// One slot of an arranged star: which original edge sits there and whether the
// rotation direction is kept (+1) or reversed (-1).
struct Slot {
    int pos;
    int orient;
    bool operator==(const Slot &) const = default;
    auto operator<=>(const Slot &) const = default;
};
using Arrangement = std::vector<Slot>;

// Flag = edge position plus direction of rotation.
inline int flag_index(int pos, int dir) { return 2 * pos + (dir > 0 ? 0 : 1); }

int face_after(const VectorPair &p, int pos, int dir);
int face_before(const VectorPair &p, int pos, int dir);

// Maximal runs of edges between infinite faces, each listed in counterclockwise
// order, blocks sorted by their first position. Empty when there is no infinite face.
std::vector<std::vector<int>> blocks(const VectorPair &p);

VectorPair arrange(const VectorPair &p, const Arrangement &a);

// Every image of the pair under rotations, reflections, rearrangements and twists.
// Images may repeat; sources are distinct.
const std::vector<Arrangement> &arrangements(const VectorPair &p);
std::vector<Arrangement> automorphisms(const VectorPair &p);

// Star starting at flag (pos, dir) with every other block kept in place.
Arrangement frame_at(const VectorPair &p, int pos, int dir);

VectorPair rotate(const VectorPair &p, int s);
VectorPair reflect(const VectorPair &p);
VectorPair rearrange(const VectorPair &p, const std::vector<int> &sigma);
VectorPair twist(const VectorPair &p, int block);

VectorPair canonical_pair(const VectorPair &p);
// Same answer as comparing canonical pairs, without enumerating block orders.
bool pair_isomorphic(const VectorPair &a, const VectorPair &b);
VectorPair relabel(const VectorPair &p);
VectorPair normal_form(const VectorPair &p);

// Colored reading of the star from a flag, walking until an infinite face is
// met in each direction. Equal readings <=> flags related by an isomorphism.
std::vector<int> flag_reading(const VectorPair &p, int pos, int dir);

struct FlagClasses {
    int degree = 0;
    int count = 0;
    std::vector<int> of;       // flag_index -> class
    std::vector<int> rep_pos;  // smallest flag of each class
    std::vector<int> rep_dir;
    int cls(int pos, int dir) const { return of[flag_index(wrap(pos, degree), dir)]; }
};
FlagClasses flag_classes(const VectorPair &p);

struct EqClasses {
    int count = 0;
    std::vector<std::vector<int>> classes;
};
EqClasses eq_count(const VectorPair &p, int color);

// Representative position of the edge class of every position.
std::vector<int> edge_class_reps(const VectorPair &p);

std::string edge_color_name(int c);
std::string face_color_name(int c);
std::string format_colors(const std::vector<int> &v, bool faces);
std::vector<int> parse_colors(const std::string &s, bool faces);

} // namespace vtp
