#pragma once

#include "vtp/scheme.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vtp {

// States are flag classes of the pair. next steps around the star, inv crosses
// the edge through the matching neighborhood.
struct BorderAutomaton {
    VectorPair pair;
    FlagClasses classes;
    std::vector<std::vector<int>> next;
    std::vector<std::vector<int>> inv;
    std::vector<int> face_of;   // face read between a state and its successors
    std::vector<int> color_of;  // edge color of a state
    int size() const { return classes.count; }
    bool deterministic() const;
    std::string dump() const;
};

BorderAutomaton make_automaton(const VectorPair &pair, const std::vector<std::vector<int>> &inv);
// Throws UserError when the scheme fails validate_scheme.
BorderAutomaton build_automaton(const LabelingScheme &s);

// Bi-infinite border left^omega defect right^omega; periodic when defect is
// empty and both sides read the same cycle.
struct OmegaWord {
    std::vector<int> head;
    std::vector<int> defect;
    std::vector<int> tail;
    bool periodic() const;
    std::string str() const;
    bool operator==(const OmegaWord &) const = default;
};

struct Orbit {
    bool infinite = false;
    int face_color = 0;
    std::vector<int> faces;      // face positions of the pair bordered by this orbit
    std::vector<int> states;     // states visited by next.inv (one direction)
    std::vector<int> crossed;    // states crossed along the way
    std::vector<int> word;       // edge colors crossed, one period
    OmegaWord omega;             // for infinite orbits
    int size() const { return static_cast<int>(states.size()); }
    std::vector<int> positions(const FlagClasses &fc) const;  // edges crossed
};

// k = 0 marks an infinite entry.
struct PtvEntry {
    int k = 0;
    int letter = -1;
    bool operator==(const PtvEntry &) const = default;
};
using PrimitiveTypeVector = std::vector<PtvEntry>;
std::string format_ptv(const PrimitiveTypeVector &p);
std::string letter_name(int letter);

using TypeVector = std::vector<int>;  // kInfinite for infinite faces
TypeVector parse_type_vector(const std::string &s);
std::string format_type_vector(const TypeVector &tv);

struct FaceCheck {
    bool valid = true;
    int face_a = -1;  // witness face positions
    int face_b = -1;
};

struct Analysis {
    BorderAutomaton automaton;
    std::vector<Orbit> orbits;
    std::vector<int> orbit_of_face;  // per face position
    FaceCheck faces;
    PrimitiveTypeVector ptv;
    bool aperiodic = false;
};

Analysis analyze(const VectorPair &pair, const std::vector<std::vector<int>> &inv);
Analysis analyze(const LabelingScheme &s);

FaceCheck check_face_equivalence(const BorderAutomaton &a);
// Throws UserError when faces of one color are not equivalent.
PrimitiveTypeVector primitive_type_vector(const LabelingScheme &s);

struct Valuation {
    bool ok = false;
    std::vector<int> letters;  // value of each letter
    int conflict = -1;         // first offending position
    std::string reason;
};
Valuation validate_type_vector(const PrimitiveTypeVector &ptv, const TypeVector &tv);

enum class Connectivity { ThreeConnected, TwoSeparable, OneSeparable };
Connectivity connectivity_class(const VectorPair &pair);
std::string to_string(Connectivity c);

} // namespace vtp
