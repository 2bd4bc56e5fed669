#pragma once

#include "vtp/automaton.hpp"

#include <cstdint>
#include <vector>

namespace vtp {

struct SchemeFamily {
    LabelingScheme scheme;
    SchemeKey key;
    PrimitiveTypeVector ptv;
    bool aperiodic = false;
    Connectivity connectivity = Connectivity::ThreeConnected;
    int degree() const { return scheme.degree(); }
};

struct EnumerateOptions {
    int jobs = 1;
    bool allow_long = false;    // required for degree 6
    std::uint64_t shuffle = 0;  // nonzero: randomize generation order with this seed
};

inline constexpr int kMaxDegree = 6;

// Locked pairs over minimal alphabets, one per isomorphism class and color
// renaming, with at most two edge classes per color.
std::vector<VectorPair> enumerate_pairs(int d);

// One candidate neighborhood with the inversion it induces on configurations.
struct NeighborhoodOption {
    EdgeNeighborhood nb;
    std::vector<std::pair<int, int>> inv;  // (class, class) in both directions
};
std::vector<NeighborhoodOption> neighborhood_options(const VectorPair &pair, const FlagClasses &fc,
                                                     int color);
std::vector<EdgeNeighborhood> enumerate_neighborhoods(const VectorPair &pair, int color);

// Valid schemes of degree d up to isomorphism, sorted by key.
std::vector<SchemeFamily> enumerate_schemes(int d, const EnumerateOptions &opt = {});

SchemeFamily make_family(const LabelingScheme &s);

struct FamilyCounts {
    int periodic = 0;
    int aperiodic = 0;
};
FamilyCounts count_families(const std::vector<SchemeFamily> &fams);

} // namespace vtp
