#pragma once

#include "vtp/geometry.hpp"

#include <vector>

namespace vtp {

struct BallVertex {
    Arrangement frame;      // slot -> flag of the pair, counterclockwise
    std::vector<int> nbr;   // neighbor per slot, -1 when not glued yet
    std::vector<int> back;  // slot of this vertex at the neighbor
    int dist = 0;
    Mobius<double> mobius = Mobius<double>::Identity();
    Point point;
};

// A corner (v, q) is the face between slots q and q+1 of v.
struct Corner {
    int v;
    int q;
    bool operator==(const Corner &) const = default;
};

struct GraphBall {
    VectorPair pair;
    FlagClasses classes;
    std::vector<int> inv;  // configuration -> configuration
    TypeVector tv;
    Geometry geometry = Geometry::Euclidean;
    bool has_coords = false;
    double length = 1.0;
    std::vector<double> angles;  // per face position of the pair
    int radius = 0;
    bool closed = false;  // finite graph with every vertex complete
    int max_gluing_options = 0;
    std::vector<BallVertex> vertices;

    int degree() const { return pair.degree(); }
    int edge_label(int v, int q) const;
    int face_label(int v, int q) const;
    int face_position(int v, int q) const;
    int face_size(int v, int q) const;  // kInfinite for infinite faces
    bool complete(int v) const;
    int edge_count() const;
    std::vector<std::vector<Corner>> closed_faces() const;
    std::vector<int> distances() const;  // graph distances from the root
};

struct BuildOptions {
    bool coords = false;
    int max_vertices = 400000;
};

// Starts a ball holding the root only.
GraphBall start_ball(const LabelingScheme &s, const TypeVector &tv, bool coords);
// Glues the edge at an open slot: closes a face when the border is one edge
// short, otherwise creates a new vertex. Returns the neighbor.
int glue(GraphBall &ball, int v, int slot);
// Closes every open slot that completes a face, until nothing changes.
int close_faces(GraphBall &ball);

GraphBall build_ball(const LabelingScheme &s, const TypeVector &tv, int r, const BuildOptions &opt = {});

// Every broken property of the ball, empty when sound.
std::vector<std::string> verify(const GraphBall &ball);
double max_edge_length_error(const GraphBall &ball);
double max_angle_error(const GraphBall &ball);

// Direction of slot q in the vertex frame, and the point at distance t along it.
double slot_angle(const GraphBall &ball, int v, int q);
Point edge_point(const GraphBall &ball, int v, int q, double t);

LabelingScheme recover_scheme(const GraphBall &ball);

enum class Growth { Linear, Quadratic, Exponential };
std::string to_string(Growth g);
Growth growth_class(const LabelingScheme &s, const TypeVector &tv, int sample_radius = 7);

} // namespace vtp
