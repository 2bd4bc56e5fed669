#pragma once

#include "vtp/automaton.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace vtp {

enum class Geometry { Spherical, Euclidean, Hyperbolic };
std::string to_string(Geometry g);

// Interior angle of a regular k-gon with side l. k == kInfinite is the
// apeirogon (limit angle), which only exists off the sphere.
template <class Scalar>
Scalar interior_angle(int k, Scalar l, Geometry g)
{
    using std::asin;
    using std::cos;
    using std::cosh;
    const Scalar pi = std::numbers::pi_v<Scalar>;
    Scalar c = k == kInfinite ? Scalar(1) : cos(pi / Scalar(k));
    switch (g) {
    case Geometry::Euclidean:
        return k == kInfinite ? pi : pi * Scalar(k - 2) / Scalar(k);
    case Geometry::Hyperbolic:
        return 2 * asin(c / cosh(l / 2));
    case Geometry::Spherical: {
        Scalar x = c / cos(l / 2);
        if (k == kInfinite || !(x <= Scalar(1)) || cos(l / 2) <= 0)
            throw std::domain_error("edge too long for a spherical polygon");
        return 2 * asin(x);
    }
    }
    return Scalar(0);
}

Geometry classify_geometry(const TypeVector &tv);

// Degree-3 type vectors that no labeling scheme validates.
bool excluded_type_vector(const TypeVector &tv);

struct EdgeLengthSolution {
    Geometry kind = Geometry::Euclidean;
    double length = 1.0;
    std::vector<double> angles;
    double residual = 0.0;  // |sum of angles - 2 pi|
};
EdgeLengthSolution solve_edge_length(const TypeVector &tv);

// Orientation-preserving isometries as Moebius maps on the model plane:
// the complex plane, the Poincare disk, or the sphere seen through
// stereographic projection from the north pole.
template <class Scalar>
using Mobius = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

template <class Scalar>
Mobius<Scalar> rotation(Scalar theta)
{
    Mobius<Scalar> m = Mobius<Scalar>::Zero();
    m(0, 0) = std::polar(Scalar(1), theta / 2);
    m(1, 1) = std::polar(Scalar(1), -theta / 2);
    return m;
}

// Moves the origin a distance l along the positive real axis.
template <class Scalar>
Mobius<Scalar> translation(Scalar l, Geometry g)
{
    Mobius<Scalar> m;
    switch (g) {
    case Geometry::Euclidean:
        m << 1, l, 0, 1;
        break;
    case Geometry::Hyperbolic:
        m << std::cosh(l / 2), std::sinh(l / 2), std::sinh(l / 2), std::cosh(l / 2);
        break;
    case Geometry::Spherical:
        m << std::cos(l / 2), std::sin(l / 2), -std::sin(l / 2), std::cos(l / 2);
        break;
    }
    return m;
}

// Image of the origin in the plane or disk.
template <class Scalar>
std::complex<Scalar> origin_image(const Mobius<Scalar> &m)
{
    return m(0, 1) / m(1, 1);
}

// Image of the origin (the south pole) on the unit sphere.
template <class Scalar>
Eigen::Matrix<Scalar, 3, 1> sphere_image(const Mobius<Scalar> &m)
{
    std::complex<Scalar> b = m(0, 1), d = m(1, 1);
    std::complex<Scalar> bd = b * std::conj(d);
    Scalar n = std::norm(b) + std::norm(d);
    return Eigen::Matrix<Scalar, 3, 1>(2 * bd.real(), 2 * bd.imag(), std::norm(b) - std::norm(d)) / n;
}

// Model point of a frame: planar/disk coordinates, or the sphere point.
struct Point {
    Eigen::Vector2d plane = Eigen::Vector2d::Zero();
    Eigen::Vector3d sphere = Eigen::Vector3d::Zero();
};
Point point_of(const Mobius<double> &m, Geometry g);
double distance(const Point &a, const Point &b, Geometry g);
// Stereographic projection of a sphere point to the plane used for drawing.
Eigen::Vector2d project(const Point &p, Geometry g);

} // namespace vtp
