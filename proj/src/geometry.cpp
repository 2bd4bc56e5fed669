#include "vtp/geometry.hpp"

#include "vtp/errors.hpp"

#include <algorithm>
#include <numeric>

namespace vtp {

std::string to_string(Geometry g)
{
    switch (g) {
    case Geometry::Spherical: return "spherical";
    case Geometry::Euclidean: return "euclidean";
    case Geometry::Hyperbolic: return "hyperbolic";
    }
    return "";
}

namespace {

void check_entries(const TypeVector &tv)
{
    if (tv.size() < 3) throw UserError("type vector needs at least 3 entries");
    for (int k : tv)
        if (k != kInfinite && k < 3) throw UserError("faces have at least 3 sides");
}

// Sign of sum (k-2)/k - 2 computed exactly; an infinite face contributes 1.
int excess_sign(const TypeVector &tv)
{
    __int128 num = 0, den = 1;
    for (int k : tv) {
        __int128 n = k == kInfinite ? 1 : k - 2, q = k == kInfinite ? 1 : k;
        num = num * q + n * den;
        den *= q;
        __int128 g = std::gcd(static_cast<long long>(num < 0 ? -num : num), static_cast<long long>(den));
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    __int128 diff = num - 2 * den;
    return diff > 0 ? 1 : (diff < 0 ? -1 : 0);
}

double angle_sum(const TypeVector &tv, double l, Geometry g)
{
    double s = 0;
    for (int k : tv) s += interior_angle(k, l, g);
    return s;
}

} // namespace

Geometry classify_geometry(const TypeVector &tv)
{
    check_entries(tv);
    int s = excess_sign(tv);
    return s == 0 ? Geometry::Euclidean : (s < 0 ? Geometry::Spherical : Geometry::Hyperbolic);
}

bool excluded_type_vector(const TypeVector &tv)
{
    if (tv.size() != 3) return false;
    TypeVector s = tv;
    std::sort(s.begin(), s.end());
    if (s[2] == kInfinite || s[0] != 3) return false;
    return (s[1] == 3 && s[2] >= 5) || (s[1] == 4 && s[2] >= 6) || (s[1] == 5 && s[2] >= 9);
}

EdgeLengthSolution solve_edge_length(const TypeVector &tv)
{
    EdgeLengthSolution sol;
    sol.kind = classify_geometry(tv);
    if (excluded_type_vector(tv)) throw UserError("no labeling scheme validates this type vector");
    const double two_pi = 2 * std::numbers::pi;
    if (sol.kind == Geometry::Euclidean) {
        sol.length = 1.0;
    } else {
        double lo = 0, hi = 64;
        if (sol.kind == Geometry::Spherical) {
            if (std::count(tv.begin(), tv.end(), kInfinite))
                throw UserError("infinite faces have no realization on the sphere");
            int kmax = *std::max_element(tv.begin(), tv.end());
            hi = std::min(std::numbers::pi, two_pi / kmax);
        }
        // hyperbolic angles shrink with l, spherical ones grow
        bool grows = sol.kind == Geometry::Spherical;
        for (int it = 0; it < 200 && hi - lo > 0; ++it) {
            double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            bool over = angle_sum(tv, mid, sol.kind) > two_pi;
            ((over == grows) ? hi : lo) = mid;
        }
        double a = std::abs(angle_sum(tv, lo, sol.kind) - two_pi);
        double b = std::abs(angle_sum(tv, hi, sol.kind) - two_pi);
        sol.length = a <= b ? lo : hi;
        if (!(sol.length > 0)) throw InvariantError("edge length solver did not converge");
    }
    double sum = 0;
    for (int k : tv) {
        sol.angles.push_back(interior_angle(k, sol.length, sol.kind));
        sum += sol.angles.back();
    }
    sol.residual = std::abs(sum - two_pi);
    if (sol.residual > 1e-9) throw InvariantError("edge length solver did not converge");
    return sol;
}

Point point_of(const Mobius<double> &m, Geometry g)
{
    Point p;
    if (g == Geometry::Spherical) {
        p.sphere = sphere_image(m);
        p.plane = project(p, g);
    } else {
        auto z = origin_image(m);
        p.plane = {z.real(), z.imag()};
    }
    return p;
}

double distance(const Point &a, const Point &b, Geometry g)
{
    switch (g) {
    case Geometry::Euclidean:
        return (a.plane - b.plane).norm();
    case Geometry::Hyperbolic: {
        std::complex<double> z(a.plane.x(), a.plane.y()), w(b.plane.x(), b.plane.y());
        return 2 * std::atanh(std::abs(z - w) / std::abs(1.0 - std::conj(w) * z));
    }
    case Geometry::Spherical:
        return std::atan2(a.sphere.cross(b.sphere).norm(), a.sphere.dot(b.sphere));
    }
    return 0;
}

Eigen::Vector2d project(const Point &p, Geometry g)
{
    if (g != Geometry::Spherical) return p.plane;
    double den = 1 - p.sphere.z();
    if (den < 1e-12) den = 1e-12;
    return {p.sphere.x() / den, p.sphere.y() / den};
}

} // namespace vtp
