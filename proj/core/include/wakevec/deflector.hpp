#pragma once

#include <array>
#include <vector>

#include "wakevec/geometry.hpp"

namespace wakevec {

// Scoop shape: a circular arc of radius arc_radius in the tilt plane, swept
// across a span of width along z, with an optional transverse bow
// cross_curvature (0 = singly curved ruled surface).
//
// The arc is parametrized by the polar angle beta on its circle of
// curvature. The surface tangent (local flow direction) at beta is
// beta + 90 deg, so
//   beta = 90 deg + inlet_tangent_deg   at the entrance lip
//          (flow arrives inlet_tangent_deg below horizontal), and
//   beta = 180 deg - exit_angle_deg     at the exit edge
//          (flow leaves exit_angle_deg away from straight down).
// The circle is anchored so that its vertical-tangent point (beta = 180 deg,
// the exit tip of an exit_angle_deg = 0 scoop) sits at
// disk_center + mount_offset. Varying the exit angle then trims the exit
// edge along the same circle instead of translating the scoop, which keeps
// the mouth the jet sees identical across an exit-angle sweep.
struct DeflectorGeometry {
    double width = 0.0;               // m, span transverse to the tilt plane
    double arc_radius = 0.0;          // m
    double inlet_tangent_deg = 20.0;  // deg below horizontal at the lip
    double exit_angle_deg = 0.0;      // deg from vertical at the exit edge
    double cross_curvature = 0.0;     // 1/m, bow across the span
    double thickness = 0.0;           // m, solid slab thickness
    Vec3 mount_offset;                // m, arc anchor relative to disk center
};

struct DegenerateArc : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Absolute-frame arc description derived once at validation.
struct DeflectorFrame {
    Vec3 circle_center;   // center of the arc circle, lab frame
    double radius = 0.0;
    double beta_in = 0.0;   // rad, entrance lip
    double beta_out = 0.0;  // rad, exit edge (beta_out > beta_in)
    double half_width = 0.0;
    double kappa_w = 0.0;
    double thickness = 0.0;

    Vec3 point(double beta, double w) const;
    Vec3 normal_into_jet(double beta) const {
        return {-std::cos(beta), -std::sin(beta), 0.0};
    }
    Vec3 entrance_lip_mid() const { return point(beta_in, 0.0); }
    Vec3 exit_edge_mid() const { return point(beta_out, 0.0); }
    // Unit tangent along increasing beta (the flow direction reversed).
    Vec3 exit_tangent() const {
        return {-std::sin(beta_out), std::cos(beta_out), 0.0};
    }
    double turn_angle() const { return beta_out - beta_in; }
    double arc_length() const { return radius * turn_angle(); }
    Box3 bounding_box() const;
};

DeflectorFrame make_deflector_frame(const DeflectorGeometry& geom, const Vec3& disk_center);

struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> tris;

    Vec3 tri_normal(int t) const;  // area-weighted (twice-area vector / 2)
    double area() const;           // sum of triangle areas
};

// Watertight-with-border triangulation: n_s stations along the arc, n_w
// across the span, normals pointing into the jet.
TriMesh deflector_surface(const DeflectorFrame& frame, int n_s, int n_w);

// Exact surface area via Gauss-Legendre quadrature of |S_beta x S_w|.
// Reduces to width * arc length when kappa_w = 0.
double deflector_surface_area(const DeflectorFrame& frame);

// Area of the surface as seen by a jet travelling along jet_dir: sum of
// positively-facing triangle areas projected onto the plane normal to the
// jet.
double projected_capture_area(const DeflectorFrame& frame, const Vec3& jet_dir);

double point_triangle_distance(const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c);

// Distance queries against a dense internal triangulation, used by the
// stair-step cell classifier.
class DeflectorDistance {
  public:
    explicit DeflectorDistance(const DeflectorFrame& frame);

    double distance(const Vec3& p) const;
    const Box3& bounding_box() const { return bbox_; }

  private:
    TriMesh mesh_;
    Box3 bbox_;
};

}  // namespace wakevec
