#pragma once

#include "homcat/category.hpp"

namespace homcat {

/// Lagrangian zero-sphere: a two-point subset of the fibre with an integer
/// grading at each point (a < b always).
struct GradedZeroSphere {
    int a = 0, b = 1;
    int ga = 0, gb = 0;
    GradedZeroSphere() = default;
    GradedZeroSphere(int p, int q, int gp, int gq);
    bool contains(int x) const { return x == a || x == b; }
    int grading_at(int x) const;
    int other(int x) const { return x == a ? b : a; }
    /// underlying Dehn twist: the transposition of the two points
    int tau(int x) const { return x == a ? b : (x == b ? a : x); }
    GradedZeroSphere shifted(int sigma) const { return {a, b, ga - sigma, gb - sigma}; }
    bool operator==(const GradedZeroSphere&) const = default;
};

/// Ordered configuration of graded zero-spheres in a finite fibre {0..fibre-1}.
struct ZeroConfig {
    int fibre = 0;
    std::vector<GradedZeroSphere> spheres;
    bool operator==(const ZeroConfig&) const = default;
    void validate() const;
};

/// HF(l1,l2): one generator per intersection point x, of degree
/// l2(x) - l1(x). Labels are "x<point>" with points 1-based.
GradedSpace hf(const GradedZeroSphere& l1, const GradedZeroSphere& l2, Grading g = {});

/// Graded Dehn twist τ̃_L applied to a graded sphere. Characterized by
/// τ̃_L(L̃) = L̃[1] and τ̃(x) = 0 away from L.
GradedZeroSphere graded_dehn_twist(const GradedZeroSphere& l, const GradedZeroSphere& target);
GradedZeroSphere graded_dehn_twist_inverse(const GradedZeroSphere& l,
                                           const GradedZeroSphere& target);

/// Hurwitz moves of graded configurations.
ZeroConfig hurwitz_c(const ZeroConfig& cfg);
ZeroConfig hurwitz_r(const ZeroConfig& cfg);
ZeroConfig hurwitz_inv_c(const ZeroConfig& cfg);
ZeroConfig hurwitz_inv_r(const ZeroConfig& cfg);
ZeroConfig hurwitz_shift(const ZeroConfig& cfg, const std::vector<int>& sigma);

/// Directed Fukaya category of the configuration: hom = HF, μ² the
/// point-matching product, all other compositions zero.
DirectedCategory fukaya(const ZeroConfig& cfg, Grading g = {});

struct CoverReport {
    int sheets = 0;
    int branch_points = 0;
    int components = 0;
    long long euler = 0;
    int boundary_circles = 0;
    std::vector<int> genus_per_component;
    bool connected() const { return components == 1; }
    bool disc() const;
};

/// Topology of the branched cover over the disc with the configuration as
/// its distinguished basis: χ = sheets - branch points, components from the
/// subgroup generated by the transpositions, boundary circles from the total
/// monodromy, genus per component from χ = Σ(2 - 2g - b).
CoverReport cover_topology(const ZeroConfig& cfg);

/// Relative invariant over the disc: the mod-2 set of continuous sections
/// compatible with the boundary condition. A section is a fibre point fixed
/// by every branch transposition and lying in every boundary sphere; each
/// contributes the elementary tensor of its point classes.
struct PhiRel {
    std::vector<int> sections;                      // fibre points, ascending
    std::vector<std::pair<int, int>> factor_pairs;  // (sphere j, sphere j+1 cyc) per marked point
    std::vector<std::vector<int>> factor_degrees;   // per section, degree in each factor
};
PhiRel phi_rel(const ZeroConfig& cover, const std::vector<GradedZeroSphere>& boundary);

/// The exact-triangle quasi-isomorphism at the chain level:
/// Cone(a: HF(L,L2) ⊗ HF(L1,L) -> HF(L1,L2)) -> HF(L1, τ_L(L2)).
struct TriangleReport {
    std::map<int, int> cone_h;
    std::map<int, int> target_h;
    bool dims_ok = false;
    bool qiso = false;
    bool ok() const { return dims_ok && qiso; }
};
TriangleReport cone_triangle_check(const GradedZeroSphere& l, const GradedZeroSphere& l1,
                                   const GradedZeroSphere& l2);

}  // namespace homcat
