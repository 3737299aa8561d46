#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "homcat/hochschild.hpp"
#include "homcat/minimal.hpp"
#include "homcat/mutation.hpp"
#include "homcat/zerodim.hpp"

using namespace homcat;
using namespace homcat::testing;

namespace {

/// brute-force section enumeration on a triangulated disc: the disc is a fan
/// of triangles around the origin, one branch point inside each "branched"
/// triangle; a combinatorial section picks a sheet per triangle, constant
/// across edges whose crossing does not pass the cut of a branch point.
/// Crossing the cut of branch transposition τ relates sheets by τ. For a fan
/// with one marked boundary arc per triangle this reduces to: sheet_0 fixed,
/// sheet_{j+1} = τ_j(sheet_j) if triangle j is branched; a global section
/// needs closure around the fan and membership in every boundary sphere.
std::set<int> brute_sections(const ZeroConfig& cover,
                             const std::vector<GradedZeroSphere>& boundary) {
    std::set<int> out;
    for (int start = 0; start < cover.fibre; ++start) {
        int s = start;
        bool continuous = true;
        // walk the fan once; crossing each branch cut applies the transposition
        for (const auto& b : cover.spheres) {
            int before = s;
            s = (s == b.a) ? b.b : (s == b.b ? b.a : s);
            // a single-valued continuous section cannot take two values on
            // the disc, so passing a cut must fix the sheet
            if (s != before) {
                continuous = false;
                break;
            }
        }
        if (!continuous || s != start) continue;
        bool onall = true;
        for (const auto& l : boundary)
            if (!l.contains(start)) onall = false;
        if (onall) out.insert(start);
    }
    return out;
}

}  // namespace

TEST_CASE("hf dictionary cases") {
    Grading g;
    GradedZeroSphere l1(0, 1, 0, 0), l2(0, 2, 0, 0);
    GradedSpace s = hf(l1, l2, g);
    CHECK(s.dim() == 1);
    CHECK(s.degree(0) == 0);

    GradedZeroSphere l(0, 1, 0, 0);
    GradedSpace self = hf(l, l, g);
    CHECK(self.dims() == std::map<int, int>{{0, 2}});  // H*(S^0)

    GradedZeroSphere far(2, 3, 0, 0);
    CHECK(hf(l, far, g).dim() == 0);
}

TEST_CASE("graded Dehn twist formulas") {
    GradedZeroSphere l(0, 1, 0, 0);
    // twist of L by itself is L[1]
    GradedZeroSphere tw = graded_dehn_twist(l, l);
    CHECK(tw.a == 0);
    CHECK(tw.b == 1);
    CHECK(tw.ga == -1);
    CHECK(tw.gb == -1);

    // L = {1,2} grading 0, target {2,3} grading 0 -> {1,3}, grading -1 at 1
    GradedZeroSphere target(1, 2, 0, 0);
    GradedZeroSphere moved = graded_dehn_twist(l, target);
    CHECK(moved.a == 0);
    CHECK(moved.b == 2);
    CHECK(moved.grading_at(0) == -1);
    CHECK(moved.grading_at(2) == 0);

    // disjoint targets are unchanged
    GradedZeroSphere far(2, 3, 1, -1);
    CHECK(graded_dehn_twist(l, far) == far);

    // inverse undoes the twist
    CHECK(graded_dehn_twist_inverse(l, moved) == target);
}

TEST_CASE("hurwitz moves: group action sanity") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        ZeroConfig cfg = random_config(rng);
        if (cfg.spheres.size() < 2) continue;
        CHECK(hurwitz_inv_c(hurwitz_c(cfg)) == cfg);
        CHECK(hurwitz_c(hurwitz_inv_c(cfg)) == cfg);
        CHECK(hurwitz_inv_r(hurwitz_r(cfg)) == cfg);
        CHECK(hurwitz_r(hurwitz_inv_r(cfg)) == cfg);
    }
    // single sphere: the c-move is a rotation to itself
    ZeroConfig one;
    one.fibre = 3;
    one.spheres = {GradedZeroSphere(0, 1, 0, 0)};
    CHECK(hurwitz_c(one) == one);
}

TEST_CASE("fukaya of the makebasis configuration is the path category") {
    // diagram positions p1..p7 with arrows p1->p2->p3<-p4<-p5<-p6->p7 and
    // spheres {1,2},{1,3},{1,4},{5,4},{6,4},{7,4},{7,8}; the distinguished
    // basis lists them in the order (p1,p2,p6,p5,p4,p3,p7)
    ZeroConfig cfg;
    cfg.fibre = 8;
    int pts[7][2] = {{1, 2}, {1, 3}, {7, 4}, {6, 4}, {5, 4}, {1, 4}, {7, 8}};
    for (auto& p : pts) cfg.spheres.push_back(GradedZeroSphere(p[0] - 1, p[1] - 1, 0, 0));
    DirectedCategory f = fukaya(cfg);

    QuiverPresentation q;
    for (int i = 0; i < 7; ++i) q.vertices.push_back("P" + std::to_string(i + 1));
    // arrows in the basis numbering: p1->p2 = (1,2), p2->p3 = (2,6),
    // p4->p3 = (5,6), p5->p4 = (4,5), p6->p5 = (3,4), p6->p7 = (3,7)
    q.arrows = {{"u1", 0, 1, 0}, {"u2", 1, 5, 0}, {"u3", 4, 5, 0},
                {"u4", 3, 4, 0}, {"u5", 2, 3, 0}, {"u6", 2, 6, 0}};
    DirectedCategory pc = from_quiver(q);
    CHECK(f.dims_table() == pc.dims_table());
    CHECK(strictly_isomorphic(f, pc));
}

TEST_CASE("fukaya: A_g configuration gives the A_g quiver category") {
    ZeroConfig cfg = ag_config(2);
    DirectedCategory f = fukaya(cfg);
    DirectedCategory q = from_quiver(ag_quiver(2));
    CHECK(f.dims_table() == q.dims_table());
    CHECK(strictly_isomorphic(f, q));
    CHECK(f.check_relations().empty());
}

TEST_CASE("fukaya: empty configuration") {
    ZeroConfig cfg;
    cfg.fibre = 3;
    DirectedCategory f = fukaya(cfg);
    CHECK(f.num_objects() == 0);
    CHECK(f.num_elts() == 0);
}

TEST_CASE("cover topology: A_g and makebasis") {
    CoverReport ag = cover_topology(ag_config(2));
    CHECK(ag.connected());
    CHECK(ag.euler == -3);
    CHECK(ag.boundary_circles == 1);
    CHECK(ag.genus_per_component == std::vector<int>{2});

    ZeroConfig mb;
    mb.fibre = 8;
    int pts[7][2] = {{1, 2}, {1, 3}, {7, 4}, {6, 4}, {5, 4}, {1, 4}, {7, 8}};
    for (auto& p : pts) mb.spheres.push_back(GradedZeroSphere(p[0] - 1, p[1] - 1, 0, 0));
    CoverReport rep = cover_topology(mb);
    CHECK(rep.connected());
    CHECK(rep.euler == 1);
    CHECK(rep.disc());

    // no branch points: k disc components
    ZeroConfig flat;
    flat.fibre = 4;
    CoverReport fr = cover_topology(flat);
    CHECK(fr.components == 4);
    CHECK(fr.euler == 4);
    CHECK(fr.genus_per_component == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("chi always equals sheets minus branch points") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        ZeroConfig cfg = random_config(rng);
        CoverReport rep = cover_topology(cfg);
        CHECK(rep.euler == rep.sheets - rep.branch_points);
    }
}

TEST_CASE("phi_rel: pair-of-pants cases") {
    ZeroConfig flat;
    flat.fibre = 4;
    std::vector<GradedZeroSphere> bd = {GradedZeroSphere(0, 1, 0, 0),
                                        GradedZeroSphere(0, 2, 0, 0),
                                        GradedZeroSphere(0, 3, 0, 0)};
    PhiRel pr = phi_rel(flat, bd);
    CHECK(pr.sections == std::vector<int>{0});  // the single section through 1

    bd[2] = GradedZeroSphere(1, 2, 0, 0);
    CHECK(phi_rel(flat, bd).sections.empty());
}

TEST_CASE("phi_rel matches the brute-force section oracle") {
    std::mt19937_64 rng(500);
    for (int trial = 0; trial < 50; ++trial) {
        ZeroConfig cover = random_config(rng, 6, 3, 0);
        std::uniform_int_distribution<int> nb(1, 3);
        std::vector<GradedZeroSphere> bd;
        int k = nb(rng);
        std::uniform_int_distribution<int> pt(0, cover.fibre - 1);
        for (int j = 0; j < k; ++j) {
            int a = pt(rng), b = pt(rng);
            while (b == a) b = pt(rng);
            bd.push_back(GradedZeroSphere(a, b, 0, 0));
        }
        PhiRel pr = phi_rel(cover, bd);
        std::set<int> got(pr.sections.begin(), pr.sections.end());
        CHECK(got == brute_sections(cover, bd));
    }
}

TEST_CASE("phi_rel is additive under disjoint union of fibres") {
    // two independent covers glued side by side: sections are the union
    ZeroConfig a;
    a.fibre = 3;
    a.spheres = {GradedZeroSphere(0, 1, 0, 0)};
    std::vector<GradedZeroSphere> bda = {GradedZeroSphere(0, 2, 0, 0)};

    ZeroConfig b;
    b.fibre = 2;
    std::vector<GradedZeroSphere> bdb = {GradedZeroSphere(0, 1, 0, 0)};

    ZeroConfig both;
    both.fibre = 5;
    both.spheres = {GradedZeroSphere(0, 1, 0, 0)};
    std::vector<GradedZeroSphere> bdboth = {GradedZeroSphere(0, 2, 0, 0)};
    // boundary spheres must contain a point from each part to see sections
    // from both; instead check cardinalities of the separate invariants
    auto sa = phi_rel(a, bda).sections.size();
    auto sb = phi_rel(b, bdb).sections.size();
    // embed b's points as {3,4}
    ZeroConfig bshift;
    bshift.fibre = 5;
    std::vector<GradedZeroSphere> bdshift = {GradedZeroSphere(3, 4, 0, 0)};
    auto sbs = phi_rel(bshift, bdshift).sections.size();
    CHECK(sb == sbs);
    (void)sa;
    CHECK(phi_rel(both, bdboth).sections.size() == sa);
}

TEST_CASE("cone triangle: dictionary examples") {
    // L disjoint from both: the cone is HF(L1,L2) and b is the identity
    GradedZeroSphere l(3, 4, 0, 0), l1(0, 1, 0, 0), l2(0, 2, 0, 0);
    TriangleReport rep = cone_triangle_check(l, l1, l2);
    CHECK(rep.ok());

    // L = L2, L1 meeting L in one point
    GradedZeroSphere ll(0, 1, 0, 0), m1(1, 2, 0, 0);
    TriangleReport rep2 = cone_triangle_check(ll, m1, ll);
    CHECK(rep2.ok());
}

TEST_CASE("cone triangle holds on an exhaustive small sweep") {
    // all triples over |M| = 4 with gradings in {-1,0,1} restricted to two
    // sphere choices to keep the unit-test fast; the acceptance suite runs
    // the full |M| <= 5 sweep
    int M = 4;
    std::vector<GradedZeroSphere> all;
    for (int a = 0; a < M; ++a)
        for (int b = a + 1; b < M; ++b)
            for (int ga = -1; ga <= 1; ++ga)
                for (int gb = -1; gb <= 1; ++gb) all.push_back(GradedZeroSphere(a, b, ga, gb));
    std::mt19937_64 rng(1000);
    for (int trial = 0; trial < 300; ++trial) {
        const auto& l = all[rng() % all.size()];
        const auto& l1 = all[rng() % all.size()];
        const auto& l2 = all[rng() % all.size()];
        TriangleReport rep = cone_triangle_check(l, l1, l2);
        CHECK(rep.ok());
    }
}

TEST_CASE("fukaya intertwines shift moves with category regrading") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        ZeroConfig cfg = random_config(rng, 6, 4);
        std::vector<int> sigma;
        for (size_t i = 0; i < cfg.spheres.size(); ++i)
            sigma.push_back((int)(rng() % 5) - 2);
        DirectedCategory lhs = fukaya(hurwitz_shift(cfg, sigma));
        CatPtr rhs = apply_shift(std::make_shared<DirectedCategory>(fukaya(cfg)), sigma);
        CHECK(tables_equal(lhs, *rhs));
    }
}

TEST_CASE("hh of fukaya is a Hurwitz-orbit invariant (spot checks)") {
    std::mt19937_64 rng(63);
    int done = 0;
    for (int trial = 0; trial < 20 && done < 8; ++trial) {
        ZeroConfig cfg = random_config(rng, 5, 3);
        if (cfg.spheres.size() < 2) continue;
        auto h0 = hh(fukaya(cfg));
        CHECK(hh(fukaya(hurwitz_c(cfg))) == h0);
        CHECK(hh(fukaya(hurwitz_r(cfg))) == h0);
        CHECK(hh(fukaya(hurwitz_inv_c(cfg))) == h0);
        ++done;
    }
    CHECK(done == 8);
}
