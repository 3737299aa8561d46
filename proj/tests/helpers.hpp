#pragma once

#include <random>
#include <string>

#include "homcat/category.hpp"
#include "homcat/zerodim.hpp"

#ifndef HOMCAT_SOURCE_DIR
#define HOMCAT_SOURCE_DIR "."
#endif

inline std::string fixture(const std::string& name) {
    return std::string(HOMCAT_SOURCE_DIR) + "/fixtures/" + name;
}

namespace homcat::testing {

/// CP^2 pencil quiver with relations a2a1 = b2b1, b2a1 = a2b1
inline QuiverPresentation cp2_quiver() {
    QuiverPresentation q;
    q.vertices = {"X1", "X2", "X3"};
    q.arrows = {{"a1", 0, 1, 0}, {"b1", 0, 1, 0}, {"a2", 1, 2, 0}, {"b2", 1, 2, 0}};
    q.relations = {{{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    return q;
}

/// A_g quiver for 2g+1 objects with relations b_{i+1} a_i = a_{i+1} b_i = 0
inline QuiverPresentation ag_quiver(int g, Grading grading = {}) {
    QuiverPresentation q;
    q.grading = grading;
    int m = 2 * g + 1;
    for (int i = 0; i < m; ++i) q.vertices.push_back("X" + std::to_string(i + 1));
    for (int i = 0; i + 1 < m; ++i) {
        q.arrows.push_back({"a" + std::to_string(i + 1), i, i + 1, 0});
        q.arrows.push_back({"b" + std::to_string(i + 1), i, i + 1, 0});
    }
    for (int i = 0; i + 2 < m; ++i) {
        int a_i = 2 * i, b_i = 2 * i + 1, a_n = 2 * i + 2, b_n = 2 * i + 3;
        q.relations.push_back({{a_i, b_n}});  // b_{i+1} a_i = 0
        q.relations.push_back({{b_i, a_n}});  // a_{i+1} b_i = 0
    }
    return q;
}

/// linear A_m quiver, all arrows ascending, no relations
inline QuiverPresentation am_quiver(int m) {
    QuiverPresentation q;
    for (int i = 0; i < m; ++i) q.vertices.push_back("X" + std::to_string(i + 1));
    for (int i = 0; i + 1 < m; ++i)
        q.arrows.push_back({"e" + std::to_string(i + 1), i, i + 1, 0});
    return q;
}

inline ZeroConfig ag_config(int g) {
    ZeroConfig cfg;
    cfg.fibre = 2;
    for (int i = 0; i < 2 * g + 1; ++i) cfg.spheres.push_back(GradedZeroSphere(0, 1, 0, 0));
    return cfg;
}

inline ZeroConfig random_config(std::mt19937_64& rng, int max_fibre = 8, int max_m = 6,
                                int grange = 2) {
    std::uniform_int_distribution<int> fdist(2, max_fibre);
    ZeroConfig cfg;
    cfg.fibre = fdist(rng);
    std::uniform_int_distribution<int> mdist(1, max_m);
    std::uniform_int_distribution<int> pt(0, cfg.fibre - 1);
    std::uniform_int_distribution<int> gr(-grange, grange);
    int m = mdist(rng);
    for (int i = 0; i < m; ++i) {
        int a = pt(rng), b = pt(rng);
        while (b == a) b = pt(rng);
        cfg.spheres.push_back(GradedZeroSphere(a, b, gr(rng), gr(rng)));
    }
    return cfg;
}

/// random directed quiver category with homogeneous relations (always a
/// valid dg category with μ^1 = 0)
inline DirectedCategory random_quiver_category(std::mt19937_64& rng, int max_m = 4,
                                               int max_arrows = 6, int max_deg = 1) {
    std::uniform_int_distribution<int> mdist(2, max_m);
    int m = mdist(rng);
    QuiverPresentation q;
    for (int i = 0; i < m; ++i) q.vertices.push_back("V" + std::to_string(i + 1));
    std::uniform_int_distribution<int> adist(1, max_arrows);
    std::uniform_int_distribution<int> vdist(0, m - 1);
    std::uniform_int_distribution<int> ddist(0, max_deg);
    int na = adist(rng);
    for (int a = 0; a < na; ++a) {
        int i = vdist(rng), k = vdist(rng);
        if (i == k) continue;
        if (i > k) std::swap(i, k);
        q.arrows.push_back({"r" + std::to_string(a), i, k, ddist(rng)});
    }
    // a couple of random homogeneous relations: pair up equal-profile paths
    DirectedCategory free_cat = from_quiver(q);
    std::map<std::tuple<int, int, int>, std::vector<std::vector<int>>> by_profile;
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            for (const auto& p : enumerate_paths(q, i, k)) {
                if (p.size() < 2) continue;
                int deg = 0;
                for (int a : p) deg += q.arrows[a].deg;
                by_profile[{i, k, deg}].push_back(p);
            }
    std::bernoulli_distribution use(0.5);
    for (const auto& [prof, paths] : by_profile) {
        if (paths.size() >= 2 && use(rng)) q.relations.push_back({paths[0], paths[1]});
        else if (use(rng) && !paths.empty()) q.relations.push_back({paths[0]});
    }
    return from_quiver(q);
}

}  // namespace homcat::testing
