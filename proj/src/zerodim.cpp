#include "homcat/zerodim.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace homcat {

GradedZeroSphere::GradedZeroSphere(int p, int q, int gp, int gq) {
    if (p == q) throw std::invalid_argument("zero-sphere needs two distinct points");
    if (p < q) {
        a = p, b = q, ga = gp, gb = gq;
    } else {
        a = q, b = p, ga = gq, gb = gp;
    }
}

int GradedZeroSphere::grading_at(int x) const {
    if (x == a) return ga;
    if (x == b) return gb;
    throw std::invalid_argument("grading_at: point not on the sphere");
}

void ZeroConfig::validate() const {
    for (const auto& s : spheres)
        if (s.a < 0 || s.b >= fibre)
            throw std::invalid_argument("configuration: sphere point outside the fibre");
}

GradedSpace hf(const GradedZeroSphere& l1, const GradedZeroSphere& l2, Grading g) {
    GradedSpace sp(g);
    for (int x : {l1.a, l1.b})
        if (l2.contains(x)) sp.add("x" + std::to_string(x + 1), l2.grading_at(x) - l1.grading_at(x));
    return sp;
}

GradedZeroSphere graded_dehn_twist(const GradedZeroSphere& l, const GradedZeroSphere& target) {
    // set: τ_L(target); grading at x: target(τ^{-1}x) + τ̃(x), with
    // τ̃(x) = L̃(x) - L̃(τx) - 1 on L and 0 elsewhere
    int p = l.tau(target.a), q = l.tau(target.b);
    auto tw_grading = [&](int x) {
        int base = target.grading_at(l.tau(x));  // τ^{-1} = τ
        int tg = l.contains(x) ? l.grading_at(x) - l.grading_at(l.tau(x)) - 1 : 0;
        return base + tg;
    };
    return GradedZeroSphere(p, q, tw_grading(p), tw_grading(q));
}

GradedZeroSphere graded_dehn_twist_inverse(const GradedZeroSphere& l,
                                           const GradedZeroSphere& target) {
    // inverse grading: -τ̃(τx) on L, 0 elsewhere
    int p = l.tau(target.a), q = l.tau(target.b);
    auto tw_grading = [&](int x) {
        int base = target.grading_at(l.tau(x));
        int tg = l.contains(x) ? -(l.grading_at(l.tau(x)) - l.grading_at(x) - 1) : 0;
        return base + tg;
    };
    return GradedZeroSphere(p, q, tw_grading(p), tw_grading(q));
}

ZeroConfig hurwitz_c(const ZeroConfig& cfg) {
    ZeroConfig out;
    out.fibre = cfg.fibre;
    if (cfg.spheres.empty()) return out;
    for (size_t i = 1; i < cfg.spheres.size(); ++i)
        out.spheres.push_back(graded_dehn_twist(cfg.spheres[0], cfg.spheres[i]));
    out.spheres.push_back(cfg.spheres[0]);
    return out;
}

ZeroConfig hurwitz_r(const ZeroConfig& cfg) {
    if (cfg.spheres.size() < 2) throw std::invalid_argument("r-move needs two spheres");
    ZeroConfig out = cfg;
    size_t m = cfg.spheres.size();
    out.spheres[m - 2] = graded_dehn_twist(cfg.spheres[m - 2], cfg.spheres[m - 1]);
    out.spheres[m - 1] = cfg.spheres[m - 2];
    return out;
}

ZeroConfig hurwitz_inv_c(const ZeroConfig& cfg) {
    ZeroConfig out;
    out.fibre = cfg.fibre;
    if (cfg.spheres.empty()) return out;
    size_t m = cfg.spheres.size();
    out.spheres.push_back(cfg.spheres[m - 1]);
    for (size_t i = 0; i + 1 < m; ++i)
        out.spheres.push_back(graded_dehn_twist_inverse(cfg.spheres[m - 1], cfg.spheres[i]));
    return out;
}

ZeroConfig hurwitz_inv_r(const ZeroConfig& cfg) {
    if (cfg.spheres.size() < 2) throw std::invalid_argument("r!-move needs two spheres");
    ZeroConfig out = cfg;
    size_t m = cfg.spheres.size();
    out.spheres[m - 2] = cfg.spheres[m - 1];
    out.spheres[m - 1] = graded_dehn_twist_inverse(cfg.spheres[m - 1], cfg.spheres[m - 2]);
    return out;
}

ZeroConfig hurwitz_shift(const ZeroConfig& cfg, const std::vector<int>& sigma) {
    if (sigma.size() != cfg.spheres.size())
        throw std::invalid_argument("shift move: sigma length mismatch");
    ZeroConfig out = cfg;
    for (size_t i = 0; i < sigma.size(); ++i) out.spheres[i] = cfg.spheres[i].shifted(sigma[i]);
    return out;
}

DirectedCategory fukaya(const ZeroConfig& cfg, Grading g) {
    cfg.validate();
    int m = (int)cfg.spheres.size();
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("L" + std::to_string(i + 1));
    DirectedCategory cat(g, names);
    // basis: intersection points, ascending
    std::map<std::tuple<int, int, int>, int> id_of;  // (i,k,point) -> id
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            const auto& li = cfg.spheres[i];
            const auto& lk = cfg.spheres[k];
            for (int x : {li.a, li.b}) {
                if (!lk.contains(x)) continue;
                int deg = lk.grading_at(x) - li.grading_at(x);
                id_of[{i, k, x}] = cat.add_elt(i, k, deg, "x" + std::to_string(x + 1));
            }
        }
    }
    // pair-of-pants product: x̄ ∘ ȳ is x̄ if the points agree, else 0
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                for (int x : {cfg.spheres[i].a, cfg.spheres[i].b}) {
                    auto e1 = id_of.find({i, j, x});
                    auto e2 = id_of.find({j, k, x});
                    auto et = id_of.find({i, k, x});
                    if (e1 == id_of.end() || e2 == id_of.end()) continue;
                    if (et == id_of.end())
                        throw std::logic_error("fukaya: product point missing from target");
                    SparseVec v;
                    v.add(et->second);
                    cat.set_mu({e1->second, e2->second}, std::move(v));
                }
    return cat;
}

bool CoverReport::disc() const {
    return components == 1 && euler == 1 && boundary_circles == 1 &&
           genus_per_component == std::vector<int>{0};
}

CoverReport cover_topology(const ZeroConfig& cfg) {
    cfg.validate();
    CoverReport rep;
    rep.sheets = cfg.fibre;
    rep.branch_points = (int)cfg.spheres.size();
    rep.euler = cfg.fibre - (long long)cfg.spheres.size();

    // components: orbits of the subgroup generated by the transpositions
    std::vector<int> parent(cfg.fibre);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& s : cfg.spheres) parent[find(s.a)] = find(s.b);
    std::map<int, std::vector<int>> comp_points;
    for (int x = 0; x < cfg.fibre; ++x) comp_points[find(x)].push_back(x);
    rep.components = (int)comp_points.size();

    // total monodromy around the boundary: the ordered product of the
    // transpositions, first sphere applied first
    std::vector<int> perm(cfg.fibre);
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& s : cfg.spheres) {
        for (int x = 0; x < cfg.fibre; ++x)
            if (perm[x] == s.a)
                perm[x] = s.b;
            else if (perm[x] == s.b)
                perm[x] = s.a;
    }
    // cycles of perm per component
    std::vector<bool> seen(cfg.fibre, false);
    std::map<int, int> cycles_per_comp;
    for (int x = 0; x < cfg.fibre; ++x) {
        if (seen[x]) continue;
        int y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = perm[y];
        }
        cycles_per_comp[find(x)]++;
    }
    rep.boundary_circles = 0;
    for (const auto& [root, pts] : comp_points) {
        int sheets = (int)pts.size();
        int branch = 0;
        for (const auto& s : cfg.spheres)
            if (find(s.a) == root) branch++;
        int chi = sheets - branch;
        int b = cycles_per_comp.count(root) ? cycles_per_comp.at(root) : 0;
        rep.boundary_circles += b;
        int twog = 2 - b - chi;
        if (twog < 0 || twog % 2)
            throw std::logic_error("cover_topology: inconsistent Euler characteristic");
        rep.genus_per_component.push_back(twog / 2);
    }
    return rep;
}

PhiRel phi_rel(const ZeroConfig& cover, const std::vector<GradedZeroSphere>& boundary) {
    cover.validate();
    for (const auto& s : boundary)
        if (s.a < 0 || s.b >= cover.fibre)
            throw std::invalid_argument("phi_rel: boundary sphere outside the fibre");
    PhiRel out;
    int nb = (int)boundary.size();
    for (int j = 0; j < nb; ++j) out.factor_pairs.push_back({j, (j + 1) % nb});
    for (int x = 0; x < cover.fibre; ++x) {
        bool fixed = true;
        for (const auto& s : cover.spheres)
            if (s.contains(x)) {
                fixed = false;
                break;
            }
        if (!fixed) continue;
        bool onall = true;
        for (const auto& s : boundary)
            if (!s.contains(x)) {
                onall = false;
                break;
            }
        if (!onall) continue;
        out.sections.push_back(x);
        std::vector<int> degs;
        for (int j = 0; j < nb; ++j) {
            const auto& from = boundary[j];
            const auto& to = boundary[(j + 1) % nb];
            degs.push_back(to.grading_at(x) - from.grading_at(x));
        }
        out.factor_degrees.push_back(std::move(degs));
    }
    return out;
}

TriangleReport cone_triangle_check(const GradedZeroSphere& l, const GradedZeroSphere& l1,
                                   const GradedZeroSphere& l2) {
    TriangleReport rep;
    Grading g;  // integer gradings throughout the zero-dimensional theory
    GradedZeroSphere tl2 = graded_dehn_twist(l, l2);

    // cone C = (HF(L,L2) ⊗ HF(L1,L))[1] ⊕ HF(L1,L2)
    struct Gen {
        bool pair;  // true: (x,y) in the shifted tensor part
        int x, y;
        int deg;
    };
    std::vector<Gen> gens;
    for (int x : {l.a, l.b}) {
        if (!l2.contains(x)) continue;
        int dx = l2.grading_at(x) - l.grading_at(x);
        for (int y : {l1.a, l1.b}) {
            if (!l.contains(y)) continue;
            int dy = l.grading_at(y) - l1.grading_at(y);
            gens.push_back({true, x, y, dx + dy - 1});
        }
    }
    for (int z : {l1.a, l1.b}) {
        if (!l2.contains(z)) continue;
        gens.push_back({false, z, -1, l2.grading_at(z) - l1.grading_at(z)});
    }
    GradedSpace cone_sp(g);
    for (size_t i = 0; i < gens.size(); ++i) {
        const Gen& e = gens[i];
        std::string lab = e.pair ? "x" + std::to_string(e.x + 1) + "y" + std::to_string(e.y + 1)
                                 : "z" + std::to_string(e.x + 1);
        cone_sp.add(lab, e.deg);
    }
    // differential: a(x ⊗ y) = [x == y] x̄
    std::map<int, GF2Matrix> blocks;
    for (const auto& [deg, n] : cone_sp.dims()) {
        GF2Matrix mat(cone_sp.dim(deg + 1), n);
        const auto& cols = cone_sp.indices(deg);
        const auto& rows = cone_sp.indices(deg + 1);
        for (int cpos = 0; cpos < (int)cols.size(); ++cpos) {
            const Gen& e = gens[cols[cpos]];
            if (!e.pair || e.x != e.y) continue;
            for (int rpos = 0; rpos < (int)rows.size(); ++rpos) {
                const Gen& t = gens[rows[rpos]];
                if (!t.pair && t.x == e.x) mat.set(rpos, cpos, true);
            }
        }
        blocks[deg] = std::move(mat);
    }
    ChainComplex cone_cx(cone_sp, std::move(blocks));
    auto cone_h = cone_cx.cohomology();
    for (const auto& [deg, c] : cone_h)
        if (c.dim) rep.cone_h[deg] = c.dim;

    GradedSpace tgt = hf(l1, tl2, g);
    for (const auto& [deg, n] : tgt.dims()) rep.target_h[deg] = n;
    rep.dims_ok = (rep.cone_h == rep.target_h);

    // the map (h, b): h(x ⊗ y) = [τx == y] (τx)-bar; b(z) = z̄ for z off L
    auto map_gen = [&](int gi) -> std::optional<int> {  // target basis index
        const Gen& e = gens[gi];
        if (e.pair) {
            int tx = l.tau(e.x);
            if (tx != e.y) return std::nullopt;
            // target point is τx on l1 ∩ τ_L(L2)
            std::string lab = "x" + std::to_string(tx + 1);
            return tgt.has_label(lab) ? std::optional<int>(tgt.index_of(lab)) : std::nullopt;
        }
        if (l.contains(e.x)) return std::nullopt;  // b vanishes on L
        std::string lab = "x" + std::to_string(e.x + 1);
        return tgt.has_label(lab) ? std::optional<int>(tgt.index_of(lab)) : std::nullopt;
    };
    // induced map on cohomology must be a bijection in every degree
    rep.qiso = rep.dims_ok;
    for (const auto& [deg, c] : cone_h) {
        if (!c.dim || !rep.qiso) continue;
        GF2Matrix mat(tgt.dim(deg), c.dim);
        for (int j = 0; j < c.dim; ++j) {
            const BitVec& repv = c.reps[j];
            const auto& degids = cone_sp.indices(deg);
            for (int pos = 0; pos < repv.size(); ++pos) {
                if (!repv.get(pos)) continue;
                auto ti = map_gen(degids[pos]);
                if (!ti) continue;
                mat.flip(tgt.pos_in_degree(*ti), j);
            }
        }
        if (mat.rank() != c.dim) rep.qiso = false;
    }
    return rep;
}

}  // namespace homcat
