#include "homcat/spherical.hpp"

#include <set>
#include <stdexcept>

namespace homcat {

SphericalReport is_spherical(const TwistedComplex& c, int dim) {
    SphericalReport rep;
    rep.dim = dim;
    CatPtr cat = c.cat();
    Grading g = cat->grading();

    HomComplex endo(c, c);
    rep.endo_dims = endo.h_dims();
    std::map<int, int> expect;
    expect[g.norm(0)]++;
    expect[g.norm(dim)]++;
    rep.endo_ok = (rep.endo_dims == expect);

    int m = cat->num_objects();
    rep.pairing_ok.assign(m, true);
    if (!rep.endo_ok) {
        rep.verdict = false;
        return rep;
    }

    // Projection Hom^{dim}(C,C) -> GF(2) onto the non-identity class. When
    // dim ≡ 0 in the periodic grading the degree also contains the identity
    // class, which the functional must kill.
    BitVec id_coords;
    if (g.eq(dim, 0)) {
        TwMor idm;
        idm.deg = 0;
        for (int p = 0; p < c.size(); ++p) idm.comp[{p, p}] = mor_id(c.summand(p).obj);
        auto ic = endo.class_coords(idm);
        if (!ic) throw std::logic_error("is_spherical: identity class not closed");
        id_coords = *ic;
    }
    auto top_coefficient = [&](const TwMor& comp) -> bool {
        auto coords = endo.class_coords(comp);
        if (!coords) throw std::logic_error("is_spherical: composite not closed");
        if (coords->size() == 0) return false;
        if (coords->size() == 1) return coords->get(0);
        if (coords->size() == 2 && g.eq(dim, 0)) {
            // the unique nonzero functional vanishing on the identity class
            return (coords->get(0) && id_coords.get(1)) != (coords->get(1) && id_coords.get(0));
        }
        throw std::logic_error("is_spherical: unexpected class count in the top degree");
    };

    for (int i = 0; i < m; ++i) {
        TwistedComplex gen = TwistedComplex::generator(cat, i);
        HomComplex to_c(gen, c);    // Hom(X, C)
        HomComplex from_c(c, gen);  // Hom(C, X)
        auto hl = to_c.h_dims(), hr = from_c.h_dims();
        std::set<int> degs;
        for (const auto& [d, n] : hl) {
            (void)n;
            degs.insert(d);
        }
        for (const auto& [d, n] : hr) {
            (void)n;
            degs.insert(g.norm(dim - d));
        }
        bool ok = true;
        for (int d : degs) {
            int dl = hl.count(d) ? hl.at(d) : 0;
            int dr = hr.count(g.norm(dim - d)) ? hr.at(g.norm(dim - d)) : 0;
            if (dl != dr) {
                ok = false;
                break;
            }
            if (dl == 0) continue;
            GF2Matrix pairing(dr, dl);
            for (int jl = 0; jl < dl; ++jl) {
                TwMor phi = to_c.class_rep(d, jl);  // X -> C
                for (int jr = 0; jr < dr; ++jr) {
                    TwMor psi = from_c.class_rep(g.norm(dim - d), jr);  // C -> X
                    TwMor comp = tw_mu({&c, &gen, &c}, {&psi, &phi});
                    if (top_coefficient(comp)) pairing.set(jr, jl, true);
                }
            }
            if (pairing.rank() != dl) {
                ok = false;
                break;
            }
        }
        rep.pairing_ok[i] = ok;
    }
    rep.verdict = true;
    for (bool b : rep.pairing_ok) rep.verdict = rep.verdict && b;
    return rep;
}

std::optional<int> matching_dimension(const DirectedCategory& c, int i) {
    auto h = c.hom_complex_block(i, i + 1).cohomology_dims();
    if (h.size() == 1 && h.count(0) && h.at(0) == 2) return 0;
    if (h.size() == 2 && h.count(0) && h.at(0) == 1) {
        int n = 0;
        for (const auto& [deg, d] : h)
            if (deg != 0) {
                if (d != 1) return std::nullopt;
                n = deg;
            }
        if (n > 0) return n;
    }
    return std::nullopt;
}

bool detect_matching_pair(const DirectedCategory& c, int i, int n, SparseVec* found) {
    if (i < 0 || i + 1 >= c.num_objects())
        throw std::invalid_argument("detect_matching_pair: index out of range");
    Grading g = c.grading();
    auto cx = c.hom_complex_block(i, i + 1);
    auto h = cx.cohomology_dims();
    std::map<int, int> expect;
    expect[g.norm(0)]++;
    expect[g.norm(n)]++;
    if (h != expect) return false;

    auto coh = cx.cohomology();
    const auto& h0 = coh.at(g.norm(0));
    // candidate degree-0 classes, deterministic order
    int nreps = h0.dim;
    for (long long word = 1; word < (1ll << nreps); ++word) {
        BitVec loc(cx.space().dim(0));
        for (int j = 0; j < nreps; ++j)
            if ((word >> j) & 1) loc ^= h0.reps[j];
        SparseVec a = c.from_local(i, i + 1, 0, loc);
        // a must be closed (reps are) and induce isos on both sides
        bool ok = true;
        for (int k = 0; k < i && ok; ++k) {
            auto src = c.hom_complex_block(k, i).cohomology();
            auto tgt = c.hom_complex_block(k, i + 1).cohomology();
            std::map<int, int> sdims, tdims;
            for (const auto& [d, cd] : src)
                if (cd.dim) sdims[d] = cd.dim;
            for (const auto& [d, cd] : tgt)
                if (cd.dim) tdims[d] = cd.dim;
            if (sdims != tdims) {
                ok = false;
                break;
            }
            for (const auto& [d, cd] : src) {
                if (!cd.dim) continue;
                GF2Matrix mat(cd.dim, cd.dim);
                for (int j = 0; j < cd.dim; ++j) {
                    SparseVec x = c.from_local(k, i, d, cd.reps[j]);
                    SparseVec img = c.mu_multi({x, a});
                    auto coords = tgt.at(d).coords(c.local_coords(k, i + 1, d, img));
                    if (!coords) {
                        ok = false;
                        break;
                    }
                    for (int r = 0; r < coords->size(); ++r)
                        if (coords->get(r)) mat.set(r, j, true);
                }
                if (!ok || mat.rank() != cd.dim) {
                    ok = false;
                    break;
                }
            }
        }
        for (int l = i + 2; l < c.num_objects() && ok; ++l) {
            auto src = c.hom_complex_block(i + 1, l).cohomology();
            auto tgt = c.hom_complex_block(i, l).cohomology();
            std::map<int, int> sdims, tdims;
            for (const auto& [d, cd] : src)
                if (cd.dim) sdims[d] = cd.dim;
            for (const auto& [d, cd] : tgt)
                if (cd.dim) tdims[d] = cd.dim;
            if (sdims != tdims) {
                ok = false;
                break;
            }
            for (const auto& [d, cd] : src) {
                if (!cd.dim) continue;
                GF2Matrix mat(cd.dim, cd.dim);
                for (int j = 0; j < cd.dim; ++j) {
                    SparseVec y = c.from_local(i + 1, l, d, cd.reps[j]);
                    SparseVec img = c.mu_multi({a, y});
                    auto coords = tgt.at(d).coords(c.local_coords(i, l, d, img));
                    if (!coords) {
                        ok = false;
                        break;
                    }
                    for (int r = 0; r < coords->size(); ++r)
                        if (coords->get(r)) mat.set(r, j, true);
                }
                if (!ok || mat.rank() != cd.dim) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            if (found) *found = a;
            return true;
        }
    }
    return false;
}

TwistedComplex matching_cone(CatPtr c, int i, std::optional<SparseVec> cls) {
    auto nopt = matching_dimension(*c, i);
    if (!nopt && !cls)
        throw std::invalid_argument("matching_cone: hom table is not a sphere");
    int n = nopt.value_or(0);
    SparseVec a;
    if (cls) {
        a = *cls;
    } else {
        if (!detect_matching_pair(*c, i, n, &a))
            throw std::invalid_argument("matching_cone: not a matching pair");
    }
    TwistedComplex x = TwistedComplex::generator(c, i);
    TwistedComplex y = TwistedComplex::generator(c, i + 1);
    TwMor f;
    f.deg = 0;
    f.comp[{0, 0}] = mor_vec(i, i + 1, a);
    TwistedComplex cone_xy = cone(x, y, f);
    SphericalReport rep = is_spherical(cone_xy, n + 1);
    if (!rep.verdict)
        throw std::logic_error("matching_cone: cone failed the sphericality check");
    return cone_xy;
}

BraidReport braid_check(const TwistedComplex& c1, const TwistedComplex& c2, long long cap) {
    BraidReport rep;
    CatPtr cat = c1.cat();
    if (c1 == c2) {
        // both composites coincide syntactically
        rep.mode = "equal";
        rep.per_generator.assign(cat->num_objects(), IsoVerdict::Yes);
        rep.all_yes = true;
        return rep;
    }
    auto dims = db_hom(c1, c2);
    int total = 0;
    for (const auto& [d, n] : dims) total += n;
    if (total > 1) {
        rep.mode = "inapplicable";
        return rep;
    }
    rep.mode = total == 0 ? "commute" : "braid";
    rep.all_yes = true;
    for (int i = 0; i < cat->num_objects(); ++i) {
        TwistedComplex g = TwistedComplex::generator(cat, i);
        TwistedComplex lhs = total == 0 ? twist(c1, twist(c2, g))
                                        : twist(c1, twist(c2, twist(c1, g)));
        TwistedComplex rhs = total == 0 ? twist(c2, twist(c1, g))
                                        : twist(c2, twist(c1, twist(c2, g)));
        IsoVerdict v = is_isomorphic(lhs, rhs, cap);
        rep.per_generator.push_back(v);
        rep.all_yes = rep.all_yes && v == IsoVerdict::Yes;
    }
    return rep;
}

}  // namespace homcat
