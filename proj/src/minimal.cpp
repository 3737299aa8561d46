#include "homcat/minimal.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcat {

namespace {
const SparseVec kZero{};
}

const SparseVec& AInftyFunctor::F(const std::vector<int>& chain) const {
    auto it = comp.find(chain);
    return it == comp.end() ? kZero : it->second;
}

SparseVec AInftyFunctor::F1(const SparseVec& v) const {
    SparseVec out;
    for (int id : v.ids) out ^= F({id});
    return out;
}

AInftyFunctor AInftyFunctor::identity(CatPtr c) {
    AInftyFunctor f;
    f.source = f.target = c;
    for (int id = 0; id < c->num_elts(); ++id) {
        SparseVec v;
        v.add(id);
        f.comp[{id}] = std::move(v);
    }
    return f;
}

std::vector<std::string> check_functor(const AInftyFunctor& f) {
    std::vector<std::string> out;
    const DirectedCategory& S = *f.source;
    const DirectedCategory& T = *f.target;
    int m = S.num_objects();
    std::vector<int> chain;

    auto lhs_rhs_differ = [&](const std::vector<int>& t) -> bool {
        // LHS: sum over splittings into consecutive parts of μ_T(F(part_1),...,F(part_r))
        SparseVec lhs;
        int d = (int)t.size();
        std::vector<int> cuts;  // positions where parts end (exclusive), last = d
        auto rec = [&](auto&& self, int from) -> void {
            if (from == d) {
                std::vector<SparseVec> args;
                int prev = 0;
                for (int c : cuts) {
                    args.push_back(f.F(std::vector<int>(t.begin() + prev, t.begin() + c)));
                    prev = c;
                }
                lhs ^= T.mu_multi(args);
                return;
            }
            for (int c = from + 1; c <= d; ++c) {
                cuts.push_back(c);
                self(self, c);
                cuts.pop_back();
            }
        };
        rec(rec, 0);
        // RHS: sum over inner μ_S on consecutive segments
        SparseVec rhs;
        for (int j = 1; j <= d; ++j) {
            for (int p = 0; p + j <= d; ++p) {
                const SparseVec& mid = S.mu(std::vector<int>(t.begin() + p, t.begin() + p + j));
                for (int id : mid.ids) {
                    std::vector<int> outer(t.begin(), t.begin() + p);
                    outer.push_back(id);
                    outer.insert(outer.end(), t.begin() + p + j, t.end());
                    rhs ^= f.F(outer);
                }
            }
        }
        return !(lhs == rhs);
    };

    auto extend = [&](auto&& self, int cur) -> void {
        if ((int)out.size() >= 8) return;
        if (lhs_rhs_differ(chain)) {
            std::string what = "functor equation fails on chain:";
            for (int id : chain) what += " " + S.elt(id).label;
            out.push_back(what);
        }
        for (int nxt = cur + 1; nxt < m; ++nxt)
            for (int e2 : S.hom(cur, nxt)) {
                chain.push_back(e2);
                self(self, nxt);
                chain.pop_back();
            }
    };
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            for (int id : S.hom(i, k)) {
                chain.assign(1, id);
                extend(extend, k);
            }
    return out;
}

bool is_quasi_isomorphism(const AInftyFunctor& f) {
    const DirectedCategory& S = *f.source;
    const DirectedCategory& T = *f.target;
    if (S.num_objects() != T.num_objects()) return false;
    int m = S.num_objects();
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            auto hs = S.hom_complex_block(i, k).cohomology();
            auto ht = T.hom_complex_block(i, k).cohomology();
            std::map<int, int> ds, dt;
            for (const auto& [deg, c] : hs)
                if (c.dim) ds[deg] = c.dim;
            for (const auto& [deg, c] : ht)
                if (c.dim) dt[deg] = c.dim;
            if (ds != dt) return false;
            for (const auto& [deg, c] : hs) {
                if (!c.dim) continue;
                GF2Matrix mat(dt.at(deg), c.dim);
                for (int j = 0; j < c.dim; ++j) {
                    SparseVec rep = S.from_local(i, k, deg, c.reps[j]);
                    SparseVec img = f.F1(rep);
                    BitVec loc = T.local_coords(i, k, deg, img);
                    auto coords = ht.at(deg).coords(loc);
                    if (!coords) return false;  // image not closed modulo exact
                    for (int r = 0; r < coords->size(); ++r)
                        if (coords->get(r)) mat.set(r, j, true);
                }
                if (mat.rank() != c.dim) return false;
            }
        }
    }
    return true;
}

namespace {

/// Deterministic splitting of one hom block: C = image ⊕ reps ⊕ complement,
/// with projection p, inclusion iota and homotopy h relative to it.
struct BlockHodge {
    std::map<int, std::vector<BitVec>> reps;      // degree -> rep vectors (local coords)
    std::map<int, GF2Matrix> p;                   // C^deg -> H^deg
    std::map<int, GF2Matrix> h;                   // C^deg -> C^{deg-1}
    std::map<int, std::vector<int>> h_ids;        // H-space global ids per degree
};

}  // namespace

std::pair<CatPtr, AInftyFunctor> minimal_model(CatPtr cp) {
    const DirectedCategory& C = *cp;
    Grading g = C.grading();
    int m = C.num_objects();
    auto H = std::make_shared<DirectedCategory>(g, C.objects());

    std::map<std::pair<int, int>, BlockHodge> hodge;
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            if (C.hom(i, k).empty()) continue;
            BlockHodge bh;
            ChainComplex cx = C.hom_complex_block(i, k);
            auto dims = cx.space().dims();
            // W = pivot-coordinate complement of the kernel, per degree
            std::map<int, std::vector<int>> pivots;  // degree -> pivot cols of d_deg
            std::map<int, std::vector<BitVec>> kerb;
            for (const auto& [deg, n] : dims) {
                (void)n;
                const GF2Matrix& dk = cx.block(deg);
                if (dk.rows() == 0) {
                    GF2Matrix z(0, cx.space().dim(deg));
                    kerb[deg] = z.kernel_basis();
                    pivots[deg] = {};
                } else {
                    auto e = dk.echelon();
                    pivots[deg] = e.pivot_cols;
                    kerb[deg] = dk.kernel_basis();
                }
            }
            auto coh = cx.cohomology();
            for (const auto& [deg, n] : dims) {
                int dim = cx.space().dim(deg);
                (void)n;
                // bases: image of incoming d (ordered by pivot cols of d_prev),
                // chosen reps, pivot coordinates
                int prev = deg - 1;
                std::vector<BitVec> img;
                std::vector<int> prev_piv;
                const GF2Matrix& dprev = cx.block(prev);
                if (dprev.rows() == dim && dprev.cols() > 0) {
                    auto e = dprev.echelon();
                    prev_piv = e.pivot_cols;
                    for (int c : prev_piv) {
                        BitVec col(dim);
                        for (int r = 0; r < dim; ++r) col.set(r, dprev.get(r, c));
                        img.push_back(std::move(col));
                    }
                }
                std::vector<BitVec> reps = coh.count(deg) ? coh.at(deg).reps : std::vector<BitVec>{};
                std::vector<BitVec> wvec;
                for (int c : pivots[deg]) {
                    BitVec v(dim);
                    v.set(c, true);
                    wvec.push_back(std::move(v));
                }
                if ((int)(img.size() + reps.size() + wvec.size()) != dim)
                    throw std::logic_error("minimal_model: splitting dimensions do not add up");
                // basis matrix B = [img | reps | wvec]; solve B x = v to project
                GF2Matrix B(dim, dim);
                int col = 0;
                for (const auto& v : img) {
                    for (int r = 0; r < dim; ++r) B.set(r, col, v.get(r));
                    ++col;
                }
                for (const auto& v : reps) {
                    for (int r = 0; r < dim; ++r) B.set(r, col, v.get(r));
                    ++col;
                }
                for (const auto& v : wvec) {
                    for (int r = 0; r < dim; ++r) B.set(r, col, v.get(r));
                    ++col;
                }
                GF2Matrix Binv = dim ? B.inverse() : GF2Matrix(0, 0);
                int ni = (int)img.size(), nr = (int)reps.size();
                // p: rows of Binv for the reps block
                GF2Matrix pmat(nr, dim);
                for (int r = 0; r < nr; ++r)
                    for (int c = 0; c < dim; ++c) pmat.set(r, c, Binv.get(ni + r, c));
                // h: image coordinates -> preimage pivot coordinates in degree-1
                GF2Matrix hmat(cx.space().dim(deg - 1), dim);
                for (int t = 0; t < ni; ++t) {
                    // Binv row t gives the img-basis coefficient; preimage e_{prev_piv[t]}
                    for (int c = 0; c < dim; ++c)
                        if (Binv.get(t, c)) hmat.flip(prev_piv[t], c);
                }
                bh.reps[deg] = reps;
                bh.p[deg] = std::move(pmat);
                bh.h[deg] = std::move(hmat);
            }
            hodge[{i, k}] = std::move(bh);
        }
    }

    // H-category basis: one element per representative, preserving block order
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            auto it = hodge.find({i, k});
            if (it == hodge.end()) continue;
            for (auto& [deg, reps] : it->second.reps) {
                auto& ids = it->second.h_ids[deg];
                for (int j = 0; j < (int)reps.size(); ++j) {
                    SparseVec rep = C.from_local(i, k, deg, reps[j]);
                    std::string label = "[" +
                        (rep.ids.empty() ? "0" : C.elt(rep.ids.front()).label) + "]";
                    if (reps.size() > 1) label += "#" + std::to_string(j);
                    ids.push_back(H->add_elt(i, k, deg, label));
                }
            }
        }
    }

    // helpers between H ids and C vectors
    auto iota = [&](int id) -> SparseVec {
        const BasisElt& e = H->elt(id);
        const BlockHodge& bh = hodge.at({e.src, e.dst});
        int pos = H->pos_in_block_degree(id);
        return C.from_local(e.src, e.dst, e.deg, bh.reps.at(e.deg)[pos]);
    };
    auto h_deg_of_vec = [&](const SparseVec& v) -> int {
        return C.elt(v.ids.front()).deg;
    };
    auto apply_h = [&](const SparseVec& v) -> SparseVec {
        if (v.zero()) return {};
        const BasisElt& e = C.elt(v.ids.front());
        int deg = h_deg_of_vec(v);
        const BlockHodge& bh = hodge.at({e.src, e.dst});
        if (!bh.h.count(deg)) return {};
        BitVec loc = C.local_coords(e.src, e.dst, deg, v);
        BitVec out = bh.h.at(deg).apply(loc);
        return C.from_local(e.src, e.dst, deg - 1, out);
    };
    auto apply_p = [&](const SparseVec& v, int i, int k, int deg) -> SparseVec {
        const BlockHodge& bh = hodge.at({i, k});
        if (!bh.p.count(deg) || bh.p.at(deg).rows() == 0) return {};
        BitVec loc = C.local_coords(i, k, deg, v);
        BitVec out = bh.p.at(deg).apply(loc);
        SparseVec res;
        const auto& ids = bh.h_ids.at(deg);
        for (int r = 0; r < out.size(); ++r)
            if (out.get(r)) res.add(ids[r]);
        return res;
    };

    // tree recursion: lambda(chain) in C, mu_H(chain) in H
    std::unordered_map<std::vector<int>, SparseVec, VecIntHash> lambda_memo;
    auto lambda = [&](auto&& self, const std::vector<int>& chain) -> const SparseVec& {
        auto it = lambda_memo.find(chain);
        if (it != lambda_memo.end()) return it->second;
        SparseVec val;
        if (chain.size() == 1) {
            val = iota(chain[0]);
        } else {
            // B(chain) = sum over r >= 2 part splittings of mu_C(lambda parts)
            SparseVec B;
            int d = (int)chain.size();
            std::vector<int> cuts;
            auto rec = [&](auto&& rself, int from) -> void {
                if (from == d) {
                    if (cuts.size() < 2) return;
                    std::vector<SparseVec> args;
                    int prev = 0;
                    for (int c : cuts) {
                        args.push_back(self(self, std::vector<int>(chain.begin() + prev,
                                                                   chain.begin() + c)));
                        prev = c;
                    }
                    B ^= C.mu_multi(args);
                    return;
                }
                for (int c = from + 1; c <= d; ++c) {
                    cuts.push_back(c);
                    rself(rself, c);
                    cuts.pop_back();
                }
            };
            rec(rec, 0);
            val = apply_h(B);
        }
        return lambda_memo[chain] = std::move(val);
    };

    AInftyFunctor F;
    F.target = cp;
    // enumerate H chains and install mu_H + functor components
    std::vector<int> chain;
    auto process_chain = [&](const std::vector<int>& t) {
        if (t.size() == 1) {
            F.comp[t] = iota(t[0]);
            return;
        }
        // B(t) as in lambda
        SparseVec B;
        int d = (int)t.size();
        std::vector<int> cuts;
        auto rec = [&](auto&& rself, int from) -> void {
            if (from == d) {
                if (cuts.size() < 2) return;
                std::vector<SparseVec> args;
                int prev = 0;
                for (int c : cuts) {
                    args.push_back(lambda(lambda, std::vector<int>(t.begin() + prev,
                                                                   t.begin() + c)));
                    prev = c;
                }
                B ^= C.mu_multi(args);
                return;
            }
            for (int c = from + 1; c <= d; ++c) {
                cuts.push_back(c);
                rself(rself, c);
                cuts.pop_back();
            }
        };
        rec(rec, 0);
        auto [i, k] = std::pair{H->elt(t.front()).src, H->elt(t.back()).dst};
        if (!B.zero()) {
            int deg = h_deg_of_vec(B);
            SparseVec muv = apply_p(B, i, k, deg);
            if (!muv.zero()) H->set_mu(t, std::move(muv));
            SparseVec lam = apply_h(B);
            if (!lam.zero()) F.comp[t] = std::move(lam);
        }
    };
    auto extend = [&](auto&& self, int cur) -> void {
        process_chain(chain);
        if ((int)chain.size() >= m - 1) return;
        for (int nxt = cur + 1; nxt < m; ++nxt)
            for (int e2 : H->hom(cur, nxt)) {
                chain.push_back(e2);
                self(self, nxt);
                chain.pop_back();
            }
    };
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            for (int id : H->hom(i, k)) {
                chain.assign(1, id);
                extend(extend, k);
            }

    F.source = H;
    return {H, std::move(F)};
}

}  // namespace homcat
