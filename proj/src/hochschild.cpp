#include "homcat/hochschild.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homcat {

namespace {

struct CCElt {
    int level;               // d >= 0
    std::vector<int> tuple;  // chain-order basis ids; empty for the diagonal part
    int out;                 // basis id (level >= 1) or object index (level 0)
    int r;                   // CC degree
};

std::vector<int> key_of(const CCElt& e) {
    std::vector<int> k;
    k.push_back(e.level);
    k.push_back(e.out);
    k.insert(k.end(), e.tuple.begin(), e.tuple.end());
    return k;
}

std::string label_of(const DirectedCategory& c, const CCElt& e) {
    if (e.level == 0) return "1_" + c.object_name(e.out);
    std::ostringstream os;
    os << "(";
    for (size_t j = 0; j < e.tuple.size(); ++j) os << (j ? "," : "") << e.tuple[j];
    os << ")>" << e.out;
    return os.str();
}

/// basis of the normalized cochain space: diagonal part first, then levels
/// ascending with chains and outputs in deterministic order
std::vector<CCElt> cc_basis(const DirectedCategory& c) {
    Grading g = c.grading();
    int m = c.num_objects();
    std::vector<CCElt> out;
    for (int x = 0; x < m; ++x) out.push_back({0, {}, x, 0});
    std::vector<int> tuple;
    auto emit = [&](int src0) {
        int t0 = c.elt(tuple.back()).dst;
        int s = 0;
        for (int id : tuple) s += c.elt(id).deg;
        for (int o : c.hom(src0, t0)) {
            int r = g.norm(c.elt(o).deg - s + (int)tuple.size());
            out.push_back({(int)tuple.size(), tuple, o, r});
        }
    };
    auto extend = [&](auto&& self, int src0, int cur) -> void {
        emit(src0);
        for (int nxt = cur + 1; nxt < m; ++nxt)
            for (int id : c.hom(cur, nxt)) {
                tuple.push_back(id);
                self(self, src0, nxt);
                tuple.pop_back();
            }
    };
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            for (int id : c.hom(i, k)) {
                tuple.assign(1, id);
                extend(extend, i, k);
            }
    // stable order: level, then object chain/tuple, then output
    std::stable_sort(out.begin(), out.end(), [&](const CCElt& a, const CCElt& b) {
        if (a.level != b.level) return a.level < b.level;
        if (a.tuple != b.tuple) return a.tuple < b.tuple;
        return a.out < b.out;
    });
    return out;
}

/// chains of non-identity basis elements ending at object `end` (A-side
/// prechains), including the empty chain; arity-bounded
void chains_ending_at(const DirectedCategory& c, int end, int max_len,
                      std::vector<std::vector<int>>& out) {
    out.push_back({});
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int at) -> void {
        if ((int)cur.size() >= max_len) return;
        for (int prev = at - 1; prev >= 0; --prev) {
            for (int id : c.hom(prev, at)) {
                cur.push_back(id);
                std::vector<int> rev(cur.rbegin(), cur.rend());
                out.push_back(rev);
                self(self, prev);
                cur.pop_back();
            }
        }
    };
    dfs(dfs, end);
}

void chains_starting_at(const DirectedCategory& c, int start, int max_len,
                        std::vector<std::vector<int>>& out) {
    out.push_back({});
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int at) -> void {
        if ((int)cur.size() >= max_len) return;
        for (int nxt = at + 1; nxt < c.num_objects(); ++nxt) {
            for (int id : c.hom(at, nxt)) {
                cur.push_back(id);
                out.push_back(cur);
                self(self, nxt);
                cur.pop_back();
            }
        }
    };
    dfs(dfs, start);
}

struct CCData {
    std::vector<CCElt> basis;
    std::unordered_map<std::vector<int>, int, VecIntHash> index;
    GradedSpace space;
    // per column: list of row basis indices of the differential
    std::vector<std::vector<int>> dcols;
};

CCData assemble(const DirectedCategory& c, bool mu1_part_only) {
    CCData d;
    d.basis = cc_basis(c);
    d.space = GradedSpace(c.grading());
    for (int i = 0; i < (int)d.basis.size(); ++i) {
        d.index[key_of(d.basis[i])] = i;
        d.space.add(label_of(c, d.basis[i]) + "#" + std::to_string(i), d.basis[i].r);
    }
    int cap = std::max(2, c.max_mu());

    // reverse index of the μ tables: elt -> keys whose value contains it
    std::unordered_map<int, std::vector<std::vector<int>>> rev;
    for (const auto& [k, v] : c.mu_table()) {
        if (mu1_part_only && k.size() != 1) continue;
        for (int t : v.ids) rev[t].push_back(k);
    }

    d.dcols.resize(d.basis.size());
    for (int col = 0; col < (int)d.basis.size(); ++col) {
        const CCElt& g = d.basis[col];
        auto contribute = [&](const CCElt& e) {
            auto it = d.index.find(key_of(e));
            if (it == d.index.end()) throw std::logic_error("cc_complex: missing target slot");
            d.dcols[col].push_back(it->second);
        };
        int s0 = g.level ? c.elt(g.tuple.front()).src : g.out;
        int t0 = g.level ? c.elt(g.tuple.back()).dst : g.out;
        Mor mid = g.level ? mor_vec(s0, t0, SparseVec{{g.out}}) : mor_id(g.out);

        // μ-side: μ(pre..., g(inputs), post...)
        int room = (mu1_part_only ? 1 : cap) - 1;
        std::vector<std::vector<int>> pres, posts;
        chains_ending_at(c, s0, room, pres);
        for (const auto& P : pres) {
            posts.clear();
            chains_starting_at(c, t0, room - (int)P.size(), posts);
            for (const auto& Q : posts) {
                if (g.level == 0 && P.empty() && Q.empty()) continue;  // μ^1(id) = 0
                std::vector<Mor> entries;
                for (int id : P) entries.push_back(mor_vec(c.elt(id).src, c.elt(id).dst,
                                                           SparseVec{{id}}));
                entries.push_back(mid);
                for (int id : Q) entries.push_back(mor_vec(c.elt(id).src, c.elt(id).dst,
                                                           SparseVec{{id}}));
                Mor val = mu_mor_chain(c, entries);
                if (val.zero()) continue;
                std::vector<int> tuple2;
                tuple2.insert(tuple2.end(), P.begin(), P.end());
                tuple2.insert(tuple2.end(), g.tuple.begin(), g.tuple.end());
                tuple2.insert(tuple2.end(), Q.begin(), Q.end());
                int lvl = (int)tuple2.size();
                int s = 0;
                for (int id : tuple2) s += c.elt(id).deg;
                for (int o : val.v.ids) {
                    int r = c.grading().norm(c.elt(o).deg - s + lvl);
                    contribute({lvl, tuple2, o, r});
                }
            }
        }
        // h-side: g applied around μ insertions
        if (g.level >= 1) {
            for (int idx = 0; idx < g.level; ++idx) {
                auto it = rev.find(g.tuple[idx]);
                if (it == rev.end()) continue;
                for (const auto& K : it->second) {
                    std::vector<int> tuple2(g.tuple.begin(), g.tuple.begin() + idx);
                    tuple2.insert(tuple2.end(), K.begin(), K.end());
                    tuple2.insert(tuple2.end(), g.tuple.begin() + idx + 1, g.tuple.end());
                    int lvl = (int)tuple2.size();
                    int s = 0;
                    for (int id : tuple2) s += c.elt(id).deg;
                    int r = c.grading().norm(c.elt(g.out).deg - s + lvl);
                    contribute({lvl, tuple2, g.out, r});
                }
            }
        }
    }
    return d;
}

ChainComplex complex_from(const CCData& d, Grading g) {
    // per-degree matrices from the column lists
    std::map<int, GF2Matrix> blocks;
    auto dims = d.space.dims();
    for (const auto& [deg, n] : dims) {
        const auto& cols = d.space.indices(deg);
        const auto& rows = d.space.indices(g.norm(deg + 1));
        std::map<int, int> row_of;
        for (int r = 0; r < (int)rows.size(); ++r) row_of[rows[r]] = r;
        GF2Matrix mat((int)rows.size(), n);
        for (int cpos = 0; cpos < n; ++cpos) {
            for (int target : d.dcols[cols[cpos]]) {
                auto it = row_of.find(target);
                if (it == row_of.end())
                    throw std::logic_error("cc_complex: differential not of degree +1");
                mat.flip(it->second, cpos);
            }
        }
        blocks[deg] = std::move(mat);
    }
    return ChainComplex(d.space, std::move(blocks));
}

}  // namespace

ChainComplex cc_complex(const DirectedCategory& c) {
    CCData d = assemble(c, false);
    ChainComplex cx = complex_from(d, c.grading());
    if (auto v = cx.d_squared_violation())
        throw std::logic_error("cc_complex: differential does not square to zero at degree " +
                               std::to_string(*v));
    return cx;
}

std::map<int, int> hh(const DirectedCategory& c) { return cc_complex(c).cohomology_dims(); }

std::map<int, int> cc_dims(const DirectedCategory& c) {
    std::map<int, int> out;
    for (const auto& e : cc_basis(c)) out[e.r]++;
    return out;
}

std::map<std::pair<int, int>, int> e1_length(const DirectedCategory& c) {
    CCData d = assemble(c, true);
    // restrict to each level separately; the μ^1 part preserves length
    std::map<std::pair<int, int>, int> out;
    std::map<int, std::vector<int>> by_level;
    for (int i = 0; i < (int)d.basis.size(); ++i) by_level[d.basis[i].level].push_back(i);
    for (const auto& [lvl, members] : by_level) {
        GradedSpace sp(c.grading());
        std::map<int, int> pos;  // basis index -> position inside level block
        std::map<int, std::vector<int>> bydeg;
        for (int b : members) {
            pos[b] = (int)bydeg[d.basis[b].r].size();
            bydeg[d.basis[b].r].push_back(b);
            sp.add(d.space.label(b), d.basis[b].r);
        }
        std::map<int, GF2Matrix> blocks;
        for (const auto& [deg, cols] : bydeg) {
            auto itn = bydeg.find(c.grading().norm(deg + 1));
            int nrows = itn == bydeg.end() ? 0 : (int)itn->second.size();
            GF2Matrix mat(nrows, (int)cols.size());
            for (int cpos = 0; cpos < (int)cols.size(); ++cpos)
                for (int target : d.dcols[cols[cpos]]) {
                    if (d.basis[target].level != lvl) continue;  // level-raising part dropped
                    mat.flip(pos.at(target), cpos);
                }
            blocks[deg] = std::move(mat);
        }
        for (const auto& [deg, dim] : ChainComplex(sp, std::move(blocks)).cohomology_dims())
            out[{lvl, deg}] = dim;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

std::map<int, int> hh_oracle(const DirectedCategory& c, int max_total_dim) {
    Grading g = c.grading();
    int m = c.num_objects();
    // independent basis enumeration: object chains as bitmasks, tuples by odometer
    struct Slot {
        std::vector<int> tuple;
        int out;
        int r;
    };
    std::vector<Slot> basis;
    for (int x = 0; x < m; ++x) basis.push_back({{}, -1 - x, 0});  // diagonal, out = -1-obj
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> objs;
        for (int x = 0; x < m; ++x)
            if (mask & (1 << x)) objs.push_back(x);
        if (objs.size() < 2) continue;
        // tuples over consecutive hom blocks of this chain
        std::vector<std::vector<int>> pools;
        bool empty = false;
        for (size_t j = 0; j + 1 < objs.size(); ++j) {
            const auto& h = c.hom(objs[j], objs[j + 1]);
            if (h.empty()) empty = true;
            pools.push_back(h);
        }
        if (empty) continue;
        std::vector<size_t> odo(pools.size(), 0);
        while (true) {
            std::vector<int> tuple;
            int s = 0;
            for (size_t j = 0; j < pools.size(); ++j) {
                tuple.push_back(pools[j][odo[j]]);
                s += c.elt(tuple.back()).deg;
            }
            for (int o : c.hom(objs.front(), objs.back())) {
                int r = g.norm(c.elt(o).deg - s + (int)tuple.size());
                basis.push_back({tuple, o, r});
            }
            size_t j = 0;
            for (; j < pools.size(); ++j) {
                if (++odo[j] < pools[j].size()) break;
                odo[j] = 0;
            }
            if (j == pools.size()) break;
        }
    }
    if ((int)basis.size() > max_total_dim)
        throw std::invalid_argument("hh_oracle: cochain space exceeds the bound");

    // coefficient of `out` in mu over the chain with one Mor evaluated densely
    auto mu_coeff = [&](const std::vector<int>& pre, const Mor& midv, const std::vector<int>& post,
                        int out) -> bool {
        std::vector<Mor> entries;
        for (int id : pre) entries.push_back(mor_vec(c.elt(id).src, c.elt(id).dst, SparseVec{{id}}));
        entries.push_back(midv);
        for (int id : post)
            entries.push_back(mor_vec(c.elt(id).src, c.elt(id).dst, SparseVec{{id}}));
        Mor val = mu_mor_chain(c, entries);
        return val.v.has(out);
    };

    // dense differential: coefficient of target slot in ∂(source slot)
    auto dcoeff = [&](const Slot& gsl, const Slot& tsl) -> bool {
        bool acc = false;
        int dlen = (int)tsl.tuple.size();
        bool g_diag = gsl.out < 0;
        int glen = (int)gsl.tuple.size();
        if (tsl.out < 0) return false;  // nothing maps into the diagonal
        // first sum: μ with g inserted; chunk of length glen at position p
        for (int p = 0; p + glen <= dlen || (g_diag && p <= dlen); ++p) {
            if (g_diag) {
                // insertion between positions p-1 and p at object gobj
                int gobj = -1 - gsl.out;
                int left_obj = (p == 0) ? c.elt(tsl.tuple.front()).src
                                        : c.elt(tsl.tuple[p - 1]).dst;
                if (p == dlen) left_obj = c.elt(tsl.tuple.back()).dst;
                if (left_obj != gobj) continue;
                std::vector<int> pre(tsl.tuple.begin(), tsl.tuple.begin() + p);
                std::vector<int> post(tsl.tuple.begin() + p, tsl.tuple.end());
                if (pre.empty() && post.empty()) continue;
                if (mu_coeff(pre, mor_id(gobj), post, tsl.out)) acc = !acc;
                continue;
            }
            if (p + glen > dlen) break;
            bool match = std::equal(gsl.tuple.begin(), gsl.tuple.end(), tsl.tuple.begin() + p);
            if (!match) continue;
            std::vector<int> pre(tsl.tuple.begin(), tsl.tuple.begin() + p);
            std::vector<int> post(tsl.tuple.begin() + p + glen, tsl.tuple.end());
            Mor midv = mor_vec(c.elt(gsl.tuple.front()).src, c.elt(gsl.tuple.back()).dst,
                               SparseVec{{gsl.out}});
            if (mu_coeff(pre, midv, post, tsl.out)) acc = !acc;
        }
        // second sum: g applied after collapsing a chunk with μ^j
        if (!g_diag && gsl.out == tsl.out) {
            for (int p = 0; p < dlen; ++p) {
                for (int j = 1; p + j <= dlen; ++j) {
                    if (dlen - j + 1 != glen) continue;
                    std::vector<int> chunk(tsl.tuple.begin() + p, tsl.tuple.begin() + p + j);
                    const SparseVec& innerv = c.mu(chunk);
                    if (innerv.zero()) continue;
                    for (int t : innerv.ids) {
                        std::vector<int> collapsed(tsl.tuple.begin(), tsl.tuple.begin() + p);
                        collapsed.push_back(t);
                        collapsed.insert(collapsed.end(), tsl.tuple.begin() + p + j,
                                         tsl.tuple.end());
                        if (collapsed == gsl.tuple) acc = !acc;
                    }
                }
            }
        }
        return acc;
    };

    GradedSpace sp(g);
    for (int i = 0; i < (int)basis.size(); ++i)
        sp.add("o" + std::to_string(i), basis[i].r);
    std::map<int, std::vector<int>> bydeg;
    for (int i = 0; i < (int)basis.size(); ++i) bydeg[basis[i].r].push_back(i);
    std::map<int, GF2Matrix> blocks;
    for (const auto& [deg, cols] : bydeg) {
        auto itn = bydeg.find(g.norm(deg + 1));
        int nrows = itn == bydeg.end() ? 0 : (int)itn->second.size();
        GF2Matrix mat(nrows, (int)cols.size());
        for (int cpos = 0; cpos < (int)cols.size(); ++cpos)
            for (int r = 0; r < nrows; ++r)
                if (dcoeff(basis[cols[cpos]], basis[itn->second[r]])) mat.set(r, cpos, true);
        blocks[deg] = std::move(mat);
    }
    ChainComplex cx(std::move(sp), std::move(blocks));
    if (auto v = cx.d_squared_violation())
        throw std::logic_error("hh_oracle: differential does not square to zero at degree " +
                               std::to_string(*v));
    return cx.cohomology_dims();
}

}  // namespace homcat
