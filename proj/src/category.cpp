#include "homcat/category.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcat {

const std::vector<int> DirectedCategory::empty_{};
const SparseVec DirectedCategory::zero_{};

bool SparseVec::has(int id) const {
    return std::binary_search(ids.begin(), ids.end(), id);
}

void SparseVec::add(int id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it != ids.end() && *it == id)
        ids.erase(it);
    else
        ids.insert(it, id);
}

void SparseVec::operator^=(const SparseVec& o) {
    std::vector<int> out;
    out.reserve(ids.size() + o.ids.size());
    std::set_symmetric_difference(ids.begin(), ids.end(), o.ids.begin(), o.ids.end(),
                                  std::back_inserter(out));
    ids = std::move(out);
}

DirectedCategory::DirectedCategory(Grading g, std::vector<std::string> objects)
    : g_(g), objects_(std::move(objects)) {}

int DirectedCategory::add_elt(int src, int dst, int deg, const std::string& label) {
    if (src >= dst)
        throw std::invalid_argument("hom(i,k) requires i < k (identities are implicit)");
    int id = (int)elts_.size();
    elts_.push_back({src, dst, g_.norm(deg), label});
    hom_[{src, dst}].push_back(id);
    return id;
}

const std::vector<int>& DirectedCategory::hom(int i, int k) const {
    auto it = hom_.find({i, k});
    return it == hom_.end() ? empty_ : it->second;
}

std::map<int, int> DirectedCategory::hom_dims(int i, int k) const {
    std::map<int, int> out;
    for (int id : hom(i, k)) out[elts_[id].deg]++;
    return out;
}

std::map<std::tuple<int, int, int>, int> DirectedCategory::dims_table() const {
    std::map<std::tuple<int, int, int>, int> out;
    for (const auto& [ik, ids] : hom_)
        for (int id : ids) out[{ik.first, ik.second, elts_[id].deg}]++;
    return out;
}

void DirectedCategory::set_mu(const std::vector<int>& chain, SparseVec value) {
    if (chain.empty()) throw std::invalid_argument("mu: empty chain");
    for (size_t j = 0; j + 1 < chain.size(); ++j)
        if (elts_[chain[j]].dst != elts_[chain[j + 1]].src)
            throw std::invalid_argument("mu: chain not composable");
    int src = elts_[chain.front()].src, dst = elts_[chain.back()].dst;
    int want = 2 - (int)chain.size();
    for (int id : chain) want += elts_[id].deg;
    want = g_.norm(want);
    for (int id : value.ids) {
        const BasisElt& e = elts_[id];
        if (e.src != src || e.dst != dst)
            throw std::invalid_argument("mu: value outside target hom");
        if (e.deg != want)
            throw std::invalid_argument("mu: value has wrong degree");
    }
    if (value.zero()) {
        mu_.erase(chain);
        return;
    }
    max_mu_ = std::max(max_mu_, (int)chain.size());
    mu_[chain] = std::move(value);
}

const SparseVec& DirectedCategory::mu(const std::vector<int>& chain) const {
    auto it = mu_.find(chain);
    return it == mu_.end() ? zero_ : it->second;
}

bool DirectedCategory::has_mu1() const {
    for (const auto& [k, v] : mu_)
        if (k.size() == 1 && !v.zero()) return true;
    return false;
}

SparseVec DirectedCategory::mu_multi(const std::vector<SparseVec>& args) const {
    // expand over the product of supports, accumulating parity densely so
    // that large supports stay linear rather than quadratic
    std::vector<int> chain(args.size());
    std::vector<uint64_t> parity((elts_.size() + 63) / 64, 0);
    std::vector<int> touched;
    auto rec = [&](auto&& self, size_t j) -> void {
        if (j == args.size()) {
            for (int t : mu(chain).ids) {
                if (!((parity[t >> 6] >> (t & 63)) & 1)) touched.push_back(t);
                parity[t >> 6] ^= uint64_t(1) << (t & 63);
            }
            return;
        }
        for (int id : args[j].ids) {
            chain[j] = id;
            self(self, j + 1);
        }
    };
    rec(rec, 0);
    SparseVec out;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int t : touched)
        if ((parity[t >> 6] >> (t & 63)) & 1) out.ids.push_back(t);
    return out;
}

GF2Matrix DirectedCategory::mu1_block(int i, int k, int deg) const {
    auto dom = block_degree_ids(i, k, deg);
    auto cod = block_degree_ids(i, k, deg + 1);
    GF2Matrix m((int)cod.size(), (int)dom.size());
    std::map<int, int> cod_pos;
    for (int c = 0; c < (int)cod.size(); ++c) cod_pos[cod[c]] = c;
    for (int c = 0; c < (int)dom.size(); ++c) {
        const SparseVec& v = mu({dom[c]});
        for (int id : v.ids) m.set(cod_pos.at(id), c, true);
    }
    return m;
}

ChainComplex DirectedCategory::hom_complex_block(int i, int k) const {
    GradedSpace sp(g_);
    for (int id : hom(i, k)) sp.add(elts_[id].label, elts_[id].deg);
    std::map<int, GF2Matrix> blocks;
    for (const auto& [deg, n] : sp.dims()) {
        (void)n;
        blocks[deg] = mu1_block(i, k, deg);
    }
    return ChainComplex(std::move(sp), std::move(blocks));
}

std::vector<int> DirectedCategory::block_degree_ids(int i, int k, int deg) const {
    std::vector<int> out;
    int d = g_.norm(deg);
    for (int id : hom(i, k))
        if (elts_[id].deg == d) out.push_back(id);
    return out;
}

int DirectedCategory::pos_in_block_degree(int id) const {
    const BasisElt& e = elts_[id];
    int p = 0;
    for (int other : hom(e.src, e.dst)) {
        if (other == id) return p;
        if (elts_[other].deg == e.deg) ++p;
    }
    throw std::logic_error("pos_in_block_degree: id not in its own block");
}

BitVec DirectedCategory::local_coords(int i, int k, int deg, const SparseVec& v) const {
    auto ids = block_degree_ids(i, k, deg);
    BitVec out((int)ids.size());
    for (int id : v.ids) {
        auto it = std::find(ids.begin(), ids.end(), id);
        if (it == ids.end()) throw std::invalid_argument("local_coords: id outside block degree");
        out.flip((int)(it - ids.begin()));
    }
    return out;
}

SparseVec DirectedCategory::from_local(int i, int k, int deg, const BitVec& coords) const {
    auto ids = block_degree_ids(i, k, deg);
    SparseVec v;
    for (int p = 0; p < coords.size(); ++p)
        if (coords.get(p)) v.add(ids[p]);
    return v;
}

std::vector<DirectedCategory::Violation> DirectedCategory::check_relations(int max_report) const {
    std::vector<Violation> out;
    auto report = [&](const std::string& what, const std::vector<int>& chain) {
        if ((int)out.size() < max_report) out.push_back({what, chain});
    };

    // table well-formedness
    for (const auto& [key, val] : mu_) {
        for (size_t j = 0; j + 1 < key.size(); ++j)
            if (elts_[key[j]].dst != elts_[key[j + 1]].src) {
                report("mu key not composable", key);
                break;
            }
        int want = 2 - (int)key.size();
        for (int id : key) want += elts_[id].deg;
        want = g_.norm(want);
        for (int id : val.ids)
            if (elts_[id].deg != want) {
                report("mu value degree mismatch", key);
                break;
            }
    }

    // A∞ identities: for every chain of basis elements (t_1,...,t_d) and
    // every splitting, sum mu(t_1,..,mu(t_p..t_{p+j-1}),..,t_d) = 0
    int m = num_objects();
    std::vector<int> chain;
    auto test_chain = [&](const std::vector<int>& t) {
        SparseVec total;
        for (int j = 1; j <= (int)t.size(); ++j) {
            for (int p = 0; p + j <= (int)t.size(); ++p) {
                std::vector<int> inner(t.begin() + p, t.begin() + p + j);
                const SparseVec& mid = mu(inner);
                if (mid.zero()) continue;
                if (j == (int)t.size()) {
                    // outer is mu^1 of the inner result
                    for (int id : mid.ids) total ^= mu({id});
                    if (j == 1) {
                        // mu^1(mu^1) handled above; nothing else for d=1
                    }
                    continue;
                }
                for (int id : mid.ids) {
                    std::vector<int> outer;
                    outer.insert(outer.end(), t.begin(), t.begin() + p);
                    outer.push_back(id);
                    outer.insert(outer.end(), t.begin() + p + j, t.end());
                    total ^= mu(outer);
                }
            }
        }
        if (!total.zero()) report("A-infinity relation violated", t);
    };
    // enumerate chains by object path then basis tuples
    for (int start = 0; start < m; ++start) {
        for (int next = start + 1; next < m; ++next) {
            for (int id : hom(start, next)) {
                chain.assign(1, id);
                // extend from (start,next)
                auto extend = [&](auto&& self, int cur) -> void {
                    test_chain(chain);
                    for (int nxt = cur + 1; nxt < m; ++nxt)
                        for (int e2 : hom(cur, nxt)) {
                            chain.push_back(e2);
                            self(self, nxt);
                            chain.pop_back();
                        }
                };
                extend(extend, next);
            }
        }
    }
    return out;
}

namespace {

std::vector<GF2Matrix> invertible_matrices(int n) {
    std::vector<GF2Matrix> out;
    if (n == 0) {
        out.push_back(GF2Matrix(0, 0));
        return out;
    }
    if (n > 4) throw std::invalid_argument("strictly_isomorphic: block dimension too large");
    uint64_t total = uint64_t(1) << (n * n);
    for (uint64_t bits = 0; bits < total; ++bits) {
        GF2Matrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if ((bits >> (r * n + c)) & 1) m.set(r, c, true);
        if (m.rank() == n) out.push_back(std::move(m));
    }
    return out;
}

struct IsoSearch {
    const DirectedCategory &a, &b;
    std::vector<std::pair<int, int>> blocks;                  // nonempty blocks, lex order
    std::map<std::pair<int, int>, int> block_index;
    // candidate maps per block: per-degree invertible matrices
    std::vector<std::vector<std::map<int, GF2Matrix>>> candidates;
    std::vector<int> choice;  // index into candidates, -1 undecided

    // image of an a-basis element under the current partial assignment
    SparseVec map_elt(int id) const {
        const BasisElt& e = a.elt(id);
        int bi = block_index.at({e.src, e.dst});
        const GF2Matrix& phi = candidates[bi][choice[bi]].at(e.deg);
        int p = a.pos_in_block_degree(id);
        auto ids = b.block_degree_ids(e.src, e.dst, e.deg);
        SparseVec v;
        for (int r = 0; r < phi.rows(); ++r)
            if (phi.get(r, p)) v.add(ids[r]);
        return v;
    }

    bool decided(int i, int k) const {
        auto it = block_index.find({i, k});
        if (it == block_index.end()) return true;  // empty block, nothing to map
        return choice[it->second] >= 0;
    }

    // check all mu constraints whose blocks are decided and involve `focus`
    bool consistent(int focus) const {
        int m = a.num_objects();
        std::vector<int> chain;
        bool ok = true;
        auto uses_focus = [&](int src0, int dst_last) {
            const auto& fb = blocks[focus];
            for (size_t j = 0; j < chain.size(); ++j) {
                const BasisElt& e = a.elt(chain[j]);
                if (std::pair{e.src, e.dst} == fb) return true;
            }
            return std::pair{src0, dst_last} == fb;
        };
        auto test = [&]() {
            int src0 = a.elt(chain.front()).src;
            int dstl = a.elt(chain.back()).dst;
            if (!decided(src0, dstl)) return;
            if (!uses_focus(src0, dstl)) return;
            SparseVec lhs;  // Phi(mu_a(chain))
            for (int id : a.mu(chain).ids) lhs ^= map_elt(id);
            std::vector<SparseVec> imgs;
            for (int id : chain) imgs.push_back(map_elt(id));
            SparseVec rhs = b.mu_multi(imgs);
            if (!(lhs == rhs)) ok = false;
        };
        auto extend = [&](auto&& self, int cur) -> void {
            if (!ok) return;
            test();
            if ((int)chain.size() >= m - 1) return;
            for (int nxt = cur + 1; nxt < m && ok; ++nxt) {
                if (!decided(cur, nxt) && !a.hom(cur, nxt).empty()) continue;
                for (int e2 : a.hom(cur, nxt)) {
                    chain.push_back(e2);
                    self(self, nxt);
                    chain.pop_back();
                    if (!ok) return;
                }
            }
        };
        for (const auto& [ik, bi] : block_index) {
            if (!ok) break;
            if (choice[bi] < 0) continue;
            for (int id : a.hom(ik.first, ik.second)) {
                chain.assign(1, id);
                extend(extend, ik.second);
                if (!ok) break;
            }
        }
        return ok;
    }

    bool search(size_t at) {
        if (at == blocks.size()) return true;
        for (int c = 0; c < (int)candidates[at].size(); ++c) {
            choice[at] = c;
            if (consistent((int)at) && search(at + 1)) return true;
        }
        choice[at] = -1;
        return false;
    }
};

}  // namespace

bool strictly_isomorphic(const DirectedCategory& a, const DirectedCategory& b) {
    if (a.num_objects() != b.num_objects()) return false;
    if (!(a.grading() == b.grading())) return false;
    if (a.dims_table() != b.dims_table()) return false;
    if (tables_equal(a, b)) return true;

    IsoSearch s{a, b, {}, {}, {}, {}};
    int m = a.num_objects();
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            if (!a.hom(i, k).empty()) {
                s.block_index[{i, k}] = (int)s.blocks.size();
                s.blocks.push_back({i, k});
            }
    // per-dimension caches of GL(n, F2)
    std::map<int, std::vector<GF2Matrix>> gl;
    for (const auto& [i, k] : s.blocks) {
        std::vector<std::map<int, GF2Matrix>> cands;
        cands.push_back({});
        for (const auto& [deg, dim] : a.hom_dims(i, k)) {
            if (!gl.count(dim)) gl[dim] = invertible_matrices(dim);
            std::vector<std::map<int, GF2Matrix>> next;
            for (const auto& partial : cands)
                for (const auto& g : gl[dim]) {
                    auto cand = partial;
                    cand[deg] = g;
                    next.push_back(std::move(cand));
                }
            cands = std::move(next);
        }
        s.candidates.push_back(std::move(cands));
    }
    s.choice.assign(s.blocks.size(), -1);
    return s.search(0);
}

Mor mu_mor_chain(const DirectedCategory& cat, const std::vector<Mor>& entries) {
    if (entries.empty()) throw std::invalid_argument("mu_mor_chain: empty chain");
    for (size_t j = 0; j + 1 < entries.size(); ++j)
        if (entries[j].dst != entries[j + 1].src)
            throw std::invalid_argument("mu_mor_chain: not composable");
    int src = entries.front().src, dst = entries.back().dst;
    Mor out = mor_zero(src, dst);
    // expand each entry into atoms: identity or single basis element
    size_t d = entries.size();
    std::vector<int> atom(d);  // -1 = identity
    auto emit = [&]() {
        int n_id = 0;
        for (size_t j = 0; j < d; ++j)
            if (atom[j] < 0) ++n_id;
        if (d == 1) {
            if (n_id) return;  // μ^1(id) = 0
            for (int t : cat.mu({atom[0]}).ids) out.v.add(t);
            return;
        }
        if (d == 2) {
            if (n_id == 2) {
                out.is_id = !out.is_id;  // μ²(id,id) = id
                return;
            }
            if (n_id == 1) {
                int b = atom[0] < 0 ? atom[1] : atom[0];
                out.v.add(b);  // unit axiom
                return;
            }
            for (int t : cat.mu({atom[0], atom[1]}).ids) out.v.add(t);
            return;
        }
        if (n_id) return;  // normalized: higher μ vanish on identities
        std::vector<int> key(atom.begin(), atom.end());
        for (int t : cat.mu(key).ids) out.v.add(t);
    };
    auto rec = [&](auto&& self, size_t j) -> void {
        if (j == d) {
            emit();
            return;
        }
        const Mor& e = entries[j];
        if (e.is_id) {
            atom[j] = -1;
            self(self, j + 1);
        } else {
            for (int id : e.v.ids) {
                atom[j] = id;
                self(self, j + 1);
            }
        }
    };
    rec(rec, 0);
    return out;
}

bool tables_equal(const DirectedCategory& a, const DirectedCategory& b) {
    if (a.num_objects() != b.num_objects()) return false;
    if (!(a.grading() == b.grading())) return false;
    if (a.num_elts() != b.num_elts()) return false;
    for (int id = 0; id < a.num_elts(); ++id) {
        const BasisElt& x = a.elt(id);
        const BasisElt& y = b.elt(id);
        if (x.src != y.src || x.dst != y.dst || x.deg != y.deg) return false;
    }
    // compare tables both ways (keys are id tuples, ids align by the above)
    for (const auto& [k, v] : a.mu_table())
        if (!(b.mu(k) == v)) return false;
    for (const auto& [k, v] : b.mu_table())
        if (!(a.mu(k) == v)) return false;
    return true;
}

}  // namespace homcat
