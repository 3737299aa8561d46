#include "homcat/tw.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace homcat {

namespace {

void mor_accum(Mor& into, const Mor& val) {
    into.is_id ^= val.is_id;
    into.v ^= val.v;
}

/// longest chain μ can see: raw arity above this is killed by directedness
/// of the table or by the unit normalization
int arity_cap(const DirectedCategory& cat) { return std::max(2, cat.max_mu()); }

}  // namespace

TwistedComplex::TwistedComplex(CatPtr cat, std::vector<Summand> sums,
                               std::map<std::pair<int, int>, Mor> delta)
    : cat_(std::move(cat)), sums_(std::move(sums)), delta_(std::move(delta)) {
    Grading g = cat_->grading();
    for (auto& s : sums_) s.shift = g.norm(s.shift);
    for (auto it = delta_.begin(); it != delta_.end();) {
        if (it->second.zero())
            it = delta_.erase(it);
        else
            ++it;
    }
    adj_.assign(sums_.size(), {});
    radj_.assign(sums_.size(), {});
    for (const auto& [pq, m] : delta_) {
        adj_[pq.first].push_back({pq.second, m});
        radj_[pq.second].push_back({pq.first, m});
    }
    validate();
}

TwistedComplex TwistedComplex::generator(CatPtr cat, int obj, int shift) {
    return TwistedComplex(std::move(cat), {Summand{obj, shift}}, {});
}

const Mor* TwistedComplex::delta_at(int p, int q) const {
    auto it = delta_.find({p, q});
    return it == delta_.end() ? nullptr : &it->second;
}

TwistedComplex TwistedComplex::shifted(int sigma) const {
    std::vector<Summand> s = sums_;
    for (auto& x : s) x.shift = grading().norm(x.shift + sigma);
    return TwistedComplex(cat_, std::move(s), delta_);
}

TwistedComplex TwistedComplex::direct_sum(const TwistedComplex& o) const {
    if (cat_ != o.cat_) throw std::invalid_argument("direct_sum: category mismatch");
    std::vector<Summand> s = sums_;
    s.insert(s.end(), o.sums_.begin(), o.sums_.end());
    auto d = delta_;
    int off = size();
    for (const auto& [pq, m] : o.delta_) d[{pq.first + off, pq.second + off}] = m;
    return TwistedComplex(cat_, std::move(s), std::move(d));
}

std::string TwistedComplex::str() const {
    std::ostringstream os;
    for (int p = 0; p < size(); ++p) {
        if (p) os << " + ";
        os << cat_->object_name(sums_[p].obj);
        if (sums_[p].shift) os << "[" << sums_[p].shift << "]";
    }
    for (const auto& [pq, m] : delta_) {
        os << "; d(" << pq.first << "->" << pq.second << ")=";
        if (m.is_id) os << "id";
        bool first = !m.is_id;
        for (int id : m.v.ids) {
            if (!first) os << "+";
            os << cat_->elt(id).label;
            first = false;
        }
    }
    return os.str();
}

void TwistedComplex::validate() const {
    Grading g = grading();
    int n = size();
    for (const auto& s : sums_)
        if (s.obj < 0 || s.obj >= cat_->num_objects())
            throw std::invalid_argument("twisted complex: bad object index");
    for (const auto& [pq, m] : delta_) {
        auto [p, q] = pq;
        if (p < 0 || p >= n || q < 0 || q >= n || p == q)
            throw std::invalid_argument("twisted complex: bad delta indices");
        int op = sums_[p].obj, oq = sums_[q].obj;
        if (op > oq)
            throw std::invalid_argument("twisted complex: delta from higher to lower object");
        if (m.src != op || m.dst != oq)
            throw std::invalid_argument("twisted complex: delta component endpoints mismatch");
        int rel = sums_[p].shift - sums_[q].shift;
        if (op == oq) {
            if (!m.is_id || !m.v.zero())
                throw std::invalid_argument(
                    "twisted complex: equal-object component must be an identity multiple");
            if (!g.eq(rel, 1))
                throw std::invalid_argument("twisted complex: identity component not of degree 1");
        } else {
            if (m.is_id) throw std::invalid_argument("twisted complex: id flag between objects");
            for (int id : m.v.ids)
                if (!g.eq(cat_->elt(id).deg + rel, 1))
                    throw std::invalid_argument("twisted complex: delta component not of degree 1");
        }
    }
    // acyclicity of the summand graph
    std::vector<int> indeg(n, 0);
    for (const auto& [pq, m] : delta_) {
        (void)m;
        indeg[pq.second]++;
    }
    std::vector<int> stack;
    for (int i = 0; i < n; ++i)
        if (!indeg[i]) stack.push_back(i);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const auto& [pq, m] : delta_) {
            (void)m;
            if (pq.first == v && --indeg[pq.second] == 0) stack.push_back(pq.second);
        }
    }
    if (seen != n) throw std::invalid_argument("twisted complex: delta graph has a cycle");

    if (!maurer_cartan_holds())
        throw std::invalid_argument("twisted complex: Maurer-Cartan equation fails");
}

bool TwistedComplex::maurer_cartan_holds() const {
    int cap = arity_cap(*cat_);
    std::map<std::pair<int, int>, Mor> acc;
    std::vector<Mor> entries;
    auto dfs = [&](auto&& self, int start, int at) -> void {
        if (!entries.empty()) {
            Mor val = mu_mor_chain(*cat_, entries);
            if (!val.zero()) {
                auto key = std::pair{start, at};
                auto it = acc.find(key);
                if (it == acc.end())
                    acc[key] = val;
                else
                    mor_accum(it->second, val);
            }
        }
        if ((int)entries.size() >= cap) return;
        for (const auto& [to, m] : adj_[at]) {
            entries.push_back(m);
            self(self, start, to);
            entries.pop_back();
        }
    };
    for (int p = 0; p < size(); ++p) dfs(dfs, p, p);
    for (const auto& [pq, m] : acc)
        if (!m.zero()) return false;
    return true;
}

bool TwMor::zero() const {
    for (const auto& [pq, m] : comp)
        if (!m.zero()) return false;
    return true;
}

void TwMor::operator^=(const TwMor& o) {
    for (const auto& [pq, m] : o.comp) {
        auto it = comp.find(pq);
        if (it == comp.end())
            comp[pq] = m;
        else
            mor_accum(it->second, m);
    }
}

TwMor tw_mu(const std::vector<const TwistedComplex*>& complexes,
            const std::vector<const TwMor*>& args) {
    if (complexes.size() != args.size() + 1 || args.empty())
        throw std::invalid_argument("tw_mu: need d args and d+1 complexes");
    const DirectedCategory& cat = *complexes.front()->cat();
    int d = (int)args.size();
    int cap = arity_cap(cat);
    TwMor out;
    int deg = 2 - d;
    for (const auto* f : args) deg += f->deg;
    out.deg = cat.grading().norm(deg);

    std::vector<Mor> entries;
    // state: consumed j args, at summand s of complexes[j]
    auto dfs = [&](auto&& self, int p0, int j, int s) -> void {
        if (j == d) {
            if (!entries.empty()) {
                Mor val = mu_mor_chain(cat, entries);
                if (!val.zero()) {
                    auto key = std::pair{p0, s};
                    auto it = out.comp.find(key);
                    if (it == out.comp.end())
                        out.comp[key] = val;
                    else
                        mor_accum(it->second, val);
                }
            }
            // allow trailing delta steps of the last complex
        }
        if ((int)entries.size() + (d - j) > cap) return;  // cannot finish under the cap
        // delta step within complexes[j]
        if ((int)entries.size() < cap) {
            for (const auto& [to, m] : complexes[j]->edges_from(s)) {
                entries.push_back(m);
                self(self, p0, j, to);
                entries.pop_back();
            }
        }
        // consume next argument
        if (j < d) {
            for (const auto& [pq, m] : args[j]->comp) {
                if (pq.first != s || m.zero()) continue;
                entries.push_back(m);
                self(self, p0, j + 1, pq.second);
                entries.pop_back();
            }
        }
    };
    for (int p0 = 0; p0 < complexes[0]->size(); ++p0) dfs(dfs, p0, 0, p0);
    // drop zeros
    for (auto it = out.comp.begin(); it != out.comp.end();)
        it = it->second.zero() ? out.comp.erase(it) : std::next(it);
    return out;
}

HomComplex::HomComplex(TwistedComplex a, TwistedComplex b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.cat() != b_.cat())
        throw std::invalid_argument("hom_complex: category mismatch");
    const DirectedCategory& cat = *a_.cat();
    Grading g = cat.grading();
    GradedSpace sp(g);
    for (int p = 0; p < a_.size(); ++p) {
        for (int q = 0; q < b_.size(); ++q) {
            int op = a_.summand(p).obj, oq = b_.summand(q).obj;
            int rel = a_.summand(p).shift - b_.summand(q).shift;
            std::string pre = "p" + std::to_string(p) + "q" + std::to_string(q) + ":";
            if (op == oq) {
                int t = g.norm(rel);
                basis_.push_back({p, q, -1, t});
                index_[{p, q, -1}] = (int)basis_.size() - 1;
                by_deg_[t].push_back((int)basis_.size() - 1);
                sp.add(pre + "id", t);
            } else if (op < oq) {
                for (int id : cat.hom(op, oq)) {
                    int t = g.norm(cat.elt(id).deg + rel);
                    basis_.push_back({p, q, id, t});
                    index_[{p, q, id}] = (int)basis_.size() - 1;
                    by_deg_[t].push_back((int)basis_.size() - 1);
                    sp.add(pre + cat.elt(id).label, t);
                }
            }
        }
    }
    // position of each basis element inside its degree block
    std::vector<int> pos(basis_.size());
    for (const auto& [deg, cols] : by_deg_)
        for (int j = 0; j < (int)cols.size(); ++j) pos[cols[j]] = j;

    auto atom = [&](const Elt& e) {
        return e.elt < 0 ? mor_id(a_.summand(e.p).obj)
                         : mor_vec(a_.summand(e.p).obj, b_.summand(e.q).obj,
                                   SparseVec{{e.elt}});
    };
    std::map<int, GF2Matrix> blocks;
    for (const auto& [deg, cols] : by_deg_) {
        int next = g.norm(deg + 1);
        auto itn = by_deg_.find(next);
        int nrows = itn == by_deg_.end() ? 0 : (int)itn->second.size();
        GF2Matrix mat(nrows, (int)cols.size());
        if (nrows) {
            auto add_mor = [&](int c, int p, int q, const Mor& m) {
                if (m.is_id) mat.flip(pos[index_.at({p, q, -1})], c);
                for (int id : m.v.ids) mat.flip(pos[index_.at({p, q, id})], c);
            };
            for (int c = 0; c < (int)cols.size(); ++c) {
                const Elt& e = basis_[cols[c]];
                if (cat.is_dg()) {
                    // ∂f = μ^1 f + μ²(δ_b, f) + μ²(f, δ_a), componentwise
                    Mor f = atom(e);
                    if (e.elt >= 0) {
                        Mor d1 = mor_vec(f.src, f.dst, cat.mu({e.elt}));
                        if (!d1.zero()) add_mor(c, e.p, e.q, d1);
                    }
                    for (const auto& [to, m] : b_.edges_from(e.q)) {
                        Mor val = mu_mor_chain(cat, {f, m});
                        if (!val.zero()) add_mor(c, e.p, to, val);
                    }
                    for (const auto& [from, m] : a_.edges_into(e.p)) {
                        Mor val = mu_mor_chain(cat, {m, f});
                        if (!val.zero()) add_mor(c, from, e.q, val);
                    }
                } else {
                    TwMor f;
                    f.deg = deg;
                    f.comp[{e.p, e.q}] = atom(e);
                    TwMor df = tw_mu({&a_, &b_}, {&f});
                    for (const auto& [pq, m] : df.comp) add_mor(c, pq.first, pq.second, m);
                }
            }
        }
        blocks[deg] = std::move(mat);
    }
    // z2: by_deg_ may miss a degree present as target only; ChainComplex
    // handles absent blocks as zero
    cx_ = ChainComplex(std::move(sp), std::move(blocks));
    if (auto v = cx_.d_squared_violation())
        throw std::logic_error("hom_complex: differential does not square to zero at degree " +
                               std::to_string(*v));
}

int HomComplex::index_of(int p, int q, int elt) const {
    auto it = index_.find({p, q, elt});
    return it == index_.end() ? -1 : it->second;
}

const std::map<int, CohomDeg>& HomComplex::cohom() const {
    if (!cohom_) cohom_ = cx_.cohomology();
    return *cohom_;
}

TwMor HomComplex::mor_from_local(int deg, const BitVec& coords) const {
    Grading g = a_.cat()->grading();
    int dd = g.norm(deg);
    TwMor f;
    f.deg = dd;
    auto it = by_deg_.find(dd);
    if (it == by_deg_.end()) return f;
    for (int c = 0; c < coords.size(); ++c) {
        if (!coords.get(c)) continue;
        const Elt& e = basis_[it->second[c]];
        Mor add = e.elt < 0 ? mor_id(a_.summand(e.p).obj)
                            : mor_vec(a_.summand(e.p).obj, b_.summand(e.q).obj, SparseVec{{e.elt}});
        auto key = std::pair{e.p, e.q};
        auto f_it = f.comp.find(key);
        if (f_it == f.comp.end())
            f.comp[key] = add;
        else
            mor_accum(f_it->second, add);
    }
    return f;
}

BitVec HomComplex::local_from_mor(const TwMor& f) const {
    Grading g = a_.cat()->grading();
    int dd = g.norm(f.deg);
    auto it = by_deg_.find(dd);
    int n = it == by_deg_.end() ? 0 : (int)it->second.size();
    BitVec out(n);
    if (!n) {
        if (!f.zero()) throw std::invalid_argument("local_from_mor: degree has no components");
        return out;
    }
    std::map<std::tuple<int, int, int>, int> col_of;
    for (int c = 0; c < n; ++c) {
        const Elt& e = basis_[it->second[c]];
        col_of[{e.p, e.q, e.elt}] = c;
    }
    for (const auto& [pq, m] : f.comp) {
        if (m.is_id) out.flip(col_of.at({pq.first, pq.second, -1}));
        for (int id : m.v.ids) out.flip(col_of.at({pq.first, pq.second, id}));
    }
    return out;
}

std::optional<BitVec> HomComplex::class_coords(const TwMor& f) const {
    auto it = cohom().find(a_.cat()->grading().norm(f.deg));
    BitVec loc = local_from_mor(f);
    if (it == cohom().end()) {
        if (loc.zero() || loc.size() == 0) return BitVec(0);
        return std::nullopt;
    }
    return it->second.coords(loc);
}

TwMor HomComplex::class_rep(int deg, int j) const {
    const auto& c = cohom().at(a_.cat()->grading().norm(deg));
    return mor_from_local(deg, c.reps.at(j));
}

std::map<int, int> HomComplex::h_dims() const {
    std::map<int, int> out;
    for (const auto& [deg, c] : cohom())
        if (c.dim) out[deg] = c.dim;
    return out;
}

std::map<int, int> db_hom(const TwistedComplex& a, const TwistedComplex& b) {
    return HomComplex(a, b).h_dims();
}

TwistedComplex cone(const TwistedComplex& x, const TwistedComplex& y, const TwMor& f) {
    if (x.cat() != y.cat()) throw std::invalid_argument("cone: category mismatch");
    Grading g = x.grading();
    if (!g.eq(f.deg, 0)) throw std::invalid_argument("cone: morphism must have degree 0");
    TwMor df = tw_mu({&x, &y}, {&f});
    if (!df.zero()) throw std::invalid_argument("cone: morphism is not closed");

    std::vector<Summand> sums;
    for (const auto& s : x.summands()) sums.push_back({s.obj, g.norm(s.shift + 1)});
    for (const auto& s : y.summands()) sums.push_back(s);
    std::map<std::pair<int, int>, Mor> delta;
    for (const auto& [pq, m] : x.delta()) delta[pq] = m;
    int off = x.size();
    for (const auto& [pq, m] : y.delta()) delta[{pq.first + off, pq.second + off}] = m;
    for (const auto& [pq, m] : f.comp)
        if (!m.zero()) delta[{pq.first, pq.second + off}] = m;
    return TwistedComplex(x.cat(), std::move(sums), std::move(delta));
}

TwistedComplex twist(const TwistedComplex& x, const TwistedComplex& y) {
    if (x.cat() != y.cat()) throw std::invalid_argument("twist: category mismatch");
    Grading g = x.grading();
    HomComplex hc(x, y);
    struct Copy {
        int t;
        TwMor rep;
    };
    std::vector<Copy> copies;
    for (const auto& [deg, c] : hc.cohom())
        for (int j = 0; j < c.dim; ++j) copies.push_back({deg, hc.class_rep(deg, j)});

    std::vector<Summand> sums;
    std::map<std::pair<int, int>, Mor> delta;
    int off = 0;
    std::vector<int> copy_off;
    for (const auto& cp : copies) {
        copy_off.push_back(off);
        for (const auto& s : x.summands())
            sums.push_back({s.obj, g.norm(s.shift + 1 - cp.t)});
        for (const auto& [pq, m] : x.delta()) delta[{pq.first + off, pq.second + off}] = m;
        off += x.size();
    }
    int yoff = off;
    for (const auto& s : y.summands()) sums.push_back(s);
    for (const auto& [pq, m] : y.delta()) delta[{pq.first + yoff, pq.second + yoff}] = m;
    for (int c = 0; c < (int)copies.size(); ++c)
        for (const auto& [pq, m] : copies[c].rep.comp)
            if (!m.zero()) delta[{pq.first + copy_off[c], pq.second + yoff}] = m;
    TwistedComplex out(x.cat(), std::move(sums), std::move(delta));
    return x.cat()->is_dg() ? strip_acyclic_pairs(out) : out;
}

TwistedComplex dual_twist(const TwistedComplex& x, const TwistedComplex& y) {
    if (x.cat() != y.cat()) throw std::invalid_argument("dual_twist: category mismatch");
    Grading g = x.grading();
    HomComplex hc(y, x);
    struct Copy {
        int t;
        TwMor rep;
    };
    std::vector<Copy> copies;
    for (const auto& [deg, c] : hc.cohom())
        for (int j = 0; j < c.dim; ++j) copies.push_back({deg, hc.class_rep(deg, j)});

    std::vector<Summand> sums;
    std::map<std::pair<int, int>, Mor> delta;
    for (const auto& s : y.summands()) sums.push_back(s);
    for (const auto& [pq, m] : y.delta()) delta[pq] = m;
    int off = y.size();
    for (const auto& cp : copies) {
        for (const auto& s : x.summands())
            sums.push_back({s.obj, g.norm(s.shift + cp.t - 1)});
        for (const auto& [pq, m] : x.delta()) delta[{pq.first + off, pq.second + off}] = m;
        for (const auto& [pq, m] : cp.rep.comp)  // components y_q -> x_p
            if (!m.zero()) delta[{pq.first, pq.second + off}] = m;
        off += x.size();
    }
    TwistedComplex out(x.cat(), std::move(sums), std::move(delta));
    return x.cat()->is_dg() ? strip_acyclic_pairs(out) : out;
}

TwistedComplex strip_acyclic_pairs(const TwistedComplex& c) {
    if (!c.cat()->is_dg()) return c;
    TwistedComplex cur = c;
    bool progress = true;
    while (progress && cur.size() >= 2) {
        progress = false;
        for (const auto& [pq, m] : cur.delta()) {
            if (!m.is_id || !m.v.zero()) continue;
            auto [p, q] = pq;
            // gauge elimination of the contractible pair (p, q)
            std::vector<Summand> sums;
            std::vector<int> newidx(cur.size(), -1);
            for (int s = 0; s < cur.size(); ++s) {
                if (s == p || s == q) continue;
                newidx[s] = (int)sums.size();
                sums.push_back(cur.summand(s));
            }
            std::map<std::pair<int, int>, Mor> delta;
            for (const auto& [ab, mm] : cur.delta()) {
                auto [a, b] = ab;
                if (a == p || a == q || b == p || b == q) continue;
                delta[{newidx[a], newidx[b]}] = mm;
            }
            for (const auto& [aq, maq] : cur.delta()) {
                if (aq.second != q || aq.first == p) continue;
                for (const auto& [pb, mpb] : cur.delta()) {
                    if (pb.first != p || pb.second == q) continue;
                    int a = aq.first, b = pb.second;
                    if (a == q || b == p) continue;
                    Mor corr = mu_mor_chain(*cur.cat(), {maq, mpb});
                    if (corr.zero()) continue;
                    auto key = std::pair{newidx[a], newidx[b]};
                    auto it = delta.find(key);
                    if (it == delta.end())
                        delta[key] = std::move(corr);
                    else
                        mor_accum(it->second, corr);
                }
            }
            for (auto it = delta.begin(); it != delta.end();)
                it = it->second.zero() ? delta.erase(it) : std::next(it);
            try {
                TwistedComplex next(cur.cat(), std::move(sums), std::move(delta));
                cur = std::move(next);
                progress = true;
                break;
            } catch (const std::invalid_argument&) {
                // elimination would break triangularity here; try another pair
            }
        }
    }
    return cur;
}

const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::Yes: return "yes";
        case IsoVerdict::No: return "no";
        default: return "unknown";
    }
}

IsoVerdict is_isomorphic(const TwistedComplex& a, const TwistedComplex& b, long long cap) {
    if (a.cat() != b.cat()) throw std::invalid_argument("is_isomorphic: category mismatch");
    if (a == b) return IsoVerdict::Yes;
    CatPtr cat = a.cat();
    int m = cat->num_objects();

    std::vector<HomComplex> ga, gb;
    ga.reserve(m);
    gb.reserve(m);
    bool any_nonzero = false;
    for (int i = 0; i < m; ++i) {
        TwistedComplex gen = TwistedComplex::generator(cat, i);
        ga.emplace_back(gen, a);
        gb.emplace_back(gen, b);
        if (ga.back().h_dims() != gb.back().h_dims()) return IsoVerdict::No;
        if (!ga.back().h_dims().empty()) any_nonzero = true;
        if (db_hom(a, gen) != db_hom(b, gen)) return IsoVerdict::No;
    }
    if (!any_nonzero) return IsoVerdict::Yes;  // both are zero objects

    HomComplex hab(a, b);
    auto h0it = hab.cohom().find(0);
    int h0 = (h0it == hab.cohom().end()) ? 0 : h0it->second.dim;
    if (h0 <= 0) return IsoVerdict::Unknown;

    std::vector<TwMor> reps;
    for (int j = 0; j < h0; ++j) reps.push_back(hab.class_rep(0, j));

    long long total = (h0 >= 62) ? cap : (1ll << h0) - 1;
    total = std::min(total, cap);
    for (long long word = 1; word <= total; ++word) {
        TwMor f;
        f.deg = 0;
        for (int j = 0; j < h0; ++j)
            if ((word >> j) & 1) f ^= reps[j];
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            const TwistedComplex& gen = ga[i].source();
            for (const auto& [deg, c] : ga[i].cohom()) {
                if (!c.dim) continue;
                GF2Matrix mat(c.dim, c.dim);
                for (int j = 0; j < c.dim && ok; ++j) {
                    TwMor gj = ga[i].class_rep(deg, j);
                    TwMor comp = tw_mu({&gen, &a, &b}, {&gj, &f});
                    auto coords = gb[i].class_coords(comp);
                    if (!coords) {
                        ok = false;
                        break;
                    }
                    for (int r = 0; r < coords->size(); ++r)
                        if (coords->get(r)) mat.set(r, j, true);
                }
                if (!ok || mat.rank() != c.dim) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return IsoVerdict::Yes;
    }
    return IsoVerdict::Unknown;
}

}  // namespace homcat
