#include "homcat/mutation.hpp"

#include <sstream>
#include <stdexcept>

namespace homcat {

MutationRun MutationRun::start(CatPtr cat) {
    MutationRun r;
    r.base = cat;
    for (int i = 0; i < cat->num_objects(); ++i)
        r.objects.push_back(TwistedComplex::generator(cat, i));
    return r;
}

void MutationRun::apply(const Step& s) {
    int m = (int)objects.size();
    switch (s.kind) {
        case StepKind::Shift: {
            if ((int)s.sigma.size() != m)
                throw std::invalid_argument("shift: sigma length mismatch");
            for (int i = 0; i < m; ++i) objects[i] = objects[i].shifted(s.sigma[i]);
            break;
        }
        case StepKind::CMove: {
            if (m < 1) throw std::invalid_argument("c-move: empty collection");
            std::vector<TwistedComplex> next;
            for (int i = 1; i < m; ++i)
                next.push_back(strip_acyclic_pairs(twist(objects[0], objects[i])));
            next.push_back(objects[0]);
            objects = std::move(next);
            break;
        }
        case StepKind::RMove: {
            if (m < 2) throw std::invalid_argument("r-move: needs two objects");
            TwistedComplex moved = strip_acyclic_pairs(twist(objects[m - 2], objects[m - 1]));
            TwistedComplex last = objects[m - 2];
            objects[m - 2] = std::move(moved);
            objects[m - 1] = std::move(last);
            break;
        }
        case StepKind::InvC: {
            if (m < 1) throw std::invalid_argument("c!-move: empty collection");
            std::vector<TwistedComplex> next;
            next.push_back(objects[m - 1]);
            for (int i = 0; i + 1 < m; ++i)
                next.push_back(strip_acyclic_pairs(dual_twist(objects[m - 1], objects[i])));
            objects = std::move(next);
            break;
        }
        case StepKind::InvR: {
            if (m < 2) throw std::invalid_argument("r!-move: needs two objects");
            TwistedComplex moved = strip_acyclic_pairs(dual_twist(objects[m - 1], objects[m - 2]));
            objects[m - 2] = objects[m - 1];
            objects[m - 1] = std::move(moved);
            break;
        }
    }
}

void MutationRun::run(const MutationScript& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        try {
            apply(s[i]);
        } catch (const std::exception& e) {
            throw std::runtime_error("script step " + std::to_string(i + 1) +
                                     " failed: " + e.what());
        }
    }
}

CatPtr MutationRun::materialize() const {
    int m = (int)objects.size();
    std::vector<std::string> names;
    for (int i = 0; i < m; ++i) names.push_back("Y" + std::to_string(i + 1));
    auto out = std::make_shared<DirectedCategory>(base->grading(), names);

    // hom spaces with their component labels
    std::map<std::pair<int, int>, HomComplex> hcs;
    std::map<std::pair<int, int>, std::vector<int>> ids;
    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            auto [it, ok] = hcs.emplace(std::pair{i, k}, HomComplex(objects[i], objects[k]));
            (void)ok;
            const HomComplex& hc = it->second;
            auto& v = ids[{i, k}];
            const GradedSpace& sp = hc.complex().space();
            for (int b = 0; b < sp.dim(); ++b)
                v.push_back(out->add_elt(i, k, sp.degree(b), sp.label(b)));
        }
    }
    // μ^1 from the hom complex differentials
    for (const auto& [ik, hc] : hcs) {
        const GradedSpace& sp = hc.complex().space();
        for (int b = 0; b < sp.dim(); ++b) {
            int deg = sp.degree(b);
            BitVec col((int)sp.indices(deg).size());
            col.set(sp.pos_in_degree(b), true);
            BitVec img = hc.complex().apply_d(deg, col);
            SparseVec val;
            const auto& next_ids = sp.indices(deg + 1);
            for (int r = 0; r < img.size(); ++r)
                if (img.get(r)) val.add(ids.at(ik)[next_ids[r]]);
            if (!val.zero()) out->set_mu({ids.at(ik)[b]}, std::move(val));
        }
    }
    // μ² fast path over a dg base: compositions are componentwise through a
    // matching middle summand, no δ insertions
    if (base->is_dg()) {
        for (int i = 0; i < m; ++i) {
            for (int j = i + 1; j < m; ++j) {
                const HomComplex& hij = hcs.at({i, j});
                for (int k = j + 1; k < m; ++k) {
                    const HomComplex& hjk = hcs.at({j, k});
                    const HomComplex& hik = hcs.at({i, k});
                    // group the (j,k) components by source summand
                    std::vector<std::vector<int>> by_src(objects[j].size());
                    for (int b = 0; b < (int)hjk.basis().size(); ++b)
                        by_src[hjk.basis()[b].p].push_back(b);
                    auto atom = [&](const TwistedComplex& src, const TwistedComplex& tgt,
                                    const HomComplex::Elt& e) {
                        return e.elt < 0 ? mor_id(src.summand(e.p).obj)
                                         : mor_vec(src.summand(e.p).obj,
                                                   tgt.summand(e.q).obj, SparseVec{{e.elt}});
                    };
                    for (int b1 = 0; b1 < (int)hij.basis().size(); ++b1) {
                        const auto& e1 = hij.basis()[b1];
                        for (int b2 : by_src[e1.q]) {
                            const auto& e2 = hjk.basis()[b2];
                            Mor val = mu_mor_chain(*base,
                                                   {atom(objects[i], objects[j], e1),
                                                    atom(objects[j], objects[k], e2)});
                            if (val.zero()) continue;
                            SparseVec sv;
                            if (val.is_id) sv.add(ids.at({i, k})[hik.index_of(e1.p, e2.q, -1)]);
                            for (int id : val.v.ids)
                                sv.add(ids.at({i, k})[hik.index_of(e1.p, e2.q, id)]);
                            if (!sv.zero())
                                out->set_mu({ids.at({i, j})[b1], ids.at({j, k})[b2]},
                                            std::move(sv));
                        }
                    }
                }
            }
        }
        return out;
    }

    // μ^d from tw_mu on basis tuples; general base
    int max_d = std::min(m - 1, std::max(2, base->max_mu()));
    auto install = [&](const std::vector<std::pair<int, int>>& legs,
                       const std::vector<int>& picks) {
        std::vector<const TwistedComplex*> cxs;
        cxs.push_back(&objects[legs.front().first]);
        std::vector<TwMor> mors;
        for (size_t j = 0; j < legs.size(); ++j) {
            cxs.push_back(&objects[legs[j].second]);
            const HomComplex& hc = hcs.at(legs[j]);
            const GradedSpace& sp = hc.complex().space();
            int b = picks[j];
            BitVec coords((int)sp.indices(sp.degree(b)).size());
            coords.set(sp.pos_in_degree(b), true);
            mors.push_back(hc.mor_from_local(sp.degree(b), coords));
        }
        std::vector<const TwMor*> args;
        for (const auto& f : mors) args.push_back(&f);
        TwMor res = tw_mu(cxs, args);
        if (res.zero()) return;
        auto tgt = std::pair{legs.front().first, legs.back().second};
        BitVec loc = hcs.at(tgt).local_from_mor(res);
        SparseVec val;
        const auto& tgt_sp = hcs.at(tgt).complex().space();
        const auto& deg_ids = tgt_sp.indices(res.deg);
        for (int r = 0; r < loc.size(); ++r)
            if (loc.get(r)) val.add(ids.at(tgt)[deg_ids[r]]);
        if (val.zero()) return;
        std::vector<int> key;
        for (size_t j = 0; j < legs.size(); ++j) key.push_back(ids.at(legs[j])[picks[j]]);
        out->set_mu(key, std::move(val));
    };
    // enumerate object chains i_0 < ... < i_d then basis tuples
    std::vector<std::pair<int, int>> legs;
    std::vector<int> picks;
    auto rec_tuple = [&](auto&& self, size_t leg) -> void {
        if (leg == legs.size()) {
            install(legs, picks);
            return;
        }
        int n = hcs.at(legs[leg]).complex().space().dim();
        for (int b = 0; b < n; ++b) {
            picks.push_back(b);
            self(self, leg + 1);
            picks.pop_back();
        }
    };
    auto rec_chain = [&](auto&& self, int cur, int d) -> void {
        if (d >= 2) rec_tuple(rec_tuple, 0);
        if (d >= max_d) return;
        for (int nxt = cur + 1; nxt < m; ++nxt) {
            legs.push_back({cur, nxt});
            self(self, nxt, d + 1);
            legs.pop_back();
        }
    };
    for (int i = 0; i < m; ++i) rec_chain(rec_chain, i, 0);
    return out;
}

CatPtr apply_shift(CatPtr c, const std::vector<int>& sigma) {
    if ((int)sigma.size() != c->num_objects())
        throw std::invalid_argument("apply_shift: sigma length mismatch");
    auto out = std::make_shared<DirectedCategory>(c->grading(), c->objects());
    for (int id = 0; id < c->num_elts(); ++id) {
        const BasisElt& e = c->elt(id);
        out->add_elt(e.src, e.dst, e.deg + sigma[e.src] - sigma[e.dst], e.label);
    }
    for (const auto& [k, v] : c->mu_table()) out->set_mu(k, v);
    return out;
}

namespace {
CatPtr one_move(CatPtr c, StepKind kind) {
    MutationRun r = MutationRun::start(c);
    r.apply({kind, {}});
    return r.materialize();
}
}  // namespace

CatPtr apply_c(CatPtr c) { return one_move(c, StepKind::CMove); }
CatPtr apply_r(CatPtr c) { return one_move(c, StepKind::RMove); }
CatPtr apply_inv_c(CatPtr c) { return one_move(c, StepKind::InvC); }
CatPtr apply_inv_r(CatPtr c) { return one_move(c, StepKind::InvR); }

CatPtr run_script(CatPtr c, const MutationScript& s) {
    MutationRun r = MutationRun::start(c);
    r.run(s);
    return r.materialize();
}

TwistedComplex track_object(CatPtr c, const MutationScript& s, const TwistedComplex& t) {
    if (t.cat() != c) throw std::invalid_argument("track_object: object not over this category");
    MutationRun r = MutationRun::start(c);
    r.run(s);  // validates every step
    return t;
}

MutationScript parse_script(const std::string& text) {
    MutationScript out;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "c")
            out.push_back({StepKind::CMove, {}});
        else if (tok == "r")
            out.push_back({StepKind::RMove, {}});
        else if (tok == "c!")
            out.push_back({StepKind::InvC, {}});
        else if (tok == "r!")
            out.push_back({StepKind::InvR, {}});
        else if (tok == "shift") {
            std::string list;
            if (!(is >> list)) throw std::invalid_argument("script: shift needs a vector");
            Step st{StepKind::Shift, {}};
            std::istringstream ls(list);
            std::string num;
            while (std::getline(ls, num, ','))
                st.sigma.push_back(std::stoi(num));
            out.push_back(std::move(st));
        } else {
            throw std::invalid_argument("script: unknown step '" + tok + "'");
        }
    }
    return out;
}

std::string script_str(const MutationScript& s) {
    std::string out;
    for (const auto& st : s) {
        if (!out.empty()) out += " ";
        switch (st.kind) {
            case StepKind::CMove: out += "c"; break;
            case StepKind::RMove: out += "r"; break;
            case StepKind::InvC: out += "c!"; break;
            case StepKind::InvR: out += "r!"; break;
            case StepKind::Shift: {
                out += "shift ";
                for (size_t i = 0; i < st.sigma.size(); ++i)
                    out += (i ? "," : "") + std::to_string(st.sigma[i]);
                break;
            }
        }
    }
    return out;
}

}  // namespace homcat
