#include "homcat/morse.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "homcat/hochschild.hpp"

namespace homcat {

const FlowData::Crit* FlowData::crit(const std::string& name) const {
    for (const auto& c : crits)
        if (c.name == name) return &c;
    return nullptr;
}

int FlowData::level_class(const Crit& c) const {
    if (c.index == 0) return 0;
    if (c.index == n + 1) return 2;
    return 1;
}

std::vector<std::string> validate_flow(const FlowData& f) {
    std::vector<std::string> out;
    std::set<std::string> names;
    for (const auto& c : f.crits) {
        if (!names.insert(c.name).second) out.push_back("duplicate critical point " + c.name);
        if (c.index < 0 || c.index > f.n + 1)
            out.push_back("critical point " + c.name + " has index outside 0.." +
                          std::to_string(f.n + 1));
    }
    auto comp_exists = [&](const std::string& x, const std::string& y, const std::string& nm) {
        auto it = f.traj.find({x, y});
        if (it == f.traj.end()) return false;
        for (const auto& c : it->second)
            if (c.name == nm) return true;
        return false;
    };
    // every broken trajectory appears on the boundary of exactly one component
    std::map<std::tuple<std::string, std::string, FlowData::Broken>, int> broken_count;
    for (const auto& [xy, comps] : f.traj) {
        const auto [x, y] = xy;
        const auto* cx = f.crit(x);
        const auto* cy = f.crit(y);
        if (!cx || !cy) {
            out.push_back("pair (" + x + "," + y + ") uses an undeclared critical point");
            continue;
        }
        if (f.level_class(*cx) >= f.level_class(*cy))
            out.push_back("pair (" + x + "," + y + ") does not increase the level class");
        bool extremal = cx->index == 0 && cy->index == f.n + 1;
        std::set<std::string> cnames;
        for (const auto& c : comps) {
            if (!cnames.insert(c.name).second)
                out.push_back("pair (" + x + "," + y + ") repeats component " + c.name);
            if (!c.compact && !extremal)
                out.push_back("pair (" + x + "," + y + "): noncompact component " + c.name +
                              " is only allowed from an index-0 to an index-(n+1) point");
            if (c.compact && !c.boundary.empty())
                out.push_back("pair (" + x + "," + y + "): compact component " + c.name +
                              " carries boundary data");
            bool interval = !c.compact && c.homology == std::map<int, int>{{0, 1}};
            if (interval && c.boundary.size() != 2)
                out.push_back("pair (" + x + "," + y + "): interval component " + c.name +
                              " must have exactly two boundary brokens");
            for (const auto& br : c.boundary) {
                const auto* cw = f.crit(br.w);
                if (!cw || cw->index <= 0 || cw->index >= f.n + 1) {
                    out.push_back("pair (" + x + "," + y + "): broken point " + br.w +
                                  " is not a middle critical point");
                    continue;
                }
                if (!comp_exists(x, br.w, br.first) || !comp_exists(br.w, y, br.second))
                    out.push_back("pair (" + x + "," + y + "): broken (" + br.w + "," +
                                  br.second + "," + br.first + ") names unknown components");
                broken_count[{x, y, br}]++;
            }
        }
    }
    for (const auto& [key, cnt] : broken_count)
        if (cnt != 1) {
            const auto& [x, y, br] = key;
            out.push_back("pair (" + x + "," + y + "): broken through " + br.w +
                          " lies on " + std::to_string(cnt) + " boundaries");
        }
    // parity: every possible broken pair must appear somewhere
    for (const auto& [xw, comps1] : f.traj) {
        const auto [x, w] = xw;
        const auto* cw = f.crit(w);
        if (!cw || cw->index == 0 || cw->index == f.n + 1) continue;
        for (const auto& [wy, comps2] : f.traj) {
            if (wy.first != w) continue;
            const std::string& y = wy.second;
            const auto* cy = f.crit(y);
            const auto* cx = f.crit(x);
            if (!cx || !cy || cx->index != 0 || cy->index != f.n + 1) continue;
            for (const auto& c1 : comps1)
                for (const auto& c2 : comps2) {
                    FlowData::Broken br{w, c2.name, c1.name};
                    if (!broken_count.count({x, y, br}))
                        out.push_back("pair (" + x + "," + y + "): broken (" + w + "," +
                                      c2.name + "," + c1.name + ") is on no boundary");
                }
        }
    }
    return out;
}

MorseModel morse_category(const FlowData& f) {
    auto bad = validate_flow(f);
    if (!bad.empty()) throw std::invalid_argument("flow data invalid: " + bad.front());

    MorseModel model;
    model.flow = f;
    for (const auto& c : f.crits) model.order.push_back(c.name);
    std::stable_sort(model.order.begin(), model.order.end(),
                     [&](const std::string& a, const std::string& b) {
                         int la = f.level_class(*f.crit(a)), lb = f.level_class(*f.crit(b));
                         if (la != lb) return la < lb;
                         return a < b;
                     });
    auto cat = std::make_shared<DirectedCategory>(Grading{}, model.order);
    std::map<std::string, int> idx;
    for (int i = 0; i < (int)model.order.size(); ++i) idx[model.order[i]] = i;

    for (const auto& [xy, comps] : f.traj) {
        const auto [x, y] = xy;
        for (const auto& c : comps) {
            for (const auto& [hdeg, dim] : c.homology) {
                auto& v = model.ids[{x, y, c.name, hdeg}];
                for (int j = 0; j < dim; ++j) {
                    std::string label = c.name + ".h" + std::to_string(hdeg);
                    if (dim > 1) label += "." + std::to_string(j);
                    v.push_back(cat->add_elt(idx.at(x), idx.at(y), -hdeg, label));
                }
            }
        }
    }
    // composition of degree-0 classes through the boundary inclusion
    for (const auto& [xy, comps] : f.traj) {
        const auto [x, y] = xy;
        const auto* cx = f.crit(x);
        const auto* cy = f.crit(y);
        if (cx->index != 0 || cy->index != f.n + 1) continue;
        for (const auto& c : comps) {
            for (const auto& br : c.boundary) {
                auto first_it = model.ids.find({x, br.w, br.first, 0});
                auto second_it = model.ids.find({br.w, y, br.second, 0});
                auto tgt_it = model.ids.find({x, y, c.name, 0});
                if (first_it == model.ids.end() || second_it == model.ids.end() ||
                    tgt_it == model.ids.end())
                    throw std::invalid_argument("flow data invalid: broken through " + br.w +
                                                " references classes without H_0");
                SparseVec v;
                v.add(tgt_it->second.front());
                cat->set_mu({first_it->second.front(), second_it->second.front()}, std::move(v));
            }
        }
    }
    model.cat = cat;
    return model;
}

int MorseModel::obj_of(const std::string& name) const {
    for (int i = 0; i < (int)order.size(); ++i)
        if (order[i] == name) return i;
    throw std::invalid_argument("unknown critical point " + name);
}

std::vector<int> MorseModel::class_ids(const std::string& x, const std::string& y,
                                       const std::string& comp, int hdeg) const {
    auto it = ids.find({x, y, comp, hdeg});
    return it == ids.end() ? std::vector<int>{} : it->second;
}

TwistedComplex fundamental_object(const MorseModel& m) {
    const FlowData& f = m.flow;
    std::vector<Summand> sums;
    std::map<std::string, int> pos;
    for (int i = 0; i < (int)m.order.size(); ++i) {
        const auto* c = f.crit(m.order[i]);
        pos[c->name] = (int)sums.size();
        sums.push_back({i, -c->index});
    }
    std::map<std::pair<int, int>, Mor> delta;
    for (const auto& [xy, comps] : f.traj) {
        const auto [x, y] = xy;
        bool all_compact = true;
        for (const auto& c : comps) all_compact = all_compact && c.compact;
        if (!all_compact || comps.empty()) continue;
        int k = f.crit(y)->index - f.crit(x)->index - 1;
        SparseVec v;
        for (const auto& c : comps) {
            auto it = m.ids.find({x, y, c.name, k});
            if (it == m.ids.end())
                throw std::invalid_argument("fundamental object: compact component " + c.name +
                                            " has no top class in degree " + std::to_string(k));
            for (int id : it->second) v.add(id);
        }
        if (!v.zero())
            delta[{pos.at(x), pos.at(y)}] = mor_vec(m.obj_of(x), m.obj_of(y), std::move(v));
    }
    return TwistedComplex(m.cat, std::move(sums), std::move(delta));
}

EndoReport fundamental_endos(const MorseModel& m, const std::map<int, int>& expected) {
    EndoReport rep;
    rep.expected = expected;
    TwistedComplex F = fundamental_object(m);
    rep.computed = db_hom(F, F);
    rep.match = (rep.computed == rep.expected);
    return rep;
}

bool verdier_check(const MorseModel& m, int object_index) {
    if (!m.flow.closed)
        throw std::invalid_argument("verdier_check: flow data is not declared closed");
    TwistedComplex F = fundamental_object(m);
    int dim = m.flow.n + 1;
    HomComplex endo(F, F);
    auto hd = endo.h_dims();
    if (!hd.count(dim) || hd.at(dim) != 1) return false;

    CatPtr cat = m.cat;
    TwistedComplex gen = TwistedComplex::generator(cat, object_index);
    HomComplex to_f(gen, F), from_f(F, gen);
    auto hl = to_f.h_dims(), hr = from_f.h_dims();
    std::set<int> degs;
    for (const auto& [d, n] : hl) {
        (void)n;
        degs.insert(d);
    }
    for (const auto& [d, n] : hr) {
        (void)n;
        degs.insert(dim - d);
    }
    for (int d : degs) {
        int dl = hl.count(d) ? hl.at(d) : 0;
        int dr = hr.count(dim - d) ? hr.at(dim - d) : 0;
        if (dl != dr) return false;
        if (!dl) continue;
        GF2Matrix pairing(dr, dl);
        for (int jl = 0; jl < dl; ++jl) {
            TwMor phi = to_f.class_rep(d, jl);
            for (int jr = 0; jr < dr; ++jr) {
                TwMor psi = from_f.class_rep(dim - d, jr);
                TwMor comp = tw_mu({&F, &gen, &F}, {&psi, &phi});
                auto coords = endo.class_coords(comp);
                if (!coords) throw std::logic_error("verdier_check: composite not closed");
                if (coords->size() == 1 && coords->get(0)) pairing.set(jr, jl, true);
            }
        }
        if (pairing.rank() != dl) return false;
    }
    return true;
}

bool is_cellular(const FlowData& f) {
    if (f.n != 1) throw std::invalid_argument("is_cellular: only n = 1 is supported");
    for (const auto& [xy, comps] : f.traj) {
        if (comps.empty()) continue;
        if (comps.size() != 1) return false;
        if (comps.front().homology != std::map<int, int>{{0, 1}}) return false;
    }
    return true;
}

CellularReport cellular_hh_check(const FlowData& f, const std::map<int, int>& expected) {
    CellularReport rep;
    rep.expected = expected;
    rep.cellular = is_cellular(f);
    if (!rep.cellular) return rep;
    MorseModel m = morse_category(f);
    rep.hh_dims = hh(*m.cat);
    int e0 = expected.count(0) ? expected.at(0) : 0;
    rep.hh0_ok = (rep.hh_dims.count(0) ? rep.hh_dims.at(0) : 0) == e0;
    long long chi_hh = 0, chi_exp = 0;
    for (const auto& [d, n] : rep.hh_dims) chi_hh += (d % 2 == 0 ? n : -n);
    for (const auto& [d, n] : expected) chi_exp += (d % 2 == 0 ? n : -n);
    rep.euler_ok = chi_hh == chi_exp;
    rep.match = rep.hh_dims == expected;
    return rep;
}

}  // namespace homcat
