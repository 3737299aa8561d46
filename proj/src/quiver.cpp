#include <algorithm>
#include <map>
#include <stdexcept>

#include "homcat/category.hpp"

namespace homcat {

namespace {

void validate_quiver(const QuiverPresentation& q) {
    int m = (int)q.vertices.size();
    for (const auto& a : q.arrows) {
        if (a.src < 0 || a.dst >= m || a.src >= a.dst)
            throw std::invalid_argument("quiver is not directed: arrow " + a.name +
                                        " must go from a lower to a higher vertex");
    }
    for (const auto& rel : q.relations) {
        if (rel.empty()) throw std::invalid_argument("empty relation");
        int src = -1, dst = -1, deg = 0;
        bool first = true;
        for (const auto& path : rel) {
            if (path.empty()) throw std::invalid_argument("relation contains an empty path");
            int s = q.arrows[path.front()].src;
            int t = q.arrows[path.back()].dst;
            int d = 0;
            for (size_t j = 0; j < path.size(); ++j) {
                const auto& a = q.arrows[path[j]];
                d += a.deg;
                if (j + 1 < path.size() && a.dst != q.arrows[path[j + 1]].src)
                    throw std::invalid_argument("relation path not composable");
            }
            d = q.grading.norm(d);
            if (first) {
                src = s, dst = t, deg = d;
                first = false;
            } else if (s != src || t != dst || d != deg) {
                throw std::invalid_argument(
                    "inhomogeneous relation: paths differ in source, target or degree");
            }
        }
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_paths(const QuiverPresentation& q, int i, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self, int at) -> void {
        if (at == k && !cur.empty()) out.push_back(cur);
        for (int a = 0; a < (int)q.arrows.size(); ++a) {
            if (q.arrows[a].src != at) continue;
            if (q.arrows[a].dst > k) continue;
            cur.push_back(a);
            self(self, q.arrows[a].dst);
            cur.pop_back();
        }
    };
    dfs(dfs, i);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

std::string path_label(const QuiverPresentation& q, const std::vector<int>& path) {
    // written right to left, matching function composition
    std::string s;
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].name;
    }
    return s;
}

DirectedCategory from_quiver(const QuiverPresentation& q) {
    validate_quiver(q);
    int m = (int)q.vertices.size();
    DirectedCategory cat(q.grading, q.vertices);

    // per-block path spaces, relation spans, and quotient data
    struct Block {
        std::vector<std::vector<int>> paths;
        std::map<std::vector<int>, int> index;
        std::vector<int> quot_ids;    // global ids of non-pivot paths, -1 for pivot slots
        std::vector<SparseVec> reduce;  // path idx -> value in quotient
    };
    std::map<std::pair<int, int>, Block> blocks;

    for (int i = 0; i < m; ++i) {
        for (int k = i + 1; k < m; ++k) {
            Block b;
            b.paths = enumerate_paths(q, i, k);
            if (b.paths.empty()) continue;
            for (int p = 0; p < (int)b.paths.size(); ++p) b.index[b.paths[p]] = p;

            // the ideal span: u * rel * w over all splittings
            std::vector<BitVec> rows;
            for (const auto& rel : q.relations) {
                int rs = q.arrows[rel.front().front()].src;
                int rt = q.arrows[rel.front().back()].dst;
                auto pres = (i == rs) ? std::vector<std::vector<int>>{{}}
                                      : enumerate_paths(q, i, rs);
                auto posts = (rt == k) ? std::vector<std::vector<int>>{{}}
                                       : enumerate_paths(q, rt, k);
                if (i != rs && pres.empty()) continue;
                if (rt != k && posts.empty()) continue;
                for (const auto& u : pres) {
                    for (const auto& w : posts) {
                        BitVec row((int)b.paths.size());
                        for (const auto& mid : rel) {
                            std::vector<int> full = u;
                            full.insert(full.end(), mid.begin(), mid.end());
                            full.insert(full.end(), w.begin(), w.end());
                            row.flip(b.index.at(full));
                        }
                        if (!row.zero()) rows.push_back(std::move(row));
                    }
                }
            }

            auto ech = GF2Matrix::from_rows(rows, (int)b.paths.size()).echelon();
            std::vector<bool> pivot(b.paths.size(), false);
            for (int c : ech.pivot_cols) pivot[c] = true;

            // quotient basis: non-pivot paths, in path order
            b.quot_ids.assign(b.paths.size(), -1);
            for (int p = 0; p < (int)b.paths.size(); ++p) {
                if (pivot[p]) continue;
                int deg = 0;
                for (int a : b.paths[p]) deg += q.arrows[a].deg;
                b.quot_ids[p] = cat.add_elt(i, k, deg, path_label(q, b.paths[p]));
            }
            // reduction map: pivot path = sum of its RREF row's non-pivot entries
            b.reduce.resize(b.paths.size());
            for (int p = 0; p < (int)b.paths.size(); ++p) {
                if (!pivot[p]) {
                    b.reduce[p].add(b.quot_ids[p]);
                    continue;
                }
                int r = (int)(std::find(ech.pivot_cols.begin(), ech.pivot_cols.end(), p) -
                              ech.pivot_cols.begin());
                for (int c = 0; c < (int)b.paths.size(); ++c)
                    if (c != p && ech.rref.get(r, c)) b.reduce[p].add(b.quot_ids[c]);
            }
            blocks[{i, k}] = std::move(b);
        }
    }

    // μ²: concatenation reduced modulo the ideal
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            auto bij = blocks.find({i, j});
            if (bij == blocks.end()) continue;
            for (int k = j + 1; k < m; ++k) {
                auto bjk = blocks.find({j, k});
                auto bik = blocks.find({i, k});
                if (bjk == blocks.end()) continue;
                for (int p1 = 0; p1 < (int)bij->second.paths.size(); ++p1) {
                    if (bij->second.quot_ids[p1] < 0) continue;
                    for (int p2 = 0; p2 < (int)bjk->second.paths.size(); ++p2) {
                        if (bjk->second.quot_ids[p2] < 0) continue;
                        std::vector<int> cc = bij->second.paths[p1];
                        cc.insert(cc.end(), bjk->second.paths[p2].begin(),
                                  bjk->second.paths[p2].end());
                        const Block& t = bik->second;
                        SparseVec val = t.reduce[t.index.at(cc)];
                        if (!val.zero())
                            cat.set_mu({bij->second.quot_ids[p1], bjk->second.quot_ids[p2]},
                                       std::move(val));
                    }
                }
            }
        }
    }
    return cat;
}

}  // namespace homcat
