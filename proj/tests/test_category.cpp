#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "homcat/category.hpp"

using namespace homcat;
using namespace homcat::testing;

TEST_CASE("A_2 path category: one arrow, degree 0") {
    QuiverPresentation q;
    q.vertices = {"X1", "X2"};
    q.arrows = {{"a", 0, 1, 0}};
    DirectedCategory c = from_quiver(q);
    CHECK(c.hom(0, 1).size() == 1);
    CHECK(c.elt(c.hom(0, 1)[0]).deg == 0);
    CHECK(c.check_relations().empty());
}

TEST_CASE("CP2 quiver: hom(1,3) is two-dimensional in degree 0") {
    DirectedCategory c = from_quiver(cp2_quiver());
    CHECK(c.hom_dims(0, 2) == std::map<int, int>{{0, 2}});
    CHECK(c.hom_dims(0, 1) == std::map<int, int>{{0, 2}});
    CHECK(c.hom_dims(1, 2) == std::map<int, int>{{0, 2}});
    CHECK(c.check_relations().empty());
    // all four products are nonzero and they agree in pairs
    int a1 = c.hom(0, 1)[0], b1 = c.hom(0, 1)[1];
    int a2 = c.hom(1, 2)[0], b2 = c.hom(1, 2)[1];
    CHECK(c.mu({a1, a2}) == c.mu({b1, b2}));
    CHECK(c.mu({a1, b2}) == c.mu({b1, a2}));
    CHECK(!c.mu({a1, a2}).zero());
    CHECK(!c.mu({a1, b2}).zero());
}

TEST_CASE("A_g quiver: hom(i, i+2) spanned by the two monotone paths") {
    DirectedCategory c = from_quiver(ag_quiver(2));
    // enumerate length-2 paths and reduce modulo the relations by hand:
    // of a2a1, a2b1, b2a1, b2b1 only a2a1 and b2b1 survive
    for (int i = 0; i + 2 < 5; ++i) {
        CHECK(c.hom_dims(i, i + 2) == std::map<int, int>{{0, 2}});
        auto ids = c.hom(i, i + 2);
        std::set<std::string> labels;
        for (int id : ids) labels.insert(c.elt(id).label);
        std::string a = "a" + std::to_string(i + 2) + "*a" + std::to_string(i + 1);
        std::string b = "b" + std::to_string(i + 2) + "*b" + std::to_string(i + 1);
        CHECK(labels == std::set<std::string>{a, b});
    }
    CHECK(c.check_relations().empty());
}

TEST_CASE("from_quiver rejects bad input") {
    QuiverPresentation q;
    q.vertices = {"X1", "X2"};
    q.arrows = {{"a", 1, 0, 0}};  // backwards
    CHECK_THROWS_AS(from_quiver(q), std::invalid_argument);

    QuiverPresentation q2;
    q2.vertices = {"X1", "X2"};
    q2.arrows = {{"a", 0, 1, 0}, {"b", 0, 1, 1}};
    q2.relations = {{{0}, {1}}};  // a + b inhomogeneous (degrees differ)
    CHECK_THROWS_AS(from_quiver(q2), std::invalid_argument);
}

TEST_CASE("hom dimension equals path count minus relation-span rank") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 30; ++trial) {
        // random quiver with relations; compare against the independent count
        QuiverPresentation q;
        int m = 3 + (int)(rng() % 2);
        for (int i = 0; i < m; ++i) q.vertices.push_back("V" + std::to_string(i));
        int na = 2 + (int)(rng() % 5);
        for (int a = 0; a < na; ++a) {
            int i = (int)(rng() % m), k = (int)(rng() % m);
            if (i == k) continue;
            if (i > k) std::swap(i, k);
            q.arrows.push_back({"r" + std::to_string(a), i, k, 0});
        }
        // pair up some equal-endpoint paths as relations
        std::map<std::pair<int, int>, std::vector<std::vector<int>>> paths;
        for (int i = 0; i < m; ++i)
            for (int k = i + 1; k < m; ++k) paths[{i, k}] = enumerate_paths(q, i, k);
        for (const auto& [ik, ps] : paths)
            if (ps.size() >= 2 && (rng() & 1)) q.relations.push_back({ps[0], ps[1]});
        DirectedCategory c = from_quiver(q);
        CHECK(c.check_relations().empty());
        // independent dimension count per block: #paths - rank of ideal rows
        for (const auto& [ik, ps] : paths) {
            if (ps.empty()) continue;
            std::map<std::vector<int>, int> pidx;
            for (int p = 0; p < (int)ps.size(); ++p) pidx[ps[p]] = p;
            std::vector<BitVec> rows;
            for (const auto& rel : q.relations) {
                int rs = q.arrows[rel.front().front()].src;
                int rt = q.arrows[rel.front().back()].dst;
                auto pres = ik.first == rs ? std::vector<std::vector<int>>{{}}
                                           : enumerate_paths(q, ik.first, rs);
                auto posts = rt == ik.second ? std::vector<std::vector<int>>{{}}
                                             : enumerate_paths(q, rt, ik.second);
                for (const auto& u : pres)
                    for (const auto& w : posts) {
                        BitVec row((int)ps.size());
                        for (const auto& mid : rel) {
                            std::vector<int> full = u;
                            full.insert(full.end(), mid.begin(), mid.end());
                            full.insert(full.end(), w.begin(), w.end());
                            row.flip(pidx.at(full));
                        }
                        if (!row.zero()) rows.push_back(row);
                    }
            }
            int rank = GF2Matrix::from_rows(rows, (int)ps.size()).rank();
            CHECK((int)c.hom(ik.first, ik.second).size() == (int)ps.size() - rank);
        }
    }
}

TEST_CASE("check_relations flags a corrupted product") {
    DirectedCategory c = from_quiver(cp2_quiver());
    int a1 = c.hom(0, 1)[0], a2 = c.hom(1, 2)[0];
    // drop one product: associativity cannot fail in a 3-object category,
    // but the corrupted table breaks the pairing with the relation ideal in
    // a 4-object extension; here corrupt μ² so that μ²(μ²) mismatches μ^1=0
    // chains are too short, so instead corrupt a value degree
    DirectedCategory bad(c.grading(), c.objects());
    for (int id = 0; id < c.num_elts(); ++id) {
        const BasisElt& e = c.elt(id);
        bad.add_elt(e.src, e.dst, e.deg, e.label);
    }
    for (const auto& [k, v] : c.mu_table()) {
        if (k == std::vector<int>{a1, a2}) continue;  // drop μ²(a2, a1)
        bad.set_mu(k, v);
    }
    // with a 3-object dg category with no μ^1, dropping one product cannot
    // violate the A∞ identities; the quiver comparison still sees it
    CHECK(!tables_equal(bad, c));

    // a genuine violation: 4-object chain where associativity fails
    DirectedCategory d(Grading{}, {"A", "B", "C", "D"});
    int f = d.add_elt(0, 1, 0, "f");
    int g = d.add_elt(1, 2, 0, "g");
    int h = d.add_elt(2, 3, 0, "h");
    int gf = d.add_elt(0, 2, 0, "gf");
    int hg = d.add_elt(1, 3, 0, "hg");
    int hgf = d.add_elt(0, 3, 0, "hgf");
    d.set_mu({f, g}, SparseVec{{gf}});
    d.set_mu({g, h}, SparseVec{{hg}});
    d.set_mu({gf, h}, SparseVec{{hgf}});
    // μ²(hg, f) left out: (h g) f != h (g f)
    auto report = d.check_relations();
    REQUIRE(!report.empty());
    CHECK(report.front().chain == std::vector<int>{f, g, h});
}

TEST_CASE("strictly_isomorphic finds basis changes and rejects non-isomorphic") {
    DirectedCategory c = from_quiver(cp2_quiver());
    // change basis in hom(1,2): a1 -> a1 + b1
    DirectedCategory d(c.grading(), c.objects());
    for (int id = 0; id < c.num_elts(); ++id) {
        const BasisElt& e = c.elt(id);
        d.add_elt(e.src, e.dst, e.deg, e.label);
    }
    int a1 = c.hom(0, 1)[0], b1 = c.hom(0, 1)[1];
    for (const auto& [k, v] : c.mu_table()) {
        // new μ(a1', x) := μ(a1, x) + μ(b1, x) where a1' plays a1's slot
        std::vector<std::vector<int>> keys{k};
        if (k[0] == a1) keys.push_back({b1, k[1]});
        SparseVec total;
        for (const auto& kk : keys) total ^= c.mu(kk);
        if (k[0] == a1)
            d.set_mu(k, total);
        else
            d.set_mu(k, v);
    }
    CHECK(strictly_isomorphic(c, d));

    // the A_g-type category with relations b2a1 = a2b1 = 0 is NOT isomorphic
    // to the CP2 one (different annihilator structure)
    QuiverPresentation q = cp2_quiver();
    q.relations = {{{0, 3}}, {{1, 2}}};  // b2*a1 = 0, a2*b1 = 0
    DirectedCategory e = from_quiver(q);
    CHECK(e.dims_table() == c.dims_table());
    CHECK(!strictly_isomorphic(c, e));
}
