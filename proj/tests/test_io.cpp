#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "homcat/io.hpp"
#include "homcat/mutation.hpp"

using namespace homcat;
using namespace homcat::testing;

TEST_CASE("shipped fixtures parse and build") {
    QuiverPresentation cp2 = parse_quiver_file(fixture("cp2.qcat"));
    DirectedCategory c = from_quiver(cp2);
    CHECK(c.hom_dims(0, 2) == std::map<int, int>{{0, 2}});

    QuiverPresentation ag = parse_quiver_file(fixture("a_g2.qcat"));
    CHECK(from_quiver(ag).num_objects() == 5);

    ZeroConfig cfg = parse_zconf_file(fixture("a_g2.zconf"));
    CHECK(cfg.fibre == 2);
    CHECK(cfg.spheres.size() == 5);

    FlowData f = parse_flow_file(fixture("rp2.flow"));
    CHECK(f.closed);
    CHECK(f.crits.size() == 3);

    auto cat = std::make_shared<DirectedCategory>(from_quiver(ag));
    TwistedComplex c1 = parse_twx_file(fixture("c1.twx"), cat);
    CHECK(c1.size() == 2);
    CHECK(db_hom(c1, c1) == std::map<int, int>{{0, 1}, {1, 1}});
}

TEST_CASE("empty input is an error") {
    std::istringstream empty("# nothing here\n");
    CHECK_THROWS_AS(parse_quiver(empty), ParseError);
    std::istringstream empty2("");
    CHECK_THROWS_AS(parse_zconf(empty2), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream bad("object X1\nobject X2\narrow a X2\n");
    try {
        parse_quiver(bad);
        FAIL("expected a throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    std::istringstream bad2("fibre 2\nsphere {1,5} grading 0 0\n");
    try {
        parse_zconf(bad2);
        FAIL("expected a throw");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    // a non-directed quiver parses but is rejected on construction
    std::istringstream rev("object X1\nobject X2\narrow a X2 X1\n");
    CHECK_THROWS_AS(from_quiver(parse_quiver(rev)), std::invalid_argument);
}

TEST_CASE("round trips: parse(print(x)) == x") {
    std::mt19937_64 rng(271);
    for (int trial = 0; trial < 20; ++trial) {
        ZeroConfig cfg = random_config(rng);
        std::istringstream in(print_zconf(cfg));
        CHECK(parse_zconf(in) == cfg);
    }

    QuiverPresentation q = cp2_quiver();
    std::istringstream in(print_quiver(q));
    QuiverPresentation q2 = parse_quiver(in);
    CHECK(q2.vertices == q.vertices);
    CHECK(q2.relations == q.relations);
    CHECK(tables_equal(from_quiver(q), from_quiver(q2)));

    FlowData f = parse_flow_file(fixture("rp2.flow"));
    std::istringstream fin(print_flow(f));
    FlowData f2 = parse_flow(fin);
    CHECK(print_flow(f2) == print_flow(f));

    auto cat = std::make_shared<DirectedCategory>(from_quiver(ag_quiver(2)));
    TwistedComplex c1 = parse_twx_file(fixture("c1.twx"), cat);
    std::istringstream tin(print_twx(c1));
    CHECK(parse_twx(tin, cat) == c1);
}

TEST_CASE("script round trip") {
    MutationScript s = parse_script("c r c! r! shift 0,1,-2");
    CHECK(script_str(s) == "c r c! r! shift 0,1,-2");
    CHECK_THROWS_AS(parse_script("q"), std::invalid_argument);
}

TEST_CASE("reports are canonical") {
    Report r;
    r.set("b.key", 2);
    r.set("a.key", "x");
    r.set_dims("t", {{-1, 2}, {0, 1}});
    CHECK(r.str() == "a.key = x\nb.key = 2\nt.-1 = 2\nt.0 = 1\n");
}
