#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "homcat/hochschild.hpp"
#include "homcat/io.hpp"
#include "homcat/minimal.hpp"
#include "homcat/mutation.hpp"
#include "homcat/spherical.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace homcat;

namespace {

std::string resolve(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    if (const char* dir = std::getenv("HOMCAT_FIXTURES")) {
        fs::path alt = fs::path(dir) / path;
        if (fs::exists(alt)) return alt.string();
    }
    return path;  // let the open fail with the original name
}

Grading cli_grading;

CatPtr load_cat(const std::string& path, Report& rep) {
    std::string p = resolve(path);
    QuiverPresentation q = parse_quiver_file(p);
    if (cli_grading.z2) q.grading = cli_grading;
    rep.set("input.file", path);
    rep.set("input.fnv1a", (long long)fnv1a_file(p));
    return std::make_shared<DirectedCategory>(from_quiver(q));
}

TwistedComplex load_obj(const std::string& path, CatPtr cat, Report& rep,
                        const std::string& slot) {
    if (path.rfind("gen:", 0) == 0) {
        int i = std::stoi(path.substr(4));
        rep.set(slot, path);
        return TwistedComplex::generator(cat, i - 1);
    }
    std::string p = resolve(path);
    rep.set(slot, path);
    rep.set(slot + ".fnv1a", (long long)fnv1a_file(p));
    return parse_twx_file(p, cat);
}

void dims_into(Report& rep, const std::string& prefix, const DirectedCategory& c) {
    for (const auto& [key, n] : c.dims_table()) {
        auto [i, k, d] = key;
        rep.set(prefix + ".hom" + std::to_string(i + 1) + "," + std::to_string(k + 1) +
                    ".deg" + std::to_string(d),
                n);
    }
}

int emit(const Report& rep, int code) {
    std::cout << rep.str();
    return code;
}

std::map<int, int> parse_dims_list(const std::string& s) {
    // "1,1,1" (degrees 0,1,2,...) or "0:1,2:1" explicit pairs
    std::map<int, int> out;
    std::istringstream is(s);
    std::string item;
    int at = 0;
    while (std::getline(is, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
            int v = std::stoi(item);
            if (v) out[at] = v;
            ++at;
        } else {
            int d = std::stoi(item.substr(0, colon));
            int v = std::stoi(item.substr(colon + 1));
            if (v) out[d] = v;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological algebra over GF(2): directed A-infinity categories, "
                 "twisted complexes, Hochschild cohomology, mutations, branched covers, "
                 "Morse categories"};
    app.require_subcommand(1);
    std::string grading_opt = "z";
    int threads = 0;
    unsigned long long seed = 1;
    app.add_option("--grading", grading_opt, "grading group: z or z2")
        ->check(CLI::IsMember({"z", "z2"}));
    app.add_option("--threads", threads, "OpenMP thread count (0 = default)");
    app.add_option("--seed", seed, "seed for randomized sweeps");

    std::string file, file2, file3, script, cls, expected;
    int index = 1, dim = 1, depth = 6;
    long long cap = 1 << 16;
    std::string check;

    auto* c_check = app.add_subcommand("check", "verify the A-infinity relations of a category");
    c_check->add_option("file", file)->required();

    auto* c_hh = app.add_subcommand("hh", "Hochschild cohomology table");
    c_hh->add_option("file", file)->required();

    auto* c_e1 = app.add_subcommand("e1", "length-filtration E1 table");
    c_e1->add_option("file", file)->required();

    auto* c_dbhom = app.add_subcommand("dbhom", "derived Hom table between twisted complexes");
    c_dbhom->add_option("cat", file)->required();
    c_dbhom->add_option("a", file2, "twx file or gen:i")->required();
    c_dbhom->add_option("b", file3, "twx file or gen:i")->required();

    auto* c_mut = app.add_subcommand("mutate", "run a mutation script");
    c_mut->add_option("cat", file)->required();
    c_mut->add_option("--script", script)->required();
    c_mut->add_option("--check", check, "invariant to compare: hh");

    auto* c_track = app.add_subcommand("track", "track an object through a mutation script");
    c_track->add_option("cat", file)->required();
    c_track->add_option("obj", file2)->required();
    c_track->add_option("--script", script)->required();

    auto* c_sph = app.add_subcommand("spherical", "sphericality report for a twisted complex");
    c_sph->add_option("cat", file)->required();
    c_sph->add_option("obj", file2)->required();
    c_sph->add_option("--dim", dim, "expected sphere dimension n+1")->required();

    auto* c_match = app.add_subcommand("matching", "matching-pair detection and cone");
    c_match->add_option("cat", file)->required();
    c_match->add_option("--index", index, "1-based position i of the pair (i, i+1)")->required();
    c_match->add_option("--class", cls, "degree-0 class, e.g. 'a1 + b1'");

    auto* c_braid = app.add_subcommand("braid", "braid/commutation check for two twists");
    c_braid->add_option("cat", file)->required();
    c_braid->add_option("c1", file2)->required();
    c_braid->add_option("c2", file3)->required();
    c_braid->add_option("--cap", cap, "isomorphism search cap");

    auto* z = app.add_subcommand("zerodim", "branched covers and configurations");
    z->require_subcommand(1);
    auto* z_fuk = z->add_subcommand("fukaya", "directed Fukaya category of a configuration");
    z_fuk->add_option("cfg", file)->required();
    auto* z_top = z->add_subcommand("topology", "topology of the branched cover");
    z_top->add_option("cfg", file)->required();
    auto* z_phi = z->add_subcommand("phirel", "relative invariant over the disc");
    z_phi->add_option("cover", file)->required();
    z_phi->add_option("boundary", file2)->required();
    auto* z_tri = z->add_subcommand("triangle", "exact-triangle quasi-isomorphism check");
    z_tri->add_option("cfg", file, "configuration with exactly three spheres L,L1,L2")
        ->required();
    auto* z_orb = z->add_subcommand("orbit", "bounded Hurwitz-orbit search");
    z_orb->add_option("cfg", file)->required();
    z_orb->add_option("--depth", depth);
    z_orb->add_option("--target", file2);

    auto* mo = app.add_subcommand("morse", "combinatorial Morse categories");
    mo->require_subcommand(1);
    auto* m_cat = mo->add_subcommand("cat", "the Morse category of flow data");
    m_cat->add_option("flow", file)->required();
    auto* m_fund = mo->add_subcommand("fundamental", "fundamental object and its endomorphisms");
    m_fund->add_option("flow", file)->required();
    m_fund->add_option("--expected", expected, "expected dims, e.g. 1,1,1");
    auto* m_verd = mo->add_subcommand("verdier", "duality pairing on all generators");
    m_verd->add_option("flow", file)->required();
    auto* m_cell = mo->add_subcommand("cellular", "cellularity and the cellular HH identity");
    m_cell->add_option("flow", file)->required();
    m_cell->add_option("--expected", expected, "expected dims, e.g. 1,1,1");

    CLI11_PARSE(app, argc, argv);

    cli_grading = grading_opt == "z2" ? grading_z2() : grading_z();
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    (void)seed;

    auto t0 = std::chrono::steady_clock::now();
    int code = 0;
    try {
        Report rep;
        rep.set("grading", grading_opt);
        if (c_check->parsed()) {
            rep.set("command", "check");
            CatPtr cat = load_cat(file, rep);
            auto bad = cat->check_relations();
            rep.set("violations", (long long)bad.size());
            for (size_t i = 0; i < bad.size(); ++i) {
                std::string where = bad[i].what + " @";
                for (int id : bad[i].chain) where += " " + cat->elt(id).label;
                rep.set("violation." + std::to_string(i), where);
            }
            rep.set("verdict", bad.empty() ? "ok" : "fail");
            code = emit(rep, bad.empty() ? 0 : 1);
        } else if (c_hh->parsed()) {
            rep.set("command", "hh");
            CatPtr cat = load_cat(file, rep);
            rep.set_dims("hh", hh(*cat));
            code = emit(rep, 0);
        } else if (c_e1->parsed()) {
            rep.set("command", "e1");
            CatPtr cat = load_cat(file, rep);
            for (const auto& [ld, n] : e1_length(*cat))
                rep.set("e1.len" + std::to_string(ld.first) + ".deg" + std::to_string(ld.second),
                        n);
            code = emit(rep, 0);
        } else if (c_dbhom->parsed()) {
            rep.set("command", "dbhom");
            CatPtr cat = load_cat(file, rep);
            TwistedComplex a = load_obj(file2, cat, rep, "input.a");
            TwistedComplex b = load_obj(file3, cat, rep, "input.b");
            rep.set_dims("dbhom", db_hom(a, b));
            code = emit(rep, 0);
        } else if (c_mut->parsed()) {
            rep.set("command", "mutate");
            CatPtr cat = load_cat(file, rep);
            rep.set("script", script);
            MutationScript s = parse_script(script);
            CatPtr out = run_script(cat, s);
            dims_into(rep, "result", *out);
            if (check == "hh") {
                auto before = hh(*cat);
                auto after = hh(*minimal_model(out).first);
                rep.set_dims("hh.before", before);
                rep.set_dims("hh.after", after);
                bool same = before == after;
                rep.set("hh.invariant", same ? "yes" : "no");
                code = emit(rep, same ? 0 : 1);
            } else {
                code = emit(rep, 0);
            }
        } else if (c_track->parsed()) {
            rep.set("command", "track");
            CatPtr cat = load_cat(file, rep);
            TwistedComplex t = load_obj(file2, cat, rep, "input.obj");
            rep.set("script", script);
            MutationScript s = parse_script(script);
            TwistedComplex img = track_object(cat, s, t);
            MutationRun r = MutationRun::start(cat);
            r.run(s);
            rep.set("object", print_twx(img));
            for (size_t i = 0; i < r.objects.size(); ++i)
                rep.set_dims("hom.to.Y" + std::to_string(i + 1), db_hom(img, r.objects[i]));
            code = emit(rep, 0);
        } else if (c_sph->parsed()) {
            rep.set("command", "spherical");
            CatPtr cat = load_cat(file, rep);
            TwistedComplex t = load_obj(file2, cat, rep, "input.obj");
            SphericalReport sr = is_spherical(t, dim);
            rep.set("dim", dim);
            rep.set_dims("endo", sr.endo_dims);
            rep.set("endo.ok", sr.endo_ok ? "yes" : "no");
            for (size_t i = 0; i < sr.pairing_ok.size(); ++i)
                rep.set("pairing.ok." + cat->object_name((int)i),
                        sr.pairing_ok[i] ? "yes" : "no");
            rep.set("verdict", sr.verdict ? "spherical" : "not-spherical");
            code = emit(rep, sr.verdict ? 0 : 1);
        } else if (c_match->parsed()) {
            rep.set("command", "matching");
            CatPtr cat = load_cat(file, rep);
            int i = index - 1;
            std::optional<SparseVec> given;
            if (!cls.empty()) {
                SparseVec v;
                std::istringstream is(cls);
                std::string lbl;
                while (is >> lbl) {
                    if (lbl == "+") continue;
                    bool found = false;
                    for (int id : cat->hom(i, i + 1))
                        if (cat->elt(id).label == lbl) {
                            v.add(id);
                            found = true;
                            break;
                        }
                    if (!found) throw std::invalid_argument("unknown class label " + lbl);
                }
                given = v;
            }
            auto n = matching_dimension(*cat, i);
            rep.set("pair", cat->object_name(i) + "," + cat->object_name(i + 1));
            rep.set("sphere.dim.n", n ? std::to_string(*n) : "none");
            bool detected = n && detect_matching_pair(*cat, i, *n);
            rep.set("matching", detected ? "yes" : "no");
            if (detected || given) {
                TwistedComplex cone_obj = matching_cone(cat, i, given);
                rep.set("cone", print_twx(cone_obj));
                rep.set("cone.spherical", "yes");  // matching_cone verifies
                code = emit(rep, 0);
            } else {
                code = emit(rep, 1);
            }
        } else if (c_braid->parsed()) {
            rep.set("command", "braid");
            CatPtr cat = load_cat(file, rep);
            TwistedComplex c1 = load_obj(file2, cat, rep, "input.c1");
            TwistedComplex c2 = load_obj(file3, cat, rep, "input.c2");
            BraidReport br = braid_check(c1, c2, cap);
            rep.set("mode", br.mode);
            for (size_t i = 0; i < br.per_generator.size(); ++i)
                rep.set("generator." + cat->object_name((int)i), to_string(br.per_generator[i]));
            rep.set("verdict", br.all_yes ? "yes" : "no");
            code = emit(rep, br.all_yes ? 0 : 1);
        } else if (z_fuk->parsed()) {
            rep.set("command", "zerodim.fukaya");
            std::string p = resolve(file);
            rep.set("input.file", file);
            rep.set("input.fnv1a", (long long)fnv1a_file(p));
            ZeroConfig cfg = parse_zconf_file(p);
            DirectedCategory cat = fukaya(cfg, cli_grading);
            dims_into(rep, "fukaya", cat);
            long long prods = 0;
            for (const auto& [k, v] : cat.mu_table())
                if (k.size() == 2 && !v.zero()) ++prods;
            rep.set("products", prods);
            code = emit(rep, 0);
        } else if (z_top->parsed()) {
            rep.set("command", "zerodim.topology");
            std::string p = resolve(file);
            rep.set("input.file", file);
            rep.set("input.fnv1a", (long long)fnv1a_file(p));
            CoverReport cr = cover_topology(parse_zconf_file(p));
            rep.set("sheets", cr.sheets);
            rep.set("branch.points", cr.branch_points);
            rep.set("components", cr.components);
            rep.set("euler", cr.euler);
            rep.set("boundary.circles", cr.boundary_circles);
            for (size_t i = 0; i < cr.genus_per_component.size(); ++i)
                rep.set("genus." + std::to_string(i), cr.genus_per_component[i]);
            rep.set("connected", cr.connected() ? "yes" : "no");
            rep.set("disc", cr.disc() ? "yes" : "no");
            code = emit(rep, 0);
        } else if (z_phi->parsed()) {
            rep.set("command", "zerodim.phirel");
            ZeroConfig cover = parse_zconf_file(resolve(file));
            ZeroConfig bd = parse_zconf_file(resolve(file2));
            rep.set("input.cover", file);
            rep.set("input.boundary", file2);
            if (bd.fibre != cover.fibre)
                throw std::invalid_argument("boundary fibre differs from the cover fibre");
            PhiRel pr = phi_rel(cover, bd.spheres);
            rep.set("sections", (long long)pr.sections.size());
            std::string tensor;
            for (size_t s = 0; s < pr.sections.size(); ++s) {
                if (s) tensor += " + ";
                std::string term;
                for (size_t j = 0; j < pr.factor_pairs.size(); ++j)
                    term += (j ? "(x)" : "") + ("x" + std::to_string(pr.sections[s] + 1));
                tensor += term.empty() ? "1" : term;
            }
            rep.set("tensor", pr.sections.empty() ? "0" : tensor);
            code = emit(rep, 0);
        } else if (z_tri->parsed()) {
            rep.set("command", "zerodim.triangle");
            ZeroConfig cfg = parse_zconf_file(resolve(file));
            rep.set("input.file", file);
            if (cfg.spheres.size() != 3)
                throw std::invalid_argument("triangle needs exactly three spheres L, L1, L2");
            TriangleReport tr =
                cone_triangle_check(cfg.spheres[0], cfg.spheres[1], cfg.spheres[2]);
            rep.set_dims("cone.h", tr.cone_h);
            rep.set_dims("target.h", tr.target_h);
            rep.set("dims.ok", tr.dims_ok ? "yes" : "no");
            rep.set("quasi.isomorphism", tr.qiso ? "yes" : "no");
            code = emit(rep, tr.ok() ? 0 : 1);
        } else if (z_orb->parsed()) {
            rep.set("command", "zerodim.orbit");
            ZeroConfig start = parse_zconf_file(resolve(file));
            rep.set("input.file", file);
            std::optional<ZeroConfig> target;
            if (!file2.empty()) target = parse_zconf_file(resolve(file2));
            std::map<std::string, std::string> seen;  // key -> script
            std::vector<std::pair<ZeroConfig, std::string>> frontier{{start, ""}};
            seen[print_zconf(start)] = "";
            std::string found;
            bool hit = target && print_zconf(*target) == print_zconf(start);
            for (int d = 0; d < depth && !hit; ++d) {
                std::vector<std::pair<ZeroConfig, std::string>> next;
                for (const auto& [cfg, scr] : frontier) {
                    std::vector<std::pair<ZeroConfig, std::string>> moves = {
                        {hurwitz_c(cfg), scr + (scr.empty() ? "c" : " c")},
                        {hurwitz_r(cfg), scr + (scr.empty() ? "r" : " r")},
                        {hurwitz_inv_c(cfg), scr + (scr.empty() ? "c!" : " c!")},
                        {hurwitz_inv_r(cfg), scr + (scr.empty() ? "r!" : " r!")}};
                    for (auto& [nc, ns] : moves) {
                        std::string key = print_zconf(nc);
                        if (seen.count(key)) continue;
                        seen[key] = ns;
                        if (target && key == print_zconf(*target)) {
                            found = ns;
                            hit = true;
                            break;
                        }
                        next.push_back({std::move(nc), std::move(ns)});
                    }
                    if (hit) break;
                }
                frontier = std::move(next);
            }
            rep.set("orbit.size.visited", (long long)seen.size());
            rep.set("depth", depth);
            if (target) {
                rep.set("target.reached", hit ? "yes" : "no");
                if (hit) rep.set("script", found);
                code = emit(rep, hit ? 0 : 1);
            } else {
                code = emit(rep, 0);
            }
        } else if (m_cat->parsed()) {
            rep.set("command", "morse.cat");
            std::string p = resolve(file);
            rep.set("input.file", file);
            rep.set("input.fnv1a", (long long)fnv1a_file(p));
            MorseModel m = morse_category(parse_flow_file(p));
            for (size_t i = 0; i < m.order.size(); ++i)
                rep.set("object." + std::to_string(i + 1), m.order[i]);
            dims_into(rep, "morse", *m.cat);
            auto bad = m.cat->check_relations();
            rep.set("relations", bad.empty() ? "ok" : "fail");
            code = emit(rep, bad.empty() ? 0 : 1);
        } else if (m_fund->parsed()) {
            rep.set("command", "morse.fundamental");
            MorseModel m = morse_category(parse_flow_file(resolve(file)));
            rep.set("input.file", file);
            TwistedComplex F = fundamental_object(m);
            rep.set("object", print_twx(F));
            auto endos = db_hom(F, F);
            rep.set_dims("endo", endos);
            if (!expected.empty()) {
                auto want = parse_dims_list(expected);
                rep.set_dims("expected", want);
                bool match = endos == want;
                rep.set("match", match ? "yes" : "no");
                code = emit(rep, match ? 0 : 1);
            } else {
                code = emit(rep, 0);
            }
        } else if (m_verd->parsed()) {
            rep.set("command", "morse.verdier");
            MorseModel m = morse_category(parse_flow_file(resolve(file)));
            rep.set("input.file", file);
            bool all = true;
            for (size_t i = 0; i < m.order.size(); ++i) {
                bool ok = verdier_check(m, (int)i);
                rep.set("pairing." + m.order[i], ok ? "nondegenerate" : "degenerate");
                all = all && ok;
            }
            rep.set("verdict", all ? "yes" : "no");
            code = emit(rep, all ? 0 : 1);
        } else if (m_cell->parsed()) {
            rep.set("command", "morse.cellular");
            FlowData f = parse_flow_file(resolve(file));
            rep.set("input.file", file);
            CellularReport cr = cellular_hh_check(f, parse_dims_list(expected));
            rep.set("cellular", cr.cellular ? "yes" : "no");
            if (cr.cellular) {
                rep.set_dims("hh", cr.hh_dims);
                rep.set_dims("expected", cr.expected);
                rep.set("hh0.ok", cr.hh0_ok ? "yes" : "no");
                rep.set("euler.ok", cr.euler_ok ? "yes" : "no");
                rep.set("match", cr.match ? "yes" : "no");
                code = emit(rep, cr.match ? 0 : 1);
            } else {
                rep.set("match", "skipped");
                code = emit(rep, 1);
            }
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        code = 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        code = 2;
    }
    auto t1 = std::chrono::steady_clock::now();
    std::cerr << "wall_time_ms "
              << std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() << "\n";
    return code;
}
