#include "homcat/io.hpp"

#include <fstream>
#include <sstream>

namespace homcat {

namespace {

std::vector<std::pair<int, std::vector<std::string>>> tokenize(std::istream& in) {
    std::vector<std::pair<int, std::vector<std::string>>> out;
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back({ln, std::move(toks)});
    }
    return out;
}

int to_int(const std::string& s, int line) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

}  // namespace

QuiverPresentation parse_quiver(std::istream& in) {
    QuiverPresentation q;
    std::map<std::string, int> vidx;
    std::map<std::string, int> aidx;
    bool any = false;
    for (const auto& [ln, toks] : tokenize(in)) {
        any = true;
        if (toks[0] == "grading") {
            if (toks.size() != 2 || (toks[1] != "z" && toks[1] != "z2"))
                throw ParseError(ln, "grading must be z or z2");
            q.grading = toks[1] == "z2" ? grading_z2() : grading_z();
        } else if (toks[0] == "object") {
            if (toks.size() != 2) throw ParseError(ln, "object needs a name");
            if (vidx.count(toks[1])) throw ParseError(ln, "duplicate object " + toks[1]);
            vidx[toks[1]] = (int)q.vertices.size();
            q.vertices.push_back(toks[1]);
        } else if (toks[0] == "arrow") {
            if (toks.size() != 4 && (toks.size() != 6 || toks[4] != "deg"))
                throw ParseError(ln, "arrow NAME SRC DST [deg D]");
            if (!vidx.count(toks[2]) || !vidx.count(toks[3]))
                throw ParseError(ln, "arrow endpoints must be declared objects");
            if (aidx.count(toks[1])) throw ParseError(ln, "duplicate arrow " + toks[1]);
            int deg = toks.size() == 6 ? to_int(toks[5], ln) : 0;
            aidx[toks[1]] = (int)q.arrows.size();
            q.arrows.push_back({toks[1], vidx.at(toks[2]), vidx.at(toks[3]), deg});
        } else if (toks[0] == "relation") {
            // paths joined by + ; an optional = moves the right side over
            std::vector<std::vector<int>> rel;
            bool expect_path = true;
            for (size_t i = 1; i < toks.size(); ++i) {
                const std::string& t = toks[i];
                if (t == "+" || t == "=") {
                    if (expect_path) throw ParseError(ln, "misplaced '" + t + "'");
                    expect_path = true;
                    continue;
                }
                if (!expect_path) throw ParseError(ln, "paths must be joined by + or =");
                expect_path = false;
                // a path `a2*a1` is written rightmost-first
                std::vector<int> path;
                std::string name;
                std::istringstream ps(t);
                while (std::getline(ps, name, '*')) {
                    if (!aidx.count(name)) throw ParseError(ln, "unknown arrow " + name);
                    path.push_back(aidx.at(name));
                }
                std::reverse(path.begin(), path.end());
                if (path.empty()) throw ParseError(ln, "empty path in relation");
                rel.push_back(std::move(path));
            }
            if (expect_path || rel.empty()) throw ParseError(ln, "relation needs paths");
            q.relations.push_back(std::move(rel));
        } else {
            throw ParseError(ln, "unknown declaration '" + toks[0] + "'");
        }
    }
    if (!any) throw ParseError(0, "no declarations");
    return q;
}

std::string print_quiver(const QuiverPresentation& q) {
    std::ostringstream os;
    if (q.grading.z2) os << "grading z2\n";
    for (const auto& v : q.vertices) os << "object " << v << "\n";
    for (const auto& a : q.arrows) {
        os << "arrow " << a.name << " " << q.vertices[a.src] << " " << q.vertices[a.dst];
        if (a.deg) os << " deg " << a.deg;
        os << "\n";
    }
    for (const auto& rel : q.relations) {
        os << "relation";
        for (size_t i = 0; i < rel.size(); ++i) {
            os << (i ? " + " : " ");
            for (auto it = rel[i].rbegin(); it != rel[i].rend(); ++it)
                os << (it == rel[i].rbegin() ? "" : "*") << q.arrows[*it].name;
        }
        os << "\n";
    }
    return os.str();
}

ZeroConfig parse_zconf(std::istream& in) {
    ZeroConfig c;
    bool have_fibre = false, any = false;
    for (const auto& [ln, toks] : tokenize(in)) {
        any = true;
        if (toks[0] == "fibre") {
            if (toks.size() != 2) throw ParseError(ln, "fibre N");
            c.fibre = to_int(toks[1], ln);
            have_fibre = true;
        } else if (toks[0] == "sphere") {
            // sphere {a,b} grading ga gb
            if (toks.size() != 5 || toks[2] != "grading")
                throw ParseError(ln, "sphere {a,b} grading ga gb");
            const std::string& set = toks[1];
            if (set.size() < 5 || set.front() != '{' || set.back() != '}')
                throw ParseError(ln, "sphere set must look like {a,b}");
            auto comma = set.find(',');
            if (comma == std::string::npos) throw ParseError(ln, "sphere needs two points");
            int a = to_int(set.substr(1, comma - 1), ln);
            int b = to_int(set.substr(comma + 1, set.size() - comma - 2), ln);
            if (!have_fibre) throw ParseError(ln, "fibre must come first");
            if (a == b) throw ParseError(ln, "sphere points must differ");
            if (a < 1 || a > c.fibre || b < 1 || b > c.fibre)
                throw ParseError(ln, "sphere point outside the fibre");
            int ga = to_int(toks[3], ln), gb = to_int(toks[4], ln);
            c.spheres.push_back(GradedZeroSphere(a - 1, b - 1, ga, gb));
        } else {
            throw ParseError(ln, "unknown declaration '" + toks[0] + "'");
        }
    }
    if (!any) throw ParseError(0, "no declarations");
    if (!have_fibre) throw ParseError(0, "missing fibre declaration");
    return c;
}

std::string print_zconf(const ZeroConfig& c) {
    std::ostringstream os;
    os << "fibre " << c.fibre << "\n";
    for (const auto& s : c.spheres)
        os << "sphere {" << s.a + 1 << "," << s.b + 1 << "} grading " << s.ga << " " << s.gb
           << "\n";
    return os.str();
}

FlowData parse_flow(std::istream& in) {
    FlowData f;
    bool any = false;
    std::map<std::string, std::pair<std::string, std::string>> comp_pair;
    auto get_pair = [&](const std::string& nm, int ln) {
        auto it = comp_pair.find(nm);
        if (it == comp_pair.end()) throw ParseError(ln, "unknown component " + nm);
        return it->second;
    };
    for (const auto& [ln, toks] : tokenize(in)) {
        any = true;
        if (toks[0] == "dim") {
            if (toks.size() != 2) throw ParseError(ln, "dim N");
            f.n = to_int(toks[1], ln) - 1;
            if (f.n < 0) throw ParseError(ln, "dimension must be at least 1");
        } else if (toks[0] == "closed") {
            f.closed = true;
        } else if (toks[0] == "crit") {
            if (toks.size() != 4 || toks[2] != "index")
                throw ParseError(ln, "crit NAME index I");
            f.crits.push_back({toks[1], to_int(toks[3], ln)});
        } else if (toks[0] == "traj" || toks[0] == "comp") {
            // NAME : X -> Y ...
            if (toks.size() < 6 || toks[2] != ":" || toks[4] != "->")
                throw ParseError(ln, toks[0] + " NAME : X -> Y ...");
            FlowData::Component comp;
            comp.name = toks[1];
            if (comp_pair.count(comp.name))
                throw ParseError(ln, "duplicate component name " + comp.name);
            std::string x = toks[3], y = toks[5];
            if (toks[0] == "traj") {
                if (toks.size() != 6) throw ParseError(ln, "traj NAME : X -> Y");
                comp.homology = {{0, 1}};
                comp.compact = true;
            } else if (toks.size() > 6 && toks[6] == "compact") {
                if (toks.size() < 9 || toks[7] != "h")
                    throw ParseError(ln, "comp ... compact h d0 [d1 ...]");
                comp.compact = true;
                for (size_t i = 8; i < toks.size(); ++i) {
                    int dim = to_int(toks[i], ln);
                    if (dim) comp.homology[(int)(i - 8)] = dim;
                }
            } else if (toks.size() > 6 && toks[6] == "boundary") {
                comp.compact = false;
                comp.homology = {{0, 1}};
                std::string rest;
                for (size_t i = 7; i < toks.size(); ++i) rest += toks[i];
                // (c2,c1),(c2,c1)
                size_t pos = 0;
                while (pos < rest.size()) {
                    if (rest[pos] == ',') {
                        ++pos;
                        continue;
                    }
                    if (rest[pos] != '(') throw ParseError(ln, "boundary expects (c2,c1) pairs");
                    auto close = rest.find(')', pos);
                    auto comma = rest.find(',', pos);
                    if (close == std::string::npos || comma == std::string::npos || comma > close)
                        throw ParseError(ln, "boundary expects (c2,c1) pairs");
                    std::string second = rest.substr(pos + 1, comma - pos - 1);
                    std::string first = rest.substr(comma + 1, close - comma - 1);
                    auto p1 = get_pair(first, ln);   // x -> w
                    auto p2 = get_pair(second, ln);  // w -> y
                    if (p1.second != p2.first)
                        throw ParseError(ln, "broken pair (" + second + "," + first +
                                                 ") does not match at a middle point");
                    comp.boundary.push_back({p1.second, second, first});
                    pos = close + 1;
                }
                if (comp.boundary.empty()) throw ParseError(ln, "boundary list is empty");
            } else {
                throw ParseError(ln, "component needs 'compact h ...' or 'boundary ...'");
            }
            comp_pair[comp.name] = {x, y};
            f.traj[{x, y}].push_back(std::move(comp));
        } else {
            throw ParseError(ln, "unknown declaration '" + toks[0] + "'");
        }
    }
    if (!any) throw ParseError(0, "no declarations");
    auto bad = validate_flow(f);
    if (!bad.empty()) throw ParseError(0, bad.front());
    return f;
}

std::string print_flow(const FlowData& f) {
    std::ostringstream os;
    os << "dim " << f.n + 1 << "\n";
    if (f.closed) os << "closed\n";
    for (const auto& c : f.crits) os << "crit " << c.name << " index " << c.index << "\n";
    // compact components first: boundary lines refer to them by name
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& [xy, comps] : f.traj) {
            for (const auto& c : comps) {
                if (c.compact != (pass == 0)) continue;
                bool point = c.compact && c.homology == std::map<int, int>{{0, 1}};
                if (point) {
                    os << "traj " << c.name << " : " << xy.first << " -> " << xy.second << "\n";
                } else if (c.compact) {
                    os << "comp " << c.name << " : " << xy.first << " -> " << xy.second
                       << " compact h";
                    int top = c.homology.empty() ? 0 : c.homology.rbegin()->first;
                    for (int d = 0; d <= top; ++d)
                        os << " " << (c.homology.count(d) ? c.homology.at(d) : 0);
                    os << "\n";
                } else {
                    os << "comp " << c.name << " : " << xy.first << " -> " << xy.second
                       << " boundary ";
                    for (size_t i = 0; i < c.boundary.size(); ++i)
                        os << (i ? "," : "") << "(" << c.boundary[i].second << ","
                           << c.boundary[i].first << ")";
                    os << "\n";
                }
            }
        }
    }
    return os.str();
}

TwistedComplex parse_twx(std::istream& in, CatPtr cat) {
    std::vector<Summand> sums;
    std::map<std::pair<int, int>, Mor> delta;
    bool any = false;
    for (const auto& [ln, toks] : tokenize(in)) {
        any = true;
        if (toks[0] == "summand") {
            if (toks.size() != 4 || toks[2] != "shift")
                throw ParseError(ln, "summand OBJ shift S");
            int obj = to_int(toks[1], ln) - 1;
            if (obj < 0 || obj >= cat->num_objects())
                throw ParseError(ln, "object index out of range");
            sums.push_back({obj, to_int(toks[3], ln)});
        } else if (toks[0] == "delta") {
            if (toks.size() < 5 || toks[3] != ":")
                throw ParseError(ln, "delta P Q : lbl [+ lbl ...]");
            int p = to_int(toks[1], ln) - 1, q = to_int(toks[2], ln) - 1;
            if (p < 0 || p >= (int)sums.size() || q < 0 || q >= (int)sums.size())
                throw ParseError(ln, "delta summand index out of range");
            Mor m = mor_zero(sums[p].obj, sums[q].obj);
            bool expect = true;
            for (size_t i = 4; i < toks.size(); ++i) {
                if (toks[i] == "+") {
                    if (expect) throw ParseError(ln, "misplaced +");
                    expect = true;
                    continue;
                }
                if (!expect) throw ParseError(ln, "terms must be joined by +");
                expect = false;
                if (toks[i] == "id") {
                    if (sums[p].obj != sums[q].obj)
                        throw ParseError(ln, "id only between equal objects");
                    m.is_id = !m.is_id;
                    continue;
                }
                bool found = false;
                for (int id : cat->hom(sums[p].obj, sums[q].obj))
                    if (cat->elt(id).label == toks[i]) {
                        m.v.add(id);
                        found = true;
                        break;
                    }
                if (!found) throw ParseError(ln, "unknown basis label " + toks[i]);
            }
            if (expect) throw ParseError(ln, "delta needs terms");
            delta[{p, q}] = std::move(m);
        } else {
            throw ParseError(ln, "unknown declaration '" + toks[0] + "'");
        }
    }
    if (!any) throw ParseError(0, "no declarations");
    try {
        return TwistedComplex(cat, std::move(sums), std::move(delta));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string print_twx(const TwistedComplex& t) {
    std::ostringstream os;
    for (int p = 0; p < t.size(); ++p)
        os << "summand " << t.summand(p).obj + 1 << " shift " << t.summand(p).shift << "\n";
    for (const auto& [pq, m] : t.delta()) {
        os << "delta " << pq.first + 1 << " " << pq.second + 1 << " :";
        bool first = true;
        if (m.is_id) {
            os << " id";
            first = false;
        }
        for (int id : m.v.ids) {
            os << (first ? " " : " + ") << t.cat()->elt(id).label;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

QuiverPresentation parse_quiver_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_quiver(in);
}
ZeroConfig parse_zconf_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_zconf(in);
}
FlowData parse_flow_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_flow(in);
}
TwistedComplex parse_twx_file(const std::string& path, CatPtr cat) {
    auto in = open_or_throw(path);
    return parse_twx(in, cat);
}

void Report::set(const std::string& key, const std::string& value) { kv_[key] = value; }
void Report::set(const std::string& key, long long value) { kv_[key] = std::to_string(value); }
void Report::set_dims(const std::string& prefix, const std::map<int, int>& dims) {
    if (dims.empty()) {
        kv_[prefix] = "0";
        return;
    }
    for (const auto& [d, n] : dims) kv_[prefix + "." + std::to_string(d)] = std::to_string(n);
}

std::string Report::str() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv_) os << k << " = " << v << "\n";
    return os.str();
}

uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= (unsigned char)c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string dims_str(const std::map<int, int>& dims) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, n] : dims) {
        os << (first ? "" : " ") << d << ":" << n;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace homcat
