#pragma once

#include <iosfwd>
#include <string>

#include "homcat/category.hpp"
#include "homcat/morse.hpp"
#include "homcat/tw.hpp"
#include "homcat/zerodim.hpp"

namespace homcat {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Quiver file: `grading z|z2`, `object NAME`, `arrow NAME SRC DST [deg D]`,
/// `relation p [+ p ...]` or `relation p [+ ...] = q [+ ...]`, with paths
/// written `a2*a1` (rightmost arrow first). Lines starting with # are
/// comments.
QuiverPresentation parse_quiver(std::istream& in);
QuiverPresentation parse_quiver_file(const std::string& path);
std::string print_quiver(const QuiverPresentation& q);

/// Configuration file: `fibre N`, then `sphere {a,b} grading ga gb` per
/// sphere, order significant, points 1-based.
ZeroConfig parse_zconf(std::istream& in);
ZeroConfig parse_zconf_file(const std::string& path);
std::string print_zconf(const ZeroConfig& c);

/// Flow file: `dim N` (manifold dimension n+1), optional `closed`,
/// `crit NAME index I`, `traj NAME : X -> Y` (a compact point component),
/// `comp NAME : X -> Y compact h d0 d1 ...` or
/// `comp NAME : X -> Y boundary (c2,c1),(c2,c1)`. Component names must be
/// unique across the file (broken pairs are resolved by name).
FlowData parse_flow(std::istream& in);
FlowData parse_flow_file(const std::string& path);
std::string print_flow(const FlowData& f);

/// Twisted complex file: `summand OBJ shift S` (1-based object index) and
/// `delta P Q : lbl [+ lbl ...]` (1-based summand indices, `id` allowed).
TwistedComplex parse_twx(std::istream& in, CatPtr cat);
TwistedComplex parse_twx_file(const std::string& path, CatPtr cat);
std::string print_twx(const TwistedComplex& t);

/// Canonical run report: sorted `key = value` lines, byte-stable for golden
/// tests. Timing is reported separately on stderr by the CLI.
class Report {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, long long value);
    void set_dims(const std::string& prefix, const std::map<int, int>& dims);
    std::string str() const;

private:
    std::map<std::string, std::string> kv_;
};

uint64_t fnv1a_file(const std::string& path);

std::string dims_str(const std::map<int, int>& dims);

}  // namespace homcat
