#pragma once

#include "homcat/tw.hpp"

namespace homcat {

/// Combinatorial flow data: critical points with Morse indices and, per
/// ordered pair, the components of the unparametrized trajectory space with
/// their homology, compactness flags, and boundary gluing for the
/// noncompact ones. A component is noncompact only between an index-0 and an
/// index-(n+1) point; its compactified boundary is a list of broken
/// trajectories (w, component in G(w,y), component in G(x,w)).
struct FlowData {
    struct Crit {
        std::string name;
        int index = 0;
    };
    struct Broken {
        std::string w, second, first;  // through w: second in G(w,y), first in G(x,w)
        auto operator<=>(const Broken&) const = default;
    };
    struct Component {
        std::string name;
        std::map<int, int> homology;  // homological degree -> dim
        bool compact = true;
        std::vector<Broken> boundary;  // only for noncompact components
    };

    int n = 1;  // manifold dimension is n+1; critical indices lie in 0..n+1
    bool closed = false;
    std::vector<Crit> crits;
    std::map<std::pair<std::string, std::string>, std::vector<Component>> traj;

    const Crit* crit(const std::string& name) const;
    /// 0 for minima, 1 for middle indices, 2 for maxima (the level class)
    int level_class(const Crit& c) const;
};

/// Invariant violations, each naming the offending pair; empty when valid.
std::vector<std::string> validate_flow(const FlowData& f);

/// The Morse category together with the data needed to build objects in it.
struct MorseModel {
    CatPtr cat;
    FlowData flow;
    std::vector<std::string> order;  // object names in category order
    int obj_of(const std::string& name) const;
    /// basis ids of one component's classes at one homological degree
    std::vector<int> class_ids(const std::string& x, const std::string& y,
                               const std::string& comp, int hdeg) const;
    std::map<std::tuple<std::string, std::string, std::string, int>, std::vector<int>> ids;
};

/// Objects ordered by level class then name; hom(x,y) = H_{-*}(G(x,y));
/// composition of degree-0 classes through the compactification boundary.
/// Throws std::invalid_argument naming the offending pair on bad data.
MorseModel morse_category(const FlowData& f);

/// The fundamental object (⊕ x[-i(x)], δ = fundamental classes of the
/// compact trajectory spaces). Maurer-Cartan failure indicates inconsistent
/// gluing data and surfaces as an exception from the twisted complex.
TwistedComplex fundamental_object(const MorseModel& m);

struct EndoReport {
    std::map<int, int> computed;
    std::map<int, int> expected;
    bool match = false;
};
/// Endomorphisms of the fundamental object against the expected cohomology.
EndoReport fundamental_endos(const MorseModel& m, const std::map<int, int>& expected);

/// Nondegeneracy of the composition pairing against one generator; requires
/// flow data declared closed.
bool verdier_check(const MorseModel& m, int object_index);

/// Cellular: every nonempty trajectory space is a single contractible
/// component (n = 1 only).
bool is_cellular(const FlowData& f);

struct CellularReport {
    bool cellular = false;
    std::map<int, int> hh_dims;
    std::map<int, int> expected;
    bool hh0_ok = false;
    bool euler_ok = false;
    bool match = false;
};
CellularReport cellular_hh_check(const FlowData& f, const std::map<int, int>& expected);

}  // namespace homcat
