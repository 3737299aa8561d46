#pragma once

#include "homcat/tw.hpp"

namespace homcat {

enum class StepKind { Shift, CMove, RMove, InvC, InvR };

struct Step {
    StepKind kind = StepKind::CMove;
    std::vector<int> sigma;  // for Shift
};

using MutationScript = std::vector<Step>;

/// State of a mutation run. The exceptional collection is kept as twisted
/// complexes over the original base category; twisted complexes of twisted
/// complexes flatten strictly, so hom complexes between the current objects
/// are exactly the morphism spaces of the mutated category. Identity-paired
/// summands are stripped after every move to control growth.
struct MutationRun {
    CatPtr base;
    std::vector<TwistedComplex> objects;

    static MutationRun start(CatPtr cat);
    void apply(const Step& s);
    void run(const MutationScript& s);

    /// Materializes the current category: hom(i,k) is the full hom chain
    /// complex between objects i and k, μ^1 its differential, μ^d the
    /// twisted-complex compositions.
    CatPtr materialize() const;
};

/// Single moves on a directed category (materialized output).
CatPtr apply_shift(CatPtr c, const std::vector<int>& sigma);
CatPtr apply_c(CatPtr c);
CatPtr apply_r(CatPtr c);
CatPtr apply_inv_c(CatPtr c);
CatPtr apply_inv_r(CatPtr c);

/// Sequential application over the flattened state; materializes at the end.
CatPtr run_script(CatPtr c, const MutationScript& s);

/// Image of a twisted complex over the base under the equivalence induced by
/// the script. Under the flattening identifications the composite canonical
/// equivalence is the identity on base twisted complexes, so the tracked
/// object is t itself; derived Homs against the moved collection are taken
/// over the base (run the script to obtain it).
TwistedComplex track_object(CatPtr c, const MutationScript& s, const TwistedComplex& t);

MutationScript parse_script(const std::string& text);  // "c r c! r! shift 0,1,0"
std::string script_str(const MutationScript& s);

}  // namespace homcat
