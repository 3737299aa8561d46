#pragma once

#include "homcat/tw.hpp"

namespace homcat {

/// Outcome of the sphericality test: graded endomorphisms must match the
/// mod-2 cohomology of a sphere of the stated dimension, and the composition
/// pairing against every generator must be nondegenerate in each degree.
struct SphericalReport {
    int dim = 0;  // n+1
    std::map<int, int> endo_dims;
    bool endo_ok = false;
    std::vector<bool> pairing_ok;  // per generator
    bool verdict = false;
};

SphericalReport is_spherical(const TwistedComplex& c, int dim);

/// Matching-pair test at adjacent objects (i, i+1), 0-based: derived homs
/// must be H*(S^n), and some degree-0 class must compose isomorphically on
/// both sides (the class is unique when n > 0; for n = 0 the candidates are
/// searched in deterministic order). Returns the class through `found`.
bool detect_matching_pair(const DirectedCategory& c, int i, int n, SparseVec* found = nullptr);

/// Infers n from the hom table at (i, i+1).
std::optional<int> matching_dimension(const DirectedCategory& c, int i);

/// Cone over the matching class (or over the supplied class); the result is
/// verified to be spherical of dimension n+1.
TwistedComplex matching_cone(CatPtr c, int i, std::optional<SparseVec> cls = std::nullopt);

struct BraidReport {
    std::string mode;  // "commute", "braid" or "inapplicable"
    std::vector<IsoVerdict> per_generator;
    bool all_yes = false;
};

/// If Hom*(c1,c2) = 0 checks T_{c1}T_{c2}(g) ≅ T_{c2}T_{c1}(g) on every
/// generator; if it is one-dimensional checks the braid relation.
BraidReport braid_check(const TwistedComplex& c1, const TwistedComplex& c2,
                        long long cap = 1 << 16);

}  // namespace homcat
