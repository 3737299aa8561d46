#pragma once

#include "homcat/category.hpp"

namespace homcat {

/// The Hochschild cochain complex CC(A,A) of a directed category, in its
/// normalized form: cochain components are indexed by strictly increasing
/// object chains and tuples of non-identity basis elements (identity inputs
/// are normalized away), plus the diagonal h^0 part with one identity slot
/// per object. A component mapping inputs of total degree s at length d to
/// an output of degree s + r - d contributes in CC-degree r.
ChainComplex cc_complex(const DirectedCategory& c);

/// Hochschild cohomology dimensions per degree.
std::map<int, int> hh(const DirectedCategory& c);

/// Independent dense implementation: enumerates the same normalized basis
/// but assembles the differential by direct evaluation of the two-sum
/// formula, term by term, with no shared code with cc_complex. Refuses to
/// run above the dimension bound.
std::map<int, int> hh_oracle(const DirectedCategory& c, int max_total_dim = 20000);

/// E1 of the length filtration: cohomology of each length-graded piece under
/// the μ^1-induced part of the differential. Keys are (length, CC-degree).
std::map<std::pair<int, int>, int> e1_length(const DirectedCategory& c);

/// Total dimension of CC(A,A) per CC-degree (the raw cochain space).
std::map<int, int> cc_dims(const DirectedCategory& c);

}  // namespace homcat
