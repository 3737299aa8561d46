#pragma once

#include "homcat/category.hpp"

namespace homcat {

/// A∞-functor between directed categories with the identity object map.
/// Components F^d are keyed by source basis chains (chain order); values are
/// combinations of target basis elements in hom(src of first, dst of last),
/// of degree 1-d relative to the inputs. F^1(id) = id is implicit.
struct AInftyFunctor {
    CatPtr source, target;
    std::unordered_map<std::vector<int>, SparseVec, VecIntHash> comp;

    const SparseVec& F(const std::vector<int>& chain) const;
    /// F^1 extended linearly
    SparseVec F1(const SparseVec& v) const;
    static AInftyFunctor identity(CatPtr c);
};

/// Violations of the A∞-functor equations, checked on every basis chain up
/// to the maximum relevant length. Empty means the equations hold.
std::vector<std::string> check_functor(const AInftyFunctor& f);

/// True iff F^1 induces isomorphisms H(hom(i,k)) -> H(hom(i,k)) for all
/// blocks. Assumes the functor equations hold.
bool is_quasi_isomorphism(const AInftyFunctor& f);

/// Minimal model by homological perturbation: a quasi-isomorphic category
/// with μ^1 = 0 and hom spaces the cohomology of the input hom complexes,
/// together with the inclusion functor (model -> input). Splittings come
/// from the deterministic row reduction, so the result is reproducible.
std::pair<CatPtr, AInftyFunctor> minimal_model(CatPtr c);

}  // namespace homcat
