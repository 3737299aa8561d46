#pragma once

#include "homcat/category.hpp"

namespace homcat {

struct Summand {
    int obj = 0;
    int shift = 0;
    bool operator==(const Summand&) const = default;
};

/// Twisted complex: formal sum of shifted objects with a degree-1 connection
/// δ satisfying the generalized Maurer-Cartan equation. δ components go from
/// lower to higher object index; between equal objects only identity
/// multiples occur (this happens in cones and iterated twists). The directed
/// graph of nonzero components must be acyclic, which bounds every μ sum.
///
/// Degree convention: a component of internal degree d between summands
/// X[σ] and X'[σ'] has total degree d + σ - σ', matching L̃[σ] = L̃ - σ.
class TwistedComplex {
public:
    TwistedComplex() = default;
    TwistedComplex(CatPtr cat, std::vector<Summand> sums,
                   std::map<std::pair<int, int>, Mor> delta);
    static TwistedComplex generator(CatPtr cat, int obj, int shift = 0);

    const CatPtr& cat() const { return cat_; }
    Grading grading() const { return cat_->grading(); }
    int size() const { return (int)sums_.size(); }
    const Summand& summand(int p) const { return sums_[p]; }
    const std::vector<Summand>& summands() const { return sums_; }
    const std::map<std::pair<int, int>, Mor>& delta() const { return delta_; }
    const Mor* delta_at(int p, int q) const;
    /// outgoing/incoming δ edges of one summand, (other endpoint, component)
    const std::vector<std::pair<int, Mor>>& edges_from(int p) const { return adj_[p]; }
    const std::vector<std::pair<int, Mor>>& edges_into(int q) const { return radj_[q]; }

    TwistedComplex shifted(int sigma) const;
    bool operator==(const TwistedComplex&) const = default;

    /// direct sum, summands of `o` appended after this complex's
    TwistedComplex direct_sum(const TwistedComplex& o) const;

    /// Σ_d μ^d(δ,...,δ) = 0, a finite sum since the summand graph is acyclic
    bool maurer_cartan_holds() const;

    std::string str() const;

private:
    CatPtr cat_;
    std::vector<Summand> sums_;
    std::map<std::pair<int, int>, Mor> delta_;
    std::vector<std::vector<std::pair<int, Mor>>> adj_, radj_;
    void validate() const;  // shape, degrees, acyclicity, Maurer-Cartan
};

/// Morphism between two fixed twisted complexes, as a component matrix.
/// Components live in hom(obj_p, obj_q) for obj_p < obj_q, or are identity
/// multiples for obj_p == obj_q; total degree is uniform.
struct TwMor {
    int deg = 0;
    std::map<std::pair<int, int>, Mor> comp;
    bool zero() const;
    void operator^=(const TwMor& o);
};

/// μ^d of the twisted-complex category: f_j: C_{j-1} -> C_j given in chain
/// order, with all δ insertions. complexes.size() == args.size() + 1.
TwMor tw_mu(const std::vector<const TwistedComplex*>& complexes,
            const std::vector<const TwMor*>& args);

/// The hom chain complex between two twisted complexes, with its basis of
/// components and the induced differential (d² = 0 is asserted).
class HomComplex {
public:
    struct Elt {
        int p, q;
        int elt;  // global basis id in the category, or -1 for the identity
        int totdeg;
    };
    HomComplex(TwistedComplex a, TwistedComplex b);

    const TwistedComplex& source() const { return a_; }
    const TwistedComplex& target() const { return b_; }
    const std::vector<Elt>& basis() const { return basis_; }
    const ChainComplex& complex() const { return cx_; }
    const std::map<int, CohomDeg>& cohom() const;
    /// basis index of a component (elt = -1 for the identity), -1 if absent
    int index_of(int p, int q, int elt) const;

    TwMor mor_from_local(int deg, const BitVec& coords) const;
    BitVec local_from_mor(const TwMor& f) const;
    /// cohomology-class coordinates of a closed morphism
    std::optional<BitVec> class_coords(const TwMor& f) const;
    /// chosen representative of the j-th class in the given degree
    TwMor class_rep(int deg, int j) const;
    std::map<int, int> h_dims() const;

private:
    TwistedComplex a_, b_;
    std::vector<Elt> basis_;
    std::map<int, std::vector<int>> by_deg_;            // totdeg -> basis indices
    std::map<std::tuple<int, int, int>, int> index_;  // (p,q,elt) -> basis index
    ChainComplex cx_;
    mutable std::optional<std::map<int, CohomDeg>> cohom_;
};

std::map<int, int> db_hom(const TwistedComplex& a, const TwistedComplex& b);

/// Cone of a closed degree-0 morphism: source shifted by [1] first, then the
/// target, with f as the connecting block. Rejects non-closed or wrongly
/// graded morphisms.
TwistedComplex cone(const TwistedComplex& x, const TwistedComplex& y, const TwMor& f);

/// Twist functor T_x(y): cone of the evaluation H Hom*(x,y) ⊗ x -> y, using
/// the deterministic cohomology representatives. Result is stripped when the
/// base category is dg.
TwistedComplex twist(const TwistedComplex& x, const TwistedComplex& y);

/// Dual twist T'_x(y): fits T'_x(y) -> y -> Hom*(y,x)^∨ ⊗ x.
TwistedComplex dual_twist(const TwistedComplex& x, const TwistedComplex& y);

/// Cancels summand pairs X[σ+1] -> X[σ] connected by an identity component
/// (Gaussian elimination; dg base only, otherwise returns the input). Never
/// changes db_hom tables.
TwistedComplex strip_acyclic_pairs(const TwistedComplex& c);

enum class IsoVerdict { Yes, No, Unknown };
const char* to_string(IsoVerdict v);

/// YES with a certificate: some closed degree-0 class induces bijections
/// H Hom(X_i, a) -> H Hom(X_i, b) for every generator (the generators
/// generate, so this certifies an isomorphism in the derived category).
/// NO when graded hom tables against generators differ. UNKNOWN when no
/// certificate is found among the first `cap` H^0 classes.
IsoVerdict is_isomorphic(const TwistedComplex& a, const TwistedComplex& b,
                         long long cap = 1 << 16);

}  // namespace homcat
