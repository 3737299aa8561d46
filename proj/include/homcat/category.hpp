#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "homcat/graded.hpp"

namespace homcat {

/// Sparse GF(2) vector over global basis-element ids: sorted unique ids,
/// addition is symmetric difference.
struct SparseVec {
    std::vector<int> ids;
    bool zero() const { return ids.empty(); }
    bool has(int id) const;
    void add(int id);                 // toggle one id
    void operator^=(const SparseVec& o);
    bool operator==(const SparseVec&) const = default;
    bool operator<(const SparseVec& o) const { return ids < o.ids; }
};

/// Non-identity basis morphism of a directed category.
struct BasisElt {
    int src = 0, dst = 0;  // object indices, src < dst
    int deg = 0;           // internal degree (normalized)
    std::string label;
};

struct VecIntHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= (size_t)(uint32_t)x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

/// Directed A∞-category over GF(2): ordered objects, morphisms only from
/// lower to higher index plus implicit identities, composition maps μ^d of
/// degree 2-d with no signs. Composition tables are keyed by tuples of
/// basis-element ids in chain order (first morphism of the chain first);
/// μ^d(a_d,...,a_1) in the usual notation is mu({a_1,...,a_d}) here.
/// Identities are never stored; unit axioms are hard-coded in evaluation.
class DirectedCategory {
public:
    DirectedCategory() = default;
    DirectedCategory(Grading g, std::vector<std::string> objects);

    Grading grading() const { return g_; }
    int num_objects() const { return (int)objects_.size(); }
    const std::string& object_name(int i) const { return objects_[i]; }
    const std::vector<std::string>& objects() const { return objects_; }

    /// add a basis element to hom(src,dst); returns its global id
    int add_elt(int src, int dst, int deg, const std::string& label);
    int num_elts() const { return (int)elts_.size(); }
    const BasisElt& elt(int id) const { return elts_[id]; }
    const std::vector<int>& hom(int i, int k) const;  // global ids, stable order
    std::map<int, int> hom_dims(int i, int k) const;  // degree -> dim
    /// dims table of every block, keyed (i,k,deg)
    std::map<std::tuple<int, int, int>, int> dims_table() const;

    /// set μ^d on a basis chain (chain order); value ids must lie in
    /// hom(src of first, dst of last). Zero values may be omitted.
    void set_mu(const std::vector<int>& chain, SparseVec value);
    /// μ^d on a basis chain; zero if absent
    const SparseVec& mu(const std::vector<int>& chain) const;
    const std::unordered_map<std::vector<int>, SparseVec, VecIntHash>& mu_table() const {
        return mu_;
    }
    /// largest d with a stored μ^d entry (at least 2 by convention)
    int max_mu() const { return max_mu_; }
    /// true if μ^d = 0 for d >= 3 (ordinary dg-category)
    bool is_dg() const { return max_mu_ <= 2; }
    bool has_mu1() const;

    /// multilinear μ on sparse vectors (no identities among arguments)
    SparseVec mu_multi(const std::vector<SparseVec>& args) const;

    /// μ^1 as a matrix per (i,k,deg): dim(deg+1) x dim(deg) in block-local
    /// coordinates (basis order = order within hom(i,k) filtered by degree)
    GF2Matrix mu1_block(int i, int k, int deg) const;
    /// hom(i,k) with μ^1 as a chain complex
    ChainComplex hom_complex_block(int i, int k) const;

    /// local coordinates of a sparse vector inside hom(i,k) at one degree
    BitVec local_coords(int i, int k, int deg, const SparseVec& v) const;
    SparseVec from_local(int i, int k, int deg, const BitVec& coords) const;

    /// index of id within hom(i,k) at its degree
    int pos_in_block_degree(int id) const;
    /// ids of hom(i,k) at one degree, in stable order
    std::vector<int> block_degree_ids(int i, int k, int deg) const;

    struct Violation {
        std::string what;          // description of the failed identity
        std::vector<int> chain;    // offending basis chain
    };
    /// verifies table well-formedness and all A∞ identities up to chain
    /// length num_objects(); empty report means all relations hold
    std::vector<Violation> check_relations(int max_report = 8) const;

private:
    Grading g_;
    std::vector<std::string> objects_;
    std::vector<BasisElt> elts_;
    std::map<std::pair<int, int>, std::vector<int>> hom_;
    std::unordered_map<std::vector<int>, SparseVec, VecIntHash> mu_;
    int max_mu_ = 2;
    static const std::vector<int> empty_;
    static const SparseVec zero_;
};

using CatPtr = std::shared_ptr<const DirectedCategory>;

/// Morphism value between two objects: either a GF(2) multiple of the
/// (implicit) identity when src == dst, or a combination of basis elements.
struct Mor {
    int src = 0, dst = 0;
    bool is_id = false;  // identity with coefficient 1; only for src == dst
    SparseVec v;         // only for src < dst
    bool zero() const { return !is_id && v.zero(); }
    bool operator==(const Mor&) const = default;
};

inline Mor mor_zero(int src, int dst) { return Mor{src, dst, false, {}}; }
inline Mor mor_id(int obj) { return Mor{obj, obj, true, {}}; }
inline Mor mor_vec(int src, int dst, SparseVec v) { return Mor{src, dst, false, std::move(v)}; }

/// μ of a composable chain of morphism values, with the unit axioms
/// hard-coded: μ²(f,id) = μ²(id,f) = f, μ²(id,id) = id, and μ^d vanishes on
/// identity arguments for d != 2. Entries are in chain order.
Mor mu_mor_chain(const DirectedCategory& cat, const std::vector<Mor>& entries);

/// Strict table equality: same object count, same block dimensions per
/// degree with identical basis order, identical μ tables on index tuples.
/// Labels are ignored.
bool tables_equal(const DirectedCategory& a, const DirectedCategory& b);

/// Searches for a strict isomorphism: per-block degree-preserving invertible
/// linear maps commuting with every stored μ. Backtracking over blocks;
/// intended for the small fixture categories (block dims <= 3).
bool strictly_isomorphic(const DirectedCategory& a, const DirectedCategory& b);

/// Quiver with relations. Vertices are implicitly numbered by order; every
/// arrow must go from a lower to a higher vertex.
struct QuiverArrow {
    std::string name;
    int src, dst;
    int deg = 0;
};
struct QuiverPresentation {
    Grading grading;
    std::vector<std::string> vertices;
    std::vector<QuiverArrow> arrows;
    /// each relation is a GF(2) sum of paths set to zero; a path is a list
    /// of arrow indices in composition order (first arrow first)
    std::vector<std::vector<std::vector<int>>> relations;
};

/// Path category of the quiver modulo the two-sided ideal generated by the
/// relations. Basis representatives are the non-pivot paths under the
/// deterministic path order (length, then lexicographic arrow sequence).
DirectedCategory from_quiver(const QuiverPresentation& q);

/// All directed paths i -> k as arrow-index sequences, in the path order.
std::vector<std::vector<int>> enumerate_paths(const QuiverPresentation& q, int i, int k);

std::string path_label(const QuiverPresentation& q, const std::vector<int>& path);

}  // namespace homcat
