#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "homcat/gf2.hpp"

namespace homcat {

/// Grading group: the integers, or the integers mod 2 (periodic derived
/// category). All degree arithmetic goes through norm().
struct Grading {
    bool z2 = false;
    int norm(int d) const { return z2 ? ((d % 2) + 2) % 2 : d; }
    bool eq(int a, int b) const { return norm(a) == norm(b); }
    bool operator==(const Grading&) const = default;
};

inline Grading grading_z() { return Grading{false}; }
inline Grading grading_z2() { return Grading{true}; }

/// Finite-dimensional graded GF(2) vector space with named basis.
class GradedSpace {
public:
    GradedSpace() = default;
    explicit GradedSpace(Grading g) : g_(g) {}

    int add(const std::string& label, int deg);  // returns global index
    int dim() const { return (int)basis_.size(); }
    int dim(int deg) const;
    Grading grading() const { return g_; }
    const std::string& label(int i) const { return basis_[i].first; }
    int degree(int i) const { return basis_[i].second; }
    const std::vector<int>& indices(int deg) const;  // global indices in this degree
    std::map<int, int> dims() const;
    /// position of global index i within its degree block
    int pos_in_degree(int i) const { return pos_[i]; }
    bool has_label(const std::string& l) const { return by_label_.count(l) > 0; }
    int index_of(const std::string& l) const { return by_label_.at(l); }

private:
    Grading g_;
    std::vector<std::pair<std::string, int>> basis_;
    std::map<int, std::vector<int>> by_deg_;
    std::vector<int> pos_;
    std::map<std::string, int> by_label_;
    static const std::vector<int> empty_;
};

/// Cohomology of one degree: dimension plus chosen representatives and the
/// splitting data needed to express a closed vector in those representatives.
struct CohomDeg {
    int dim = 0;
    std::vector<BitVec> reps;    // in degree-local coordinates
    std::vector<BitVec> image;   // basis of the image of the incoming differential
    /// coordinates of a closed degree-local vector in the representative
    /// basis (reduces modulo the image); nullopt if v is not closed/in span
    std::optional<BitVec> coords(const BitVec& v) const;
};

/// Finite chain complex of GF(2) spaces with a degree +1 differential.
/// The differential must square to zero; construction checks it.
class ChainComplex {
public:
    ChainComplex() = default;
    /// blocks[k]: matrix of d restricted to degree k, shape dim(k+1) x dim(k).
    /// Missing blocks are zero.
    ChainComplex(GradedSpace space, std::map<int, GF2Matrix> blocks);

    const GradedSpace& space() const { return sp_; }
    Grading grading() const { return sp_.grading(); }
    const GF2Matrix& block(int deg) const;  // zero-sized matrix if absent
    /// first degree where d(deg+...)∘d(deg) != 0, if any
    std::optional<int> d_squared_violation() const;
    bool d_squared_zero() const { return !d_squared_violation().has_value(); }

    /// apply d to a degree-local vector
    BitVec apply_d(int deg, const BitVec& v) const;

    std::map<int, CohomDeg> cohomology() const;
    std::map<int, int> cohomology_dims() const;
    /// Euler characteristic: sum over degrees of (-1)^k dim. For the mod-2
    /// grading this is dim(0) - dim(1).
    long long euler() const;

private:
    GradedSpace sp_;
    std::map<int, GF2Matrix> d_;
    GF2Matrix zero_{0, 0};
};

}  // namespace homcat
