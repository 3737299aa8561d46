#include "homcat/graded.hpp"

#include <stdexcept>

namespace homcat {

const std::vector<int> GradedSpace::empty_{};

int GradedSpace::add(const std::string& label, int deg) {
    if (by_label_.count(label))
        throw std::invalid_argument("duplicate basis label: " + label);
    int d = g_.norm(deg);
    int idx = (int)basis_.size();
    basis_.emplace_back(label, d);
    by_label_[label] = idx;
    auto& v = by_deg_[d];
    pos_.push_back((int)v.size());
    v.push_back(idx);
    return idx;
}

int GradedSpace::dim(int deg) const {
    auto it = by_deg_.find(g_.norm(deg));
    return it == by_deg_.end() ? 0 : (int)it->second.size();
}

const std::vector<int>& GradedSpace::indices(int deg) const {
    auto it = by_deg_.find(g_.norm(deg));
    return it == by_deg_.end() ? empty_ : it->second;
}

std::map<int, int> GradedSpace::dims() const {
    std::map<int, int> out;
    for (const auto& [d, v] : by_deg_)
        if (!v.empty()) out[d] = (int)v.size();
    return out;
}

std::optional<BitVec> CohomDeg::coords(const BitVec& v) const {
    // solve [reps | image] x = v and keep the reps part
    int n = v.size();
    std::vector<BitVec> all = reps;
    all.insert(all.end(), image.begin(), image.end());
    auto x = coords_in_basis(all, v, n);
    if (!x) return std::nullopt;
    BitVec out((int)reps.size());
    for (int i = 0; i < (int)reps.size(); ++i) out.set(i, x->get(i));
    return out;
}

ChainComplex::ChainComplex(GradedSpace space, std::map<int, GF2Matrix> blocks)
    : sp_(std::move(space)), d_(std::move(blocks)) {
    Grading g = sp_.grading();
    // normalize keys, validate shapes
    std::map<int, GF2Matrix> norm;
    for (auto& [k, m] : d_) {
        int kk = g.norm(k);
        if (m.rows() != sp_.dim(kk + 1) || m.cols() != sp_.dim(kk))
            throw std::invalid_argument("chain complex: block shape mismatch at degree " +
                                        std::to_string(kk));
        if (norm.count(kk)) throw std::invalid_argument("chain complex: duplicate block");
        norm.emplace(kk, std::move(m));
    }
    d_ = std::move(norm);
}

const GF2Matrix& ChainComplex::block(int deg) const {
    auto it = d_.find(grading().norm(deg));
    return it == d_.end() ? zero_ : it->second;
}

std::optional<int> ChainComplex::d_squared_violation() const {
    for (const auto& [k, m] : d_) {
        const GF2Matrix& next = block(k + 1);
        if (next.rows() == 0 || next.cols() == 0) continue;
        if (next.cols() != m.rows()) continue;
        if (!(next * m).zero()) return k;
    }
    return std::nullopt;
}

BitVec ChainComplex::apply_d(int deg, const BitVec& v) const {
    const GF2Matrix& m = block(deg);
    if (m.rows() == 0 && m.cols() == 0) return BitVec(sp_.dim(deg + 1));
    return m.apply(v);
}

std::map<int, CohomDeg> ChainComplex::cohomology() const {
    std::map<int, CohomDeg> out;
    auto dims = sp_.dims();
    for (const auto& [k, n] : dims) {
        (void)n;
        CohomDeg c;
        const GF2Matrix& dk = block(k);
        int dim_k = sp_.dim(k);
        std::vector<BitVec> ker;
        if (dk.rows() == 0) {
            // zero outgoing differential: kernel is everything
            GF2Matrix z(0, dim_k);
            ker = z.kernel_basis();
        } else {
            ker = dk.kernel_basis();
        }
        // image of the incoming differential
        Grading g = grading();
        int prev = g.z2 ? g.norm(k - 1) : k - 1;
        const GF2Matrix& dprev = block(prev);
        std::vector<BitVec> img;
        if (dprev.rows() == dim_k && dprev.cols() > 0) img = dprev.image_basis();
        c.image = img;
        // representatives: kernel vectors adding pivots beyond the image span
        std::vector<BitVec> reduced;  // rows with distinct leading bits
        auto reduce = [&reduced](BitVec v) {
            for (const auto& r : reduced) {
                int lead = r.first_set();
                if (lead >= 0 && v.get(lead)) v ^= r;
            }
            return v;
        };
        for (const auto& v : img) {
            BitVec w = reduce(v);
            if (!w.zero()) reduced.push_back(std::move(w));
        }
        for (const auto& v : ker) {
            BitVec w = reduce(v);
            if (!w.zero()) {
                reduced.push_back(std::move(w));
                c.reps.push_back(v);
            }
        }
        c.dim = (int)c.reps.size();
        if (c.dim > 0 || !img.empty() || dim_k > 0) out[k] = std::move(c);
    }
    return out;
}

std::map<int, int> ChainComplex::cohomology_dims() const {
    std::map<int, int> out;
    for (const auto& [k, c] : cohomology())
        if (c.dim) out[k] = c.dim;
    return out;
}

long long ChainComplex::euler() const {
    long long e = 0;
    for (const auto& [d, n] : sp_.dims()) e += (d % 2 == 0 ? 1 : -1) * (long long)n;
    return e;
}

}  // namespace homcat
