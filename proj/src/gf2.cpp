#include "homcat/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace homcat {

int BitVec::popcount() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
}

int BitVec::first_set() const {
    for (size_t k = 0; k < w_.size(); ++k)
        if (w_[k]) return int(k) * 64 + std::countr_zero(w_[k]);
    return -1;
}

std::vector<int> BitVec::support() const {
    std::vector<int> s;
    for (int i = 0; i < n_; ++i)
        if (get(i)) s.push_back(i);
    return s;
}

std::string BitVec::str() const {
    std::string s(n_, '0');
    for (int i = 0; i < n_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

GF2Matrix GF2Matrix::identity(int n) {
    GF2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

GF2Matrix GF2Matrix::random(int rows, int cols, std::mt19937_64& rng, double density) {
    GF2Matrix m(rows, cols);
    std::bernoulli_distribution bit(density);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (bit(rng)) m.set(r, c, true);
    return m;
}

GF2Matrix GF2Matrix::from_rows(const std::vector<BitVec>& rows, int cols) {
    GF2Matrix m((int)rows.size(), cols);
    for (int r = 0; r < (int)rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitVec GF2Matrix::row(int r) const {
    BitVec v(cols_);
    for (int k = 0; k < wpr_; ++k) v.w_[k] = w_[size_t(r) * wpr_ + k];
    return v;
}

void GF2Matrix::set_row(int r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    for (int k = 0; k < wpr_; ++k) w_[size_t(r) * wpr_ + k] = v.w_[k];
}

void GF2Matrix::xor_row_from(int dst, int src) {
    uint64_t* d = &w_[size_t(dst) * wpr_];
    const uint64_t* s = &w_[size_t(src) * wpr_];
    for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void GF2Matrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* pa = &w_[size_t(a) * wpr_];
    uint64_t* pb = &w_[size_t(b) * wpr_];
    for (int k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
}

GF2Matrix GF2Matrix::transpose() const {
    GF2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

BitVec GF2Matrix::apply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply: length mismatch");
    BitVec y(rows_);
    for (int r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        const uint64_t* p = &w_[size_t(r) * wpr_];
        for (int k = 0; k < wpr_; ++k) acc ^= p[k] & x.w_[k];
        y.set(r, std::popcount(acc) & 1);
    }
    return y;
}

GF2Matrix GF2Matrix::operator*(const GF2Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul: shape mismatch");
    GF2Matrix out(rows_, o.cols_);
    bool big = size_t(rows_) * cols_ > 1u << 18;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (big)
#endif
    for (int r = 0; r < rows_; ++r) {
        uint64_t* dst = &out.w_[size_t(r) * out.wpr_];
        for (int c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                const uint64_t* src = &o.w_[size_t(c) * o.wpr_];
                for (int k = 0; k < o.wpr_; ++k) dst[k] ^= src[k];
            }
        }
    }
    (void)big;
    return out;
}

GF2Matrix GF2Matrix::operator+(const GF2Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matadd: shape mismatch");
    GF2Matrix out = *this;
    for (size_t k = 0; k < w_.size(); ++k) out.w_[k] ^= o.w_[k];
    return out;
}

bool GF2Matrix::zero() const {
    for (uint64_t x : w_) if (x) return false;
    return true;
}

GF2Matrix::Echelon GF2Matrix::echelon_impl(bool parallel) const {
    Echelon e;
    e.rref = *this;
    GF2Matrix& m = e.rref;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (m.get(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        m.swap_rows(pr, r);
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (int i = 0; i < rows_; ++i)
                if (i != r && m.get(i, c)) m.xor_row_from(i, r);
        } else {
            for (int i = 0; i < rows_; ++i)
                if (i != r && m.get(i, c)) m.xor_row_from(i, r);
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

GF2Matrix::Echelon GF2Matrix::echelon() const {
    // parallel elimination pays off only on large matrices
    bool big = size_t(rows_) * wpr_ > 1u << 14;
    return echelon_impl(big);
}

GF2Matrix::Echelon GF2Matrix::echelon_serial() const { return echelon_impl(false); }

int GF2Matrix::rank() const { return echelon().rank(); }

std::optional<BitVec> GF2Matrix::solve(const BitVec& b) const {
    if (b.size() != rows_) throw std::invalid_argument("solve: length mismatch");
    GF2Matrix aug(rows_, cols_ + 1);
    for (int r = 0; r < rows_; ++r) {
        for (int k = 0; k < wpr_; ++k) aug.w_[size_t(r) * aug.wpr_ + k] = w_[size_t(r) * wpr_ + k];
        // clear any overflow beyond cols_ then set the augmented bit
        if (b.get(r)) aug.set(r, cols_, true);
    }
    Echelon e = aug.echelon();
    BitVec x(cols_);
    for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
        int c = e.pivot_cols[i];
        if (c == cols_) return std::nullopt;  // pivot in augmented column: inconsistent
        if (e.rref.get((int)i, cols_)) x.set(c, true);
    }
    return x;
}

std::vector<BitVec> GF2Matrix::kernel_basis() const {
    Echelon e = echelon();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<BitVec> out;
    for (int f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        BitVec v(cols_);
        v.set(f, true);
        for (size_t i = 0; i < e.pivot_cols.size(); ++i)
            if (e.rref.get((int)i, f)) v.set(e.pivot_cols[i], true);
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<BitVec> GF2Matrix::row_space_basis() const {
    Echelon e = echelon();
    std::vector<BitVec> out;
    for (int i = 0; i < e.rank(); ++i) out.push_back(e.rref.row(i));
    return out;
}

std::vector<BitVec> GF2Matrix::image_basis() const {
    Echelon e = echelon();
    std::vector<BitVec> out;
    for (int c : e.pivot_cols) {
        BitVec col(rows_);
        for (int r = 0; r < rows_; ++r) col.set(r, get(r, c));
        out.push_back(std::move(col));
    }
    return out;
}

GF2Matrix GF2Matrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    GF2Matrix aug(rows_, 2 * cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) aug.set(r, c, get(r, c));
        aug.set(r, cols_ + r, true);
    }
    Echelon e = aug.echelon();
    for (int i = 0; i < rows_; ++i)
        if (i >= e.rank() || e.pivot_cols[i] != i) throw std::invalid_argument("inverse: singular");
    GF2Matrix inv(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) inv.set(r, c, e.rref.get(r, cols_ + c));
    return inv;
}

std::string GF2Matrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) os << row(r).str() << "\n";
    return os.str();
}

std::optional<BitVec> coords_in_basis(const std::vector<BitVec>& basis, const BitVec& v, int n) {
    GF2Matrix m((int)basis.size() ? n : n, (int)basis.size());
    for (int j = 0; j < (int)basis.size(); ++j)
        for (int i = 0; i < n; ++i)
            if (basis[j].get(i)) m.set(i, j, true);
    return m.solve(v);
}

bool in_span(const std::vector<BitVec>& basis, const BitVec& v, int n) {
    return coords_in_basis(basis, v, n).has_value();
}

}  // namespace homcat
