#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace homcat {

/// Bit vector of fixed length, packed into 64-bit words. Arithmetic is mod 2.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(int i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }
    void operator^=(const BitVec& o) {
        for (size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    }
    bool zero() const {
        for (uint64_t x : w_) if (x) return false;
        return true;
    }
    int popcount() const;
    int first_set() const;  // -1 if zero
    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const BitVec& o) const { return w_ < o.w_; }
    std::vector<int> support() const;
    std::string str() const;  // e.g. "101"

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
    friend class GF2Matrix;
};

/// Dense matrix over GF(2), packed bit rows. Row reduction uses a fixed
/// deterministic pivot rule (lowest column, then lowest row), so reduced
/// forms and representative choices are reproducible.
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(size_t(rows) * wpr_, 0) {}

    static GF2Matrix identity(int n);
    static GF2Matrix random(int rows, int cols, std::mt19937_64& rng, double density = 0.5);
    /// rows are the given vectors
    static GF2Matrix from_rows(const std::vector<BitVec>& rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int r, int c) const { return (w_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v) {
        uint64_t m = uint64_t(1) << (c & 63);
        size_t i = size_t(r) * wpr_ + (c >> 6);
        if (v) w_[i] |= m; else w_[i] &= ~m;
    }
    void flip(int r, int c) { w_[size_t(r) * wpr_ + (c >> 6)] ^= uint64_t(1) << (c & 63); }

    BitVec row(int r) const;
    void set_row(int r, const BitVec& v);
    void xor_row_from(int dst, int src);
    void swap_rows(int a, int b);

    GF2Matrix transpose() const;
    BitVec apply(const BitVec& x) const;      // y = M x
    GF2Matrix operator*(const GF2Matrix& o) const;
    GF2Matrix operator+(const GF2Matrix& o) const;
    bool operator==(const GF2Matrix& o) const = default;
    bool zero() const;

    struct Echelon;
    /// Reduced row echelon form; dispatches to the OpenMP kernel on large
    /// inputs. Output is identical to echelon_serial for all inputs.
    Echelon echelon() const;
    /// Serial reference kernel, kept for testing and benchmarking.
    Echelon echelon_serial() const;

    int rank() const;

    /// Some x with M x = b, or none. Free variables are set to 0 under the
    /// deterministic pivot order. Requires b.size() == rows().
    std::optional<BitVec> solve(const BitVec& b) const;

    /// Canonical kernel basis: one vector per free column, ascending.
    std::vector<BitVec> kernel_basis() const;
    /// Canonical basis of the row space (nonzero rows of the RREF).
    std::vector<BitVec> row_space_basis() const;
    /// Canonical basis of the column space: M applied to the pivot
    /// columns of the RREF of M (equivalently d(e_c), c pivot).
    std::vector<BitVec> image_basis() const;
    /// Inverse of a square invertible matrix (throws std::invalid_argument otherwise).
    GF2Matrix inverse() const;

    std::string str() const;

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
    Echelon echelon_impl(bool parallel) const;
};

struct GF2Matrix::Echelon {
    GF2Matrix rref;
    std::vector<int> pivot_cols;  // ascending; pivot_cols[i] is the pivot of row i
    int rank() const { return (int)pivot_cols.size(); }
};

/// Expresses v in the given basis (columns), or none if v is outside the span.
std::optional<BitVec> coords_in_basis(const std::vector<BitVec>& basis, const BitVec& v, int n);

/// Membership test for span of `basis`.
bool in_span(const std::vector<BitVec>& basis, const BitVec& v, int n);

}  // namespace homcat
