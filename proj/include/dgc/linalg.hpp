// Dense exact matrices over a Field, with two independent rank pipelines.
#pragma once

#include "dgc/field.hpp"

#include <optional>
#include <vector>

namespace dgc {

using Vec = std::vector<Scalar>;

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Scalar(0)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    static Mat identity(int n);
    Vec apply(const Field& F, const Vec& x) const;          // this * x
    Mat mul(const Field& F, const Mat& other) const;        // this * other
    Mat hcat(const Mat& other) const;
    bool is_zero() const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

Vec vec_add(const Field& F, const Vec& a, const Vec& b);
Vec vec_sub(const Field& F, const Vec& a, const Vec& b);
Vec vec_scale(const Field& F, const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);

// Row echelon data for a matrix: reduced rows and their pivot columns.
struct Echelon {
    std::vector<Vec> rows;    // nonzero rows in reduced row-echelon form
    std::vector<int> pivots;  // pivot column of each row, strictly increasing
};

Echelon rref(const Field& F, const Mat& m);
int rank(const Field& F, const Mat& m);

// Independent pipeline: fraction-free Bareiss elimination on a
// denominator-cleared integer matrix (rationals), or plain elimination with a
// reversed pivoting order (prime fields).
int rank_bareiss(const Field& F, const Mat& m);

// Basis of the null space {x : m x = 0}.
std::vector<Vec> kernel_basis(const Field& F, const Mat& m);

// Basis of the column space.
std::vector<Vec> image_basis(const Field& F, const Mat& m);

// One solution of m x = b, if any.
std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b);

// Coordinates of v in the span of the given vectors, if v lies in it.
std::optional<Vec> coordinates_in_span(const Field& F, const std::vector<Vec>& span, const Vec& v);

}  // namespace dgc
