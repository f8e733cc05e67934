#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ssm/errors.hpp"

namespace ssm {

// Ambient dimensions are small (<= 8), so vectors and matrices use inline
// storage and everything here is plain O(d^3) dense arithmetic.
inline constexpr int kMaxDim = 8;

class Vec {
public:
    Vec() = default;
    explicit Vec(int n);
    Vec(std::initializer_list<double> xs);
    static Vec zero(int n) { return Vec(n); }
    static Vec unit(int n, int i);

    int size() const { return n_; }
    double operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const double* data() const { return e_.data(); }
    double* data() { return e_.data(); }

    Vec& operator+=(const Vec& o);
    Vec& operator-=(const Vec& o);
    Vec& operator*=(double s);

    double norm() const;
    double norm_sq() const;
    Vec normalized() const;  // throws ZeroVector on (near-)zero input
    bool all_finite() const;

private:
    std::array<double, kMaxDim> e_{};
    int n_ = 0;
};

Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator*(double s, Vec a);
Vec operator*(Vec a, double s);
Vec operator-(Vec a);
double dot(const Vec& a, const Vec& b);
double max_abs_diff(const Vec& a, const Vec& b);

// Dense row-major matrix, rows/cols <= 8.  Also used for d x k frames.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols);
    static Mat identity(int n);
    static Mat from_rows(std::initializer_list<std::initializer_list<double>> rows);
    static Mat from_columns(const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double operator()(int r, int c) const { return e_[idx(r, c)]; }
    double& operator()(int r, int c) { return e_[idx(r, c)]; }

    Vec column(int c) const;
    Vec row(int r) const;
    void set_column(int c, const Vec& v);
    Mat transposed() const;
    double max_abs() const;
    bool all_finite() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(double s);

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
    std::array<double, kMaxDim * kMaxDim> e_{};
    int rows_ = 0, cols_ = 0;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator*(double s, Mat a);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& x);

// LU with partial pivoting.
double determinant(Mat a);
// Solves a * x = b (a square, well conditioned at our sizes).
Mat solve(Mat a, Mat b);

// Singular values of the matrix whose columns are given (any count of columns
// in R^d), descending.  One-sided Jacobi: cheap and robust at these sizes.
std::vector<double> column_singular_values(std::vector<Vec> columns);
std::vector<double> singular_values(const Mat& m);

// Count of singular values > tol * sigma_max.
int numerical_rank(const Mat& m, double tol);
int rank_of_columns(const std::vector<Vec>& columns, double tol);

// Orthonormal basis of span(vectors), same order of construction.
// Throws DegenerateSpan if the numerical rank is below vectors.size().
std::vector<Vec> gram_schmidt(const std::vector<Vec>& vectors, double tol = 1e-10);

// In-place column orthonormalization of a full-rank d x k frame.
void orthonormalize_columns(Mat& m, double tol = 1e-10);

// Orthogonal matrix: ||Q^T Q - I||_max <= 1e-10 and det = +-1 within 1e-8,
// enforced at construction.
class OrthoMatrix {
public:
    explicit OrthoMatrix(const Mat& m);
    static OrthoMatrix identity(int d);

    int dim() const { return m_.rows(); }
    const Mat& mat() const { return m_; }
    OrthoMatrix transposed() const;  // the exact inverse
    Vec apply(const Vec& x) const { return m_ * x; }
    double det_sign() const;

private:
    Mat m_;
};

OrthoMatrix operator*(const OrthoMatrix& a, const OrthoMatrix& b);

// Skew-symmetric matrix: ||A + A^T||_max <= 1e-12 enforced at construction.
class SkewMatrix {
public:
    explicit SkewMatrix(const Mat& m);
    static SkewMatrix zero(int d);
    // Block-diagonal generator: 2x2 blocks [[0,-a],[a,0]] per angle rate, a
    // trailing zero row/column if d is odd.
    static SkewMatrix block_rotations(int d, const std::vector<double>& rates);

    int dim() const { return m_.rows(); }
    const Mat& mat() const { return m_; }
    Vec apply(const Vec& x) const { return m_ * x; }

private:
    Mat m_;
};

SkewMatrix operator*(double s, const SkewMatrix& a);

// exp(A) for skew-symmetric A via scaling-and-squaring with a diagonal
// Pade(6) approximant; always a rotation (det +1).
OrthoMatrix expm_skew(const SkewMatrix& a);

} // namespace ssm
