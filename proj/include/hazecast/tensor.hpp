#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hazecast {

/// Dense row-major tensor of 64-bit reals. Rank is usually 2; conv kernels
/// are rank 3 [c_out x c_in x kwidth].
struct Tensor {
    std::vector<int64_t> shape;
    std::vector<double> data;

    Tensor() = default;
    Tensor(std::vector<int64_t> s, std::vector<double> d);

    static Tensor zeros(std::vector<int64_t> shape);
    static Tensor full(std::vector<int64_t> shape, double value);
    static Tensor scalar(double value);
    static Tensor row(std::vector<double> values);                 // [1 x n]
    static Tensor matrix(int64_t rows, int64_t cols, std::vector<double> values);
    static Tensor identity(int64_t n);

    int64_t numel() const;
    int64_t rows() const { return shape.at(0); }
    int64_t cols() const { return shape.at(1); }
    double& at(int64_t i, int64_t j) { return data[i * cols() + j]; }
    double at(int64_t i, int64_t j) const { return data[i * cols() + j]; }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }
    std::string shape_str() const;
};

// plain (untaped) math used by the retention reference forms and tests
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor matmul_nt(const Tensor& a, const Tensor& b);  // a * b^T
Tensor matmul_tn(const Tensor& a, const Tensor& b);  // a^T * b
Tensor transpose(const Tensor& a);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double s);

double max_abs_diff(const Tensor& a, const Tensor& b);

// low-level kernels shared with the tape
namespace detail {
void matmul_into(const double* a, const double* b, double* c, int64_t n, int64_t k, int64_t m);
void matmul_nt_into(const double* a, const double* b, double* c, int64_t n, int64_t k, int64_t m);
void matmul_tn_into(const double* a, const double* b, double* c, int64_t n, int64_t k, int64_t m);
}  // namespace detail

}  // namespace hazecast
