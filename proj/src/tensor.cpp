#include "hazecast/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hazecast/errors.hpp"

namespace hazecast {

Tensor::Tensor(std::vector<int64_t> s, std::vector<double> d)
    : shape(std::move(s)), data(std::move(d)) {
    if (numel() != static_cast<int64_t>(data.size()))
        throw ShapeMismatch("tensor data size does not match shape " + shape_str());
}

Tensor Tensor::zeros(std::vector<int64_t> shape) {
    Tensor t;
    t.shape = std::move(shape);
    t.data.assign(static_cast<size_t>(t.numel()), 0.0);
    return t;
}

Tensor Tensor::full(std::vector<int64_t> shape, double value) {
    Tensor t = zeros(std::move(shape));
    std::fill(t.data.begin(), t.data.end(), value);
    return t;
}

Tensor Tensor::scalar(double value) { return Tensor({1}, {value}); }

Tensor Tensor::row(std::vector<double> values) {
    const int64_t n = static_cast<int64_t>(values.size());
    return Tensor({1, n}, std::move(values));
}

Tensor Tensor::matrix(int64_t rows, int64_t cols, std::vector<double> values) {
    return Tensor({rows, cols}, std::move(values));
}

Tensor Tensor::identity(int64_t n) {
    Tensor t = zeros({n, n});
    for (int64_t i = 0; i < n; ++i) t.at(i, i) = 1.0;
    return t;
}

int64_t Tensor::numel() const {
    int64_t n = 1;
    for (int64_t s : shape) n *= s;
    return shape.empty() ? 0 : n;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
    os << ']';
    return os.str();
}

namespace detail {

void matmul_into(const double* a, const double* b, double* c, int64_t n, int64_t k, int64_t m) {
    std::fill(c, c + n * m, 0.0);
    for (int64_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        double* crow = c + i * m;
        for (int64_t p = 0; p < k; ++p) {
            const double av = arow[p];
            const double* brow = b + p * m;
            for (int64_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
}

// c[n x m] = a[n x k] * b[m x k]^T
void matmul_nt_into(const double* a, const double* b, double* c, int64_t n, int64_t k, int64_t m) {
    for (int64_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        for (int64_t j = 0; j < m; ++j) {
            const double* brow = b + j * k;
            double acc = 0.0;
            for (int64_t p = 0; p < k; ++p) acc += arow[p] * brow[p];
            c[i * m + j] = acc;
        }
    }
}

// c[k x m] = a[n x k]^T * b[n x m]
void matmul_tn_into(const double* a, const double* b, double* c, int64_t n, int64_t k, int64_t m) {
    std::fill(c, c + k * m, 0.0);
    for (int64_t i = 0; i < n; ++i) {
        const double* arow = a + i * k;
        const double* brow = b + i * m;
        for (int64_t p = 0; p < k; ++p) {
            const double av = arow[p];
            double* crow = c + p * m;
            for (int64_t j = 0; j < m; ++j) crow[j] += av * brow[j];
        }
    }
}

}  // namespace detail

namespace {

void require_2d(const Tensor& t, const char* what) {
    if (t.shape.size() != 2) throw ShapeMismatch(std::string(what) + " requires a 2-D tensor");
}

}  // namespace

Tensor matmul(const Tensor& a, const Tensor& b) {
    require_2d(a, "matmul");
    require_2d(b, "matmul");
    if (a.cols() != b.rows())
        throw ShapeMismatch("matmul shape mismatch " + a.shape_str() + " * " + b.shape_str());
    Tensor c = Tensor::zeros({a.rows(), b.cols()});
    detail::matmul_into(a.data.data(), b.data.data(), c.data.data(), a.rows(), a.cols(), b.cols());
    return c;
}

Tensor matmul_nt(const Tensor& a, const Tensor& b) {
    require_2d(a, "matmul_nt");
    require_2d(b, "matmul_nt");
    if (a.cols() != b.cols())
        throw ShapeMismatch("matmul_nt shape mismatch " + a.shape_str() + " * " + b.shape_str() + "^T");
    Tensor c = Tensor::zeros({a.rows(), b.rows()});
    detail::matmul_nt_into(a.data.data(), b.data.data(), c.data.data(), a.rows(), a.cols(), b.rows());
    return c;
}

Tensor matmul_tn(const Tensor& a, const Tensor& b) {
    require_2d(a, "matmul_tn");
    require_2d(b, "matmul_tn");
    if (a.rows() != b.rows())
        throw ShapeMismatch("matmul_tn shape mismatch " + a.shape_str() + "^T * " + b.shape_str());
    Tensor c = Tensor::zeros({a.cols(), b.cols()});
    detail::matmul_tn_into(a.data.data(), b.data.data(), c.data.data(), a.rows(), a.cols(), b.cols());
    return c;
}

Tensor transpose(const Tensor& a) {
    require_2d(a, "transpose");
    Tensor t = Tensor::zeros({a.cols(), a.rows()});
    for (int64_t i = 0; i < a.rows(); ++i)
        for (int64_t j = 0; j < a.cols(); ++j) t.at(j, i) = a.at(i, j);
    return t;
}

namespace {
template <typename F>
Tensor zip(const Tensor& a, const Tensor& b, F f, const char* what) {
    if (!a.same_shape(b))
        throw ShapeMismatch(std::string(what) + " shape mismatch " + a.shape_str() + " vs " +
                            b.shape_str());
    Tensor out = a;
    for (size_t i = 0; i < out.data.size(); ++i) out.data[i] = f(a.data[i], b.data[i]);
    return out;
}
}  // namespace

Tensor add(const Tensor& a, const Tensor& b) {
    return zip(a, b, [](double x, double y) { return x + y; }, "add");
}
Tensor sub(const Tensor& a, const Tensor& b) {
    return zip(a, b, [](double x, double y) { return x - y; }, "sub");
}
Tensor mul(const Tensor& a, const Tensor& b) {
    return zip(a, b, [](double x, double y) { return x * y; }, "mul");
}

Tensor scale(const Tensor& a, double s) {
    Tensor out = a;
    for (double& v : out.data) v *= s;
    return out;
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    if (!a.same_shape(b))
        throw ShapeMismatch("max_abs_diff shape mismatch " + a.shape_str() + " vs " + b.shape_str());
    double m = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) m = std::max(m, std::fabs(a.data[i] - b.data[i]));
    return m;
}

}  // namespace hazecast
