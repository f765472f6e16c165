#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "exforge/errors.hpp"

namespace exforge {

// Dense row-major array of doubles with an explicit shape. Rank 1 and 2 cover
// everything this project needs; the invariant data.size() == prod(shape)
// holds by construction.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(checked_size(shape_), 0.0) {}

    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != checked_size(shape_))
            throw ShapeError("tensor data length does not match shape");
    }

    static Tensor vector(std::vector<double> values) {
        const std::size_t n = values.size();
        return Tensor({n}, std::move(values));
    }

    static Tensor matrix(std::size_t rows, std::size_t cols) { return Tensor({rows, cols}); }

    static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> values) {
        return Tensor({rows, cols}, std::move(values));
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t size() const { return data_.size(); }

    std::size_t rows() const { return shape_.empty() ? 0 : shape_[0]; }
    std::size_t cols() const { return shape_.size() < 2 ? (shape_.empty() ? 0 : 1) : shape_[1]; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols(); }
    const double* row_ptr(std::size_t r) const { return data_.data() + r * cols(); }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    Tensor row(std::size_t r) const {
        Tensor out({cols()});
        const double* src = row_ptr(r);
        for (std::size_t j = 0; j < cols(); ++j) out[j] = src[j];
        return out;
    }

    void set_row(std::size_t r, const Tensor& v) {
        if (v.size() != cols()) throw ShapeError("set_row: width mismatch");
        double* dst = row_ptr(r);
        for (std::size_t j = 0; j < cols(); ++j) dst[j] = v[j];
    }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

    std::string shape_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < shape_.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(shape_[i]);
        }
        return s + "]";
    }

private:
    static std::size_t checked_size(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) {
            if (d == 0) throw ShapeError("tensor dimensions must be positive");
            n *= d;
        }
        return shape.empty() ? 0 : n;
    }

    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

inline void require_finite(const Tensor& t, const char* context) {
    if (!t.all_finite())
        throw ValidationError(std::string(context) + ": tensor contains NaN or Inf");
}

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* context) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(context) + ": shape mismatch " + a.shape_string() + " vs " +
                         b.shape_string());
}

inline double dot(const Tensor& a, const Tensor& b) {
    require_same_shape(a, b, "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l2_norm(const Tensor& t) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) s += t[i] * t[i];
    return std::sqrt(s);
}

}  // namespace exforge
