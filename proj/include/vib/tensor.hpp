#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "vib/error.hpp"

namespace vib {

// Dense row-major tensor of 64-bit reals. Everything in this library is
// double precision; the test tolerances depend on it.
//
// Finiteness is an invariant of the data the library exchanges with the
// outside world. It is enforced at the boundaries (CSV load, checkpoint
// load, per-step loss/gradient checks) via ensure_finite() rather than on
// every kernel call.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<int64_t> shape)
        : shape_(std::move(shape)), data_(checked_numel(shape_), 0.0) {}

    Tensor(std::vector<int64_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (checked_numel(shape_) != static_cast<int64_t>(data_.size())) {
            throw_error(ErrorKind::Shape,
                        "tensor data length " + std::to_string(data_.size()) +
                            " does not match shape " + shape_string());
        }
    }

    static Tensor zeros(std::vector<int64_t> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<int64_t> shape, double value) {
        Tensor t(std::move(shape));
        std::fill(t.data_.begin(), t.data_.end(), value);
        return t;
    }

    static Tensor scalar(double value) { return Tensor({1}, {value}); }

    const std::vector<int64_t>& shape() const { return shape_; }
    int64_t numel() const { return static_cast<int64_t>(data_.size()); }
    bool is_scalar() const { return numel() == 1; }
    double item() const {
        if (!is_scalar()) {
            throw_error(ErrorKind::Contract, "item() on non-scalar tensor " + shape_string());
        }
        return data_[0];
    }

    int64_t rows() const { return shape_.size() == 2 ? shape_[0] : (shape_.size() == 1 ? 1 : invalid_2d()); }
    int64_t cols() const { return shape_.size() == 2 ? shape_[1] : (shape_.size() == 1 ? shape_[0] : invalid_2d()); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& vec() { return data_; }
    const std::vector<double>& vec() const { return data_; }

    double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
    double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

    double& at(int64_t r, int64_t c) { return data_[static_cast<size_t>(r * cols() + c)]; }
    double at(int64_t r, int64_t c) const { return data_[static_cast<size_t>(r * cols() + c)]; }

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

    std::string shape_string() const {
        std::string s = "[";
        for (size_t i = 0; i < shape_.size(); ++i) {
            if (i) s += "x";
            s += std::to_string(shape_[i]);
        }
        return s + "]";
    }

    // Throws ErrorKind::RunFailed naming `what` if any element is NaN/Inf.
    void ensure_finite(const std::string& what) const;

    bool operator==(const Tensor& other) const {
        return shape_ == other.shape_ && data_ == other.data_;
    }

private:
    static int64_t checked_numel(const std::vector<int64_t>& shape) {
        int64_t n = 1;
        for (int64_t d : shape) {
            if (d <= 0) {
                throw_error(ErrorKind::Shape, "tensor dimensions must be positive");
            }
            n *= d;
        }
        return n;
    }

    [[noreturn]] int64_t invalid_2d() const {
        throw_error(ErrorKind::Contract, "expected 1-D or 2-D tensor, got " + shape_string());
    }

    std::vector<int64_t> shape_;
    std::vector<double> data_;
};

} // namespace vib
