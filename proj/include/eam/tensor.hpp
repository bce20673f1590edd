#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eam/error.hpp"

namespace eam {

// Dense row-major float32 tensor, rank 1..4. data.size() always equals the
// product of the dims.
struct Tensor {
    std::vector<int64_t> shape;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<int64_t> dims, float fill = 0.0f);

    int rank() const { return (int)shape.size(); }
    int64_t numel() const { return (int64_t)data.size(); }
    int64_t dim(int i) const { return shape[(size_t)i]; }

    // rank-2 accessors, unchecked
    float& at(int64_t i, int64_t j) { return data[(size_t)(i * shape[1] + j)]; }
    float at(int64_t i, int64_t j) const { return data[(size_t)(i * shape[1] + j)]; }
    float* row(int64_t i) { return data.data() + i * shape[1]; }
    const float* row(int64_t i) const { return data.data() + i * shape[1]; }

    // rank-3 accessor (images, HxWxC)
    float& at(int64_t i, int64_t j, int64_t k) {
        return data[(size_t)((i * shape[1] + j) * shape[2] + k)];
    }
    float at(int64_t i, int64_t j, int64_t k) const {
        return data[(size_t)((i * shape[1] + j) * shape[2] + k)];
    }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }
    bool bit_equal(const Tensor& o) const;
};

std::string shape_str(const std::vector<int64_t>& s);
int64_t shape_numel(const std::vector<int64_t>& s);

bool all_finite(const Tensor& t);
void require_finite(const Tensor& t, const std::string& what);
void require_same_shape(const Tensor& a, const Tensor& b, const std::string& what);

} // namespace eam
