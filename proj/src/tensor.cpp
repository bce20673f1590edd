#include "eam/tensor.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

namespace eam {

int64_t shape_numel(const std::vector<int64_t>& s) {
    if (s.empty() || s.size() > 4)
        fail(errc::dim_mismatch, "tensor rank must be 1..4, got " + shape_str(s));
    int64_t n = 1;
    for (int64_t d : s) {
        if (d < 0) fail(errc::dim_mismatch, "negative dimension in shape " + shape_str(s));
        n *= d;
    }
    return n;
}

Tensor::Tensor(std::vector<int64_t> dims, float fill) : shape(std::move(dims)) {
    data.assign((size_t)shape_numel(shape), fill);
}

bool Tensor::bit_equal(const Tensor& o) const {
    return shape == o.shape &&
           std::memcmp(data.data(), o.data.data(), data.size() * sizeof(float)) == 0;
}

std::string shape_str(const std::vector<int64_t>& s) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

bool all_finite(const Tensor& t) {
    for (float v : t.data)
        if (!std::isfinite(v)) return false;
    return true;
}

void require_finite(const Tensor& t, const std::string& what) {
    if (!all_finite(t)) fail(errc::numeric, what + ": non-finite value");
}

void require_same_shape(const Tensor& a, const Tensor& b, const std::string& what) {
    if (!a.same_shape(b))
        fail(errc::dim_mismatch,
             what + ": shape mismatch " + shape_str(a.shape) + " vs " + shape_str(b.shape));
}

} // namespace eam
