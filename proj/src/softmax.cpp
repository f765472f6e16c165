#include "exforge/softmax.hpp"

#include <algorithm>
#include <cmath>

namespace exforge {

namespace {

void softmax_inplace(const double* logits, double* out, std::size_t k) {
    double max_logit = logits[0];
    for (std::size_t i = 1; i < k; ++i) max_logit = std::max(max_logit, logits[i]);
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        out[i] = std::exp(logits[i] - max_logit);
        sum += out[i];
    }
    const double inv = 1.0 / sum;
    for (std::size_t i = 0; i < k; ++i) out[i] *= inv;
}

}  // namespace

Tensor softmax(const Tensor& logits) {
    if (logits.rank() != 1 || logits.size() == 0)
        throw ShapeError("softmax: expected a non-empty rank-1 tensor");
    require_finite(logits, "softmax");
    Tensor out({logits.size()});
    softmax_inplace(logits.data().data(), out.data().data(), logits.size());
    return out;
}

Tensor softmax_rows(const Tensor& logits) {
    if (logits.rank() != 2) throw ShapeError("softmax_rows: expected a rank-2 tensor");
    require_finite(logits, "softmax_rows");
    Tensor out({logits.rows(), logits.cols()});
    for (std::size_t r = 0; r < logits.rows(); ++r)
        softmax_inplace(logits.row_ptr(r), out.row_ptr(r), logits.cols());
    return out;
}

void require_probability_vector(const Tensor& probs, const char* context) {
    if (probs.rank() != 1 || probs.size() == 0)
        throw ValidationError(std::string(context) + ": expected a rank-1 probability vector");
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        const double p = probs[i];
        if (!std::isfinite(p) || p < 0.0 || p > 1.0 + 1e-9)
            throw ValidationError(std::string(context) + ": entry outside [0,1]");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ValidationError(std::string(context) + ": entries do not sum to 1");
}

Tensor softmax_jacobian(const Tensor& probs) {
    require_probability_vector(probs, "softmax_jacobian");
    const std::size_t k = probs.size();
    Tensor jac({k, k});
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            jac.at(i, j) = (i == j) ? probs[i] * (1.0 - probs[i]) : -probs[i] * probs[j];
        }
    }
    return jac;
}

}  // namespace exforge
