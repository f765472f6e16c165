#pragma once

#include "exforge/tensor.hpp"

namespace exforge {

// Probability floor shared by every path that takes a logarithm of a
// probability. Keeps recovered logits and KL terms finite under saturation.
inline constexpr double kProbFloor = 1e-12;

// Numerically stabilized softmax of a logit vector (max subtraction).
Tensor softmax(const Tensor& logits);

// Row-wise softmax of a batch of logits.
Tensor softmax_rows(const Tensor& logits);

// J[i][i] = S_i (1 - S_i), J[i][j] = -S_i S_j. Symmetric, rows sum to zero.
// Input must be a valid probability vector.
Tensor softmax_jacobian(const Tensor& probs);

void require_probability_vector(const Tensor& probs, const char* context);

}  // namespace exforge
