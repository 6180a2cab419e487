#pragma once

#include <span>
#include <vector>

#include "anchorlab/tensor.hpp"

namespace anchorlab {

// Epsilon inside the RMS-norm denominator.
inline constexpr double kNormEpsilon = 1e-6;

// Differentiable operations. Each takes an optional tape; when a tape is
// given and any input requires grad, a backward rule is recorded. With a
// null tape the functions are plain forward math.

// Standard matrix product, a[p x q] * b[q x r].
Tensor matmul(const Tensor& a, const Tensor& b, Tape* tape = nullptr);

// Elementwise sum of same-shape tensors.
Tensor add(const Tensor& a, const Tensor& b, Tape* tape = nullptr);

// weight_a * a + weight_b * b elementwise. weight_a == 0 or weight_b == 0
// degenerates to a bit-exact copy of the surviving operand.
Tensor blend(const Tensor& a, const Tensor& b, double weight_a,
             double weight_b, Tape* tape = nullptr);

Tensor scale(const Tensor& a, double factor, Tape* tape = nullptr);

// a[p x d] + bias[d] broadcast over rows.
Tensor add_row_broadcast(const Tensor& a, const Tensor& bias,
                         Tape* tape = nullptr);

// Row-wise softmax with per-row max subtraction.
Tensor softmax_rows(const Tensor& x, Tape* tape = nullptr);

// Each row divided by sqrt(mean of squares + kNormEpsilon), then scaled
// elementwise by gain[d].
Tensor rms_norm(const Tensor& x, const Tensor& gain, Tape* tape = nullptr);

// Elementwise tanh-approximation GELU.
Tensor gelu(const Tensor& x, Tape* tape = nullptr);

Tensor transpose(const Tensor& x, Tape* tape = nullptr);

Tensor slice_rows(const Tensor& x, std::size_t start, std::size_t count,
                  Tape* tape = nullptr);
Tensor slice_cols(const Tensor& x, std::size_t start, std::size_t count,
                  Tape* tape = nullptr);

Tensor concat_rows(const Tensor& a, const Tensor& b, Tape* tape = nullptr);
Tensor concat_cols(const std::vector<Tensor>& parts, Tape* tape = nullptr);

// Row lookup: out.row(i) = table.row(ids[i]). Backward scatter-adds, so
// repeated ids accumulate.
Tensor gather_rows(const Tensor& table, std::span<const int> ids,
                   Tape* tape = nullptr);

// Column-wise mean over rows: [p x d] -> [d].
Tensor mean_rows(const Tensor& x, Tape* tape = nullptr);

Tensor sum_all(const Tensor& x, Tape* tape = nullptr);

// Differentiable cosine similarity between two rank-1 tensors, clamped to
// [-1, 1], with the same degenerate-norm handling as the plain helper.
Tensor cosine_similarity_op(const Tensor& u, const Tensor& v,
                            Tape* tape = nullptr);

// Mean token-level cross-entropy: logits[p x vocab] against one target id
// per row, computed via a stable log-sum-exp.
Tensor cross_entropy_rows(const Tensor& logits, std::span<const int> targets,
                          Tape* tape = nullptr);

// Copies values into a fresh tensor that does not require grad.
Tensor detach(const Tensor& x);

}  // namespace anchorlab
