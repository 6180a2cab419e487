#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "anchorlab/errors.hpp"

namespace anchorlab {

// Epsilon guarding the cosine-similarity denominator.
inline constexpr double kCosineEpsilon = 1e-12;

// Shared storage behind Tensor handles. Values are written once by the
// operation that produces them; grad accumulates across backward passes
// until explicitly zeroed.
struct TensorData {
  std::vector<std::size_t> shape;
  std::vector<double> values;
  std::vector<double> grad;  // empty until first accumulation
  bool requires_grad = false;
};

// Dense row-major tensor of 64-bit floats, rank 1-3. Cheap to copy: copies
// share storage. Mutating accessors exist for parameter initialization and
// optimizer updates; tensors produced by ops are treated as immutable.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(std::vector<std::size_t> shape, bool requires_grad = false);
  static Tensor full(std::vector<std::size_t> shape, double fill,
                     bool requires_grad = false);
  static Tensor from_values(std::vector<std::size_t> shape,
                            std::vector<double> values,
                            bool requires_grad = false);
  static Tensor scalar(double value);

  bool defined() const { return data_ != nullptr; }

  const std::vector<std::size_t>& shape() const { return data_->shape; }
  std::size_t rank() const { return data_->shape.size(); }
  std::size_t size() const { return data_->values.size(); }
  std::size_t rows() const { return data_->shape[0]; }
  std::size_t cols() const {
    return data_->shape.size() > 1 ? data_->shape[1] : 1;
  }
  bool same_shape(const Tensor& other) const {
    return data_->shape == other.data_->shape;
  }
  std::string shape_str() const;

  double at(std::size_t i) const { return data_->values[i]; }
  double at(std::size_t i, std::size_t j) const {
    return data_->values[i * cols() + j];
  }
  double& at(std::size_t i) { return data_->values[i]; }
  double& at(std::size_t i, std::size_t j) {
    return data_->values[i * cols() + j];
  }

  std::vector<double>& values() { return data_->values; }
  const std::vector<double>& values() const { return data_->values; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_->values).subspan(i * cols(), cols());
  }

  bool requires_grad() const { return data_ && data_->requires_grad; }
  void set_requires_grad(bool flag) { data_->requires_grad = flag; }

  bool has_grad() const { return data_ && !data_->grad.empty(); }
  // Allocates a zero buffer on first use.
  std::vector<double>& grad();
  const std::vector<double>& grad() const;
  void zero_grad();

  // Deep copy of values; grad buffer is not copied.
  Tensor clone() const;

  std::shared_ptr<TensorData> data() const { return data_; }

 private:
  explicit Tensor(std::shared_ptr<TensorData> data) : data_(std::move(data)) {}
  std::shared_ptr<TensorData> data_;
};

// Plain (non-differentiated) cosine similarity, clamped to [-1, 1].
// Two null vectors count as identical (similarity 1); a single null vector
// is handled by the epsilon and yields ~0.
double cosine_similarity(std::span<const double> u, std::span<const double> v);

bool all_finite(std::span<const double> values);
bool all_finite(const Tensor& t);

void ensure_grad(TensorData& data);

// Ordered record of executed differentiable operations. backward() replays
// the record in reverse, which is a reverse topological order because every
// operation output is a fresh tensor. Gradients of tensors produced on this
// tape are cleared at the start of each backward pass so repeated calls
// accumulate cleanly into leaf (parameter) gradients.
class Tape {
 public:
  void record(std::shared_ptr<TensorData> output, std::function<void()> backward_fn);

  std::size_t size() const { return entries_.size(); }

  // loss must be a scalar (single element) produced by operations on this
  // tape. Parameter gradients accumulate additively across calls.
  void backward(const Tensor& loss);

  // Drops the recorded operations. Never touches parameter values.
  void clear() { entries_.clear(); }

  // Number of entries replayed by the most recent backward().
  std::size_t last_replay_count() const { return last_replay_count_; }

 private:
  struct Entry {
    std::shared_ptr<TensorData> output;
    std::function<void()> backward_fn;
  };
  std::vector<Entry> entries_;
  std::size_t last_replay_count_ = 0;
};

// Zeroes the gradient buffers of the given tensors; values are untouched.
void zero_grads(std::span<Tensor> params);

}  // namespace anchorlab
