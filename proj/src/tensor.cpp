#include "anchorlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace anchorlab {

namespace {

std::size_t checked_product(const std::vector<std::size_t>& shape) {
  if (shape.empty() || shape.size() > 3) {
    fail(ErrorKind::rank,
         "tensor rank must be 1-3, got rank " + std::to_string(shape.size()));
  }
  std::size_t n = 1;
  for (const std::size_t dim : shape) n *= dim;
  return n;
}

}  // namespace

Tensor Tensor::zeros(std::vector<std::size_t> shape, bool requires_grad) {
  const std::size_t n = checked_product(shape);
  auto data = std::make_shared<TensorData>();
  data->shape = std::move(shape);
  data->values.assign(n, 0.0);
  data->requires_grad = requires_grad;
  return Tensor(std::move(data));
}

Tensor Tensor::full(std::vector<std::size_t> shape, double fill,
                    bool requires_grad) {
  Tensor t = zeros(std::move(shape), requires_grad);
  std::fill(t.values().begin(), t.values().end(), fill);
  return t;
}

Tensor Tensor::from_values(std::vector<std::size_t> shape,
                           std::vector<double> values, bool requires_grad) {
  const std::size_t n = checked_product(shape);
  if (n != values.size()) {
    fail(ErrorKind::dimension,
         "tensor value count " + std::to_string(values.size()) +
             " does not match shape product " + std::to_string(n));
  }
  auto data = std::make_shared<TensorData>();
  data->shape = std::move(shape);
  data->values = std::move(values);
  data->requires_grad = requires_grad;
  return Tensor(std::move(data));
}

Tensor Tensor::scalar(double value) {
  return from_values({1}, {value});
}

std::string Tensor::shape_str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < data_->shape.size(); ++i) {
    if (i) out << 'x';
    out << data_->shape[i];
  }
  out << ')';
  return out.str();
}

std::vector<double>& Tensor::grad() {
  ensure_grad(*data_);
  return data_->grad;
}

const std::vector<double>& Tensor::grad() const {
  ensure_grad(*data_);
  return data_->grad;
}

void Tensor::zero_grad() {
  if (data_ && !data_->grad.empty()) {
    std::fill(data_->grad.begin(), data_->grad.end(), 0.0);
  }
}

Tensor Tensor::clone() const {
  auto data = std::make_shared<TensorData>();
  data->shape = data_->shape;
  data->values = data_->values;
  data->requires_grad = data_->requires_grad;
  return Tensor(std::move(data));
}

void ensure_grad(TensorData& data) {
  if (data.grad.empty()) data.grad.assign(data.values.size(), 0.0);
}

double cosine_similarity(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    fail(ErrorKind::dimension, "cosine_similarity: length mismatch " +
                                   std::to_string(u.size()) + " vs " +
                                   std::to_string(v.size()));
  }
  if (u.empty()) {
    fail(ErrorKind::degenerate_input, "cosine_similarity: empty vectors");
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  nu = std::sqrt(nu);
  nv = std::sqrt(nv);
  // Two null updates are treated as identical rather than undefined.
  if (nu < kCosineEpsilon && nv < kCosineEpsilon) return 1.0;
  const double sim = dot / (nu * nv + kCosineEpsilon);
  return std::clamp(sim, -1.0, 1.0);
}

bool all_finite(std::span<const double> values) {
  for (const double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

bool all_finite(const Tensor& t) { return all_finite(std::span<const double>(t.values())); }

void Tape::record(std::shared_ptr<TensorData> output,
                  std::function<void()> backward_fn) {
  entries_.push_back({std::move(output), std::move(backward_fn)});
}

void Tape::backward(const Tensor& loss) {
  if (!loss.defined() || loss.size() != 1) {
    fail(ErrorKind::rank, "backward: loss must be a scalar, got shape " +
                              (loss.defined() ? loss.shape_str() : "(undefined)"));
  }
  // Gradients of tape-produced tensors are per-pass temporaries; parameters
  // are never tape outputs, so their accumulated gradients survive.
  for (Entry& entry : entries_) {
    if (!entry.output->grad.empty()) {
      std::fill(entry.output->grad.begin(), entry.output->grad.end(), 0.0);
    }
  }
  ensure_grad(*loss.data());
  loss.data()->grad[0] += 1.0;
  last_replay_count_ = 0;
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
    it->backward_fn();
    ++last_replay_count_;
  }
}

void zero_grads(std::span<Tensor> params) {
  for (Tensor& p : params) p.zero_grad();
}

}  // namespace anchorlab
