#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace aero {

using Shape = std::vector<int64_t>;

int64_t shape_numel(const Shape& shape);
std::string shape_str(const Shape& shape);

/// Dense 64-bit float array with an optional gradient buffer of the same
/// shape. Copies are shallow: they refer to the same storage, which is what
/// lets a parameter shared between layers accumulate gradients from all uses.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> values);

  static Tensor scalar(double v);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  size_t rank() const { return shape().size(); }
  int64_t dim(size_t axis) const;
  int64_t numel() const;

  double* data();
  const double* data() const;
  double item() const;  // rank-agnostic single-element access

  Tensor& set_requires_grad(bool on = true);
  bool requires_grad() const;

  /// Gradient buffer; nullptr until something was accumulated.
  const double* grad() const;
  std::vector<double>& grad_buffer();  // allocates zeros on first use
  void zero_grad();
  void accumulate_grad(const double* g, int64_t n);

  /// Identity of the underlying storage (shared across shallow copies).
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Shape shape;
    std::vector<double> data;
    std::vector<double> grad;  // empty until first accumulation
    bool requires_grad = false;
  };

  std::shared_ptr<Node> node_;
};

/// Reverse-mode tape. Forward ops record closures while a tape is active
/// (and some input requires grad); backward() replays them in reverse.
/// The tape must be cleared (or destroyed) between training steps.
class Tape {
 public:
  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  void record(std::function<void()> backward_fn);
  size_t size() const { return ops_.size(); }
  void clear() { ops_.clear(); }

  /// Seeds d(loss)/d(loss) = 1 and replays recorded ops in reverse.
  /// Gradients accumulate additively into every requires_grad tensor.
  void backward(Tensor& loss);

  static Tape* active();

  /// RAII: makes the given tape the active one on this thread.
  class Scope {
   public:
    explicit Scope(Tape& tape);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Tape* prev_;
  };

 private:
  std::vector<std::function<void()>> ops_;
};

/// RAII: suspends recording (forward-only evaluation inside).
class NoGrad {
 public:
  NoGrad();
  ~NoGrad();
  NoGrad(const NoGrad&) = delete;
  NoGrad& operator=(const NoGrad&) = delete;

 private:
  Tape* prev_;
};

}  // namespace aero
