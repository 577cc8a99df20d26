#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hwm {

// Row-major dynamic matrix. Rows index batch entries, columns index features.
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

// N-dimensional array of f64 values in row-major order.
struct DenseArray {
  std::vector<int> shape;
  std::vector<double> data;

  DenseArray() = default;
  explicit DenseArray(std::vector<int> shape);
  DenseArray(std::vector<int> shape, std::vector<double> data);

  static DenseArray FromMat(const Mat& m);
  // Interprets the array as 2D: 1D arrays become a single row, higher ranks
  // fold everything but the last dimension into rows.
  Mat ToMat() const;

  std::size_t size() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  bool AllFinite() const;

  bool operator==(const DenseArray&) const = default;
};

std::size_t ShapeProduct(std::span<const int> shape);
std::string ShapeString(std::span<const int> shape);

// A named trainable block. `grad` is accumulated by Tape::Backward.
struct Param {
  std::string name;
  Mat value;
  Mat grad;

  Param(std::string name, Mat value);
  void ZeroGrad() { grad.setZero(); }
};

// Ordered collection of parameter blocks with stable addresses.
class ParamSet {
 public:
  ParamSet() = default;
  ParamSet(const ParamSet&) = delete;
  ParamSet& operator=(const ParamSet&) = delete;
  ParamSet(ParamSet&&) = default;
  ParamSet& operator=(ParamSet&&) = default;

  Param& Add(std::string name, Mat value);
  Param& Get(const std::string& name);
  const Param& Get(const std::string& name) const;
  Param* Find(const std::string& name);

  std::size_t size() const { return params_.size(); }
  Param& operator[](std::size_t i) { return *params_[i]; }
  const Param& operator[](std::size_t i) const { return *params_[i]; }

  std::size_t NumScalars() const;
  void ZeroGrad();
  double GradNorm() const;
  // Copies values from another set with identical names and shapes.
  void CopyValuesFrom(const ParamSet& other);

  auto begin() { return params_.begin(); }
  auto end() { return params_.end(); }
  auto begin() const { return params_.begin(); }
  auto end() const { return params_.end(); }

 private:
  std::vector<std::unique_ptr<Param>> params_;
};

}  // namespace hwm
