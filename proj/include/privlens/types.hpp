#pragma once

#include <Eigen/Dense>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace privlens {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline constexpr double kSimplexTol = 1e-12;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class SupportChainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class FeasibilityError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Recoverability constraint failure for a specific input symbol.
class RecoverabilityViolation : public Error {
 public:
  RecoverabilityViolation(int symbol, double achieved, double required);
  int symbol() const { return symbol_; }
  double achieved() const { return achieved_; }
  double required() const { return required_; }

 private:
  int symbol_;
  double achieved_;
  double required_;
};

/// Point of the probability simplex on a finite alphabet.
///
/// Entries must be nonnegative and sum to one within kSimplexTol; tiny
/// negative noise from upstream arithmetic is clamped to zero.
class Pmf {
 public:
  explicit Pmf(Vector weights);
  Pmf(std::initializer_list<double> weights);

  static Pmf uniform(int dim);
  static Pmf point_mass(int dim, int at);

  int dim() const { return static_cast<int>(w_.size()); }
  double operator()(int i) const { return w_(i); }
  const Vector& weights() const { return w_; }

  bool operator==(const Pmf& other) const { return w_ == other.w_; }

 private:
  Vector w_;
};

/// Row-stochastic matrix from an input alphabet to an output alphabet.
class Channel {
 public:
  explicit Channel(Matrix rows);

  static Channel identity(int k);

  int n_in() const { return static_cast<int>(m_.rows()); }
  int n_out() const { return static_cast<int>(m_.cols()); }
  double operator()(int in, int out) const { return m_(in, out); }
  Vector row(int in) const { return m_.row(in).transpose(); }
  const Matrix& rows() const { return m_; }

  /// Output pmf of p pushed through the channel.
  Pmf apply(const Pmf& p) const;

 private:
  Matrix m_;
};

/// Empirical type of a length-n sequence: per-symbol counts.
class NType {
 public:
  NType(std::vector<int> counts, int n);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(counts_.size()); }
  int count(int i) const { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }

  Pmf as_pmf() const;

  bool operator<(const NType& other) const { return counts_ < other.counts_; }
  bool operator==(const NType& other) const {
    return n_ == other.n_ && counts_ == other.counts_;
  }

 private:
  std::vector<int> counts_;
  int n_;
};

/// Ordered partition of {0,...,r-1} into k nonempty inverse atoms; atom j is
/// the preimage of output value j.
class FunctionSpec {
 public:
  FunctionSpec(std::vector<std::vector<int>> atoms, int r);

  static FunctionSpec singletons(int r);

  int r() const { return r_; }
  int k() const { return static_cast<int>(atoms_.size()); }
  const std::vector<std::vector<int>>& atoms() const { return atoms_; }
  const std::vector<int>& atom(int j) const { return atoms_[j]; }
  int atom_size(int j) const { return static_cast<int>(atoms_[j].size()); }
  std::vector<int> atom_sizes() const;

  /// f(x): index of the atom containing symbol x.
  int value_of(int x) const { return value_of_[x]; }

  /// True when |f^-1(0)| >= ... >= |f^-1(k-1)|.
  bool is_sorted_by_size() const;

  /// Copy with atoms stably sorted by decreasing size. Ties keep the original
  /// order; the result records which original atom each new index came from.
  FunctionSpec normalized() const;

  /// Original atom index behind each (possibly re-sorted) atom.
  const std::vector<int>& original_atom_indices() const { return original_; }

 private:
  std::vector<std::vector<int>> atoms_;
  std::vector<int> value_of_;
  std::vector<int> original_;
  int r_;
};

/// Ceiling with a small downward snap so that values within 1e-9 of an
/// integer (from accumulated rounding) are not pushed to the next one.
double ceil_snapped(double x);

}  // namespace privlens
