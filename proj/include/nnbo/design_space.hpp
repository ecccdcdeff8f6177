#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace nnbo {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Bounded box of named real design variables, in physical units.
// All surrogate math runs in normalized [0,1]^d coordinates; physical units
// appear only at the evaluator boundary.
class DesignSpace {
  public:
    DesignSpace(std::vector<std::string> names, Vector lower, Vector upper);

    int dim() const { return static_cast<int>(lower_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const Vector& lower() const { return lower_; }
    const Vector& upper() const { return upper_; }

    // physical -> [0,1]^d; rejects out-of-bounds components
    Vector normalize(const Vector& x) const;
    // [0,1]^d -> physical; tolerates 1e-9 outside the unit interval
    Vector denormalize(const Vector& u) const;

    bool contains(const Vector& x) const;

  private:
    std::vector<std::string> names_;
    Vector lower_;
    Vector upper_;
};

// Latin hypercube sample of n points, returned in physical units.
// Each dimension's n values land one per stratum [k/n, (k+1)/n).
std::vector<Vector> lhs_sample(const DesignSpace& space, int n, std::uint64_t seed);

// Same stratification, but in normalized coordinates.
Matrix lhs_sample_unit(int dim, int n, std::uint64_t seed);

}  // namespace nnbo
