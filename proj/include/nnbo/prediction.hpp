#pragma once

#include <Eigen/Dense>

namespace nnbo {

struct Prediction {
    double mean = 0.0;
    double var = 0.0;
};

// Anything that yields a Gaussian posterior at a normalized design point.
class PosteriorModel {
  public:
    virtual ~PosteriorModel() = default;
    virtual Prediction predict(const Eigen::VectorXd& u) const = 0;
};

// Target standardization used by every surrogate: fit on (y - mean)/std,
// report predictions back in the original metric scale.
struct Standardizer {
    double shift = 0.0;
    double scale = 1.0;

    static Standardizer from(const Eigen::VectorXd& y) {
        Standardizer s;
        if (y.size() == 0) return s;
        s.shift = y.mean();
        const double var = (y.array() - s.shift).square().sum() / static_cast<double>(y.size());
        const double sd = std::sqrt(var);
        s.scale = sd > 1e-12 ? sd : 1.0;
        return s;
    }

    Eigen::VectorXd apply(const Eigen::VectorXd& y) const { return (y.array() - shift) / scale; }
    Prediction restore(const Prediction& p) const {
        return {shift + scale * p.mean, scale * scale * p.var};
    }
};

}  // namespace nnbo
