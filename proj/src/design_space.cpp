#include "nnbo/design_space.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nnbo/rng.hpp"

namespace nnbo {

DesignSpace::DesignSpace(std::vector<std::string> names, Vector lower, Vector upper)
    : names_(std::move(names)), lower_(std::move(lower)), upper_(std::move(upper)) {
    const auto d = lower_.size();
    if (d < 1) throw std::invalid_argument("design space: need at least one variable");
    if (upper_.size() != d || static_cast<Eigen::Index>(names_.size()) != d)
        throw std::invalid_argument("design space: names/lower/upper lengths differ");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("design space: empty variable name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("design space: duplicate variable name '" + n + "'");
    }
    for (Eigen::Index i = 0; i < d; ++i) {
        if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
            throw std::invalid_argument("design space: non-finite bound for '" + names_[i] + "'");
        if (!(lower_[i] < upper_[i]))
            throw std::invalid_argument("design space: lower must be < upper for '" + names_[i] +
                                        "' (zero-width dimensions are a config error)");
    }
}

Vector DesignSpace::normalize(const Vector& x) const {
    if (x.size() != lower_.size())
        throw std::invalid_argument("normalize: dimension mismatch");
    Vector u(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] < lower_[i] || x[i] > upper_[i])
            throw std::invalid_argument("normalize: component '" + names_[i] + "' out of bounds");
        u[i] = (x[i] - lower_[i]) / (upper_[i] - lower_[i]);
    }
    return u;
}

Vector DesignSpace::denormalize(const Vector& u) const {
    if (u.size() != lower_.size())
        throw std::invalid_argument("denormalize: dimension mismatch");
    Vector x(u.size());
    for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (u[i] < -1e-9 || u[i] > 1.0 + 1e-9)
            throw std::invalid_argument("denormalize: component outside [0,1]");
        const double c = std::min(1.0, std::max(0.0, u[i]));
        x[i] = lower_[i] + c * (upper_[i] - lower_[i]);
    }
    return x;
}

bool DesignSpace::contains(const Vector& x) const {
    if (x.size() != lower_.size()) return false;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] < lower_[i] || x[i] > upper_[i]) return false;
    return true;
}

Matrix lhs_sample_unit(int dim, int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("lhs_sample: n must be >= 1");
    if (dim < 1) throw std::invalid_argument("lhs_sample: dim must be >= 1");
    Rng rng(seed);
    Matrix u(n, dim);
    std::vector<int> perm(n);
    for (int j = 0; j < dim; ++j) {
        std::iota(perm.begin(), perm.end(), 0);
        // Fisher-Yates with the shared stream
        for (int i = n - 1; i > 0; --i) {
            const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
            std::swap(perm[i], perm[k]);
        }
        for (int i = 0; i < n; ++i) {
            const double jitter = rng.uniform01();
            u(i, j) = (static_cast<double>(perm[i]) + jitter) / static_cast<double>(n);
        }
    }
    return u;
}

std::vector<Vector> lhs_sample(const DesignSpace& space, int n, std::uint64_t seed) {
    const Matrix u = lhs_sample_unit(space.dim(), n, seed);
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(space.denormalize(u.row(i).transpose()));
    return out;
}

}  // namespace nnbo
