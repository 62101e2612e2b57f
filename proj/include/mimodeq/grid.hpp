#pragma once

#include <complex>

#include <Eigen/Dense>

namespace mimodeq {

/// Uniform grid on [0,1) used for every frequency integral and circular
/// convolution. Rectangle-rule weights; all integrands are smooth 1-periodic
/// functions, so the rule converges spectrally fast.
struct FrequencyGrid {
    int size = 0;            // F
    Eigen::VectorXd points;  // f_j = j/F
    double weight = 0.0;     // 1/F

    double quadrature(const Eigen::VectorXd& values) const {
        return weight * values.sum();
    }
    std::complex<double> quadrature(const Eigen::VectorXcd& values) const {
        return weight * values.sum();
    }
};

/// Rejects F < 2.
FrequencyGrid make_grid(int size);

}  // namespace mimodeq
