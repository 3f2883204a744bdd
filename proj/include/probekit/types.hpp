#pragma once

#include <Eigen/Dense>

namespace probekit {

using Scalar = double;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

}  // namespace probekit
