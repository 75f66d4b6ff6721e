#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include "berncov/rational.hpp"

namespace berncov {

// Dense Eigen types over the exact rational scalar.
using MatrixXq = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXq = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

}  // namespace berncov
