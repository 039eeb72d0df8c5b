#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace fockbridge {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

/// Complex sparse matrix over a Fock basis. Column-major, compressed.
using SparseOperator = Eigen::SparseMatrix<Complex>;

enum class Statistics { Bose, Fermi };

std::string_view to_string(Statistics s);
Statistics statistics_from_string(std::string_view name);

/// Raised when a requested basis or dense space exceeds its configured size cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operator route is requested for statistics it does not hold under.
class StatisticsMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace fockbridge
