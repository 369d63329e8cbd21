#include "qca/tolerances.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qca {
namespace {

void read_real(const char* name, double* out) {
  const char* value = std::getenv(name);
  if (!value) return;
  try {
    *out = std::stod(value);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + ": not a number: " + value);
  }
  if (*out <= 0.0)
    throw std::invalid_argument(std::string(name) + " must be positive");
}

void read_int(const char* name, int* out) {
  const char* value = std::getenv(name);
  if (!value) return;
  try {
    *out = std::stoi(value);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) +
                                ": not an integer: " + value);
  }
  if (*out < 1)
    throw std::invalid_argument(std::string(name) + " must be at least 1");
}

}  // namespace

Tolerances tolerances_from_env() {
  Tolerances tol;
  read_real("QCA_TOL_ZERO", &tol.eps_zero);
  read_real("QCA_TOL_NORM", &tol.eps_norm);
  read_real("QCA_TOL_FIX", &tol.eps_fix);
  read_real("QCA_TOL_SUM", &tol.eps_sum);
  read_int("QCA_MAX_ITER", &tol.max_iter);
  return tol;
}

}  // namespace qca
