#ifndef LWPT_QUADRATURE_HPP
#define LWPT_QUADRATURE_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace lwpt {

/// Raised when an adaptive quadrature fails to reach its tolerance.
class QuadratureError : public std::runtime_error {
  public:
    explicit QuadratureError(const std::string& what)
        : std::runtime_error(what) {}
};

/**
 * Adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
 *
 * Subdivides until the Kronrod error estimate of every interval is below
 * rel_tol * |integral| (with abs_floor as an absolute floor). Throws
 * QuadratureError if max_intervals subdivisions do not suffice.
 */
double integrate_gk15(const std::function<double(double)>& f, double a,
                      double b, double rel_tol = 1e-9,
                      double abs_floor = 1e-20, int max_intervals = 2000);

}  // namespace lwpt

#endif
