#ifndef AFES_ROOT_FINDING_HPP
#define AFES_ROOT_FINDING_HPP

#include <functional>
#include <stdexcept>
#include <string>

namespace afes {

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bracketed scalar zero finder (bisection safeguarded by
// secant/inverse-quadratic steps). Requires f(a) and f(b) of opposite
// sign; throws BracketError otherwise. Converges to |interval| <= tol_abs.
double find_zero(const std::function<double(double)>& f, double a, double b,
                 double tol_abs = 1e-12, int max_iter = 200);

// Expands [a, b] geometrically about its midpoint until f changes sign
// across it, then calls find_zero. `name` labels the equation in errors.
double find_zero_expand(const std::function<double(double)>& f, double a, double b,
                        const std::string& name, double tol_abs = 1e-12);

}  // namespace afes

#endif
