#pragma once

#include <stdexcept>
#include <string>

namespace csbp {

// Base for everything thrown by the library. The CLI maps these to exit 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments / violated preconditions (degree exceeded, alpha = e_c, ...).
struct ContractError : Error {
    using Error::Error;
};

// lambda does not dominate the requested derivative order while the jump
// measure has unbounded support (Lemma-5.1-style condition).
struct DomainError : Error {
    using Error::Error;
};

// Adaptive quadrature could not reach the requested tolerance.
struct QuadratureError : Error {
    QuadratureError(const std::string& msg, double achieved)
        : Error(msg), achieved_error(achieved) {}
    double achieved_error;
};

// ODE step size underflow or node budget exhaustion during a solve.
struct IntegrationError : Error {
    IntegrationError(const std::string& msg, double t_reached, double last_step)
        : Error(msg), t_reached(t_reached), last_step(last_step) {}
    double t_reached;
    double last_step;
};

// Enumeration refused because the forest/outcome count exceeds the cap.
struct SizeCapError : Error {
    using Error::Error;
};

} // namespace csbp
