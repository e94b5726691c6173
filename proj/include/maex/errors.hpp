#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace maex {

/// Admissibility verdict for a symmetric matrix under a given operator branch.
/// `margin` is the distance of the smallest eigenvalue to the branch's open
/// constraint boundary; admissible iff margin > 0.
struct DomainReport {
    bool admissible = false;
    double margin = 0.0;
    std::optional<std::string> violated_constraint;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix or point dimension outside the supported range.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Operator evaluated outside its admissible eigenvalue domain.
class DomainError : public Error {
public:
    DomainError(const std::string& msg, DomainReport rep)
        : Error(msg), report(std::move(rep)) {}
    explicit DomainError(const std::string& msg) : Error(msg) {}
    DomainReport report;
};

class NotSPDError : public Error {
public:
    using Error::Error;
};

class NotConvexError : public Error {
public:
    using Error::Error;
};

/// Two sample nodes map to the same gradient (Legendre transform not injective).
class CollisionError : public Error {
public:
    using Error::Error;
};

/// Radial ansatz evaluated at the origin.
class OriginError : public Error {
public:
    using Error::Error;
};

/// Truncation-tail bound of the potential exceeds the requested tolerance.
class TailError : public Error {
public:
    TailError(const std::string& msg, double bound) : Error(msg), tail_bound(bound) {}
    double tail_bound = 0.0;
};

class UnsupportedDimension : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

/// Sampled field values do not match the quadrature node set.
class NodeMismatch : public Error {
public:
    using Error::Error;
};

/// Too many decay-fit samples underflowed to be usable.
class DegenerateFit : public Error {
public:
    using Error::Error;
};

/// Hessian shell means show no decay toward a constant matrix.
class NonConvergent : public Error {
public:
    using Error::Error;
};

/// Requested harmonic degree violates the expansion's admissible bound.
class DegreeOverflow : public Error {
public:
    using Error::Error;
};

/// Operation called outside its decay regime (e.g. second expansion with zeta <= n).
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Invalid scenario configuration (carries a field-level message).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace maex
