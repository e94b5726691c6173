#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "maex/errors.hpp"
#include "maex/symmetric_matrix.hpp"

namespace maex {

/// The five branches of the operator family F_tau, selected by exact
/// comparison of tau against 0, pi/4 and pi/2 (the doubles nearest those
/// angles); open intervals otherwise.
enum class Branch {
    monge_ampere,        // tau = 0:        (1/n) sum log(lambda_i)
    small_tau,           // 0 < tau < pi/4
    inverse_tau,         // tau = pi/4:     -sqrt(2) sum 1/(1+lambda_i)
    large_tau,           // pi/4 < tau < pi/2
    special_lagrangian,  // tau = pi/2:     sum arctan(lambda_i)
};

inline const char* branch_name(Branch b) {
    switch (b) {
        case Branch::monge_ampere: return "monge_ampere";
        case Branch::small_tau: return "small_tau";
        case Branch::inverse_tau: return "inverse_tau";
        case Branch::large_tau: return "large_tau";
        case Branch::special_lagrangian: return "special_lagrangian";
    }
    return "?";
}

/// Branch parameter tau with the derived constants a = cot(tau) and
/// b = sqrt(|cot^2(tau) - 1|). a and b are meaningful only on the interior
/// branches; on inverse_tau they take their literal values (1, 0) but the
/// pi/4 formula does not use them.
struct TauParams {
    double tau = 0.0;
    Branch branch = Branch::monge_ampere;
    double a = std::numeric_limits<double>::quiet_NaN();
    double b = std::numeric_limits<double>::quiet_NaN();

    static TauParams from_angle(double tau) {
        constexpr double quarter_pi = std::numbers::pi / 4.0;
        constexpr double half_pi = std::numbers::pi / 2.0;
        if (!(tau >= 0.0 && tau <= half_pi))
            throw DomainError("TauParams: tau must lie in [0, pi/2], got " + std::to_string(tau));
        TauParams p;
        p.tau = tau;
        if (tau == 0.0) {
            p.branch = Branch::monge_ampere;
        } else if (tau == quarter_pi) {
            p.branch = Branch::inverse_tau;
            p.a = 1.0;
            p.b = 0.0;
        } else if (tau == half_pi) {
            p.branch = Branch::special_lagrangian;
        } else {
            p.a = 1.0 / std::tan(tau);
            p.b = std::sqrt(std::abs(p.a * p.a - 1.0));
            p.branch = tau < quarter_pi ? Branch::small_tau : Branch::large_tau;
        }
        return p;
    }
};

/// Lower eigenvalue bound of the branch's open admissible set.
/// large_tau uses -a-b so the arctan argument is a ratio with positive
/// denominator (the formula stays single-valued); special_lagrangian is
/// unconstrained.
inline double branch_lower_bound(const TauParams& tau) {
    switch (tau.branch) {
        case Branch::monge_ampere: return 0.0;
        case Branch::small_tau: return -tau.a + tau.b;
        case Branch::inverse_tau: return -1.0;
        case Branch::large_tau: return -tau.a - tau.b;
        case Branch::special_lagrangian: return -std::numeric_limits<double>::infinity();
    }
    return 0.0;
}

inline DomainReport check_domain(const TauParams& tau, const SymMatrix& m) {
    const double bound = branch_lower_bound(tau);
    DomainReport rep;
    if (std::isinf(bound)) {
        rep.admissible = true;
        rep.margin = std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.margin = m.min_eigenvalue() - bound;
    rep.admissible = rep.margin > 0.0;
    if (!rep.admissible) {
        rep.violated_constraint = std::string("lambda_min > ") + std::to_string(bound) +
                                  " required on branch " + branch_name(tau.branch);
    }
    return rep;
}

namespace detail {

inline void require_admissible(const TauParams& tau, const SymMatrix& m, const char* op) {
    DomainReport rep = check_domain(tau, m);
    if (!rep.admissible)
        throw DomainError(std::string(op) + ": matrix outside admissible domain of branch " +
                              branch_name(tau.branch) + " (margin " + std::to_string(rep.margin) +
                              ")",
                          rep);
}

/// Scalar branch function applied to a single eigenvalue (the summand of F_tau).
inline double branch_phi(const TauParams& tau, int n, double lam) {
    switch (tau.branch) {
        case Branch::monge_ampere:
            return std::log(lam) / n;
        case Branch::small_tau:
            return std::sqrt(tau.a * tau.a + 1.0) / (2.0 * tau.b) *
                   std::log((lam + tau.a - tau.b) / (lam + tau.a + tau.b));
        case Branch::inverse_tau:
            return -std::sqrt(2.0) / (1.0 + lam);
        case Branch::large_tau:
            return std::sqrt(tau.a * tau.a + 1.0) / tau.b *
                   std::atan((lam + tau.a - tau.b) / (lam + tau.a + tau.b));
        case Branch::special_lagrangian:
            return std::atan(lam);
    }
    return 0.0;
}

/// Derivative of branch_phi in the eigenvalue.
inline double branch_phi_prime(const TauParams& tau, int n, double lam) {
    switch (tau.branch) {
        case Branch::monge_ampere:
            return 1.0 / (n * lam);
        case Branch::small_tau:
            return std::sqrt(tau.a * tau.a + 1.0) /
                   ((lam + tau.a - tau.b) * (lam + tau.a + tau.b));
        case Branch::inverse_tau: {
            double d = 1.0 + lam;
            return std::sqrt(2.0) / (d * d);
        }
        case Branch::large_tau: {
            double p = lam + tau.a + tau.b, q = lam + tau.a - tau.b;
            return 2.0 * std::sqrt(tau.a * tau.a + 1.0) / (p * p + q * q);
        }
        case Branch::special_lagrangian:
            return 1.0 / (1.0 + lam * lam);
    }
    return 0.0;
}

}  // namespace detail

/// F_tau(lambda(M)): the branch formula applied to the eigenvalues of M.
/// Invariant under orthogonal conjugation of M.
inline double eval_F(const TauParams& tau, const SymMatrix& m) {
    detail::require_admissible(tau, m, "eval_F");
    const Spectrum& sp = m.spectrum();
    double s = 0.0;
    for (double lam : sp.eigenvalues) s += detail::branch_phi(tau, sp.n, lam);
    return s;
}

/// Matrix derivative DF_tau(lambda(M)) = V diag(phi'(lambda_i)) V^T.
/// The spectral-function formula is valid for repeated eigenvalues as well;
/// the result is symmetric positive definite on the admissible domain.
inline SymMatrix eval_DF(const TauParams& tau, const SymMatrix& m) {
    detail::require_admissible(tau, m, "eval_DF");
    const int n = m.dim();
    return map_spectrum(m, [&](double lam) { return detail::branch_phi_prime(tau, n, lam); });
}

}  // namespace maex
