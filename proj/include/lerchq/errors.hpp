#ifndef LERCHQ_ERRORS_HPP
#define LERCHQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lerchq {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact-series layer
struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& w = "series inverse: constant term vanishes") : Error(w) {}
};
struct NonzeroConstantTerm : Error {
    explicit NonzeroConstantTerm(const std::string& w = "series exponential: operand must start strictly above q^0") : Error(w) {}
};
struct DivergentProduct : Error {
    explicit DivergentProduct(const std::string& w = "infinite product does not converge") : Error(w) {}
};
struct LatticeError : Error {
    explicit LatticeError(const std::string& w = "exponent lattice is not contained in (1/24)Z") : Error(w) {}
};
struct OrderExceeded : Error {
    explicit OrderExceeded(const std::string& w = "coefficient requested beyond the reliable order") : Error(w) {}
};
struct ConstraintViolation : Error {
    explicit ConstraintViolation(const std::string& w = "parameter constraint violated") : Error(w) {}
};

// numeric layer
struct NomeOutsideDisk : Error {
    explicit NomeOutsideDisk(const std::string& w = "nome q must satisfy |q| < 1") : Error(w) {}
};
struct NomeOnUnitCircle : Error {
    explicit NomeOnUnitCircle(const std::string& w = "value undefined on |q| = 1") : Error(w) {}
};
struct TruncationFailure : Error {
    explicit TruncationFailure(const std::string& w = "tail bound not met within the term budget") : Error(w) {}
};
struct ThetaZero : Error {
    explicit ThetaZero(const std::string& w = "theta(v; tau) vanishes; normalized Lerch sum undefined") : Error(w) {}
};
struct PoleHit : Error {
    explicit PoleHit(const std::string& w = "a summand denominator vanishes") : Error(w) {}
};

// quadrature layer
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w = "quadrature node budget exceeded") : Error(w) {}
};
struct DecayCertificateFailed : Error {
    explicit DecayCertificateFailed(const std::string& w = "integrand has no certified decay along the ray") : Error(w) {}
};
struct PoleNearContour : Error {
    explicit PoleNearContour(const std::string& w = "a kernel pole lies too close to the contour") : Error(w) {}
};
struct PreconditionFailed : Error {
    explicit PreconditionFailed(const std::string& w = "route precondition failed") : Error(w) {}
};

// registry / CLI layer
struct UnknownIdentity : Error {
    explicit UnknownIdentity(const std::string& w = "no identity matches the filter") : Error(w) {}
};
struct UnknownFamily : Error {
    explicit UnknownFamily(const std::string& w = "unknown coefficient family") : Error(w) {}
};
struct ConfigInvalid : Error {
    explicit ConfigInvalid(const std::string& w = "invalid configuration") : Error(w) {}
};

} // namespace lerchq

#endif
