#ifndef CCA_ERRORS_HPP
#define CCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cca {

// Base class for physically meaningful failures (poles, band edges,
// singular solves, missing spectral features). The CLI maps these to
// exit code 4.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Photon energy coincides with an atomic transition within the pole
// tolerance; the renormalized site energy diverges there.
class AtomPoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// |E - omega_c| >= 2v: no propagating incident photon exists in the leads.
class LeadBandEdgeError : public DomainError {
public:
    using DomainError::DomainError;
};

// Linear system numerically singular (condition estimate > 1e14), or the
// requested solve sits on a pole / band edge where the system degenerates.
class SingularSystemError : public DomainError {
public:
    using DomainError::DomainError;
};

// No |x(E)| = 1 crossing bracketed inside the lead band.
class NoGapError : public DomainError {
public:
    using DomainError::DomainError;
};

// Requested spectral feature (peak/dip) does not exist for these parameters.
class FeatureAbsentError : public DomainError {
public:
    using DomainError::DomainError;
};

// Invalid or missing configuration; carries the offending field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cca

#endif
