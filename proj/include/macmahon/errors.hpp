#ifndef MACMAHON_ERRORS_HPP
#define MACMAHON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace macmahon {

/// Raised by exp/compose when the argument series has a non-vanishing
/// constant term.
class NonzeroConstantTerm : public std::domain_error {
public:
    explicit NonzeroConstantTerm(const std::string& what) : std::domain_error(what) {}
};

/// A target series is not in the span of the generator monomials.
class NoRepresentation : public std::runtime_error {
public:
    explicit NoRepresentation(const std::string& what) : std::runtime_error(what) {}
};

/// Lattice sums with an exponent below 2 do not converge.
class DivergenceGuard : public std::domain_error {
public:
    explicit DivergenceGuard(const std::string& what) : std::domain_error(what) {}
};

class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace macmahon

#endif // MACMAHON_ERRORS_HPP
