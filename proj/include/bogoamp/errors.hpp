#ifndef BOGOAMP_ERRORS_HPP
#define BOGOAMP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bogoamp {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed inputs: dimension mismatches, non-Hermitian Hamiltonians,
// broken particle-hole structure, negative rates.
class StructuralError : public Error {
public:
    using Error::Error;
};

// Hamiltonian cannot be brought to Bogoliubov normal form
// (e.g. detuning below drive, or squeezing above hopping).
class UnstableHamiltonianError : public Error {
public:
    using Error::Error;
};

// Hamiltonian is not one of the recognized one- or two-mode normal forms.
class UnsupportedFormError : public Error {
public:
    using Error::Error;
};

// Requested a quantity that only exists for amplifying configurations.
class NoAmplificationError : public Error {
public:
    using Error::Error;
};

class NotSqueezedError : public Error {
public:
    using Error::Error;
};

// Frequency grid does not bracket the feature being extracted.
class GridError : public Error {
public:
    using Error::Error;
};

// Iterative solver failed (non-convergence inside a bracket, etc.).
class SolverError : public Error {
public:
    using Error::Error;
};

} // namespace bogoamp

#endif
