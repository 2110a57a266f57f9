#ifndef QUATSYLV_ERRORS_HPP
#define QUATSYLV_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace quatsylv {

/// The equation is provably unsolvable; carries the obstruction magnitudes
/// (one per column of the right-hand side) that witness it.
class NoSolutionError : public std::runtime_error {
public:
    NoSolutionError(const std::string& what, std::vector<double> obstructions)
        : std::runtime_error(what), obstruction_norms(std::move(obstructions)) {}
    std::vector<double> obstruction_norms;
};

/// A regular-case solver was handed an instance whose spectra overlap.
class SingularCaseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The instance is singular but not of a shape the singular machinery covers.
class UnsupportedShapeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace quatsylv

#endif
