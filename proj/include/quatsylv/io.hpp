#ifndef QUATSYLV_IO_HPP
#define QUATSYLV_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "quatsylv/qmatrix.hpp"
#include "quatsylv/qpoly.hpp"

namespace quatsylv {

/// Text formats. One quaternion is the token "w,x,y,z" (four decimal or
/// scientific reals, comma-separated, no internal spaces), written with 17
/// significant digits so parse(render(q)) round-trips binary64 exactly.
/// Lines starting with '#' are comments everywhere.

/// Thrown on malformed input; maps to exit code 2 in the CLI.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Quaternion parse_quaternion(std::string_view token);
std::string render_quaternion(const Quaternion& q);

/// Matrix file: header line "n m", then n lines of m tokens.
QMatrix parse_matrix(std::istream& in);
void render_matrix(std::ostream& out, const QMatrix& m);
QMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const QMatrix& m);

/// Chain / polynomial files: one quaternion per token, any whitespace.
/// Polynomials list coefficients lowest degree first.
std::vector<Quaternion> parse_tokens(std::istream& in);
std::vector<Quaternion> read_token_file(const std::string& path);
void write_tokens(std::ostream& out, std::span<const Quaternion> qs);

SphericalChain read_chain_file(const std::string& path, double tol = kDefaultTol);
QPoly read_poly_file(const std::string& path);

} // namespace quatsylv

#endif
