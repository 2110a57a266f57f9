#include "quatsylv/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace quatsylv {

namespace {

double parse_real(std::string_view s) {
    if (s.empty()) throw ParseError("empty number field");
    std::string buf(s);
    char* end = nullptr;
    const double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size()) throw ParseError("malformed number '" + buf + "'");
    return v;
}

std::string render_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool comment_or_blank(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

} // namespace

Quaternion parse_quaternion(std::string_view token) {
    double comp[4];
    size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const size_t comma = token.find(',', start);
        const bool last = i == 3;
        if (last != (comma == std::string_view::npos))
            throw ParseError("quaternion token must have four comma-separated components: '" +
                             std::string(token) + "'");
        comp[i] = parse_real(token.substr(start, last ? std::string_view::npos : comma - start));
        start = comma + 1;
    }
    return {comp[0], comp[1], comp[2], comp[3]};
}

std::string render_quaternion(const Quaternion& q) {
    return render_real(q.w) + "," + render_real(q.x) + "," + render_real(q.y) + "," +
           render_real(q.z);
}

QMatrix parse_matrix(std::istream& in) {
    std::string line;
    int n = -1, m = -1;
    QMatrix out;
    int filled = 0;
    while (std::getline(in, line)) {
        if (comment_or_blank(line)) continue;
        const std::vector<std::string> toks = split_ws(line);
        if (n < 0) {
            if (toks.size() != 2) throw ParseError("matrix header must be 'rows cols'");
            n = static_cast<int>(parse_real(toks[0]));
            m = static_cast<int>(parse_real(toks[1]));
            if (n < 1 || m < 1) throw ParseError("matrix dimensions must be positive");
            out = QMatrix(n, m);
            continue;
        }
        if (filled >= n) throw ParseError("matrix has more rows than the header declares");
        if (static_cast<int>(toks.size()) != m)
            throw ParseError("matrix row " + std::to_string(filled + 1) + " has " +
                             std::to_string(toks.size()) + " entries, expected " + std::to_string(m));
        for (int j = 0; j < m; ++j) out(filled, j) = parse_quaternion(toks[j]);
        ++filled;
    }
    if (n < 0) throw ParseError("empty matrix file");
    if (filled != n)
        throw ParseError("matrix has " + std::to_string(filled) + " rows, header declares " +
                         std::to_string(n));
    return out;
}

void render_matrix(std::ostream& out, const QMatrix& m) {
    out << m.rows() << " " << m.cols() << "\n";
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out << " ";
            out << render_quaternion(m(i, j));
        }
        out << "\n";
    }
}

QMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_matrix(in);
}

void write_matrix_file(const std::string& path, const QMatrix& m) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    render_matrix(out, m);
}

std::vector<Quaternion> parse_tokens(std::istream& in) {
    std::vector<Quaternion> out;
    std::string line;
    while (std::getline(in, line)) {
        if (comment_or_blank(line)) continue;
        for (const std::string& tok : split_ws(line)) out.push_back(parse_quaternion(tok));
    }
    return out;
}

std::vector<Quaternion> read_token_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_tokens(in);
}

void write_tokens(std::ostream& out, std::span<const Quaternion> qs) {
    for (size_t i = 0; i < qs.size(); ++i) {
        if (i) out << " ";
        out << render_quaternion(qs[i]);
    }
    out << "\n";
}

SphericalChain read_chain_file(const std::string& path, double tol) {
    const std::vector<Quaternion> elems = read_token_file(path);
    try {
        return SphericalChain{elems, tol};
    } catch (const std::domain_error& e) {
        throw ParseError("'" + path + "': " + e.what());
    }
}

QPoly read_poly_file(const std::string& path) { return QPoly{read_token_file(path)}; }

} // namespace quatsylv
