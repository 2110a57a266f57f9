// quatsylv: solve quaternion Sylvester equations AX - XB = C from matrix
// files, analyze the singular two-diagonal case, emit nullspace bases, and
// run two-sided polynomial interpolation.
//
// Exit codes: 0 solved/answered, 1 mathematically no solution, 2 input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "quatsylv/errors.hpp"
#include "quatsylv/interp.hpp"
#include "quatsylv/io.hpp"
#include "quatsylv/oracle.hpp"
#include "quatsylv/regular.hpp"
#include "quatsylv/singular.hpp"

namespace qs = quatsylv;

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitInputError = 2;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void print_obstructions(const std::vector<double>& norms) {
    std::cout << "no solution\n";
    std::cout << "obstructions:";
    for (double v : norms) std::cout << " " << fmt(v);
    std::cout << "\n";
}

int cmd_check(const std::string& a_path, const std::string& b_path, double tol) {
    const qs::QMatrix a = qs::read_matrix_file(a_path);
    const qs::QMatrix b = qs::read_matrix_file(b_path);
    if (a.rows() != a.cols() || b.rows() != b.cols())
        throw qs::ParseError("check: A and B must be square");
    std::cout << (qs::uniqueness_check(a, b, tol) ? "unique" : "singular") << "\n";
    std::cout << "tol: " << fmt(tol) << "\n";
    return kExitSolved;
}

int cmd_solve(const std::string& a_path, const std::string& b_path, const std::string& c_path,
              const std::string& method, const std::string& out_path, double tol) {
    const qs::QMatrix a = qs::read_matrix_file(a_path);
    const qs::QMatrix b = qs::read_matrix_file(b_path);
    const qs::QMatrix c = qs::read_matrix_file(c_path);

    qs::RegularSolveReport rep;
    if (method == "auto") {
        rep = qs::solve(a, b, c, tol);
    } else {
        if (method == "lift") {
            rep.x = qs::solve_lift(a, b, c, tol);
            rep.method = qs::Method::lift;
        } else if (method == "poly") {
            rep.x = qs::solve_poly_formula(a, b, c, tol);
            rep.method = qs::Method::poly_formula;
        } else if (method == "jordan") {
            const auto alpha = a(0, 0);
            const auto beta = b(0, 0);
            rep.x = qs::solve_jordan(alpha, a.rows(), beta, b.rows(), c, tol);
            rep.method = qs::Method::jordan;
        } else if (method == "tridiag") {
            std::vector<qs::Quaternion> diag(a.rows());
            for (int i = 0; i < a.rows(); ++i) diag[i] = a(i, i);
            rep.x = qs::solve_two_diagonal(qs::SphericalChain{diag, tol}, b, c, tol);
            rep.method = qs::Method::two_diagonal;
        } else if (method == "rows") {
            std::vector<qs::Quaternion> diag(a.rows());
            for (int i = 0; i < a.rows(); ++i) diag[i] = a(i, i);
            rep.x = qs::solve_rows_two_diagonal(diag, b, c, tol);
            rep.method = qs::Method::rows_lower_tri;
        } else if (method == "cols") {
            rep.x = qs::solve_upper_triangular_cols(a, b, c, tol);
            rep.method = qs::Method::cols_upper_tri;
        } else {
            throw qs::ParseError("unknown method '" + method + "'");
        }
        rep.residual = qs::fnorm(a * rep.x - rep.x * b - c);
    }

    std::cout << "method: " << qs::method_name(rep.method) << "\n";
    std::cout << "residual: " << fmt(rep.residual) << "\n";
    std::cout << "tol: " << fmt(tol) << "\n";
    if (out_path.empty()) {
        qs::render_matrix(std::cout, rep.x);
    } else {
        qs::write_matrix_file(out_path, rep.x);
    }
    return kExitSolved;
}

int cmd_nullbasis(const std::string& alpha_path, const std::string& beta_path,
                  const std::string& out_dir, double tol) {
    const qs::SphericalChain alpha = qs::read_chain_file(alpha_path, tol);
    const qs::SphericalChain beta = qs::read_chain_file(beta_path, tol);
    if (!qs::similar(alpha.front(), beta.front(), tol))
        throw qs::ParseError("nullbasis: chains must share one conjugacy class");

    const std::vector<qs::QMatrix> basis = qs::null_basis(alpha, beta, tol);

    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    std::ofstream manifest(fs::path(out_dir) / "manifest.txt");
    if (!manifest) throw qs::ParseError("cannot write manifest in '" + out_dir + "'");
    manifest << "# homogeneous nullspace basis: file  column-parameter-j  plane-basis-index\n";
    manifest << "# dimension: " << basis.size() << "\n";
    for (size_t t = 0; t < basis.size(); ++t) {
        char name[32];
        std::snprintf(name, sizeof name, "basis_%02zu.qm", t);
        qs::write_matrix_file((fs::path(out_dir) / name).string(), basis[t]);
        manifest << name << " " << (t / 2 + 1) << " " << (t % 2) << "\n";
    }
    std::cout << "basis: " << basis.size() << " matrices in " << out_dir << "\n";
    std::cout << "tol: " << fmt(tol) << "\n";
    return kExitSolved;
}

int cmd_interp(const std::string& alpha_path, const std::string& beta_path,
               const std::string& g_path, const std::string& gt_path, double tol) {
    const qs::SphericalChain alpha = qs::read_chain_file(alpha_path, tol);
    const qs::SphericalChain beta = qs::read_chain_file(beta_path, tol);
    const qs::QPoly g = qs::read_poly_file(g_path);
    const qs::QPoly gt = qs::read_poly_file(gt_path);

    const qs::InterpResult res = [&] {
        try {
            return qs::interpolate(qs::InterpProblem::make(alpha, beta, g, gt, tol));
        } catch (const std::invalid_argument& e) {
            throw qs::ParseError(e.what());
        }
    }();

    std::cout << "f:";
    for (int i = 0; i <= res.f0.degree(); ++i)
        std::cout << " " << qs::render_quaternion(res.f0.coeff(i));
    std::cout << "\n";
    std::cout << "residual_p: " << fmt(res.membership_residual_p) << "\n";
    std::cout << "residual_q: " << fmt(res.membership_residual_q) << "\n";
    std::cout << "forms_gap: " << fmt(res.forms_gap) << "\n";
    std::cout << "tol: " << fmt(tol) << "\n";
    return kExitSolved;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quaternion Sylvester equation toolkit"};
    app.require_subcommand(1);
    double tol = 1e-9;
    app.add_option("--tol", tol, "zero/similarity tolerance")->capture_default_str();

    std::string a_path, b_path, c_path, out_path, method = "auto";
    std::string alpha_path, beta_path, g_path, gt_path;

    CLI::App* check = app.add_subcommand("check", "is AX - XB = C uniquely solvable?");
    check->add_option("A", a_path, "matrix file")->required();
    check->add_option("B", b_path, "matrix file")->required();

    CLI::App* solve = app.add_subcommand("solve", "solve AX - XB = C");
    solve->add_option("A", a_path, "matrix file")->required();
    solve->add_option("B", b_path, "matrix file")->required();
    solve->add_option("C", c_path, "matrix file")->required();
    solve->add_option("--method", method, "auto|lift|poly|jordan|tridiag|rows|cols")
        ->capture_default_str();
    solve->add_option("-o,--output", out_path, "write X here (default: stdout)");

    CLI::App* nullb = app.add_subcommand("nullbasis", "basis of the homogeneous solution set");
    nullb->add_option("alpha", alpha_path, "chain file")->required();
    nullb->add_option("beta", beta_path, "chain file")->required();
    nullb->add_option("-o,--output", out_path, "output directory")->required();

    CLI::App* interp = app.add_subcommand("interp", "two-sided polynomial interpolation");
    interp->add_option("alpha", alpha_path, "chain file")->required();
    interp->add_option("beta", beta_path, "chain file")->required();
    interp->add_option("g", g_path, "polynomial file (deg < len(alpha))")->required();
    interp->add_option("gt", gt_path, "polynomial file (deg < len(beta))")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(a_path, b_path, tol);
        if (solve->parsed()) return cmd_solve(a_path, b_path, c_path, method, out_path, tol);
        if (nullb->parsed()) return cmd_nullbasis(alpha_path, beta_path, out_path, tol);
        if (interp->parsed()) return cmd_interp(alpha_path, beta_path, g_path, gt_path, tol);
    } catch (const qs::NoSolutionError& e) {
        print_obstructions(e.obstruction_norms);
        return kExitNoSolution;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
