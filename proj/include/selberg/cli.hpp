#pragma once

// Config-file parsing and command dispatch for the selberg command-line tool.
//
// Format (one `key = value` per line, `#` starts a comment):
//
//   [function]     name, builtin (zeta | dirichlet | delta), modulus, character,
//                  N, power, pole_order, residue_re, residue_im, theta_bound,
//                  bound_C, bound_exp, euler_default (zeta | one)
//   [gamma]        epsilon_re, epsilon_im, Q, factor = w, mu_re, mu_im (repeated)
//   [coefficients] a = n, re, im (repeated)
//                  euler = p, A1_re, A1_im, ...       F_p = 1 / (1 + A1 x + ...)
//                  euler_poly = p, A1_re, A1_im, ...  F_p = 1 + A1 x + ...
//   [gl2]          alpha, beta_re, beta_im, q, builtin (delta), N, bound_C, bound_exp
//   [check]        grid, r, theta, tol, xmax, max_terms, alpha
//
// `character` indexes enumerate_characters(modulus) (0 is principal).

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selberg/converse.hpp"
#include "selberg/lfunc.hpp"

namespace selberg::cli {

class ConfigError : public DomainError {
public:
    ConfigError(int line, const std::string& field, const std::string& msg);
    int line() const noexcept { return line_; }
    const std::string& field() const noexcept { return field_; }

private:
    int line_;
    std::string field_;
};

struct ParsedConfig {
    std::optional<lfunc::SelbergFunction> function;
    std::optional<converse::GL2Params> gl2;
    std::map<std::string, std::string> check;
};

/// min_N raises the realized coefficient range of builtins and Euler products.
ParsedConfig parse_config(const std::string& text, std::size_t min_N = 0);
ParsedConfig load_config(const std::string& path, std::size_t min_N = 0);

struct RunConfig {
    std::string command;
    std::string input;
    std::string with;  // second config (stats --orth)
    std::string out;   // CSV path; none written when empty
    std::optional<double> tol;
    std::optional<double> xmax;
    std::vector<double> grid;
    std::optional<std::size_t> max_terms;
    bool nf = false, orth = false, pole = false;
    double alpha = 0.0;

    void validate() const;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"fe-check", "converse-check", "stats",        "degree-audit",
                                            "axioms",   "specfun-test",   "list-builtins"};
    return c;
}

/// Runs one command. The report goes to `report`, the CSV to rc.out (relative
/// paths resolved against $SELBERG_OUT_DIR when set). Returns 0 iff every
/// check is within tolerance, 1 otherwise.
int run(const RunConfig& rc, std::ostream& report);

/// %.17g
std::string fmt17(double v);

}  // namespace selberg::cli
