#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torelli/errors.hpp"
#include "torelli/rational.hpp"

namespace torelli {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitDomain = 2, kExitUsage = 64 };

int exit_code_for(ErrorCode code);

// "1e-9", "0.001" or "1/1000000000", read exactly.
Rational parse_exact_number(const std::string& text);

struct ScanRow {
    int g = 0, n = 0;
    std::string verdict;  // PASS, FAIL or DEGENERATE
    std::optional<int> k, l, N_claim, N_certified;
    std::optional<Rational> bound, chain_final, threshold;
    std::vector<std::string> failures;
};

struct ScanOptions {
    int gmin = 4, gmax = 16, nmin = 2, nmax = 12;
    int step_cap = 64;
    Rational perron_tol{1, 1000000000};
    int threads = 0;  // 0: hardware concurrency
};

ScanRow scan_cell(int g, int n, int step_cap, const Rational& perron_tol);
// Rows in g-major order regardless of scheduling.
std::vector<ScanRow> scan_grid(const ScanOptions& opt);
std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows);

// Full command line: construct, certify, homology, bounds, scan.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torelli
