#pragma once

#include <map>
#include <string>
#include <vector>

namespace geodcount::verify {

struct VerifyResult {
    std::string identity;
    std::string grid;
    double max_rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    std::int64_t p = 3;
    double X = 20.0;
    double D = 0.3;
    std::map<std::string, double> tol_overrides;  // identity name -> tolerance
};

// suite in {"geometry", "specfun", "trace", "group"}
std::vector<VerifyResult> run_suite(const std::string& suite, const VerifyOptions& opts = {});

} // namespace geodcount::verify
