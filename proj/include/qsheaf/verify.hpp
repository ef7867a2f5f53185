#pragma once

#include <string>
#include <vector>

#include "qsheaf/arrangement.hpp"
#include "qsheaf/catc.hpp"

namespace qs {

struct VerifyConfig {
    CartanDatum D;
    int l = 5, k = 1;
    int max_depth = 4;
    // Lambdas to test with; empty means a fixed pseudorandom sample
    std::vector<Weight> weights;
    unsigned seed = 1;
};

struct CheckResult {
    std::string suite, tag;
    bool pass = true;
    long cases = 0;
    std::string detail;
};

const std::vector<std::string>& verify_suites();  // without "all"
// throws ParameterError for an unknown suite
std::vector<CheckResult> run_verify(const VerifyConfig& cfg, const std::string& suite);

// all integral dominant weights of the first alcove
std::vector<Weight> alcove_weights(const CartanDatum& D, const EllData& E);
// -w0 lambda
Weight dual_weight(const CartanDatum& D, const Weight& lambda);
std::vector<RootVec> weights_up_to(int rank, int max_depth);

}  // namespace qs
