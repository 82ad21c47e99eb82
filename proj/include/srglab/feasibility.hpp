#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "srg_params.hpp"

namespace srglab {

struct FeasibilityCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FeasibilityReport {
    std::vector<FeasibilityCheck> checks;
    bool feasible = false;
};

// Necessary conditions on (n,d,lambda,mu), all in exact integer arithmetic:
//   1. (n-d-1) mu = d (d-lambda-1)          (two-path counting)
//   2. n-1 - (2d + (n-1)(lambda-mu))/t is a nonnegative even integer, i.e.
//      the restricted eigenvalue multiplicities are nonnegative integers.
//      When t^2 is not a perfect square this forces the conference case:
//      2d + (n-1)(lambda-mu) = 0 with n-1 even.
//   3. 6 | n d lambda                        (triangle count n d lambda / 6)
inline FeasibilityReport feasibility(const SrgParams& p) {
    validate(p);
    FeasibilityReport rep;

    const long long lhs1 = (p.n - p.d - 1) * p.mu;
    const long long rhs1 = p.d * (p.d - p.lambda - 1);
    rep.checks.push_back({"degree-count", lhs1 == rhs1,
                          "(n-d-1)mu = " + std::to_string(lhs1) + ", d(d-lambda-1) = " +
                              std::to_string(rhs1)});

    const long long t2 = t_squared(p);
    const long long num = 2 * p.d + (p.n - 1) * (p.lambda - p.mu);
    const long long s = isqrt_ll(t2);
    bool ok2 = false;
    std::string det2;
    if (t2 > 0 && s * s == t2) {
        if (num % s != 0) {
            det2 = "t = " + std::to_string(s) + " does not divide 2d+(n-1)(lambda-mu) = " +
                   std::to_string(num);
        } else {
            const long long split = num / s;
            const long long twice_m1 = p.n - 1 - split;
            const long long twice_m2 = p.n - 1 + split;
            ok2 = twice_m1 >= 0 && twice_m2 >= 0 && twice_m1 % 2 == 0;
            det2 = "multiplicities " + std::to_string(twice_m1) + "/2 and " +
                   std::to_string(twice_m2) + "/2";
        }
    } else if (t2 > 0) {
        ok2 = num == 0 && (p.n - 1) % 2 == 0;
        det2 = "t irrational: needs 2d+(n-1)(lambda-mu) = 0 (got " + std::to_string(num) +
               ") and n-1 even";
    } else {
        det2 = "t = 0";
    }
    rep.checks.push_back({"multiplicity-integrality", ok2, det2});

    const long long triple = p.n * p.d * p.lambda;
    rep.checks.push_back({"triangle-divisibility", triple % 6 == 0,
                          "n d lambda = " + std::to_string(triple) + ", triangles = n d lambda / 6"});

    rep.feasible = true;
    for (const auto& c : rep.checks) rep.feasible = rep.feasible && c.passed;
    return rep;
}

} // namespace srglab
