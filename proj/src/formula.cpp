#include "nkstar/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nkstar {

namespace {

void check_range(int n, int k, int h) {
    if (k < 2) {
        throw std::domain_error("formula: requires k >= 2, got k=" + std::to_string(k));
    }
    if (k > n - 1) {
        throw std::domain_error("formula: requires k <= n-1, got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n));
    }
    if (h < 0) {
        throw std::domain_error("formula: requires h >= 0, got h=" + std::to_string(h));
    }
    if (h > n - k) {
        throw std::domain_error("formula: requires h <= n-k, got h=" + std::to_string(h) +
                                ", n-k=" + std::to_string(n - k));
    }
}

}  // namespace

FormulaResult evaluate(int n, int k, int h) {
    check_range(n, k, h);
    FormulaResult r;
    r.n = n;
    r.k = k;
    r.h = h;
    r.clique_side_value = static_cast<std::int64_t>(n - h - 1) * (h + 1);
    r.split_value = static_cast<std::int64_t>(n - k + 1) * (k - 1);
    r.psi = std::min(r.clique_side_value, r.split_value);
    r.omega = std::max(r.clique_side_value, r.split_value);
    // h <= n/2 - 1 over integers without division: 2h <= n-2
    if (h <= k - 2 && 2 * h <= n - 2) {
        r.branch = FormulaBranch::SmallH;
        r.theorem_value = r.clique_side_value;
    } else {
        r.branch = FormulaBranch::Otherwise;
        r.theorem_value = r.split_value;
    }
    return r;
}

PsiBranchResult psi_branch(int n, int k, int h) {
    check_range(n, k, h);
    if (2 * h > n - 2) {
        throw std::domain_error("psi_branch: requires 2h <= n-2, got h=" + std::to_string(h) +
                                ", n=" + std::to_string(n));
    }
    FormulaResult r = evaluate(n, k, h);
    PsiBranchResult out;
    if (h <= k - 2) {
        out.arm = PsiArm::CliqueSide;
        out.value = r.clique_side_value;
    } else {
        out.arm = PsiArm::Split;
        out.value = r.split_value;
    }
    return out;
}

std::int64_t f_profile(int n, int x) {
    return static_cast<std::int64_t>(n - x) * x;
}

bool half_gap(int n, int h) {
    return 2 * h == n - 1;
}

}  // namespace nkstar
