#pragma once

#include <cstdint>

namespace nkstar {

enum class FormulaBranch { SmallH, Otherwise };

// Closed-form prediction for the minimum size of an edge cut that
// disconnects an (n,k)-star graph while every survivor keeps degree >= h.
// Two candidate expressions compete:
//   clique_side_value = (n-h-1)(h+1)   isolate h+1 vertices of one clique
//   split_value       = (n-k+1)(k-1)   split off one whole clique
// The selected value is clique_side_value exactly when h <= k-2 and
// 2h <= n-2; otherwise split_value.
struct FormulaResult {
    int n = 0;
    int k = 0;
    int h = 0;
    std::int64_t clique_side_value = 0;
    std::int64_t split_value = 0;
    std::int64_t psi = 0;    // min of the two expressions
    std::int64_t omega = 0;  // max of the two expressions
    std::int64_t theorem_value = 0;
    FormulaBranch branch = FormulaBranch::Otherwise;
};

// Requires 2 <= k <= n-1 and 0 <= h <= n-k; violations throw
// std::domain_error naming the violated inequality.
FormulaResult evaluate(int n, int k, int h);

// On the half range 2h <= n-2 the minimum psi is reached piecewise:
// by the clique-side expression for h <= k-2, by the split expression
// for h >= k-1. Requires the evaluate() preconditions plus 2h <= n-2.
enum class PsiArm { CliqueSide, Split };

struct PsiBranchResult {
    PsiArm arm = PsiArm::CliqueSide;
    std::int64_t value = 0;
};

PsiBranchResult psi_branch(int n, int k, int h);

// The profile f(x) = (n-x)x both expressions specialize; symmetric about
// n/2 and concave, so comparisons reduce to distance from n/2.
std::int64_t f_profile(int n, int x);

// True for the odd-n boundary 2h == n-1, where neither half-range
// hypothesis applies; reports flag such rows instead of asserting an order.
bool half_gap(int n, int h);

}  // namespace nkstar
