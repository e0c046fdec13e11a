#pragma once

#include <string>
#include <vector>

#include "a3dp/density.hpp"
#include "a3dp/torsor.hpp"

namespace a3dp {

struct LemmaReport {
    std::string lemma;     // "inter" | "sum7" | "sum6"
    std::string instance;  // eta tuple and B, human readable
    double main_term = 0;
    double observed = 0;
    double residual = 0;    // observed - main_term
    double scale = 0;       // error-term normalisation
    double normalized = 0;  // |residual| / scale
};

// Counts N(eta', B) directly: (alpha1, alpha2, alpha4) satisfying the two
// torsor equations, the replaced height conditions and (gcd1)-(gcd3),
// by sweeping alpha2 over the condition-3 interval; compares with the main
// term  A2/(eta4 eta5) g1(eta7/Y7, eta6/Y6) theta(eta').
// Requires eta' to satisfy conditions 1-2 and (gcd4)-(gcd7).
LemmaReport check_lemma_inter(const Eta7& etap, i64 B);

// Sums the per-eta' main term over eta7 (condition 2, gcd4) and compares
// with the closed form  A2 Y7/(eta4 eta5) g2(eta6/Y6) theta1'(eta) theta2'(eta, eta6).
// Requires eta in V, gcd6, gcd7; eta6 under condition 1 with gcd5.
LemmaReport check_sum_eta7(const Eta5& eta, i64 eta6, i64 B);

// Sums the per-eta' main term over eta6 and eta7 and compares with
// zeta(2)^{-1} (B/eta^(1,1,1,1,1)) g3(eta, B) Theta(eta).
LemmaReport check_sum_eta6(const Eta5& eta, i64 B);

struct LadderRow {
    i64 B = 0;
    i64 n_direct = 0;     // N_{U,H}(B); equals 2 #T(B) (spot-checked directly below the limit)
    i64 n_torsor2 = 0;    // 2 #T(B)
    bool spot_checked = false;
    double c_fit = 0;     // N / (B log^5 B)
    double ratio = 0;     // c_fit / c_VH
    double elapsed = 0;
};

struct HeightLadder {
    std::vector<LadderRow> rows;
    double c_vh = 0;
    int picard_rank = 6;
};

// Fills the ladder with torsor counts (direct counts as spot checks up to
// direct_spot_limit) and the fitted constants against c_vh.
HeightLadder fit_asymptotic(const std::vector<i64>& ladder, double c_vh,
                            i64 direct_spot_limit = 10000, int workers = 0);

}  // namespace a3dp
