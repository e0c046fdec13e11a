#include "a3dp/verify.hpp"

#include <cmath>
#include <sstream>

namespace a3dp {

namespace {

i128 cond1_value(const Eta5& e, i64 e6) {
    return (i128)e[0] * e[1] * e[1] * e[2] * e[2] * e[2] * e[4] * e[4] * e6 * e6;
}
i128 cond2_value(const Eta5& e, i64 e7) {
    return (i128)e[0] * e[0] * e[0] * e[1] * e[1] * e[2] * e[3] * e[3] * e7 * e7;
}

std::string tuple_str(const Eta5& e, i64 e6, i64 e7, i64 B) {
    std::ostringstream os;
    os << "eta=(" << e[0] << "," << e[1] << "," << e[2] << "," << e[3] << "," << e[4];
    if (e6 > 0) os << ";" << e6;
    if (e7 > 0) os << "," << e7;
    os << "), B=" << B;
    return os.str();
}

double divisor_count_sqfree(i64 n) {
    return static_cast<double>(squarefree_divisors(n).size());
}

// Sum of the Lemma-6 main terms over eta7 under condition 2 and gcd4.
double sum_main_over_eta7(const Eta5& e, i64 e6, i64 B, double* g1_sup = nullptr) {
    double y6 = std::sqrt((double)B / (double)((i128)e[0] * e[1] * e[1] * e[2] * e[2] * e[2] *
                                               e[4] * e[4]));
    double y7 = std::sqrt((double)B / (double)((i128)e[0] * e[0] * e[0] * e[1] * e[1] * e[2] *
                                               e[3] * e[3]));
    double t6 = e6 / y6;
    double a2_over = (double)e[0] * e[1] * e[2] * e[3] * e[4] / ((double)e[3] * e[4]);
    i64 e7max = isqrt64(B / (e[0] * e[0] * e[0] * e[1] * e[1] * e[2] * e[3] * e[3]));
    double sum = 0;
    for (i64 e7 = 1; e7 <= e7max; ++e7) {
        if (gcd64(e7, e[1]) != 1 || gcd64(e7, e[2]) != 1 || gcd64(e7, e[3]) != 1 ||
            gcd64(e7, e[4]) != 1 || gcd64(e7, e6) != 1)
            continue;  // gcd4
        Eta7 etap{e[0], e[1], e[2], e[3], e[4], e6, e7};
        Rat th = theta(etap);
        double g = g1(e7 / y7, t6);
        if (g1_sup) *g1_sup = std::max(*g1_sup, g);
        if (th != 0) sum += a2_over * g * th.get_d();
    }
    return sum;
}

}  // namespace

LemmaReport check_lemma_inter(const Eta7& etap, i64 B) {
    const i64 e1 = etap[0], e2 = etap[1], e3 = etap[2], e4 = etap[3], e5 = etap[4],
              e6 = etap[5], e7 = etap[6];
    Eta5 e{e1, e2, e3, e4, e5};
    if (cond1_value(e, e6) > B || cond2_value(e, e7) > B)
        throw std::invalid_argument("check_lemma_inter: height conditions 1-2 fail");
    if (gcd64(e7, e2 * e3 * e4 * e5 * e6) != 1 || gcd64(e6, e1 * e2 * e4 * e5) != 1 ||
        gcd64(e1 * e4, e3 * e5) != 1 || gcd64(e2, e4 * e5) != 1)
        throw std::invalid_argument("check_lemma_inter: gcd4-gcd7 fail");

    const i64 C1 = e1 * e1 * e2 * e4 * e4 * e7;
    const i64 C2 = e2 * e3 * e3 * e5 * e5 * e6;
    const i64 pref3 = e1 * e2 * e3 * e5 * e7;
    const i64 a1max = B / pref3;
    const i128 P1 = (i128)e1 * e2 * e3 * e4 * e6;
    const i128 P2 = (i128)e1 * e2 * e3 * e5 * e7;
    const i64 A2 = e1 * e2 * e3 * e4 * e5;
    const i64 h13 = e1 * e2 * e3 * e7;  // prefix of replaced condition 3

    i64 n = 0;
    if (a1max > 0) {
        const i64 lo = static_cast<i64>(((i128)C1 - (i128)e5 * a1max) / e6) - 1;
        const i64 hi = static_cast<i64>(((i128)C1 + (i128)e5 * a1max) / e6) + 1;
        for (i64 a2 = lo; a2 <= hi; ++a2) {
            i128 w1 = (i128)C1 - (i128)e6 * a2;  // = -eta5 alpha1
            if (w1 % e5 != 0) continue;
            i64 a1 = static_cast<i64>(-w1 / e5);
            if (a1 == 0) continue;
            i128 w2 = (i128)C2 + (i128)e7 * a2;  // = eta4 alpha4
            if (w2 % e4 != 0) continue;
            i64 a4 = static_cast<i64>(w2 / e4);
            i128 aw1 = w1 < 0 ? -w1 : w1;
            i128 aw2 = w2 < 0 ? -w2 : w2;
            if ((i128)h13 * aw1 > (i128)B) continue;               // replaced condition 3
            if (aw1 * aw2 > (i128)B * e4 * e5) continue;           // replaced condition 4
            if (!coprime_i128(a1, P1)) continue;                   // gcd1
            if (!coprime_i128(a4, P2)) continue;                   // gcd2
            if (!coprime_i128(a2, (i128)A2)) continue;             // gcd3
            ++n;
        }
    }

    double y6 = std::sqrt((double)B / (double)((i128)e1 * e2 * e2 * e3 * e3 * e3 * e5 * e5));
    double y7 = std::sqrt((double)B / (double)((i128)e1 * e1 * e1 * e2 * e2 * e3 * e4 * e4));
    LemmaReport r;
    r.lemma = "inter";
    r.instance = tuple_str(e, e6, e7, B);
    r.main_term = (double)A2 / ((double)e4 * e5) * g1(e7 / y7, e6 / y6) * theta(etap).get_d();
    r.observed = static_cast<double>(n);
    r.residual = r.observed - r.main_term;
    r.scale = divisor_count_sqfree(e1) * divisor_count_sqfree(e3) *
              divisor_count_sqfree(e1 * e2 * e3);
    r.normalized = std::abs(r.residual) / r.scale;
    return r;
}

LemmaReport check_sum_eta7(const Eta5& e, i64 eta6, i64 B) {
    if (cond1_value(e, 1) > B || cond2_value(e, 1) > B)
        throw std::invalid_argument("check_sum_eta7: eta outside V");
    if (gcd64(e[0] * e[3], e[2] * e[4]) != 1 || gcd64(e[1], e[3] * e[4]) != 1)
        throw std::invalid_argument("check_sum_eta7: gcd6/gcd7 fail");
    if (cond1_value(e, eta6) > B || gcd64(eta6, e[0] * e[1] * e[3] * e[4]) != 1)
        throw std::invalid_argument("check_sum_eta7: eta6 violates condition 1 or gcd5");

    double g1_sup = 0;
    double observed = sum_main_over_eta7(e, eta6, B, &g1_sup);

    double y6 = std::sqrt((double)B / (double)((i128)e[0] * e[1] * e[1] * e[2] * e[2] * e[2] *
                                               e[4] * e[4]));
    double y7 = std::sqrt((double)B / (double)((i128)e[0] * e[0] * e[0] * e[1] * e[1] * e[2] *
                                               e[3] * e[3]));
    double a2_over = (double)e[0] * e[1] * e[2];  // A2/(eta4 eta5)
    QuadResult q = g2(eta6 / y6, e, B);
    double main = a2_over * y7 * q.value * Rat(theta1_prime(e) * theta2_prime(e, eta6)).get_d();

    LemmaReport r;
    r.lemma = "sum7";
    r.instance = tuple_str(e, eta6, 0, B);
    r.main_term = main;
    r.observed = observed;
    r.residual = observed - main;
    i64 sig_arg = e[0] * e[1] * e[2] * e[3] * e[4] * eta6;
    r.scale = a2_over * std::sqrt(y7) * sigma_minus(0.5, sig_arg) * (1.0 + g1_sup);
    r.normalized = std::abs(r.residual) / r.scale;
    return r;
}

LemmaReport check_sum_eta6(const Eta5& e, i64 B) {
    if (cond1_value(e, 1) > B || cond2_value(e, 1) > B)
        throw std::invalid_argument("check_sum_eta6: eta outside V");
    if (gcd64(e[0] * e[3], e[2] * e[4]) != 1 || gcd64(e[1], e[3] * e[4]) != 1)
        throw std::invalid_argument("check_sum_eta6: gcd6/gcd7 fail");

    i64 e6max = isqrt64(B / (e[0] * e[1] * e[1] * e[2] * e[2] * e[2] * e[4] * e[4]));
    double observed = 0;
    for (i64 e6 = 1; e6 <= e6max; ++e6) {
        if (gcd64(e6, e[0] * e[1] * e[3] * e[4]) != 1) continue;  // gcd5
        observed += sum_main_over_eta7(e, e6, B);
    }

    double a2 = (double)e[0] * e[1] * e[2] * e[3] * e[4];
    QuadResult q = g3(e, B);
    double main = kZeta2Inv * ((double)B / a2) * q.value * Theta(e).get_d();

    double y6 = std::sqrt((double)B / (double)((i128)e[0] * e[1] * e[1] * e[2] * e[2] * e[2] *
                                               e[4] * e[4]));
    double y7 = std::sqrt((double)B / (double)((i128)e[0] * e[0] * e[0] * e[1] * e[1] * e[2] *
                                               e[3] * e[3]));
    double g2_sup = 0;
    for (int k = 0; k < 16; ++k) {
        double t6 = std::pow(y6, -(k + 1) / 16.0);  // grid from 1 down to 1/Y6
        g2_sup = std::max(g2_sup, g2(t6, e, B).value);
    }

    LemmaReport r;
    r.lemma = "sum6";
    r.instance = tuple_str(e, 0, 0, B);
    r.main_term = main;
    r.observed = observed;
    r.residual = observed - main;
    double a2_over = (double)e[0] * e[1] * e[2];
    r.scale = a2_over * y7 * std::sqrt(y6) * sigma_minus(0.5, e[0] * e[1] * e[3] * e[4]) *
              (1.0 + g2_sup);
    r.normalized = std::abs(r.residual) / r.scale;
    return r;
}

HeightLadder fit_asymptotic(const std::vector<i64>& ladder, double c_vh, i64 direct_spot_limit,
                            int workers) {
    for (size_t i = 0; i + 1 < ladder.size(); ++i)
        if (ladder[i] >= ladder[i + 1])
            throw std::invalid_argument("fit_asymptotic: ladder must be strictly increasing");
    HeightLadder hl;
    hl.c_vh = c_vh;
    for (i64 B : ladder) {
        LadderRow row;
        row.B = B;
        TorsorCount tc = count(B, workers);
        row.n_torsor2 = 2 * tc.count;
        row.elapsed = tc.elapsed;
        if (B <= direct_spot_limit) {
            CountResult dc = count_direct(B, workers);
            row.n_direct = dc.count;
            row.spot_checked = true;
            row.elapsed += dc.elapsed;
        } else {
            row.n_direct = row.n_torsor2;
        }
        double lb = std::log(static_cast<double>(B));
        row.c_fit = row.n_torsor2 / (B * std::pow(lb, 5));
        row.ratio = c_vh > 0 ? row.c_fit / c_vh : 0;
        hl.rows.push_back(row);
    }
    return hl;
}

}  // namespace a3dp
