#include "ratrange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ratrange {

MatrixPair make_matrix_pair(const OmegaBox& box, int n, double truncation) {
    if (n < 1) throw config_error("matrix dimension must be >= 1");
    auto clamp = [&](double v) {
        return std::min(std::max(v, -truncation), truncation);
    };
    const double a_lo = clamp(box.alpha_lo), a_hi = clamp(box.alpha_hi);
    const double b_lo = clamp(box.beta_lo), b_hi = clamp(box.beta_hi);
    if (b_lo == 0.0 && b_hi == 0.0)
        throw config_error("B must be nonzero: beta interval is {0}");
    MatrixPair pair;
    pair.a_diag.resize(std::size_t(n));
    pair.b_diag.resize(std::size_t(n));
    for (int k = 0; k < n; ++k) {
        const double t = n == 1 ? 0.0 : double(k) / double(n - 1);
        pair.a_diag[std::size_t(k)] = a_lo + t * (a_hi - a_lo);
        pair.b_diag[std::size_t(k)] = b_lo + t * (b_hi - b_lo);
    }
    return pair;
}

std::vector<ComplexPoint> sample_numerical_range(const MatrixPair& pair, int n_samples,
                                                 std::uint64_t seed,
                                                 const ProblemParams& prm) {
    if (n_samples < 1) throw config_error("n_samples must be >= 1");
    const std::size_t n = pair.a_diag.size();
    if (n == 0 || pair.b_diag.size() != n)
        throw config_error("matrix pair dimensions mismatch");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<ComplexPoint> points;
    points.reserve(std::size_t(n_samples) * 4);
    std::vector<double> w(n);
    for (int s = 0; s < n_samples; ++s) {
        // complex gaussian vector; only |u_k|^2 enters the quotients
        double norm2 = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double re = gauss(rng), im = gauss(rng);
            w[k] = re * re + im * im;
            norm2 += w[k];
        }
        if (norm2 == 0.0) {
            --s;
            continue;
        }
        double alpha = 0.0, beta = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            alpha += pair.a_diag[k] * w[k];
            beta += pair.b_diag[k] * w[k];
        }
        alpha /= norm2;
        beta /= norm2;
        for (const auto& root : solve_p(alpha, beta, prm).roots) points.push_back(root);
    }
    return points;
}

double sigma_min_T(const MatrixPair& pair, complex omega, const ProblemParams& prm) {
    if (pair.a_diag.empty() || pair.a_diag.size() != pair.b_diag.size())
        throw config_error("matrix pair dimensions mismatch");
    if (pair.a_diag.size() > 1024) throw config_error("matrix dimension must be <= 1024");
    double best = inf;
    for (std::size_t k = 0; k < pair.a_diag.size(); ++k)
        best = std::min(best,
                        std::abs(eval_t(pair.a_diag[k], pair.b_diag[k], omega, prm)));
    return best;
}

}  // namespace ratrange
