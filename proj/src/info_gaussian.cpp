#include "wiretap/info_gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wiretap {

void GaussianModelParams::validate() const {
    if (!(p > 0.0)) throw std::domain_error("channel power p must be positive");
    if (!(p_y > 0.0)) throw std::domain_error("noise power p_y must be positive");
    if (!(p_z > 0.0)) throw std::domain_error("noise power p_z must be positive");
    if (!(p_e > 0.0)) throw std::domain_error("noise power p_e must be positive");
    if (p_b && !(*p_b > 0.0)) throw std::domain_error("noise power p_b must be positive when present");
}

HybridGaussCoef::HybridGaussCoef(double alpha_in, double beta_in) : alpha(alpha_in), beta(beta_in) {
    if (!std::isfinite(alpha)) throw std::domain_error("hybrid coefficient alpha must be finite");
    if (!(beta >= 0.0) || beta >= 1.0) {
        throw std::domain_error("hybrid coefficient beta must lie in [0, 1)");
    }
}

namespace {

// Eigenvalues of a small symmetric matrix by cyclic Jacobi rotations.
std::vector<double> sym_eigenvalues(std::vector<double> a, std::size_t n) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        double scale = 1e-30;
        for (std::size_t i = 0; i < n; ++i) {
            scale += a[i * n + i] * a[i * n + i];
            for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
        }
        if (off <= 1e-30 * scale) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double theta = 0.5 * (a[q * n + q] - a[p * n + p]) / apq;
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    return eig;
}

}  // namespace

CovMatrix::CovMatrix(std::vector<std::string> labels, std::vector<double> row_major)
    : labels_(std::move(labels)), values_(std::move(row_major)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw std::invalid_argument("covariance matrix needs at least one variable");
    if (values_.size() != n * n) throw std::invalid_argument("covariance matrix size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (labels_[i].empty()) throw std::invalid_argument("covariance label is empty");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (labels_[i] == labels_[j]) {
                throw std::invalid_argument("duplicate covariance label '" + labels_[i] + "'");
            }
        }
    }
    double max_abs = 0.0;
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("covariance entries must be finite");
        max_abs = std::max(max_abs, std::abs(v));
    }
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        trace += values_[i * n + i];
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(values_[i * n + j] - values_[j * n + i]) > 1e-12 * std::max(1.0, max_abs)) {
                throw std::invalid_argument("covariance matrix is not symmetric");
            }
            const double avg = 0.5 * (values_[i * n + j] + values_[j * n + i]);
            values_[i * n + j] = values_[j * n + i] = avg;
        }
    }
    const std::vector<double> eig = sym_eigenvalues(values_, n);
    const double floor = -1e-10 * std::max(std::abs(trace), 1e-30);
    for (double e : eig) {
        if (e < floor) throw std::invalid_argument("covariance matrix is not positive semidefinite");
    }
}

std::size_t CovMatrix::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    throw std::invalid_argument("unknown covariance label '" + label + "'");
}

namespace {

std::vector<std::size_t> resolve_labels(const CovMatrix& g, const std::vector<std::string>& names) {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const std::string& name : names) {
        const std::size_t idx = g.index_of(name);
        if (std::find(out.begin(), out.end(), idx) != out.end()) {
            throw std::invalid_argument("covariance label '" + name + "' listed twice");
        }
        out.push_back(idx);
    }
    return out;
}

}  // namespace

CovMatrix conditional_covariance(const CovMatrix& g,
                                 const std::vector<std::string>& target,
                                 const std::vector<std::string>& given) {
    const std::vector<std::size_t> ts = resolve_labels(g, target);
    const std::vector<std::size_t> gs = resolve_labels(g, given);
    if (ts.empty()) throw std::invalid_argument("conditional covariance needs a target");
    for (std::size_t t : ts) {
        if (std::find(gs.begin(), gs.end(), t) != gs.end()) {
            throw std::invalid_argument("target and conditioning sets overlap");
        }
    }
    const std::size_t nt = ts.size();
    const std::size_t k = gs.size();
    std::vector<double> schur(nt * nt);
    for (std::size_t i = 0; i < nt; ++i) {
        for (std::size_t j = 0; j < nt; ++j) schur[i * nt + j] = g.at(ts[i], ts[j]);
    }
    if (k > 0) {
        std::vector<double> block(k * k);
        double trace = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) block[i * k + j] = g.at(gs[i], gs[j]);
            trace += block[i * k + i];
        }
        const std::vector<double> eig = sym_eigenvalues(block, k);
        const double min_eig = *std::min_element(eig.begin(), eig.end());
        if (!(min_eig > 1e-12 * trace)) {
            throw std::domain_error("conditioning block is singular");
        }

        // Solve block * w = cross^T column by column (Gauss-Jordan, partial pivoting).
        std::vector<double> aug(k * (k + nt));
        const std::size_t w = k + nt;
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) aug[i * w + j] = block[i * k + j];
            for (std::size_t j = 0; j < nt; ++j) aug[i * w + k + j] = g.at(gs[i], ts[j]);
        }
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < k; ++r) {
                if (std::abs(aug[r * w + col]) > std::abs(aug[piv * w + col])) piv = r;
            }
            if (aug[piv * w + col] == 0.0) throw std::domain_error("conditioning block is singular");
            if (piv != col) {
                for (std::size_t c = 0; c < w; ++c) std::swap(aug[piv * w + c], aug[col * w + c]);
            }
            const double inv = 1.0 / aug[col * w + col];
            for (std::size_t c = 0; c < w; ++c) aug[col * w + c] *= inv;
            for (std::size_t r = 0; r < k; ++r) {
                if (r == col) continue;
                const double f = aug[r * w + col];
                if (f == 0.0) continue;
                for (std::size_t c = 0; c < w; ++c) aug[r * w + c] -= f * aug[col * w + c];
            }
        }
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = 0; j < nt; ++j) {
                double dot = 0.0;
                for (std::size_t l = 0; l < k; ++l) dot += g.at(ts[i], gs[l]) * aug[l * w + k + j];
                schur[i * nt + j] -= dot;
            }
        }
        for (std::size_t i = 0; i < nt; ++i) {
            for (std::size_t j = i + 1; j < nt; ++j) {
                const double avg = 0.5 * (schur[i * nt + j] + schur[j * nt + i]);
                schur[i * nt + j] = schur[j * nt + i] = avg;
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(nt);
    for (std::size_t t : ts) labels.push_back(g.labels()[t]);
    return CovMatrix(std::move(labels), std::move(schur));
}

double conditional_variance(const CovMatrix& g, const std::string& target,
                            const std::vector<std::string>& given) {
    return conditional_covariance(g, {target}, given).at(0, 0);
}

double gaussian_entropy(double variance) {
    if (!(variance > 0.0)) throw std::domain_error("gaussian_entropy needs a positive variance");
    constexpr double two_pi_e = 2.0 * 3.14159265358979323846 * 2.71828182845904523536;
    return 0.5 * std::log2(two_pi_e * variance);
}

double mi_v_a(const HybridGaussCoef& c) {
    return 0.5 * std::log2(1.0 + c.alpha * c.alpha / c.gamma_sq());
}

double var_v_given_by(const HybridGaussCoef& c, const GaussianModelParams& m) {
    m.validate();
    const double g2 = c.gamma_sq();
    const double spread = c.alpha * c.alpha / g2 + (m.p / m.p_y) * (c.alpha + c.beta) * (c.alpha + c.beta);
    if (m.p_b) {
        const double inv_b = 1.0 / *m.p_b;
        return g2 * (1.0 + inv_b + spread) / (1.0 + inv_b + (m.p / m.p_y) * (1.0 + g2 * inv_b));
    }
    return g2 * (1.0 + spread) / (1.0 + m.p / m.p_y);
}

double var_v_given_ay(const HybridGaussCoef& c, const GaussianModelParams& m) {
    m.validate();
    const double g2 = c.gamma_sq();
    return g2 / (1.0 + g2 * m.p / m.p_y);
}

double var_a_given_by(const HybridGaussCoef& c, const GaussianModelParams& m) {
    m.validate();
    const double g2 = c.gamma_sq();
    if (m.p_b) {
        const double inv_b = 1.0 / *m.p_b;
        return (1.0 + g2 * m.p / m.p_y) / (1.0 + inv_b + (m.p / m.p_y) * (1.0 + g2 * inv_b));
    }
    return (1.0 + g2 * m.p / m.p_y) / (1.0 + m.p / m.p_y);
}

double mi_x_z_given_e(const HybridGaussCoef& c, const GaussianModelParams& m) {
    m.validate();
    const double g2 = c.gamma_sq();
    const double inv_e = 1.0 / m.p_e;
    return 0.5 * std::log2((1.0 + inv_e + (m.p / m.p_z) * (1.0 + g2 * inv_e)) / (1.0 + inv_e));
}

}  // namespace wiretap
