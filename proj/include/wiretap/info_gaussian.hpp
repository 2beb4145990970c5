#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

// Scalar Gaussian toolkit: small covariance matrices, Schur-complement
// conditioning, and closed forms for the hybrid coding layer.
// Information quantities are in bits.

namespace wiretap {

// Noise powers of the scalar Gaussian model. The unit-variance source A is
// observed by Bob through B = A + N(0, p_b) and by Eve through
// E = A + N(0, p_e); the channel input X (power p) reaches Bob as
// Y = X + N(0, p_y) and Eve as Z = X + N(0, p_z). An absent p_b means Bob
// has no side information at all.
struct GaussianModelParams {
    double p = 1.0;
    double p_y = 1.0;
    double p_z = 1.0;
    std::optional<double> p_b;
    double p_e = 1.0;

    void validate() const;  // throws std::domain_error on nonpositive powers
};

// Coefficients of the hybrid layer. The auxiliary codeword is
// V = alpha * A + gamma * S with S ~ N(0,1) independent of the source and
// gamma = sqrt(1 - beta^2), so V always has variance alpha^2 + gamma^2.
// The channel input is X = sqrt(p) * (beta * A - gamma * S).
struct HybridGaussCoef {
    HybridGaussCoef(double alpha, double beta);

    double alpha = 0.0;
    double beta = 0.0;            // must lie in [0, 1) so that gamma > 0
    double gamma_sq() const { return (1.0 - beta) * (1.0 + beta); }
};

// Symmetric positive-semidefinite matrix with named rows/columns.
class CovMatrix {
  public:
    CovMatrix(std::vector<std::string> labels, std::vector<double> row_major);

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    double at(std::size_t i, std::size_t j) const { return values_[i * dim() + j]; }
    std::size_t index_of(const std::string& label) const;

  private:
    std::vector<std::string> labels_;
    std::vector<double> values_;
};

// Covariance of `target` given `given`, i.e. the Schur complement
// A - C B^{-1} C^T of the conditioning block. An empty `given` returns the
// marginal covariance. Throws if the conditioning block is singular.
CovMatrix conditional_covariance(const CovMatrix& g,
                                 const std::vector<std::string>& target,
                                 const std::vector<std::string>& given);

// Single-variable convenience wrapper around conditional_covariance.
double conditional_variance(const CovMatrix& g, const std::string& target,
                            const std::vector<std::string>& given);

// Differential entropy of N(0, variance): (1/2) log2(2 pi e variance).
double gaussian_entropy(double variance);

// Closed forms for the hybrid layer, each equal to the corresponding
// Schur-complement computation on the model's covariance matrix.

// I(V; A) = (1/2) log2(1 + alpha^2 / gamma^2).
double mi_v_a(const HybridGaussCoef& c);

// Var(V | B, Y); with p_b absent this is Var(V | Y).
double var_v_given_by(const HybridGaussCoef& c, const GaussianModelParams& m);

// Var(V | A, Y) = gamma^2 / (1 + gamma^2 p / p_y).
double var_v_given_ay(const HybridGaussCoef& c, const GaussianModelParams& m);

// Var(A | B, Y); with p_b absent this is Var(A | Y).
double var_a_given_by(const HybridGaussCoef& c, const GaussianModelParams& m);

// I(X; Z | E), using that Z depends on (A, E) only through X.
double mi_x_z_given_e(const HybridGaussCoef& c, const GaussianModelParams& m);

}  // namespace wiretap
