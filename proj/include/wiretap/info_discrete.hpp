#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Entropy and mutual-information helpers for finite distributions.
// All quantities are in bits (logarithms base 2).

namespace wiretap {

// Binary entropy h2(x) = -x log2 x - (1-x) log2 (1-x).
double h2(double x);

// Inverse of h2 restricted to [0, 1/2], computed by bisection to 1e-12.
double h2_inv(double y);

// Binary convolution a * b = a(1-b) + (1-a)b: the crossover probability of
// two cascaded binary symmetric channels.
double star(double a, double b);

// Mrs. Gerber's lemma: the smallest conditional output entropy of a BSC(eps)
// whose input has conditional entropy h, namely h2(eps * h2_inv(h)).
double mrs_gerber_bound(double h, double eps);

struct Variable {
    std::string name;
    std::size_t cardinality = 0;
};

// Dense joint distribution over a small set of named finite variables.
// Mass is stored row-major in declaration order (last variable fastest).
class FiniteJointPmf {
  public:
    FiniteJointPmf(std::vector<Variable> variables, std::vector<double> mass);

    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<double>& mass() const { return mass_; }
    std::size_t atom_count() const { return mass_.size(); }

    // Position of a named variable in declaration order; throws if unknown.
    std::size_t index_of(const std::string& name) const;

  private:
    std::vector<Variable> vars_;
    std::vector<double> mass_;
};

// Shannon entropy of the marginal on `vars` (empty set gives 0).
double entropy(const FiniteJointPmf& p, const std::vector<std::string>& vars);

// H(of | given) = H(of, given) - H(given).
double conditional_entropy(const FiniteJointPmf& p,
                           const std::vector<std::string>& of,
                           const std::vector<std::string>& given);

// I(x; y) with small negative round-off clamped to zero.
double mutual_information(const FiniteJointPmf& p,
                          const std::vector<std::string>& x,
                          const std::vector<std::string>& y);

// I(x; y | z). Round-off down to -1e-12 is clamped to zero; anything more
// negative indicates a corrupted distribution and throws.
double conditional_mutual_information(const FiniteJointPmf& p,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& y,
                                      const std::vector<std::string>& z);

}  // namespace wiretap
