#include "wiretap/info_discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wiretap {

namespace {

constexpr double kDomainSlack = 1e-12;

double clamp_unit(double x, const char* what) {
    if (x < -kDomainSlack || x > 1.0 + kDomainSlack) {
        throw std::domain_error(std::string(what) + " must lie in [0, 1]");
    }
    return std::min(1.0, std::max(0.0, x));
}

}  // namespace

double h2(double x) {
    x = clamp_unit(x, "h2 argument");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double h2_inv(double y) {
    y = clamp_unit(y, "h2_inv argument");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0;
    double hi = 0.5;
    for (int i = 0; i < 100 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (h2(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double star(double a, double b) {
    a = clamp_unit(a, "star argument");
    b = clamp_unit(b, "star argument");
    return a * (1.0 - b) + (1.0 - a) * b;
}

double mrs_gerber_bound(double h, double eps) {
    return h2(star(eps, h2_inv(h)));
}

FiniteJointPmf::FiniteJointPmf(std::vector<Variable> variables, std::vector<double> mass)
    : vars_(std::move(variables)), mass_(std::move(mass)) {
    if (vars_.empty()) throw std::invalid_argument("pmf needs at least one variable");
    std::size_t atoms = 1;
    for (const Variable& v : vars_) {
        if (v.name.empty()) throw std::invalid_argument("pmf variable name is empty");
        if (v.cardinality == 0) throw std::invalid_argument("pmf variable '" + v.name + "' has empty alphabet");
        atoms *= v.cardinality;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        for (std::size_t j = i + 1; j < vars_.size(); ++j) {
            if (vars_[i].name == vars_[j].name) {
                throw std::invalid_argument("duplicate pmf variable '" + vars_[i].name + "'");
            }
        }
    }
    if (mass_.size() != atoms) {
        throw std::invalid_argument("pmf mass size does not match the alphabet product");
    }
    double total = 0.0;
    for (double p : mass_) {
        if (!(p >= 0.0)) throw std::invalid_argument("pmf mass entries must be nonnegative");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("pmf mass must sum to 1");
    }
}

std::size_t FiniteJointPmf::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i].name == name) return i;
    }
    throw std::invalid_argument("unknown pmf variable '" + name + "'");
}

namespace {

std::vector<std::size_t> resolve(const FiniteJointPmf& p, const std::vector<std::string>& vars) {
    std::vector<std::size_t> sel;
    sel.reserve(vars.size());
    for (const std::string& name : vars) {
        const std::size_t idx = p.index_of(name);
        if (std::find(sel.begin(), sel.end(), idx) != sel.end()) {
            throw std::invalid_argument("variable '" + name + "' listed twice");
        }
        sel.push_back(idx);
    }
    return sel;
}

std::vector<std::string> disjoint_union(const FiniteJointPmf& p,
                                        std::initializer_list<const std::vector<std::string>*> groups) {
    std::vector<std::string> out;
    for (const auto* g : groups) out.insert(out.end(), g->begin(), g->end());
    resolve(p, out);  // rejects overlap between the groups
    return out;
}

double entropy_bits(const std::vector<double>& table) {
    double h = 0.0;
    for (double p : table) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

double entropy(const FiniteJointPmf& p, const std::vector<std::string>& vars) {
    const std::vector<std::size_t> sel = resolve(p, vars);
    if (sel.empty()) return 0.0;

    const auto& all = p.variables();
    std::size_t marg_size = 1;
    std::vector<std::size_t> stride(sel.size());
    for (std::size_t j = sel.size(); j-- > 0;) {
        stride[j] = marg_size;
        marg_size *= all[sel[j]].cardinality;
    }

    std::vector<double> marg(marg_size, 0.0);
    std::vector<std::size_t> coord(all.size(), 0);
    const std::vector<double>& mass = p.mass();
    for (std::size_t flat = 0; flat < mass.size(); ++flat) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < sel.size(); ++j) idx += coord[sel[j]] * stride[j];
        marg[idx] += mass[flat];
        for (std::size_t v = all.size(); v-- > 0;) {
            if (++coord[v] < all[v].cardinality) break;
            coord[v] = 0;
        }
    }
    return entropy_bits(marg);
}

double conditional_entropy(const FiniteJointPmf& p,
                           const std::vector<std::string>& of,
                           const std::vector<std::string>& given) {
    return entropy(p, disjoint_union(p, {&of, &given})) - entropy(p, given);
}

namespace {

double clamp_information(double value, const char* what) {
    if (value >= 0.0) return value;
    if (value >= -1e-12) return 0.0;
    throw std::logic_error(std::string(what) + " came out negative beyond round-off");
}

}  // namespace

double mutual_information(const FiniteJointPmf& p,
                          const std::vector<std::string>& x,
                          const std::vector<std::string>& y) {
    const double value = entropy(p, x) + entropy(p, y) - entropy(p, disjoint_union(p, {&x, &y}));
    return clamp_information(value, "mutual information");
}

double conditional_mutual_information(const FiniteJointPmf& p,
                                      const std::vector<std::string>& x,
                                      const std::vector<std::string>& y,
                                      const std::vector<std::string>& z) {
    disjoint_union(p, {&x, &y, &z});
    const double value = entropy(p, disjoint_union(p, {&x, &z})) +
                         entropy(p, disjoint_union(p, {&y, &z})) -
                         entropy(p, disjoint_union(p, {&x, &y, &z})) - entropy(p, z);
    return clamp_information(value, "conditional mutual information");
}

}  // namespace wiretap
