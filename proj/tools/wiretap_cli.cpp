#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wiretap/binary_wiretap.hpp"
#include "wiretap/curve.hpp"
#include "wiretap/gaussian_wiretap.hpp"
#include "wiretap/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    std::size_t steps = 1;
};

// Axis syntax min:max:steps, where steps counts intervals (so 0:1:64 gives
// 65 samples) and min == max collapses to a single sample.
GridSpec parse_grid(const std::string& text) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? first : text.find(':', first + 1);
    if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
        throw std::invalid_argument("grid must have the form min:max:steps, got '" + text + "'");
    GridSpec g;
    try {
        std::size_t used = 0;
        const std::string lo = text.substr(0, first);
        const std::string hi = text.substr(first + 1, second - first - 1);
        const std::string steps = text.substr(second + 1);
        g.min = std::stod(lo, &used);
        if (used != lo.size()) throw std::invalid_argument(lo);
        g.max = std::stod(hi, &used);
        if (used != hi.size()) throw std::invalid_argument(hi);
        const long long n = std::stoll(steps, &used);
        if (used != steps.size() || n < 1) throw std::invalid_argument(steps);
        g.steps = static_cast<std::size_t>(n);
    } catch (const std::exception&) {
        throw std::invalid_argument("grid must have the form min:max:steps, got '" + text + "'");
    }
    if (g.max < g.min) throw std::invalid_argument("grid max is below min in '" + text + "'");
    return g;
}

std::optional<double> parse_pb(const std::string& text) {
    if (text == "inf") return std::nullopt;
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size())
        throw std::invalid_argument("--pb expects a power or 'inf', got '" + text + "'");
    return v;
}

std::vector<std::string> split_schemes(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const std::string item =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty()) throw std::invalid_argument("empty scheme name in '" + text + "'");
        if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_csv_atomic(const std::string& path, const std::vector<wiretap::TradeoffCurve>& curves) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw IoError("cannot open '" + tmp + "' for writing");
        out << "x,scheme,value\n";
        for (const auto& curve : curves)
            for (const auto& s : curve.samples)
                out << fmt9(s.x) << ',' << curve.scheme << ',' << fmt9(s.value) << '\n';
        out.flush();
        if (!out) {
            std::remove(tmp.c_str());
            throw IoError("write to '" + tmp + "' failed");
        }
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot move '" + tmp + "' to '" + path + "'");
    }
}

void warn_omitted(const std::vector<wiretap::TradeoffCurve>& curves, std::size_t grid_size) {
    for (const auto& curve : curves)
        if (curve.samples.size() < grid_size)
            std::cerr << "warning: scheme '" << curve.scheme << "': "
                      << grid_size - curve.samples.size() << " of " << grid_size
                      << " grid points are infeasible, rows omitted\n";
}

int run_verify(bool verbose, bool inject_fault) {
    const std::vector<wiretap::CheckResult> results = wiretap::run_verification(inject_fault);
    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        if (verbose || !r.pass) {
            std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(50) << r.name
                      << ' ' << r.detail << '\n';
        }
    }
    if (failed == 0)
        std::cout << "verification: " << results.size() << " checks, all passed\n";
    else
        std::cout << "verification: " << failed << " of " << results.size() << " checks failed\n";
    return failed == 0 ? 0 : 1;
}

ordered_json binary_input_json(const wiretap::BinaryModelParams& m) {
    return ordered_json{{"beta", m.beta}, {"eps", m.eps}, {"zeta", m.zeta}};
}

ordered_json gaussian_input_json(const wiretap::GaussianModelParams& m, double d) {
    ordered_json in{{"p", m.p}, {"py", m.p_y}, {"pz", m.p_z}};
    if (m.p_b)
        in["pb"] = *m.p_b;
    else
        in["pb"] = nullptr;
    in["pe"] = m.p_e;
    in["d"] = d;
    return in;
}

void print_point(const std::string& model, const std::string& scheme, ordered_json input,
                 double value, std::optional<ordered_json> argmax) {
    ordered_json out;
    out["model"] = model;
    out["scheme"] = scheme;
    out["input"] = std::move(input);
    out["value"] = value;
    if (argmax) out["argmax"] = std::move(*argmax);
    std::cout << out.dump() << '\n';
}

void run_binary_point(const wiretap::BinaryModelParams& m, const std::string& scheme_name) {
    m.validate();
    const wiretap::BinaryScheme scheme = wiretap::binary_scheme_from_string(scheme_name);
    double value = 0.0;
    std::optional<ordered_json> argmax;
    switch (scheme) {
        case wiretap::BinaryScheme::outer: {
            const auto r = wiretap::outer_equivocation_detail(m);
            value = r.delta;
            argmax = ordered_json{{"u", r.u}, {"q", r.q}};
            break;
        }
        case wiretap::BinaryScheme::digital: {
            const auto r = wiretap::digital_equivocation_detail(m);
            value = r.delta;
            argmax = ordered_json{{"u", r.u}, {"q", r.q}};
            break;
        }
        case wiretap::BinaryScheme::analog:
            value = wiretap::analog_equivocation(m);
            break;
        case wiretap::BinaryScheme::hybrid: {
            const auto r = wiretap::hybrid_equivocation_detail(m);
            value = r.delta;
            argmax = ordered_json{{"u", r.u}};
            break;
        }
    }
    print_point("binary", scheme_name, binary_input_json(m), value, std::move(argmax));
}

void run_gaussian_point(const wiretap::GaussianModelParams& m, double d,
                        const std::string& scheme_name) {
    m.validate();
    const wiretap::GaussianScheme scheme = wiretap::gaussian_scheme_from_string(scheme_name);
    wiretap::require_scheme_applicable(m, scheme);
    double value = 0.0;
    std::optional<ordered_json> argmax;
    switch (scheme) {
        case wiretap::GaussianScheme::outer:
            value = wiretap::outer_de(m, d);
            break;
        case wiretap::GaussianScheme::optimal:
            value = wiretap::optimal_de(m, d);
            break;
        case wiretap::GaussianScheme::digital: {
            const auto r = wiretap::digital_de_detail(m, d);
            value = r.de;
            argmax = ordered_json{{"mu", r.mu}};
            break;
        }
        case wiretap::GaussianScheme::analog:
            value = wiretap::analog_de(m, d);
            break;
        case wiretap::GaussianScheme::hybrid: {
            const auto r = wiretap::hybrid_frontier_point(m, d);
            if (!r)
                throw std::domain_error("no hybrid design reaches distortion " + fmt9(d));
            value = r->de;
            argmax = ordered_json{{"alpha", r->alpha}, {"beta", r->beta}};
            break;
        }
    }
    print_point("gaussian", scheme_name, gaussian_input_json(m, d), value, std::move(argmax));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivocation and secrecy-distortion bounds for wiretap source-channel coding"};
    app.require_subcommand(1);

    unsigned threads = 0;

    // binary sweep
    auto* binary = app.add_subcommand("binary", "Binary source with erased/noisy side information");
    binary->require_subcommand(1);
    auto* bsweep = binary->add_subcommand("sweep", "Sweep the erasure rate beta and write a CSV");
    double b_eps = 0.0, b_zeta = 0.0;
    std::string b_grid, b_schemes = "outer,digital,analog,hybrid", b_out;
    bsweep->add_option("--eps", b_eps, "Crossover of Eve's side information")->required();
    bsweep->add_option("--zeta", b_zeta, "Crossover of Eve's channel tap")->required();
    bsweep->add_option("--beta", b_grid, "Erasure-rate axis min:max:steps")->required();
    bsweep->add_option("--schemes", b_schemes, "Comma list of outer,digital,analog,hybrid");
    bsweep->add_option("--out", b_out, "Output CSV path")->required();
    bsweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

    // gaussian sweep
    auto* gaussian = app.add_subcommand("gaussian", "Gaussian source over a Gaussian wiretap channel");
    gaussian->require_subcommand(1);
    auto* gsweep = gaussian->add_subcommand("sweep", "Sweep Bob's distortion d and write a CSV");
    wiretap::GaussianModelParams g_params;
    std::string g_pb = "inf", g_grid, g_schemes = "outer,optimal,digital,analog,hybrid", g_out;
    gsweep->add_option("--p", g_params.p, "Channel input power")->required();
    gsweep->add_option("--py", g_params.p_y, "Bob's channel noise power")->required();
    gsweep->add_option("--pz", g_params.p_z, "Eve's channel noise power")->required();
    gsweep->add_option("--pb", g_pb, "Bob's side-information noise power, or 'inf' for none");
    gsweep->add_option("--pe", g_params.p_e, "Eve's side-information noise power")->required();
    gsweep->add_option("--d", g_grid, "Distortion axis min:max:steps")->required();
    gsweep->add_option("--schemes", g_schemes, "Comma list of outer,optimal,digital,analog,hybrid");
    gsweep->add_option("--out", g_out, "Output CSV path")->required();
    gsweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

    // point
    auto* point = app.add_subcommand("point", "Evaluate one scheme at one parameter point (JSON)");
    point->require_subcommand(1);
    auto* bpoint = point->add_subcommand("binary", "Binary model");
    wiretap::BinaryModelParams bp_params;
    std::string bp_scheme;
    bpoint->add_option("--scheme", bp_scheme, "One of outer,digital,analog,hybrid")->required();
    bpoint->add_option("--beta", bp_params.beta, "Erasure rate of Bob's side information")->required();
    bpoint->add_option("--eps", bp_params.eps, "Crossover of Eve's side information")->required();
    bpoint->add_option("--zeta", bp_params.zeta, "Crossover of Eve's channel tap")->required();
    auto* gpoint = point->add_subcommand("gaussian", "Gaussian model");
    wiretap::GaussianModelParams gp_params;
    std::string gp_pb = "inf", gp_scheme;
    double gp_d = 0.0;
    gpoint->add_option("--scheme", gp_scheme, "One of outer,optimal,digital,analog,hybrid")->required();
    gpoint->add_option("--d", gp_d, "Bob's distortion target")->required();
    gpoint->add_option("--p", gp_params.p, "Channel input power")->required();
    gpoint->add_option("--py", gp_params.p_y, "Bob's channel noise power")->required();
    gpoint->add_option("--pz", gp_params.p_z, "Eve's channel noise power")->required();
    gpoint->add_option("--pb", gp_pb, "Bob's side-information noise power, or 'inf' for none");
    gpoint->add_option("--pe", gp_params.p_e, "Eve's side-information noise power")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the numeric consistency checks");
    bool verbose = false, inject_fault = false;
    verify->add_flag("--verbose", verbose, "List every check, not only failures");
    verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bsweep->parsed()) {
            wiretap::BinaryModelParams base{0.0, b_eps, b_zeta};
            base.validate();
            const GridSpec grid = parse_grid(b_grid);
            std::vector<wiretap::BinaryScheme> schemes;
            for (const auto& name : split_schemes(b_schemes))
                schemes.push_back(wiretap::binary_scheme_from_string(name));
            const std::vector<double> betas = wiretap::linear_grid(grid.min, grid.max, grid.steps);
            write_csv_atomic(b_out, wiretap::binary_sweep(base, betas, schemes, threads));
        } else if (gsweep->parsed()) {
            g_params.p_b = parse_pb(g_pb);
            g_params.validate();
            const GridSpec grid = parse_grid(g_grid);
            std::vector<wiretap::GaussianScheme> schemes;
            for (const auto& name : split_schemes(g_schemes))
                schemes.push_back(wiretap::gaussian_scheme_from_string(name));
            const std::vector<double> ds = wiretap::linear_grid(grid.min, grid.max, grid.steps);
            const auto curves = wiretap::gaussian_sweep(g_params, ds, schemes, threads);
            warn_omitted(curves, ds.size());
            write_csv_atomic(g_out, curves);
        } else if (bpoint->parsed()) {
            run_binary_point(bp_params, bp_scheme);
        } else if (gpoint->parsed()) {
            gp_params.p_b = parse_pb(gp_pb);
            run_gaussian_point(gp_params, gp_d, gp_scheme);
        } else if (verify->parsed()) {
            return run_verify(verbose, inject_fault);
        }
        return 0;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
