// Command-line driver: exact dimensions, edge weights, harmonic-function
// values, identity verification, Monte Carlo sampling, and the integral
// check. Exit status: 0 success / verification passed, 1 tolerance failure,
// 2 invalid parameters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "ylat/report.hpp"

namespace {

using namespace ylat;

ylat::Box parse_box(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("box must be 'i,j'", text.size());
    int row = std::stoi(text.substr(0, comma));
    int col = std::stoi(text.substr(comma + 1));
    if (row < 1 || col < 1) throw Error("box coordinates must be >= 1");
    return {row, col};
}

struct MeasureFlags {
    std::string measure;
    std::string theta = "1";
    std::string z;
    std::string t = "1";

    void attach(CLI::App* cmd) {
        cmd->add_option("--measure", measure, "plancherel-jack | z-measure | kingman-t")
            ->required();
        cmd->add_option("--theta", theta, "Jack parameter (rational, e.g. 1/2)");
        cmd->add_option("--z", z, "complex parameter, e.g. 3/2+1/2i");
        cmd->add_option("--t", t, "Kingman family parameter (rational)");
    }

    MeasureSpec build() const {
        if (measure == "plancherel-jack") return MeasureSpec::plancherel_jack(parse_rational(theta));
        if (measure == "z-measure") {
            if (z.empty()) throw Error("z-measure requires --z");
            return MeasureSpec::z_measure(parse_rational(theta), parse_complex(z));
        }
        if (measure == "kingman-t") return MeasureSpec::kingman_t(parse_rational(t));
        throw Error("unknown measure '" + measure + "'");
    }
};

void write_output(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + path + "'");
    file << content;
}

int run(int argc, char** argv) {
    CLI::App app{"exact growth measures on the Young lattice"};
    app.require_subcommand(1);

    // dims ------------------------------------------------------------
    auto* dims = app.add_subcommand("dims", "weighted dimension of a diagram");
    std::string dims_partition, dims_family = "young", dims_theta;
    dims->add_option("--partition", dims_partition, "diagram, e.g. 4,3,1 ('-' for empty)")
        ->required();
    dims->add_option("--family", dims_family, "jack | kingman | young");
    dims->add_option("--theta", dims_theta, "Jack parameter; implies --family jack");

    // kappa -----------------------------------------------------------
    auto* kap = app.add_subcommand("kappa", "edge weight of one growth step");
    std::string kap_lower, kap_upper, kap_family = "young", kap_theta;
    kap->add_option("--lower", kap_lower, "smaller diagram")->required();
    kap->add_option("--upper", kap_upper, "larger diagram (one extra box)")->required();
    kap->add_option("--family", kap_family, "jack | kingman | young");
    kap->add_option("--theta", kap_theta, "Jack parameter; implies --family jack");

    // phi ---------------------------------------------------------------
    auto* phi_cmd = app.add_subcommand("phi", "harmonic-function value of a measure");
    MeasureFlags phi_measure;
    phi_measure.attach(phi_cmd);
    std::string phi_partition;
    phi_cmd->add_option("--partition", phi_partition, "diagram")->required();

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "sum an identity level by level");
    std::string vid, vtheta = "1", vt = "1", vz, vbox, vformat = "table", voutput;
    int vk = 1, vl = 0;
    long vmax = 25;
    double vtol = 1e-6;
    verify
        ->add_option("--identity", vid,
                     "plancherel-young-box | theta-plancherel-hook | z-measure-hook | kingman-t | "
                     "special-case | fk-form | gk-form")
        ->required();
    verify->add_option("--k", vk, "row index parameter");
    verify->add_option("--l", vl, "column index parameter");
    verify->add_option("--theta", vtheta, "Jack parameter (rational)");
    verify->add_option("--t", vt, "Kingman parameter (rational)");
    verify->add_option("--z", vz, "complex parameter");
    verify->add_option("--box", vbox, "box 'i,j' for special-case");
    verify->add_option("--max-level", vmax, "truncation level (default 25)");
    verify->add_option("--tol", vtol, "residual tolerance (default 1e-6)");
    verify->add_option("--format", vformat, "table | csv | structured");
    verify->add_option("--output", voutput, "write the report to this file");

    // sample ------------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "Monte Carlo box-entry distribution");
    MeasureFlags sample_measure;
    sample_measure.attach(sample);
    std::string sbox = "2,1", sformat = "table", soutput;
    long ssteps = 20, strials = 10000;
    std::uint64_t sseed = 0;
    sample->add_option("--box", sbox, "target box 'i,j' (default 2,1)");
    sample->add_option("--steps", ssteps, "path length (default 20)");
    sample->add_option("--trials", strials, "number of sampled paths (default 10000)");
    sample->add_option("--seed", sseed, "base seed (default 0)");
    sample->add_option("--format", sformat, "table | csv | structured");
    sample->add_option("--output", soutput, "write the report to this file");

    // integral ----------------------------------------------------------
    auto* integral = app.add_subcommand("integral", "quadrature check of the integral identity");
    int ik = 0, il = 1;
    std::string it = "1";
    double itol = 1e-6, iquad = 1e-10;
    integral->add_option("--k", ik, "log-power (default 0)");
    integral->add_option("--l", il, "polynomial degree (default 1)");
    integral->add_option("--t", it, "parameter t > 0 (rational)");
    integral->add_option("--tol", itol, "pass tolerance on |value - target| (default 1e-6)");
    integral->add_option("--quad-tol", iquad, "quadrature error budget (default 1e-10)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints the message or requested help text
        return code == 0 ? 0 : 2;
    }

    if (*dims || *kap) {
        bool is_dims = static_cast<bool>(*dims);
        std::string family = is_dims ? dims_family : kap_family;
        std::string theta = is_dims ? dims_theta : kap_theta;
        MultiplicitySpec spec = MultiplicitySpec::young();
        if (!theta.empty()) {
            if (family == "kingman") throw Error("--theta conflicts with --family kingman");
            spec = MultiplicitySpec::jack(parse_rational(theta));
        } else if (family == "jack") {
            throw Error("--family jack requires --theta");
        } else if (family == "kingman") {
            spec = MultiplicitySpec::kingman();
        } else if (family != "young") {
            throw Error("unknown family '" + family + "'");
        }
        if (is_dims) {
            std::cout << format(dim_kappa(spec, Partition::parse(dims_partition))) << "\n";
        } else {
            std::cout << format(kappa(spec, Partition::parse(kap_lower),
                                      Partition::parse(kap_upper)))
                      << "\n";
        }
        return 0;
    }

    if (*phi_cmd) {
        MeasureSpec measure = phi_measure.build();
        std::cout << format(phi(measure, Partition::parse(phi_partition))) << "\n";
        return 0;
    }

    if (*verify) {
        IdentitySpec spec = [&]() {
            if (vid == "plancherel-young-box") return IdentitySpec::plancherel_young_box(vk, vl);
            if (vid == "theta-plancherel-hook")
                return IdentitySpec::theta_plancherel_hook(vk, parse_rational(vtheta));
            if (vid == "z-measure-hook") {
                if (vz.empty()) throw Error("z-measure-hook requires --z");
                return IdentitySpec::z_measure_hook(vk, parse_rational(vtheta), parse_complex(vz));
            }
            if (vid == "kingman-t") return IdentitySpec::kingman_t(vk, vl, parse_rational(vt));
            if (vid == "special-case") {
                if (vbox.empty()) throw Error("special-case requires --box");
                return IdentitySpec::special_case(parse_box(vbox), parse_rational(vtheta));
            }
            if (vid == "fk-form") return IdentitySpec::fk_form(vk);
            if (vid == "gk-form") return IdentitySpec::gk_form(vk);
            throw Error("unknown identity '" + vid + "'");
        }();
        ConvergenceReport report = evaluate_identity(spec, vmax);
        std::string rendered = vformat == "csv"          ? to_csv(report)
                               : vformat == "structured" ? to_structured(report)
                               : vformat == "table"      ? to_table(report)
                                                         : throw Error("unknown format '" + vformat + "'");
        if (!voutput.empty())
            write_output(voutput, rendered);
        else
            std::cout << rendered;
        // exact comparison: the binary tolerance converts exactly to a rational
        bool pass = report.residual() < Rational(vtol);
        std::cout << (pass ? "PASS" : "FAIL") << " residual="
                  << format_double(to_double(report.residual())) << " tol=" << format_double(vtol)
                  << "\n";
        return pass ? 0 : 1;
    }

    if (*sample) {
        MeasureSpec measure = sample_measure.build();
        Box box = parse_box(sbox);
        EntryHistogram hist = entry_distribution(measure, box, ssteps, strials, sseed);
        std::vector<ComparisonRow> rows = compare_empirical_analytic(hist, measure);
        std::string rendered = sformat == "csv"          ? to_csv(hist, rows)
                               : sformat == "structured" ? to_structured(hist, rows)
                               : sformat == "table"      ? to_table(hist, rows)
                                                         : throw Error("unknown format '" + sformat + "'");
        if (!soutput.empty())
            write_output(soutput, rendered);
        else
            std::cout << rendered;
        return 0;
    }

    if (*integral) {
        IntegralCheck check = integral_check(ik, il, parse_rational(it), iquad);
        double gap = std::abs(check.value - check.target);
        std::cout << "value=" << format_double(check.value) << " target=" << format_double(check.target)
                  << " |diff|=" << format_double(gap) << "\n";
        bool pass = gap < itol;
        std::cout << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
