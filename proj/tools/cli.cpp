#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include "comono/curve.hpp"
#include "comono/decomposition.hpp"
#include "comono/errors.hpp"
#include "comono/filtration.hpp"
#include "comono/io.hpp"
#include "comono/lift.hpp"
#include "comono/verification.hpp"

namespace comono::cli {

namespace {

struct Flags {
    std::string input;
    std::string output;
    std::string law;
    int stages = 4;
    long long samples = 0;
    std::uint64_t seed = 42;
    double tol = 1e-9;
    double x = 0.0;
    double y = 0.0;
};

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Comonotone lifting of integrable pairs: curve geometry, decomposition, lifting, verification",
                 "comonotone"};
    app.require_subcommand(1);
    Flags f;

    auto output = [&](CLI::App* sub) { sub->add_option("--output", f.output, "Output path (default: stdout)"); };
    auto input = [&](CLI::App* sub) {
        sub->add_option("--input", f.input, "Atom table CSV (atom_id,weight,f,g)")->required();
    };
    auto sampling = [&](CLI::App* sub) {
        sub->add_option("--samples", f.samples, "Monte Carlo sample count");
        sub->add_option("--seed", f.seed, "RNG seed");
    };

    auto* curve = app.add_subcommand("curve", "Export the comonotone curve (CSV, plus SVG next to --output)");
    curve->add_option("--stages", f.stages, "Highest stage to include");
    output(curve);

    auto* decompose = app.add_subcommand("decompose", "Decompose one point onto the curve");
    decompose->add_option("--x", f.x, "x coordinate")->required();
    decompose->add_option("--y", f.y, "y coordinate")->required();
    output(decompose);

    auto* lift = app.add_subcommand("lift", "Lift an atom table to its two-point law");
    input(lift);
    output(lift);

    auto* sample = app.add_subcommand("sample", "Draw (xi, eta) samples from the lifted law");
    input(sample);
    sample->add_option("--law", f.law, "Law CSV (default: lift the input)");
    sampling(sample);
    output(sample);

    auto* verify = app.add_subcommand("verify", "Check a lifted law against its atom table");
    input(verify);
    verify->add_option("--law", f.law, "Law CSV (default: lift the input)");
    sampling(verify);
    verify->add_option("--tol", f.tol, "Tolerance for the deterministic checks");
    output(verify);

    auto* demo = app.add_subcommand("demo", "Run the built-in two-atom example end to end");
    sampling(demo);
    demo->add_option("--tol", f.tol, "Tolerance for the deterministic checks");
    output(demo);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), kSuccess);
    } catch (const CLI::CallForAllHelp&) {
        throw UsageError(app.help("", CLI::AppFormatMode::All), kSuccess);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    const CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    if (name == "curve") config.command = Command::curve;
    else if (name == "decompose") config.command = Command::decompose;
    else if (name == "lift") config.command = Command::lift;
    else if (name == "sample") config.command = Command::sample;
    else if (name == "verify") config.command = Command::verify;
    else config.command = Command::demo;

    if (f.stages < 1 || f.stages > kMaxStage) {
        throw UsageError("--stages must lie in [1, " + std::to_string(kMaxStage) + "]");
    }
    if (f.samples < 0) throw UsageError("--samples must be >= 0");
    if (config.command == Command::sample && f.samples < 1) throw UsageError("sample needs --samples >= 1");
    if (!(f.tol > 0.0) || !std::isfinite(f.tol)) throw UsageError("--tol must be positive and finite");
    if (config.command == Command::decompose && !(std::isfinite(f.x) && std::isfinite(f.y))) {
        throw UsageError("--x and --y must be finite");
    }

    if (!f.input.empty()) config.input = f.input;
    if (!f.output.empty()) config.output = f.output;
    if (!f.law.empty()) config.law = f.law;
    config.stages = f.stages;
    config.samples = static_cast<std::size_t>(f.samples);
    config.seed = f.seed;
    config.tolerance = f.tol;
    if (config.command == Command::decompose) {
        config.x = f.x;
        config.y = f.y;
    }
    return config;
}

namespace {

FiltrationModel demo_model() {
    return FiltrationModel({{"a", 0.5, {0.0, 0.0}}, {"b", 0.5, {8.0, 8.0}}});
}

LiftedLaw law_for(const RunConfig& config, const FiltrationModel& model) {
    if (!config.law) return lift(model);
    LiftedLaw law = io::read_law(*config.law);
    try {
        check_law_matches(model, law);
    } catch (const InvalidInput& e) {
        throw ParseError("law file does not match the atom table: " + std::string(e.what()));
    }
    return law;
}

/// Calls write(stream) on the --output file if given, else on `out`.
template <class Write>
void emit(const RunConfig& config, std::ostream& out, Write&& write) {
    if (!config.output) {
        write(out);
        return;
    }
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) throw IoError("cannot open '" + config.output->string() + "' for writing");
    write(file);
    if (!file) throw IoError("failed writing '" + config.output->string() + "'");
}

int report_and_exit(const RunConfig& config, const VerificationReport& report, std::ostream& out) {
    io::write_report(report, out);
    if (config.output) {
        emit(config, out, [&](std::ostream& s) {
            if (config.output->extension() == ".csv") io::write_report_csv(report, s);
            else io::write_report(report, s);
        });
    }
    return report.overall_pass ? kSuccess : kVerificationFailed;
}

int dispatch(const RunConfig& config, std::ostream& out) {
    switch (config.command) {
        case Command::curve: {
            const StageIndex stages(config.stages);
            if (config.output) {
                io::export_curve(stages, *config.output);
            } else {
                io::write_curve(curve_segments(stages), out);
            }
            return kSuccess;
        }
        case Command::decompose: {
            const Decomposition d = decompose({*config.x, *config.y});
            emit(config, out, [&](std::ostream& s) { io::write_decomposition(d, s); });
            return kSuccess;
        }
        case Command::lift: {
            const FiltrationModel model = io::ingest_atoms(*config.input);
            const LiftedLaw law = lift(model);
            emit(config, out, [&](std::ostream& s) { io::write_law(law, s); });
            return kSuccess;
        }
        case Command::sample: {
            const FiltrationModel model = io::ingest_atoms(*config.input);
            const LiftedLaw law = law_for(config, model);
            const auto samples = sample_lift(model, law, config.samples, config.seed);
            emit(config, out, [&](std::ostream& s) { io::write_samples(model, samples, s); });
            return kSuccess;
        }
        case Command::verify: {
            const FiltrationModel model = io::ingest_atoms(*config.input);
            const LiftedLaw law = law_for(config, model);
            return report_and_exit(config, verify_model(model, law, config.samples, config.seed, config.tolerance),
                                   out);
        }
        case Command::demo: {
            const FiltrationModel model = demo_model();
            const LiftedLaw law = lift(model);
            out << "# atoms\n";
            io::write_atoms(model, out);
            out << "# law\n";
            io::write_law(law, out);
            out << "# report\n";
            return report_and_exit(config, verify_model(model, law, config.samples, config.seed, config.tolerance),
                                   out);
        }
    }
    return kUsage;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoOrParse;
    }
}

}  // namespace comono::cli
