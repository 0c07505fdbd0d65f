#include "wmbench/cost_model.hpp"
#include "wmbench/report.hpp"
#include "wmbench/samples.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"wmbench - interaction-cost model and statistics for window-manager timing studies"};
    app.require_subcommand(1);

    auto* stats = app.add_subcommand("stats", "Means, saving, pooled pairwise t, ANOVA and paired t for a time,type CSV");
    std::string csv_path;
    stats->add_option("csv", csv_path, "CSV file with header time,type")->required();

    auto* model = app.add_subcommand("model", "Predicted time and operation counts for the nine-step protocol");
    std::string mode_arg = "both";
    std::string params_path;
    std::string steps_path;
    wmbench::CostParams params;
    model->add_option("--mode", mode_arg, "floating, dynamic or both")
        ->check(CLI::IsMember({"floating", "dynamic", "both"}))
        ->capture_default_str();
    model->add_option("--params", params_path, "key = value file with fitts_a, fitts_b, keystroke, homing");
    model->add_option("--steps", steps_path, "Step table (defaults to the built-in protocol table)");
    auto* opt_a = model->add_option("--fitts-a", params.fitts_a, "Fitts intercept (s)");
    auto* opt_b = model->add_option("--fitts-b", params.fitts_b, "Fitts slope (s/bit)");
    auto* opt_k = model->add_option("--keystroke", params.keystroke, "Seconds per keystroke");
    auto* opt_h = model->add_option("--homing", params.homing, "Seconds per keyboard/pointer transfer");

    auto* fitts = app.add_subcommand("fitts", "Movement time for one pointing action");
    double distance = 0.0;
    double width = 0.0;
    wmbench::CostParams fitts_params;
    fitts->add_option("--d", distance, "Distance to target (px)")->required();
    fitts->add_option("--w", width, "Target width (px)")->required();
    fitts->add_option("--a", fitts_params.fitts_a, "Intercept (s)")->capture_default_str();
    fitts->add_option("--b", fitts_params.fitts_b, "Slope (s/bit)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*stats) {
            auto const groups = wmbench::group_samples(wmbench::load_samples(read_file(csv_path)));
            std::cout << wmbench::stats_report(groups);
        } else if (*model) {
            wmbench::CostParams effective;
            if (!params_path.empty())
                effective = wmbench::parse_cost_params(read_file(params_path));
            // explicit flags win over the params file
            if (*opt_a)
                effective.fitts_a = params.fitts_a;
            if (*opt_b)
                effective.fitts_b = params.fitts_b;
            if (*opt_k)
                effective.keystroke = params.keystroke;
            if (*opt_h)
                effective.homing = params.homing;

            auto const steps = steps_path.empty() ? wmbench::default_workflow()
                                                  : wmbench::parse_step_table(read_file(steps_path));
            if (mode_arg != "dynamic")
                std::cout << wmbench::model_report(steps, wmbench::Mode::Floating, effective);
            if (mode_arg != "floating")
                std::cout << wmbench::model_report(steps, wmbench::Mode::Dynamic, effective);
        } else if (*fitts) {
            std::printf("%.6f\n", wmbench::fitts_mt(distance, width, fitts_params));
        }
    } catch (wmbench::StatsError const& e) {
        std::cerr << "wmbench: " << wmbench::to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (std::exception const& e) {
        std::cerr << "wmbench: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
