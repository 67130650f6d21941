#include "app/commands.hpp"
#include "vortexfield/parallel.hpp"

#include <CLI11.hpp>

#include <iostream>

using vortexfield::app::Command;
using vortexfield::app::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--domain", cfg.domain, "disk or oval")->capture_default_str();
    sub->add_option("--c", cfg.c, "oval coefficient in Phi(z) = z / (1 - c z^2)")->capture_default_str();
    sub->add_option("--h", cfg.h, "external field h1,h2")->delimiter(',')->expected(2)->allow_extra_args(false);
    sub->add_option("--grid", cfg.grid, "polar grid nr,nt")->delimiter(',')->expected(2)->allow_extra_args(false);
    sub->add_option("--tol", cfg.tol, "fixed-point tolerance (max-norm)")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "fixed-point iteration cap")->capture_default_str();
    sub->add_option("--h-max", cfg.h_max, "largest accepted |h|")->capture_default_str();
    sub->add_option("--out", cfg.out, "output directory")->capture_default_str();
}

void add_optimizer(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--s0", cfg.s0, "starting angles s1,s2")->delimiter(',')->expected(2)->allow_extra_args(false);
    sub->add_option("--max-evals", cfg.max_evals, "Nelder-Mead evaluation budget")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv)
{
    vortexfield::apply_thread_env();
    RunConfig cfg;
    CLI::App app{"Boundary-vortex energies and magnetization fields on the disk and the oval"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    auto* minimize = app.add_subcommand("minimize", "Nelder-Mead search for the vortex angles");
    add_common(minimize, cfg);
    add_optimizer(minimize, cfg);

    auto* landscape = app.add_subcommand("landscape", "energy on an n x n grid of vortex angles");
    add_common(landscape, cfg);
    landscape->add_option("--landscape-n", cfg.landscape_n, "grid resolution")->capture_default_str();
    landscape->add_flag("--svg", cfg.svg, "also write a heatmap");

    auto* field = app.add_subcommand("field", "magnetization samples for given or optimal vortices");
    add_common(field, cfg);
    add_optimizer(field, cfg);
    field->add_option("--s", cfg.s, "vortex angles s1,s2")->delimiter(',')->expected(2)->allow_extra_args(false);
    field->add_flag("--auto-min", cfg.auto_min, "minimize first and use the minimizer");
    field->add_flag("--svg", cfg.svg, "also write a quiver plot");
    field->add_option("--seed", cfg.seed, "seed for the sample jitter")->capture_default_str();
    field->add_option("--jitter", cfg.jitter, "random sample offset, fraction of a lattice step")->capture_default_str();
    field->add_option("--rings", cfg.sample_rings, "sample rings")->capture_default_str();
    field->add_option("--spokes", cfg.sample_spokes, "samples on the outer ring")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run the cross-validation checks");
    verify->add_option("--only", cfg.only, "comma-separated check sets");
    verify->add_option("--out", cfg.out, "output directory")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : vortexfield::app::kExitConfig;
    }

    if (*minimize) cfg.command = Command::minimize;
    if (*landscape) cfg.command = Command::landscape;
    if (*field) cfg.command = Command::field;
    if (*verify) cfg.command = Command::verify;
    return vortexfield::app::run(cfg, std::cout, std::cerr);
}
