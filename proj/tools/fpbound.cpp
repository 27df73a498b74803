// fpbound: minimal fixed-point counts for standard-form mapping classes.
//
//   fpbound validate <file>
//   fpbound bounds <file> [--format text|json]
//   fpbound selfcheck [--max-components N] [--max-genus G] [--max-boundaries B] [--seed S] [--strict]
//
// Exit codes: 0 ok, 1 I/O or parse error, 2 invalid description, 3 cross-check failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fpbound/bounds.hpp"
#include "fpbound/json_io.hpp"
#include "fpbound/mcdesc.hpp"
#include "fpbound/selfcheck.hpp"

namespace {

enum Exit { kOk = 0, kParse = 1, kSemantic = 2, kCrossCheck = 3 };

void print_issues(fpbound::desc::ValidationResult const& v)
{
    for (auto const& e : v.errors)
        std::cerr << "error " << e.code << ": " << e.message << '\n';
    for (auto const& w : v.warnings)
        std::cerr << "warning " << w.code << ": " << w.message << '\n';
}

int load(std::string const& path, bool strict, fpbound::desc::Description& out)
{
    try {
        out = fpbound::io::load_description(path);
    } catch (fpbound::io::ParseError const& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    }
    fpbound::desc::ValidateOptions opts;
    opts.euler_poincare_warning = strict;
    auto const v = fpbound::desc::validate(out, opts);
    print_issues(v);
    if (!v.ok())
        return kSemantic;
    if (strict && !v.warnings.empty())
        return kSemantic;
    return kOk;
}

int cmd_validate(std::string const& path, bool strict)
{
    fpbound::desc::Description d;
    int const rc = load(path, strict, d);
    if (rc == kOk)
        std::cout << "valid: " << d.components.size() << " components, " << d.annuli.size() << " annuli, chi = "
                  << d.euler_characteristic() << '\n';
    return rc;
}

int cmd_bounds(std::string const& path, std::string const& format, bool strict)
{
    fpbound::desc::Description d;
    if (int rc = load(path, strict, d); rc != kOk)
        return rc;
    auto const report = fpbound::bounds::analyze(d);
    std::cout << (format == "json" ? fpbound::io::render_json(report) : fpbound::io::render_text(report));
    return report.cross_check == "mismatch" ? kCrossCheck : kOk;
}

int cmd_selfcheck(fpbound::corpus::CorpusConfig const& cfg, std::uint64_t seed)
{
    auto const sweep = fpbound::selfcheck::sweep(cfg);
    std::printf("corpus: %zu structures, %zu candidates, %zu valid descriptions checked (%.1f s)\n",
                sweep.stats.structures, sweep.stats.candidates, sweep.checked, sweep.seconds);
    for (auto const& [code, n] : sweep.stats.rejected)
        std::printf("  rejected by validation, %s: %zu\n", code.c_str(), n);
    std::printf("branches: |ind| only %zu, |ind|+2 %zu; excluded (rotated pA abutment) %zu\n", sweep.plain_branch,
                sweep.plus_two_branch, sweep.flagged);
    if (sweep.order_reversed > 0)
        std::printf("note: theorem2 > theorem1 on %zu instances, all with fixed annuli (first: %s)\n",
                    sweep.order_reversed, sweep.first_order_reversed.c_str());
    for (auto const& v : sweep.first_violations)
        std::printf("violation: %s\n", v.c_str());

    auto const alg = fpbound::selfcheck::algebra(seed);
    std::printf("algebra: %zu specialization, %zu Smith, %zu rank trials (%.1f s)\n", alg.specialization_trials,
                alg.smith_trials, alg.rank_trials, alg.seconds);
    for (std::size_t i = 0; i < alg.failures.size() && i < 10; ++i)
        std::printf("failure: %s\n", alg.failures[i].c_str());

    bool const ok = sweep.violations == 0 && alg.ok() && sweep.plain_branch > 0 && sweep.plus_two_branch > 0;
    std::printf("%s\n", ok ? "selfcheck passed" : "selfcheck FAILED");
    return ok ? kOk : kCrossCheck;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Minimal fixed-point counts for area-preserving maps in standard-form mapping classes"};
    app.require_subcommand(1);

    std::string path, format = "text";
    bool strict = false;

    auto* validate = app.add_subcommand("validate", "check a description file");
    validate->add_option("file", path, "description (JSON)")->required();
    validate->add_flag("--strict", strict, "treat warnings (prong-count consistency) as errors");

    auto* bounds = app.add_subcommand("bounds", "report Nielsen classes and minimal fixed-point counts");
    bounds->add_option("file", path, "description (JSON)")->required();
    bounds->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    bounds->add_flag("--strict", strict, "treat warnings as errors");

    fpbound::corpus::CorpusConfig cfg;
    std::uint64_t seed = 1;
    auto* self = app.add_subcommand("selfcheck", "sweep the corpus and run randomized algebra checks");
    self->add_option("--max-components", cfg.max_components, "components per description")
        ->check(CLI::Range(1, 4))
        ->capture_default_str();
    self->add_option("--max-genus", cfg.max_genus, "genus per component")->check(CLI::Range(0, 2))->capture_default_str();
    self->add_option("--max-boundaries", cfg.max_boundaries, "boundary circles per component")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
    self->add_option("--seed", seed, "seed for the randomized algebra checks")->capture_default_str();
    self->add_flag("--strict", strict, "accepted for symmetry; the sweep has no warnings to promote");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? kOk : kParse;
    }

    if (*validate)
        return cmd_validate(path, strict);
    if (*bounds)
        return cmd_bounds(path, format, strict);
    return cmd_selfcheck(cfg, seed);
}
