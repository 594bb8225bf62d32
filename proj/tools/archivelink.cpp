// SPDX-License-Identifier: Apache-2.0
//
// archivelink: link software catalogs to web-archive captures.
//
//   archivelink mine     --config pipeline.conf      # software mentions
//   archivelink link     --config pipeline.conf      # archival status
//   archivelink classify --config pipeline.conf      # page content profiles
//   archivelink report   --config pipeline.conf      # yearly/category tables
//
// Exit codes: 0 ok, 2 input/validation error, 3 I/O error, 4 backend
// unreachable, 1 unexpected failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "archivelink/config.hpp"
#include "archivelink/errors.hpp"
#include "archivelink/pipeline.hpp"

namespace {

struct Cli {
    std::string config_path;
    archivelink::ConfigOverrides overrides;
};

void add_common_options(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--config", cli.config_path, "pipeline config file");
    cmd->add_option_function<std::string>(
        "--fixture", [&cli](const std::string& v) { cli.overrides.fixture_dir = v; },
        "fixture archive directory (overrides the configured backend)");
    cmd->add_option_function<std::string>(
        "--out", [&cli](const std::string& v) { cli.overrides.out_dir = v; },
        "output directory");
    cmd->add_option_function<double>(
        "--rate-limit", [&cli](double v) { cli.overrides.rate_limit = v; },
        "max remote requests per second");
    cmd->add_option_function<int>(
        "--workers", [&cli](int v) { cli.overrides.workers = v; },
        "concurrent link workers");
    cmd->add_flag_callback(
        "--keep-all-statuses",
        [&cli]() { cli.overrides.keep_all_statuses = true; },
        "keep redirect/error captures instead of filtering to 200/absent");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"archivelink: link software websites to web-archive captures"};
    app.require_subcommand(1);

    Cli cli;
    CLI::App* mine = app.add_subcommand("mine", "scan publications for software mentions");
    CLI::App* link = app.add_subcommand("link", "classify archival status per software");
    CLI::App* classify = app.add_subcommand("classify", "profile archived landing pages");
    CLI::App* report = app.add_subcommand("report", "aggregate per-year and category tables");
    for (CLI::App* cmd : {mine, link, classify, report}) add_common_options(cmd, cli);

    CLI11_PARSE(app, argc, argv);

    try {
        archivelink::PipelineConfig config =
            archivelink::load_pipeline_config(cli.config_path, cli.overrides);
        if (mine->parsed()) {
            archivelink::run_mine(config);
        } else if (link->parsed()) {
            archivelink::run_link(config);
        } else if (classify->parsed()) {
            archivelink::run_classify(config);
        } else if (report->parsed()) {
            archivelink::run_report(config);
        }
        return 0;
    } catch (const archivelink::NetworkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const archivelink::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const archivelink::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const archivelink::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
