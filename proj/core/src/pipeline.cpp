// SPDX-License-Identifier: Apache-2.0
#include "archivelink/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <vector>

#include "archivelink/catalog.hpp"
#include "archivelink/content_classifier.hpp"
#include "archivelink/errors.hpp"
#include "archivelink/mention_miner.hpp"
#include "archivelink/records_io.hpp"
#include "archivelink/report.hpp"
#include "archivelink/temporal_linker.hpp"

namespace fs = std::filesystem;

namespace archivelink {

namespace {

std::string out_path(const PipelineConfig& config, const char* name) {
    return (fs::path(config.out_dir) / name).string();
}

std::ofstream open_output(const std::string& path) {
    fs::create_directories(fs::path(path).parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path + "'");
    return out;
}

// Reads a stage output produced by an earlier command. Absence is a usage
// error (run the earlier stage first), not an I/O failure.
std::vector<std::string> read_stage_lines(const std::string& path, const char* producer) {
    if (!fs::exists(path)) {
        throw ValidationError("'" + path + "' not found; run '" + producer + "' first");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

TriggerLexicon lexicon_for(const PipelineConfig& config) {
    return config.lexicon_path.empty() ? TriggerLexicon::defaults()
                                       : TriggerLexicon::load(config.lexicon_path);
}

std::vector<CategoryRule> rules_for(const PipelineConfig& config) {
    return config.rules_path.empty() ? default_rules() : load_rules(config.rules_path);
}

}  // namespace

std::string mentions_path(const PipelineConfig& c) { return out_path(c, "mentions.jsonl"); }
std::string link_results_path(const PipelineConfig& c) {
    return out_path(c, "linkresults.jsonl");
}
std::string profiles_path(const PipelineConfig& c) { return out_path(c, "profiles.jsonl"); }
std::string yearly_csv_path(const PipelineConfig& c) { return out_path(c, "yearly.csv"); }
std::string categories_csv_path(const PipelineConfig& c) {
    return out_path(c, "categories.csv");
}
std::string plotdata_csv_path(const PipelineConfig& c) { return out_path(c, "plotdata.csv"); }
std::string yearly_json_path(const PipelineConfig& c) { return out_path(c, "yearly.json"); }
std::string categories_json_path(const PipelineConfig& c) {
    return out_path(c, "categories.json");
}

void run_mine(const PipelineConfig& config) {
    validate_config(config, /*needs_catalog=*/true);
    CatalogIndex index = load_catalog(config.software_path, config.publications_path);
    TriggerLexicon lexicon = lexicon_for(config);
    std::map<std::string, std::string> names = build_name_map(index);

    std::ofstream out = open_output(mentions_path(config));
    std::size_t count = 0;
    for (const PublicationRecord& pub : index.publications()) {
        for (const Mention& mention : find_mentions(pub, names, lexicon)) {
            out << mention_to_json(mention) << '\n';
            ++count;
        }
    }
    std::cerr << "mine: " << count << " mentions from " << index.publications().size()
              << " publications\n";
}

std::size_t run_link(const PipelineConfig& config) {
    validate_config(config, /*needs_catalog=*/true);
    CatalogIndex index = load_catalog(config.software_path, config.publications_path);
    ArchiveClient client(config.backend());

    std::vector<LinkOutcome> outcomes =
        link_all(index, client, config.workers, config.keep_all_statuses);

    std::size_t written = 0;
    std::size_t network_failures = 0;
    std::ofstream out = open_output(link_results_path(config));
    for (const LinkOutcome& outcome : outcomes) {
        if (outcome.result) {
            out << link_result_to_json(*outcome.result) << '\n';
            ++written;
        } else {
            std::cerr << "link: " << outcome.error << "\n";
            if (outcome.network_error) ++network_failures;
        }
    }
    std::cerr << "link: " << written << " of " << outcomes.size() << " softwares linked\n";
    if (written == 0 && network_failures > 0) {
        throw NetworkError("archive backend unreachable for all " +
                           std::to_string(network_failures) + " queried softwares");
    }
    return written;
}

void run_classify(const PipelineConfig& config) {
    validate_config(config, /*needs_catalog=*/true);
    CatalogIndex index = load_catalog(config.software_path, config.publications_path);
    ArchiveClient client(config.backend());
    std::vector<CategoryRule> rules = rules_for(config);

    std::vector<std::string> lines = read_stage_lines(link_results_path(config), "link");
    std::ofstream out = open_output(profiles_path(config));
    std::size_t profiled = 0, absent = 0;
    for (const std::string& line : lines) {
        LinkResult lr = link_result_from_json(line);
        const SoftwareRecord* sw = index.find_software(lr.software_id);
        if (sw == nullptr) {
            throw ValidationError("link results mention unknown software '" +
                                  lr.software_id + "'; catalog and results disagree");
        }
        std::optional<ContentProfile> profile = profile_software(*sw, lr, client, rules);
        if (profile) {
            out << profile_to_json(lr.software_id, *profile) << '\n';
            ++profiled;
        } else {
            ++absent;
        }
    }
    std::cerr << "classify: " << profiled << " profiles, " << absent << " absent\n";
}

void run_report(const PipelineConfig& config) {
    validate_config(config, /*needs_catalog=*/false);

    std::vector<LinkResult> results;
    for (const std::string& line : read_stage_lines(link_results_path(config), "link")) {
        results.push_back(link_result_from_json(line));
    }
    std::vector<ProfileRecord> profiles;
    for (const std::string& line : read_stage_lines(profiles_path(config), "classify")) {
        profiles.push_back(profile_from_json(line));
    }

    std::vector<YearlyStats> yearly = aggregate_yearly(results);
    std::vector<CategoryStats> categories = aggregate_categories(profiles, results);

    open_output(yearly_csv_path(config)) << emit_yearly_csv(yearly);
    open_output(categories_csv_path(config)) << emit_categories_csv(categories);
    open_output(plotdata_csv_path(config)) << emit_plotdata_csv(yearly);
    open_output(yearly_json_path(config)) << emit_yearly_json(yearly);
    open_output(categories_json_path(config)) << emit_categories_json(categories);
    std::cerr << "report: " << yearly.size() << " years, " << results.size()
              << " link results, " << profiles.size() << " profiles\n";
}

}  // namespace archivelink
