// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

// A deliberately separate, brute-force re-derivation of everything the
// pipeline computes from the fixture: link results, the yearly table, the
// category table and the plot data. It shares no code with the library —
// its own CDX line splitting, URL matching (by the recorded original URL,
// not by canonicalization), witness selection, page scanning and rounding —
// so agreement with the pipeline is meaningful.
namespace oracle {

struct Tables {
    std::vector<std::string> link_result_lines;  // JSONL, catalog order
    std::string yearly_csv;
    std::string categories_csv;
    std::string plotdata_csv;
};

Tables recompute(const std::string& software_path, const std::string& publications_path,
                 const std::string& archive_dir);

}  // namespace oracle
