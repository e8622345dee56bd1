#pragma once

#include <string>

#include "primegraph/arith.hpp"
#include "primegraph/catalog.hpp"
#include "primegraph/spectra.hpp"

namespace primegraph::data {

// The packaged datasets, loaded once and immutable thereafter.
struct DataContext {
    spectra::SpectrumTable l4_spectra;
    catalog::CandidateTable candidates;
    std::string dir;

    static DataContext load(const std::string& dir);
};

// Resolution order: explicit override, PRIMEGRAPH_DATA environment variable,
// the source-tree data directory this build was configured with.
std::string default_data_dir();

inline const char* l4_spectra_filename() { return "table2_spectra.txt"; }
inline const char* candidates_filename() { return "table5_candidates.txt"; }

}  // namespace primegraph::data
