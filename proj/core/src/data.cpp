#include "primegraph/data.hpp"

#include <cstdlib>

#ifndef PRIMEGRAPH_SOURCE_DATA_DIR
#define PRIMEGRAPH_SOURCE_DATA_DIR "data"
#endif

namespace primegraph::data {

DataContext DataContext::load(const std::string& dir) {
    DataContext ctx;
    ctx.dir = dir;
    ctx.l4_spectra = spectra::SpectrumTable::load(dir + "/" + l4_spectra_filename());
    ctx.candidates = catalog::CandidateTable::load(dir + "/" + candidates_filename());
    return ctx;
}

std::string default_data_dir() {
    if (const char* env = std::getenv("PRIMEGRAPH_DATA"); env && *env) return env;
    return PRIMEGRAPH_SOURCE_DATA_DIR;
}

}  // namespace primegraph::data
