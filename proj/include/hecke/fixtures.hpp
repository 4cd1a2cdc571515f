#pragma once

#include "hecke/bases.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hecke {

struct CellMismatch {
    std::string cell;
    std::string expected;
    std::string actual;
};

struct FixtureResult {
    std::string id;
    size_t cells = 0;
    std::vector<CellMismatch> mismatches;
    // Printed cells judged through the other printed data instead.
    std::vector<std::string> notes;
    // Set when the fixture could not be evaluated at all.
    std::string error;
    double seconds = 0;
    bool ok() const { return error.empty() && mismatches.empty(); }
};

// Corpus directory: $HECKE_FIXTURES if set, else the bundled data/fixtures.
std::string default_fixture_dir();

// All *.json files of a directory, sorted by id. Throws std::runtime_error on
// a missing directory, an empty corpus or a file that does not parse.
std::vector<nlohmann::json> load_fixtures(const std::string& dir);

// chi given as a vector, "2rho", "0", or an orbit name resolved by its weighted
// Dynkin diagram.
QVec resolve_chi(Engine& eng, const std::string& text);

// Coset from a label vector "3,1,1", a word "s1s3" (leftmost letter applied
// last), "w0" or "1". Returns -1 when the label is not a coset.
long resolve_coset(const GradedContext& ctx, const std::string& text);

// Fixture element index -> family element index, matching orbits by canonical
// s (or saturation when s is absent) and local systems by position. A printed s
// that is not a parameter at all is replaced by the unique unmatched orbit of
// the same dimension and saturation, with a note. Entries are -1 where no
// match exists; problems are recorded in r.
std::vector<int> match_elements(const Family& fam, const ChevalleyBasis& cb, const nlohmann::json& fx,
                                FixtureResult& r);

FixtureResult run_fixture(const nlohmann::json& fx);

}  // namespace hecke
