#pragma once

// JSON reports behind the hopfcheck subcommands. Every report carries an
// "ok" verdict, the seed and the trial count.

#include <optional>
#include <string>

#include <json.hpp>

#include "hopf/braided.hpp"
#include "hopf/extension.hpp"

namespace hopf::report {

struct Options {
    IsoSearchOptions iso;
    std::optional<GroupElement> ambient_degree;  // nullopt: trivial modular object of the ambient category
};

nlohmann::json verify(const BraidedHopf& h, const Options& o);
nlohmann::json integrals(const BraidedHopf& h, const Options& o);
nlohmann::json radford(const BraidedHopf& h, const Options& o);
nlohmann::json extension(const Extension& e, const Options& o);
nlohmann::json braided(const BraidedHopf& h, const Options& o);

/// Indented key/value rendering of a report; matrices print one row per line.
std::string to_text(const nlohmann::json& j);

}  // namespace hopf::report
