#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ybe/classify.hpp"
#include "ybe/enumerate.hpp"
#include "ybe/solution.hpp"

namespace ybe {

// Solution file format: {"n": int, "sigma": [[int]], "tau": [[int]]}.
nlohmann::ordered_json solution_to_json(const Solution& s);
Solution solution_from_json(const nlohmann::json& j);
Solution load_solution_file(const std::string& path);

nlohmann::ordered_json report_to_json(const ClassificationReport& r);

// Fills in missing per-entry classification flags (parallel over entries).
void compute_flags(Catalog& cat, int jobs = 1);

// JSON-lines serialization: a header line
//   {"schema":1,"n":...,"class":...,"count":...}
// followed by one line per entry
//   {"solution":{...},"flags":{...},"provenance":{"base_index":...,"pi1":...,"pi2":...}}
// Output bytes are deterministic for a given catalog.  Entries missing flags
// are classified on the fly.
std::string catalog_to_jsonl(const Catalog& cat);

Catalog catalog_from_jsonl(std::istream& in);
Catalog load_catalog_file(const std::string& path);

} // namespace ybe
