#pragma once

#include "q6/congruence.hpp"
#include "q6/scan.hpp"
#include "q6/suites.hpp"
#include "q6/tables.hpp"

#include <json.hpp>

namespace q6 {

// JSON rendering of the report types.  Schema versioned at the top level;
// big integers serialize as decimal strings.
using Json = nlohmann::ordered_json;

inline Json to_json(const SequenceTable& t)
{
    Json j;
    j["schema"] = 1;
    j["name"] = t.name;
    j["method"] = t.method;
    j["limit"] = t.limit();
    Json values = Json::array();
    for (const Int& v : t.values) values.push_back(v.str());
    j["values"] = std::move(values);
    return j;
}

inline Json to_json(const VerificationReport& r)
{
    Json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["limit"] = r.limit;
    if (!r.params.empty()) j["params"] = r.params;
    j["status"] = r.pass ? "pass" : "fail";
    if (r.first_failure) {
        j["first_failure"] = {{"n", r.first_failure->n},
                              {"expected", r.first_failure->expected},
                              {"got", r.first_failure->got}};
    }
    j["checked"] = r.checked;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline Json to_json(const CongruenceReport& r)
{
    Json j;
    j["schema"] = 1;
    j["theorem"] = r.statement;
    j["spec"] = r.spec;
    j["table_limit"] = r.table_limit;
    j["checked"] = r.checked;
    Json v = Json::array();
    for (const CongruenceViolation& x : r.violations)
        v.push_back({{"n", x.n}, {"index", x.index.str()}, {"residue", x.residue}});
    j["violations"] = std::move(v);
    j["coverage_note"] = r.coverage_note;
    j["status"] = r.exploratory ? "exploratory" : (r.pass() ? "pass" : "fail");
    return j;
}

inline Json to_json(const ScanResult& r)
{
    Json j;
    j["schema"] = 1;
    j["id"] = r.id;
    j["k"] = r.k;
    j["limit"] = r.limit;
    if (r.counterexample) {
        j["status"] = "counterexample";
        j["counterexample"] = {{"n", r.counterexample->first},
                               {"value", r.counterexample->second.str()}};
    } else {
        j["status"] = "verified";
    }
    if (r.first_strict) j["first_strict_n"] = *r.first_strict;
    if (r.last_equality) j["last_equality_n"] = *r.last_equality;
    if (r.claimed_sharpness) j["claimed_bound"] = *r.claimed_sharpness;
    if (r.sharpness_match) j["sharpness_match"] = *r.sharpness_match;
    return j;
}

} // namespace q6
