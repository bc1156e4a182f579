#pragma once

#include <json.hpp>

#include "verify.hpp"

namespace wpolar {

namespace detail {

inline std::string opt_cell(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : "n/a";
}
inline std::string bool_cell(bool b) { return b ? "true" : "false"; }

}  // namespace detail

// CSV and JSON renderings carry identical cell values; timing stays out of both.
inline std::string report_csv(const VerificationReport& rep) {
    std::string out;
    if (!rep.rows.empty() || rep.campaign != "rules") {
        if (rep.campaign == "wp-equiv") {
            out += csv_row({"n", "trees", "mismatches"});
            for (const auto& r : rep.equiv_rows)
                out += csv_row({std::to_string(r.n), std::to_string(r.trees),
                                std::to_string(r.mismatches)});
            return out;
        }
    }
    if (rep.campaign == "rules") {
        out += csv_row({"rule", "preserves", "sign", "sites", "sign_violations",
                        "closed_form_checked", "closed_form_mismatches", "examples"});
        for (const auto& r : rep.rule_rows)
            out += csv_row({r.rule, r.preserves, r.sign, std::to_string(r.sites),
                            std::to_string(r.sign_violations),
                            std::to_string(r.closed_form_checked),
                            std::to_string(r.closed_form_mismatches), r.examples});
        return out;
    }
    out += csv_row({"which", "n", "constraint", "param", "formula", "regime", "family",
                    "enumerated", "class_size", "scored", "match", "witness_ok", "witness",
                    "constructed", "pendent_paths_len1", "has_degree4", "internal_path_ok",
                    "min_witness_count"});
    for (const auto& r : rep.rows)
        out += csv_row({r.which, std::to_string(r.n), std::string(1, r.constraint),
                        std::to_string(r.param), detail::opt_cell(r.formula), r.regime, r.family,
                        std::to_string(r.enumerated), std::to_string(r.class_size),
                        detail::bool_cell(r.scored), detail::bool_cell(r.match),
                        detail::bool_cell(r.witness_ok), r.witness_code, r.constructed_code,
                        detail::bool_cell(r.sn_pendent_ok), detail::bool_cell(r.sn_degree4_ok),
                        detail::bool_cell(r.sn_internal_ok),
                        std::to_string(r.min_witness_count)});
    return out;
}

inline nlohmann::json report_json(const VerificationReport& rep) {
    nlohmann::json j;
    j["campaign"] = rep.campaign;
    j["n_min"] = rep.n_min;
    j["n_max"] = rep.n_max;
    j["violations"] = rep.violations;
    j["elapsed_ms"] = rep.elapsed_ms;
    if (rep.campaign == "wp-equiv") {
        auto rows = nlohmann::json::array();
        for (const auto& r : rep.equiv_rows)
            rows.push_back({{"n", std::to_string(r.n)},
                            {"trees", std::to_string(r.trees)},
                            {"mismatches", std::to_string(r.mismatches)}});
        j["rows"] = rows;
        return j;
    }
    if (rep.campaign == "rules") {
        auto rows = nlohmann::json::array();
        for (const auto& r : rep.rule_rows)
            rows.push_back({{"rule", r.rule},
                            {"preserves", r.preserves},
                            {"sign", r.sign},
                            {"sites", std::to_string(r.sites)},
                            {"sign_violations", std::to_string(r.sign_violations)},
                            {"closed_form_checked", std::to_string(r.closed_form_checked)},
                            {"closed_form_mismatches", std::to_string(r.closed_form_mismatches)},
                            {"examples", r.examples}});
        j["rows"] = rows;
        return j;
    }
    auto rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"which", r.which},
                        {"n", std::to_string(r.n)},
                        {"constraint", std::string(1, r.constraint)},
                        {"param", std::to_string(r.param)},
                        {"formula", detail::opt_cell(r.formula)},
                        {"regime", r.regime},
                        {"family", r.family},
                        {"enumerated", std::to_string(r.enumerated)},
                        {"class_size", std::to_string(r.class_size)},
                        {"scored", detail::bool_cell(r.scored)},
                        {"match", detail::bool_cell(r.match)},
                        {"witness_ok", detail::bool_cell(r.witness_ok)},
                        {"witness", r.witness_code},
                        {"constructed", r.constructed_code},
                        {"pendent_paths_len1", detail::bool_cell(r.sn_pendent_ok)},
                        {"has_degree4", detail::bool_cell(r.sn_degree4_ok)},
                        {"internal_path_ok", detail::bool_cell(r.sn_internal_ok)},
                        {"min_witness_count", std::to_string(r.min_witness_count)}});
    j["rows"] = rows;
    return j;
}

}  // namespace wpolar
