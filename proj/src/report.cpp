#include <iap/report.hpp>

#include <stdexcept>

namespace iap {

Json to_json(const Progression & p)
{
    return Json{{"start", p.start}, {"diff", p.diff}, {"length", p.length}, {"elements", elements(p)}};
}

Json to_json(const Witness & w)
{
    Json j = to_json(w.progression);
    j["family"] = w.family_used.name();
    j["certified"] = w.certified;
    j["aps_scanned"] = w.aps_scanned;
    return j;
}

Json to_json(const FinderConfig & cfg)
{
    return Json{
        {"eta", cfg.eta},
        {"epsilon", cfg.epsilon},
        {"regime_threshold_factor", cfg.threshold_factor()},
        {"family", to_string(cfg.family)},
        {"n0_horizon", cfg.n0_horizon}};
}

Json to_json(const SearchBudget & budget)
{
    return Json{{"node_limit", budget.node_limit}, {"time_limit_secs", budget.time_limit}};
}

Json to_json(const SizeVerdict & v)
{
    Json j{{"n", v.n}};
    if (v.bad_exists)
        j["bad_exists"] = *v.bad_exists;
    else
        j["bad_exists"] = nullptr;
    j["outcome"] = to_string(v.outcome);
    j["nodes"] = v.nodes;
    return j;
}

Json to_json(const Coloring & c)
{
    Json colours = Json::array();
    for (Int i = 1 ; i <= c.n() ; ++i)
        colours.push_back(c.label_of(i));
    return colours;
}

Json to_json(const PermutationMap & p)
{
    return Json(std::vector<Int>(p.images().begin(), p.images().end()));
}

Json to_json(const SrResult & r)
{
    Json steps = Json::array();
    for (const auto & s : r.steps)
        steps.push_back(to_json(s));
    Json j;
    j["value"] = r.value ? Json(*r.value) : Json(nullptr);
    j["outcome"] = to_string(r.outcome);
    j["steps"] = std::move(steps);
    return j;
}

Json to_json(const N0Report & r)
{
    Json steps = Json::array();
    for (const auto & s : r.steps) {
        Json step = to_json(s.verdict);
        step["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
        steps.push_back(std::move(step));
    }
    Json j;
    j["k"] = r.k;
    j["mode"] = to_string(r.mode);
    j["n_max"] = r.n_max;
    j["largest_bad"] = r.largest_bad ? Json(*r.largest_bad) : Json(nullptr);
    j["n0_upper_bound"] = r.n0_upper_bound ? Json(*r.n0_upper_bound) : Json(nullptr);
    j["n0_exact"] = r.n0_exact ? Json(*r.n0_exact) : Json(nullptr);
    j["note"] = r.note;
    j["steps"] = std::move(steps);
    return j;
}

Json to_json(const TkReport & r)
{
    Json steps = Json::array();
    for (const auto & s : r.steps) {
        Json step{{"m", s.m}};
        step.update(to_json(s.verdict));
        step["witness"] = s.witness ? to_json(*s.witness) : Json(nullptr);
        steps.push_back(std::move(step));
    }
    Json j;
    j["t"] = r.t;
    j["k"] = r.k;
    j["m_max"] = r.m_max;
    j["all_forced"] = r.all_forced;
    j["note"] = r.note;
    j["steps"] = std::move(steps);
    return j;
}

Progression progression_from_json(const Json & j)
{
    if (! j.is_object())
        throw std::invalid_argument("witness must be a JSON object");
    if (j.contains("witness"))
        return progression_from_json(j.at("witness"));
    for (const char * key : {"start", "diff", "length"})
        if (! j.contains(key) || ! j.at(key).is_number_integer())
            throw std::invalid_argument(std::string("witness lacks integer '") + key + "'");

    Progression p{j.at("start").get<Int>(), j.at("diff").get<Int>(), j.at("length").get<Int>()};
    if (p.start < 1 || p.diff < 1 || p.length < 1)
        throw std::invalid_argument("witness fields must be positive");
    if (j.contains("elements") && j.at("elements").get<std::vector<Int>>() != elements(p))
        throw std::invalid_argument("witness elements disagree with start/diff/length");
    return p;
}

}
