#include "starkrankin/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace starkrankin {

void Report::add(CheckResult r)
{
    if (r.name.empty() || r.check_id.empty())
        throw std::logic_error("Report: checks need a name and a check_id");
    if (r.status != "pass" && r.status != "fail" && r.status != "skipped")
        throw std::logic_error("Report: unknown status '" + r.status + "'");
    for (const auto &c : checks_)
        if (c.name == r.name)
            throw std::logic_error("Report: duplicate check name '" + r.name + "'");
    checks_.push_back(std::move(r));
}

void Report::add_check(const std::string &name, const std::string &check_id, bool pass,
                       const std::string &lhs, const std::string &rhs, const std::string &kind)
{
    add({name, check_id, pass ? "pass" : "fail", lhs, rhs, kind, 0.0});
}

void Report::add_skipped(const std::string &name, const std::string &check_id,
                         const std::string &reason)
{
    add({name, check_id, "skipped", reason, "", "exact", 0.0});
}

void Report::set_elapsed_from(std::size_t first, double elapsed_ms)
{
    for (std::size_t i = first; i < checks_.size(); ++i)
        checks_[i].elapsed_ms = elapsed_ms;
}

bool Report::all_pass() const
{
    for (const auto &c : checks_)
        if (c.status == "fail")
            return false;
    return true;
}

nlohmann::json Report::to_json(bool include_timings) const
{
    std::vector<CheckResult> sorted = checks_;
    std::sort(sorted.begin(), sorted.end(),
              [](const CheckResult &a, const CheckResult &b) { return a.name < b.name; });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &c : sorted) {
        nlohmann::json e;
        e["name"] = c.name;
        e["check_id"] = c.check_id;
        e["status"] = c.status;
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        e["exact_or_numeric"] = c.kind;
        if (include_timings)
            e["elapsed_ms"] = c.elapsed_ms;
        arr.push_back(std::move(e));
    }
    nlohmann::json out;
    out["checks"] = std::move(arr);
    out["seed"] = seed_;
    out["versions"] = {{"starkrankin", "1.0.0"}};
    out["scenario_echo"] = scenario_echo_;
    out["all_pass"] = all_pass();
    return out;
}

std::string Report::render(bool include_timings) const
{
    return to_json(include_timings).dump(2) + "\n";
}

} // namespace starkrankin
