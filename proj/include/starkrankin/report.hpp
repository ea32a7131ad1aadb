#ifndef STARKRANKIN_REPORT_HPP
#define STARKRANKIN_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace starkrankin {

struct CheckResult {
    std::string name;     // unique, reports are sorted by this key
    std::string check_id; // stable identifier of the property being checked
    std::string status;   // "pass", "fail" or "skipped"
    std::string lhs;
    std::string rhs;
    std::string kind = "exact"; // "exact" or "numeric"
    double elapsed_ms = 0.0;
};

// Deterministic JSON report: checks sorted by name, exact values rendered as
// strings, timings emitted only on request (they would break reproducibility).
class Report {
  public:
    void add(CheckResult r);
    void add_check(const std::string &name, const std::string &check_id, bool pass,
                   const std::string &lhs, const std::string &rhs,
                   const std::string &kind = "exact");
    void add_skipped(const std::string &name, const std::string &check_id,
                     const std::string &reason);

    void set_seed(unsigned long seed) { seed_ = seed; }
    void set_scenario_echo(nlohmann::json echo) { scenario_echo_ = std::move(echo); }

    bool all_pass() const;
    std::size_t size() const { return checks_.size(); }

    // stamp a duration onto every check added at index >= first
    void set_elapsed_from(std::size_t first, double elapsed_ms);

    nlohmann::json to_json(bool include_timings = false) const;
    std::string render(bool include_timings = false) const;

  private:
    std::vector<CheckResult> checks_;
    nlohmann::json scenario_echo_;
    unsigned long seed_ = 1;
};

} // namespace starkrankin

#endif
