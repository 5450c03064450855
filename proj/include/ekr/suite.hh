/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_SUITE_HH
#define EKR_GUARD_SUITE_HH 1

#include <ekr/checks.hh>

#include <functional>
#include <string>
#include <vector>

namespace ekr
{
    struct SuiteEntry
    {
        std::string check_id;
        std::string statement_ref;
        std::function<CheckResult (Workbench &)> run;
    };

    /// Every check, in report order.
    auto verification_suite() -> const std::vector<SuiteEntry> &;

    /// Parses "all" or a comma-separated list of check IDs; throws on unknown IDs.
    auto select_checks(const std::string & selection) -> std::vector<SuiteEntry>;

    /// Runs the entries on options.threads workers; results come back in entry
    /// order. on_done, if given, sees each result as it finishes (serialized).
    auto run_suite(Workbench & bench, const std::vector<SuiteEntry> & entries,
            const std::function<void (const CheckResult &)> & on_done = { }) -> std::vector<CheckResult>;

    auto suite_report(const std::vector<CheckResult> & results) -> nlohmann::json;

    auto write_csv(std::ostream & out, const std::vector<CheckResult> & results) -> void;

    /// The report with runtime fields removed, for comparing runs.
    auto without_runtimes(nlohmann::json report) -> nlohmann::json;

    auto any_failed(const std::vector<CheckResult> & results) -> bool;
}

#endif
