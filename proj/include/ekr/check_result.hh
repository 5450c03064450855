/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef EKR_GUARD_CHECK_RESULT_HH
#define EKR_GUARD_CHECK_RESULT_HH 1

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ekr
{
    enum class Status { pass, fail, skip };

    auto to_string(Status s) -> std::string;

    struct Instance
    {
        /// Enough to rerun the instance: group specs, graph names, parameters.
        nlohmann::json input;
        Status status = Status::pass;
        std::string outcome;
        nlohmann::json witness;
    };

    struct CheckResult
    {
        std::string check_id;
        std::string statement_ref;
        Status status = Status::skip;
        std::vector<Instance> instances;
        std::int64_t runtime_ms = 0;

        /// fail if any instance failed, pass if any passed, otherwise skip.
        auto settle() -> void;
    };

    /// Runs body, turning budget and cap exhaustion into a skip.
    auto guarded(nlohmann::json input, const std::function<Instance (Instance)> & body) -> Instance;

    auto to_json(const Instance & i) -> nlohmann::json;
    auto to_json(const CheckResult & r) -> nlohmann::json;

    inline constexpr const char * csv_header = "check_id,status,instances,runtime_ms";
    auto to_csv_row(const CheckResult & r) -> std::string;
}

#endif
