/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/check_result.hh>
#include <ekr/errors.hh>

using namespace ekr;

auto ekr::to_string(Status s) -> std::string
{
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
    }
    return "skip";
}

auto CheckResult::settle() -> void
{
    bool any_pass = false, any_fail = false;
    for (auto & i : instances) {
        any_pass |= i.status == Status::pass;
        any_fail |= i.status == Status::fail;
    }
    status = any_fail ? Status::fail : any_pass ? Status::pass : Status::skip;
}

auto ekr::guarded(nlohmann::json input, const std::function<Instance (Instance)> & body) -> Instance
{
    Instance start;
    start.input = input;
    try {
        return body(std::move(start));
    }
    catch (const BudgetExceeded & e) {
        Instance i;
        i.input = std::move(input);
        i.status = Status::skip;
        i.outcome = "search budget exhausted after " + std::to_string(e.nodes()) + " nodes";
        return i;
    }
    catch (const CapExceeded & e) {
        Instance i;
        i.input = std::move(input);
        i.status = Status::skip;
        i.outcome = std::string("size cap: ") + e.what();
        return i;
    }
}

auto ekr::to_json(const Instance & i) -> nlohmann::json
{
    nlohmann::json j;
    j["input"] = i.input;
    j["status"] = to_string(i.status);
    j["outcome"] = i.outcome;
    j["witness"] = i.witness;
    return j;
}

auto ekr::to_json(const CheckResult & r) -> nlohmann::json
{
    nlohmann::json j;
    j["check_id"] = r.check_id;
    j["statement_ref"] = r.statement_ref;
    j["status"] = to_string(r.status);
    auto instances = nlohmann::json::array();
    for (auto & i : r.instances)
        instances.push_back(to_json(i));
    j["instances"] = instances;
    j["runtime_ms"] = r.runtime_ms;
    return j;
}

auto ekr::to_csv_row(const CheckResult & r) -> std::string
{
    return r.check_id + "," + to_string(r.status) + "," + std::to_string(r.instances.size()) + "," + std::to_string(r.runtime_ms);
}
