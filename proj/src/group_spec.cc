/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ekr/group_spec.hh>
#include <ekr/builders.hh>
#include <ekr/errors.hh>

#include <fstream>

using namespace ekr;

namespace
{
    auto require(bool condition, const std::string & message) -> void
    {
        if (! condition)
            throw Error("group spec: " + message);
    }

    auto natural_parameter(const GroupSpec & s, const char * key) -> std::size_t
    {
        require(s.contains(key) && s[key].is_number_unsigned(), std::string("missing or non-positive \"") + key + "\"");
        auto value = s[key].get<std::size_t>();
        require(value >= 1, std::string("\"") + key + "\" must be at least 1");
        return value;
    }
}

auto ekr::validate_group_spec(const GroupSpec & s) -> void
{
    require(s.is_object(), "node must be an object");

    if (s.contains("generators")) {
        natural_parameter(s, "degree");
        require(s["generators"].is_array() && ! s["generators"].empty(), "\"generators\" must be a nonempty array");
        for (auto & g : s["generators"])
            require(g.is_string(), "generators must be cycle strings");
        return;
    }

    require(s.contains("constructor") && s["constructor"].is_string(), "missing \"constructor\"");
    auto name = s["constructor"].get<std::string>();

    if (name == "symmetric" || name == "alternating" || name == "cyclic" || name == "dihedral")
        natural_parameter(s, "n");
    else if (name == "left_regular") {
        require(s.contains("inner"), "left_regular needs \"inner\"");
        validate_group_spec(s["inner"]);
    }
    else if (name == "k_subsets") {
        require(s.contains("inner"), "k_subsets needs \"inner\"");
        natural_parameter(s, "k");
        validate_group_spec(s["inner"]);
    }
    else if (name == "external" || name == "internal") {
        require(s.contains("factors") && s["factors"].is_array(), name + " needs a \"factors\" array");
        if (name == "external")
            require(s["factors"].size() == 2, "external takes exactly two factors");
        else
            require(! s["factors"].empty(), "internal needs at least one factor");
        for (auto & f : s["factors"])
            validate_group_spec(f);
    }
    else if (name == "wreath") {
        require(s.contains("inner") && s.contains("outer"), "wreath needs \"inner\" and \"outer\"");
        validate_group_spec(s["inner"]);
        validate_group_spec(s["outer"]);
    }
    else
        require(false, "unknown constructor \"" + name + "\"");
}

auto ekr::build_group(const GroupSpec & s, std::size_t cap) -> GroupAction
{
    validate_group_spec(s);

    if (s.contains("generators")) {
        auto degree = s["degree"].get<std::size_t>();
        std::vector<Permutation> generators;
        for (auto & g : s["generators"])
            generators.push_back(parse_cycles(g.get<std::string>(), degree));
        return GroupAction::closure(std::move(generators), cap);
    }

    auto name = s["constructor"].get<std::string>();
    if (name == "symmetric")
        return symmetric_natural(s["n"].get<std::size_t>(), cap);
    if (name == "alternating")
        return alternating_natural(s["n"].get<std::size_t>(), cap);
    if (name == "cyclic")
        return cyclic_regular(s["n"].get<std::size_t>());
    if (name == "dihedral")
        return dihedral_natural(s["n"].get<std::size_t>());
    if (name == "left_regular")
        return left_regular(build_group(s["inner"], cap));
    if (name == "k_subsets")
        return action_on_k_subsets(build_group(s["inner"], cap), s["k"].get<std::size_t>());
    if (name == "external")
        return external_direct_product(build_group(s["factors"][0], cap), build_group(s["factors"][1], cap), cap);
    if (name == "internal") {
        std::vector<GroupAction> factors;
        for (auto & f : s["factors"])
            factors.push_back(build_group(f, cap));
        return internal_direct_product(factors, cap);
    }
    // validate_group_spec leaves only wreath
    return wreath_product(build_group(s["inner"], cap), build_group(s["outer"], cap), cap);
}

auto ekr::load_group_spec(const std::string & path) -> GroupSpec
{
    std::ifstream in(path);
    if (! in)
        throw Error("cannot open group spec " + path);
    GroupSpec result;
    try {
        in >> result;
    }
    catch (const nlohmann::json::exception & e) {
        throw Error("group spec " + path + ": " + e.what());
    }
    validate_group_spec(result);
    return result;
}

auto ekr::describe(const GroupSpec & s) -> std::string
{
    if (s.contains("generators")) {
        std::string result = "<";
        bool first = true;
        for (auto & g : s["generators"]) {
            result += (first ? "" : ",") + g.get<std::string>();
            first = false;
        }
        return result + ">";
    }

    auto name = s["constructor"].get<std::string>();
    auto n = [&] { return std::to_string(s["n"].get<std::size_t>()); };
    auto wrap = [] (std::string x) {
        return x.find(' ') == std::string::npos ? x : "(" + x + ")";
    };

    if (name == "symmetric")
        return "S" + n();
    if (name == "alternating")
        return "A" + n();
    if (name == "cyclic")
        return "C" + n();
    if (name == "dihedral")
        return "D" + n();
    if (name == "left_regular")
        return "L(" + describe(s["inner"]) + ")";
    if (name == "k_subsets")
        return wrap(describe(s["inner"])) + "{" + std::to_string(s["k"].get<std::size_t>()) + "}";
    if (name == "external")
        return wrap(describe(s["factors"][0])) + " x " + wrap(describe(s["factors"][1]));
    if (name == "internal") {
        std::string result;
        for (auto & f : s["factors"])
            result += (result.empty() ? "" : " + ") + wrap(describe(f));
        return result;
    }
    if (name == "wreath")
        return wrap(describe(s["inner"])) + " wr " + wrap(describe(s["outer"]));
    return name;
}

namespace ekr::spec
{
    auto symmetric(std::size_t n) -> GroupSpec { return { { "constructor", "symmetric" }, { "n", n } }; }
    auto alternating(std::size_t n) -> GroupSpec { return { { "constructor", "alternating" }, { "n", n } }; }
    auto cyclic(std::size_t n) -> GroupSpec { return { { "constructor", "cyclic" }, { "n", n } }; }
    auto dihedral(std::size_t n) -> GroupSpec { return { { "constructor", "dihedral" }, { "n", n } }; }

    auto left_regular(const GroupSpec & inner) -> GroupSpec
    {
        return { { "constructor", "left_regular" }, { "inner", inner } };
    }

    auto k_subsets(const GroupSpec & inner, std::size_t k) -> GroupSpec
    {
        return { { "constructor", "k_subsets" }, { "inner", inner }, { "k", k } };
    }

    auto external(const GroupSpec & a, const GroupSpec & b) -> GroupSpec
    {
        return { { "constructor", "external" }, { "factors", GroupSpec::array({ a, b }) } };
    }

    auto internal(const std::vector<GroupSpec> & factors) -> GroupSpec
    {
        GroupSpec list = GroupSpec::array();
        for (auto & f : factors)
            list.push_back(f);
        return { { "constructor", "internal" }, { "factors", list } };
    }

    auto wreath(const GroupSpec & inner, const GroupSpec & outer) -> GroupSpec
    {
        return { { "constructor", "wreath" }, { "inner", inner }, { "outer", outer } };
    }

    auto generators(std::size_t degree, const std::vector<std::string> & cycles) -> GroupSpec
    {
        return { { "degree", degree }, { "generators", cycles } };
    }

    auto from_group(const GroupAction & g) -> GroupSpec
    {
        std::vector<std::string> cycles;
        for (auto & s : g.generators())
            cycles.push_back(to_cycle_string(s));
        return generators(g.degree(), cycles);
    }
}
