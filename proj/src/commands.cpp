#include "filterlab/commands.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "filterlab/axioms.hpp"
#include "filterlab/construct.hpp"
#include "filterlab/document.hpp"

namespace filterlab::cli {

namespace {

CommandOutput input_error(const std::exception& e)
{
    return {kExitInput, "", std::string("error: ") + e.what() + "\n"};
}

std::string render(const AxiomReport& report, const Universe& universe)
{
    if (report) {
        return "true\n";
    }
    std::string out = "false: " + std::string(describe(*report.failed_axiom()));
    if (report.cause()) {
        out += " (" + std::string(describe(*report.cause())) + ")";
    }
    out += '\n';
    const auto& witness = *report.witness();
    if (!witness.empty()) {
        out += "witness:";
        for (const auto& s : witness) {
            out += ' ' + universe.format(s);
        }
        out += '\n';
    }
    return out;
}

std::string render(const CofiniteReport& report, std::span<const CofiniteSet> samples)
{
    std::string out;
    if (report) {
        out = "true\n";
    } else {
        out = "false: " + std::string(describe(*report.failed_axiom())) + "\nwitness:";
        for (const auto& s : *report.witness()) {
            out += ' ' + s.to_string();
        }
        out += '\n';
    }
    for (const auto& s : samples) {
        out += s.to_string() + (frechet_contains(s) ? " member\n" : " non-member\n");
    }
    return out;
}

CommandOutput verdict(bool holds, std::string text)
{
    return {holds ? kExitOk : kExitFalse, std::move(text), ""};
}

} // namespace

CommandOutput cmd_check(CheckKind kind, std::string_view document)
{
    ParsedDocument doc;
    try {
        doc = parse_document(document);
    } catch (const Error& e) {
        return input_error(e);
    }

    if (kind == CheckKind::Frechet) {
        if (!doc.cofinite) {
            return {kExitInput, "", "error: frechet check needs a \"cofinite\" entry\n"};
        }
        const auto report = frechet_axiom_suite(*doc.cofinite);
        return verdict(report.verdict(), render(report, *doc.cofinite));
    }
    if (!doc.universe) {
        return {kExitInput, "", "error: document has no \"universe\" and \"family\"\n"};
    }
    const Universe& universe = *doc.universe;
    const SubsetFamily& family = *doc.family;

    try {
        switch (kind) {
        case CheckKind::Filter: {
            const auto r = is_filter(family, universe);
            return verdict(r.verdict(), render(r, universe));
        }
        case CheckKind::Base: {
            const auto r = is_filter_base(family, universe);
            return verdict(r.verdict(), render(r, universe));
        }
        case CheckKind::Ultrafilter: {
            const auto r = is_ultrafilter(family, universe);
            return verdict(r.verdict(), render(r, universe));
        }
        case CheckKind::MaxFilter: {
            const auto r = is_max_filter(family, universe);
            return verdict(r.verdict(), render(r, universe));
        }
        case CheckKind::Free: {
            const auto r = is_free_ultrafilter(family, universe);
            return verdict(r.verdict(), render(r, universe));
        }
        case CheckKind::Fip: {
            const bool holds = has_fip(family);
            return verdict(holds, holds ? "true\n" : "false: finite intersection property fails\n");
        }
        case CheckKind::Frechet:
            break;
        }
    } catch (const CapacityError& e) {
        return input_error(e);
    }
    return {kExitInput, "", "error: unknown check\n"};
}

CommandOutput cmd_extend(ExtendTarget target, std::string_view document, bool trace)
{
    Universe universe({"_"});
    SubsetFamily family(1);
    try {
        std::tie(universe, family) = parse_family(document);
    } catch (const Error& e) {
        return input_error(e);
    }

    if (family.empty()) {
        return {kExitFalse, "", "error: hypothesis fails: family is empty\n"};
    }
    if (!has_fip(family)) {
        return {kExitFalse, "", "error: hypothesis fails: finite intersection property fails\n"};
    }

    CommandOutput result;
    try {
        SubsetFamily extended(universe.size());
        switch (target) {
        case ExtendTarget::Base:
            extended = base_from_family(family);
            break;
        case ExtendTarget::Filter:
            extended = filter_from_family(family, universe);
            break;
        case ExtendTarget::Ultrafilter: {
            std::vector<GreedyStep> steps;
            extended = fep(family, universe, trace ? &steps : nullptr);
            for (const auto& step : steps) {
                result.err += "consider " + universe.format(step.considered) +
                              (step.took_considered ? ": adjoin " : ": adjoin complement ") +
                              universe.format(step.adjoined) + "\n";
            }
            break;
        }
        }
        result.out = serialize_family(universe, extended);
    } catch (const PreconditionError& e) {
        return {kExitFalse, "", std::string("error: ") + e.what() + "\n"};
    } catch (const CapacityError& e) {
        return input_error(e);
    }
    return result;
}

CommandOutput cmd_enumerate(std::size_t n, EnumerationKind kind, bool count_only)
{
    if (n < 1 || n > kMaxEnumerate) {
        return {kExitInput, "",
                "error: --n must be between 1 and " + std::to_string(kMaxEnumerate) + "\n"};
    }
    const Universe universe = Universe::numbered(n);
    const auto result = kind == EnumerationKind::Filters ? enumerate_filters(universe)
                                                         : enumerate_ultrafilters(universe);
    CommandOutput out;
    out.out = std::to_string(result.count) + "\n";
    if (!count_only) {
        for (const auto& f : result.families) {
            out.out += format_family(universe, f) + "\n";
        }
    }
    return out;
}

namespace {

bool read_file(const std::string& path, std::string& text, std::ostream& err)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
    return true;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Filters, ultrafilters and the filter extension principle over finite sets"};
    app.require_subcommand(1);

    const std::map<std::string, CheckKind> check_kinds{
        {"filter", CheckKind::Filter},       {"base", CheckKind::Base},
        {"ultrafilter", CheckKind::Ultrafilter}, {"maxfilter", CheckKind::MaxFilter},
        {"free", CheckKind::Free},           {"fip", CheckKind::Fip},
        {"frechet", CheckKind::Frechet}};
    const std::map<std::string, ExtendTarget> extend_targets{
        {"base", ExtendTarget::Base}, {"filter", ExtendTarget::Filter},
        {"ultrafilter", ExtendTarget::Ultrafilter}};
    const std::map<std::string, EnumerationKind> enum_kinds{
        {"filters", EnumerationKind::Filters}, {"ultrafilters", EnumerationKind::Ultrafilters}};

    CheckKind check_kind{};
    std::string input;
    auto* check = app.add_subcommand("check", "Test a family against a predicate");
    check->add_option("--kind", check_kind, "Predicate to test")
        ->required()
        ->transform(CLI::CheckedTransformer(check_kinds));
    check->add_option("--input", input, "Family document (JSON)")->required();

    ExtendTarget target{};
    std::string output;
    bool trace = false;
    auto* extend = app.add_subcommand("extend", "Extend a family to a base, filter or ultrafilter");
    extend->add_option("--to", target, "Extension target")
        ->required()
        ->transform(CLI::CheckedTransformer(extend_targets));
    extend->add_option("--input", input, "Family document (JSON)")->required();
    extend->add_option("--output", output, "Write the extended document here instead of stdout");
    extend->add_flag("--trace", trace, "Print each greedy step of the ultrafilter extension");

    std::size_t n = 0;
    EnumerationKind enum_kind{};
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all filters or ultrafilters of {e0..e(n-1)}");
    enumerate->add_option("--n", n, "Universe size")->required();
    enumerate->add_option("--kind", enum_kind, "What to enumerate")
        ->required()
        ->transform(CLI::CheckedTransformer(enum_kinds));
    enumerate->add_flag("--count-only", count_only, "Print only the count");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    CommandOutput result;
    if (*check || *extend) {
        std::string text;
        if (!read_file(input, text, err)) {
            return kExitInput;
        }
        result = *check ? cmd_check(check_kind, text) : cmd_extend(target, text, trace);
    } else {
        result = cmd_enumerate(n, enum_kind, count_only);
    }

    err << result.err;
    if (*extend && !output.empty() && result.exit_code == kExitOk) {
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << output << "\n";
            return kExitInput;
        }
        file << result.out;
    } else {
        out << result.out;
    }
    return result.exit_code;
}

} // namespace filterlab::cli
