#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "pathset/pathset.hpp"

namespace pathset::cli {

namespace {

std::string format_double(double value) {
    if (std::isnan(value)) return "NaN";
    if (std::isinf(value)) return value > 0 ? "Infinity" : "-Infinity";
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    std::string text = buffer;
    if (text.find_first_of(".eE") == std::string::npos) text += ".0";
    return text;
}

void write_report(const nlohmann::ordered_json& value, std::string& text) {
    switch (value.type()) {
        case nlohmann::ordered_json::value_t::object: {
            text += '{';
            bool first = true;
            for (const auto& item : value.items()) {
                if (!first) text += ", ";
                first = false;
                text += nlohmann::ordered_json(item.key()).dump();
                text += ": ";
                write_report(item.value(), text);
            }
            text += '}';
            break;
        }
        case nlohmann::ordered_json::value_t::array: {
            text += '[';
            bool first = true;
            for (const auto& element : value) {
                if (!first) text += ", ";
                first = false;
                write_report(element, text);
            }
            text += ']';
            break;
        }
        case nlohmann::ordered_json::value_t::number_float:
            text += format_double(value.get<double>());
            break;
        default:
            text += value.dump();
    }
}

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("bad rational '" + text + "': " + e.what());
    }
}

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    bool stdin_used = false;

    std::string slurp(const std::string& path) {
        if (path == "-") {
            if (stdin_used) throw UsageError("stdin ('-') can be used for one input only");
            stdin_used = true;
            std::ostringstream buffer;
            buffer << in.rdbuf();
            return buffer.str();
        }
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open '" + path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        return buffer.str();
    }

    Presentation load(const std::string& path) {
        ParsedPresentation parsed = presentation_from_string(slurp(path));
        for (const auto& warning : parsed.warnings) err << "warning: " << path << ": " << warning << '\n';
        return std::move(parsed.presentation);
    }

    PathSetHandle load_handle(const std::string& path) { return standardize(load(path)); }

    void emit(const Presentation& pres) { out << presentation_to_string(pres) << '\n'; }
    void emit(const PathSetHandle& handle) { emit(handle.to_presentation()); }
    void emit_report(const nlohmann::ordered_json& report) { out << format_report(report) << '\n'; }
    void emit_bool(bool value) { out << (value ? "true" : "false") << '\n'; }
};

nlohmann::ordered_json dimension_json(const DimensionReport& report, bool with_sccs, bool per_vertex,
                                      const Presentation& pres) {
    nlohmann::ordered_json j;
    j["spectral_radius"] = report.spectral_radius;
    j["dimension"] = report.dimension;
    if (with_sccs) {
        auto sccs = nlohmann::ordered_json::array();
        for (const auto& scc : report.sccs) {
            nlohmann::ordered_json entry;
            auto vertices = nlohmann::ordered_json::array();
            for (std::size_t v : scc.vertices) vertices.push_back(pres.vertices[v]);
            entry["vertices"] = std::move(vertices);
            entry["spectral_radius"] = scc.spectral_radius;
            sccs.push_back(std::move(entry));
        }
        j["sccs"] = std::move(sccs);
    }
    if (per_vertex) {
        auto alpha = nlohmann::ordered_json::object();
        for (std::size_t v = 0; v < report.per_vertex.size(); ++v) {
            alpha[std::to_string(pres.vertices[v])] = report.per_vertex[v];
        }
        j["per_vertex"] = std::move(alpha);
    }
    return j;
}

std::string digit_string(const std::vector<Digit>& digits, int p) {
    std::string text;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (p > 10 && i > 0) text += '.';
        text += std::to_string(digits[i]);
    }
    return text;
}

// Accept the spelling `--r` used by scripts as an alias for `-r`.
std::vector<std::string> normalize_args(const std::vector<std::string>& args) {
    std::vector<std::string> result;
    for (const auto& arg : args) {
        if (arg == "--r") {
            result.emplace_back("-r");
        } else if (arg.rfind("--r=", 0) == 0) {
            result.emplace_back("-r" + arg.substr(4));
        } else {
            result.push_back(arg);
        }
    }
    return result;
}

}  // namespace

std::string format_report(const nlohmann::ordered_json& value) {
    std::string text;
    write_report(value, text);
    return text;
}

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct and analyse p-adic path set fractals", "pathset"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for randomized helpers (no verb is randomized at present)");

    Io io{in, out, err};
    std::function<void()> action;
    auto on = [&](CLI::App* sub, std::function<void()> body) { sub->callback([&action, body] { action = body; }); };

    std::string file_a;
    std::string file_b;
    std::string rational_text;
    std::size_t depth = 0;
    std::int64_t dec_j = 0;
    std::int64_t dec_m = 1;
    int base = 0;
    bool flag_raw = false;
    bool flag_values = false;
    bool flag_json = false;
    bool flag_per_vertex = false;
    bool flag_presentation = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check standard/trimmed properties");
    validate_cmd->add_option("file", file_a, "Presentation JSON ('-' for stdin)")->required();
    on(validate_cmd, [&] {
        const ValidationReport report = validate(io.load(file_a));
        nlohmann::ordered_json j;
        j["right_resolving"] = report.right_resolving;
        j["reachable"] = report.reachable;
        j["injective_digit_map"] = report.injective_digit_map;
        j["all_vertices_have_exit"] = report.all_vertices_have_exit;
        auto items = nlohmann::ordered_json::array();
        for (const auto& item : report.offending_items) {
            items.push_back(nlohmann::ordered_json{{"item", item.item}, {"reason", item.reason}});
        }
        j["offending_items"] = std::move(items);
        io.emit_report(j);
    });

    auto* standardize_cmd = app.add_subcommand("standardize", "Trim, determinize and renumber");
    standardize_cmd->add_option("file", file_a)->required();
    on(standardize_cmd, [&] { io.emit(io.load_handle(file_a)); });

    auto* split_cmd = app.add_subcommand("split", "Right-separating presentation by vertex splitting");
    split_cmd->add_option("file", file_a)->required();
    on(split_cmd, [&] {
        const PathSetHandle handle = io.load_handle(file_a);
        io.emit(handle.empty() ? handle.to_presentation() : split_right_separating(handle.presentation()));
    });

    auto* eq_cmd = app.add_subcommand("eq", "Do two presentations denote the same set?");
    eq_cmd->add_option("a", file_a)->required();
    eq_cmd->add_option("b", file_b)->required();
    on(eq_cmd, [&] { io.emit_bool(equivalent(io.load(file_a), io.load(file_b))); });

    auto* add_cmd = app.add_subcommand("add", "Y + r");
    add_cmd->add_option("-r", rational_text, "p-integral rational a/b")->required();
    add_cmd->add_option("file", file_a)->required();
    on(add_cmd, [&] { io.emit(add_rational(io.load_handle(file_a), parse_rational(rational_text))); });

    auto* sum_cmd = app.add_subcommand("sum", "Minkowski sum Y1 + Y2");
    sum_cmd->add_option("a", file_a)->required();
    sum_cmd->add_option("b", file_b)->required();
    sum_cmd->add_flag("--raw", flag_raw, "Emit the raw carry automaton without standardizing");
    on(sum_cmd, [&] {
        const PathSetHandle a = io.load_handle(file_a);
        const PathSetHandle b = io.load_handle(file_b);
        if (flag_raw && !a.empty() && !b.empty()) {
            io.emit(build_minkowski_sum(a, b).raw);
        } else {
            io.emit(minkowski_sum(a, b));
        }
    });

    auto* mul_cmd = app.add_subcommand("mul", "r * Y");
    mul_cmd->add_option("-r", rational_text, "p-integral rational a/b")->required();
    mul_cmd->add_option("file", file_a)->required();
    on(mul_cmd, [&] { io.emit(mul_rational(io.load_handle(file_a), parse_rational(rational_text))); });

    auto* union_cmd = app.add_subcommand("union", "Y1 union Y2");
    union_cmd->add_option("a", file_a)->required();
    union_cmd->add_option("b", file_b)->required();
    on(union_cmd, [&] { io.emit(set_union(io.load_handle(file_a), io.load_handle(file_b))); });

    auto* intersect_cmd = app.add_subcommand("intersect", "Y1 intersect Y2");
    intersect_cmd->add_option("a", file_a)->required();
    intersect_cmd->add_option("b", file_b)->required();
    on(intersect_cmd, [&] { io.emit(intersect(io.load_handle(file_a), io.load_handle(file_b))); });

    auto* decimate_cmd = app.add_subcommand("decimate", "Keep digits j, j+m, j+2m, ...");
    decimate_cmd->add_option("-j", dec_j, "First kept digit")->required()->check(CLI::NonNegativeNumber);
    decimate_cmd->add_option("-m", dec_m, "Stride")->required()->check(CLI::PositiveNumber);
    decimate_cmd->add_option("file", file_a)->required();
    on(decimate_cmd, [&] { io.emit(decimate(io.load_handle(file_a), dec_j, dec_m)); });

    auto* shift_cmd = app.add_subcommand("shift", "Drop the first digit");
    shift_cmd->add_option("file", file_a)->required();
    on(shift_cmd, [&] { io.emit(shift(io.load_handle(file_a))); });

    auto* dim_cmd = app.add_subcommand("dim", "Hausdorff dimension");
    dim_cmd->add_option("file", file_a)->required();
    dim_cmd->add_flag("--per-vertex", flag_per_vertex, "Include per-vertex dimensions");
    dim_cmd->add_flag("--json", flag_json, "Include the SCC decomposition");
    on(dim_cmd, [&] {
        const PathSetHandle handle = io.load_handle(file_a);
        const DimensionReport report = hausdorff_dim(handle);
        io.emit_report(dimension_json(report, flag_json, flag_per_vertex, handle.presentation()));
    });

    auto* prefixes_cmd = app.add_subcommand("prefixes", "Enumerate depth-n digit prefixes");
    prefixes_cmd->add_option("-n", depth, "Depth")->required();
    prefixes_cmd->add_flag("--values", flag_values, "Print residues mod p^n instead of digit strings");
    prefixes_cmd->add_option("file", file_a)->required();
    on(prefixes_cmd, [&] {
        const PathSetHandle handle = io.load_handle(file_a);
        const PrefixSet set = prefixes(handle, depth, enumeration_budget_from_env());
        auto list = nlohmann::ordered_json::array();
        if (flag_values) {
            for (std::uint64_t v : set.values()) list.push_back(v);
        } else {
            for (const auto& s : set.strings) list.push_back(digit_string(s, set.p));
        }
        io.emit_report(list);
    });

    auto* count_cmd = app.add_subcommand("count", "Count depth-n prefixes exactly");
    count_cmd->add_option("-n", depth, "Depth")->required();
    count_cmd->add_option("file", file_a)->required();
    on(count_cmd, [&] {
        const PathSetHandle handle = io.load_handle(file_a);
        out << (handle.empty() ? BigInt(0) : count_prefixes(handle.presentation(), depth)).str() << '\n';
    });

    std::string check_op;
    std::vector<std::string> check_inputs;
    std::string check_output;
    auto* check_cmd = app.add_subcommand("check", "Verify an arithmetic result against the prefix oracle");
    check_cmd->add_option("--op", check_op, "add, sum or mul")->required()->check(CLI::IsMember({"add", "sum", "mul"}));
    check_cmd->add_option("-r", rational_text, "Rational for add/mul");
    check_cmd->add_option("--in", check_inputs, "Input presentation(s)")->required();
    check_cmd->add_option("--out", check_output, "Output presentation")->required();
    check_cmd->add_option("-n", depth, "Depth")->required();
    on(check_cmd, [&] {
        ArithOp op;
        op.kind = check_op == "add" ? ArithKind::Add : check_op == "sum" ? ArithKind::Sum : ArithKind::Mul;
        if (op.kind != ArithKind::Sum) {
            if (rational_text.empty()) throw UsageError("--op " + check_op + " needs -r");
            op.r = parse_rational(rational_text);
        }
        std::vector<PathSetHandle> inputs;
        for (const auto& path : check_inputs) inputs.push_back(io.load_handle(path));
        // Raw output is fine here, e.g. from `sum --raw`.
        const Presentation output = io.load(check_output);
        io.emit_bool(check_arith(op, inputs, output, depth, enumeration_budget_from_env()));
    });

    auto* singleton_cmd = app.add_subcommand("singleton", "Recognize a one-point set as a rational");
    singleton_cmd->add_option("file", file_a)->required();
    on(singleton_cmd, [&] {
        const auto r = recognize_singleton(io.load_handle(file_a));
        if (!r) throw Error(ErrorCode::NotSingleton, "the presentation does not denote a single point");
        io.emit_report(nlohmann::ordered_json{{"rational", r->to_string()}});
    });

    auto* expand_cmd = app.add_subcommand("expand", "p-adic digit expansion of a rational");
    expand_cmd->add_option("-p", base, "Prime base")->required();
    expand_cmd->add_option("-r", rational_text, "p-integral rational a/b")->required();
    expand_cmd->add_flag("--presentation", flag_presentation, "Emit the singleton presentation instead");
    on(expand_cmd, [&] {
        if (!is_prime(base)) throw UsageError("-p must be a prime");
        const RationalExpansion exp = p_adic_digits(parse_rational(rational_text), base);
        if (flag_presentation) {
            io.emit(singleton_presentation(exp));
            return;
        }
        nlohmann::ordered_json j;
        j["preperiod"] = exp.preperiod;
        j["period"] = exp.period;
        io.emit_report(j);
    });

    std::vector<std::string> reversed = normalize_args(raw_args);
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (action) action();
        return kExitOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        out << format_report(nlohmann::ordered_json{{"error", to_string(e.code())}, {"detail", e.detail()}}) << '\n';
        return kExitDomainError;
    } catch (const std::exception& e) {
        out << format_report(nlohmann::ordered_json{{"error", "InternalError"}, {"detail", e.what()}}) << '\n';
        return kExitDomainError;
    }
}

}  // namespace pathset::cli
