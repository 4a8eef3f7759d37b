#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "psing/discrepancy.hpp"
#include "psing/explorer.hpp"
#include "psing/shift.hpp"
#include "psing/verify.hpp"

namespace psing::cli {
namespace {

using nlohmann::json;

enum class Format { Plain, Json, Csv };

const std::map<std::string, Format> kFormats{
    {"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};

// Numbers that fit a machine word are json numbers; wider ones are strings.
json to_json(Int value) {
    if (auto narrow = to_int64(value)) return *narrow;
    return to_string(value);
}

json delta_json(const DeltaValue& delta) {
    if (delta.is_finite()) return to_json(delta.value());
    return to_string(delta);
}

Int parse_integer(const std::string& text, const std::string& what) {
    auto value = parse_int(text);
    if (!value) throw ValidationError(Rule::Syntax, what + " must be an integer (got \"" + text + "\")");
    return *value;
}

std::vector<Prime> parse_primes(const std::vector<std::string>& raw) {
    std::vector<Prime> primes;
    for (const auto& item : raw) primes.push_back(Prime::make(parse_integer(item, "prime")));
    if (primes.empty()) throw ValidationError(Rule::OutOfRange, "need at least one prime");
    return primes;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"") == std::string::npos) return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

std::string join(const std::vector<std::int64_t>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string upper_text(const SingularityReport& r) {
    return r.bounds ? to_string(r.bounds->upper) : "";
}

std::string lower_text(const SingularityReport& r) {
    return (r.bounds && r.bounds->lower) ? to_string(*r.bounds->lower) : "";
}

json report_json(const SingularityReport& r) {
    json j;
    j["p"] = r.rep.p();
    j["rep"] = format_rep_string(r.rep);
    j["d"] = to_json(r.inv.d);
    j["l"] = to_json(r.inv.l);
    j["codim"] = to_json(r.inv.codim);
    j["D"] = to_json(r.inv.D);
    j["delta"] = delta_json(r.delta);
    j["class"] = class_name(r.klass);
    j["cm"] = r.cm;
    j["maximizers"] = r.maximizers;
    j["upper_bound"] = r.bounds ? to_json(r.bounds->upper) : json(nullptr);
    j["lower_bound"] = (r.bounds && r.bounds->lower) ? json(to_string(*r.bounds->lower)) : json(nullptr);
    return j;
}

std::string report_csv(const SingularityReport& r) {
    std::ostringstream line;
    line << r.rep.p() << ',' << csv_field(format_rep_string(r.rep)) << ',' << to_string(r.inv.d)
         << ',' << to_string(r.inv.l) << ',' << to_string(r.inv.codim) << ','
         << to_string(r.inv.D) << ',' << to_string(r.delta) << ',' << class_name(r.klass) << ','
         << (r.cm ? "true" : "false") << ',' << join(r.maximizers, " ") << ',' << upper_text(r)
         << ',' << lower_text(r);
    return line.str();
}

json document(const std::string& command) {
    json doc;
    doc["schema"] = kJsonSchema;
    doc["command"] = command;
    return doc;
}

// ---------------------------------------------------------------------------
// classify

struct ClassifyArgs {
    std::string p;
    std::string rep;
    std::optional<std::string> center_dim;
};

int cmd_classify(const ClassifyArgs& args, Format format, bool remark_literal, std::ostream& out) {
    Representation rep = parse_representation(parse_integer(args.p, "p"), args.rep);
    SingularityReport report = classify(rep);
    std::optional<CenterBounds> center;
    if (args.center_dim) {
        center = center_bounds(rep, parse_integer(*args.center_dim, "center dimension"),
                               remark_literal ? CenterLowerPolicy::Literal : CenterLowerPolicy::Proven);
    }

    switch (format) {
        case Format::Json: {
            json doc = document("classify");
            doc.update(report_json(report));
            if (center) {
                json c;
                c["dim_center"] = to_json(center->dim_center);
                c["lower"] = center->lower ? json(to_string(*center->lower)) : json(nullptr);
                c["upper"] = to_json(center->upper);
                c["policy"] = remark_literal ? "literal" : "proven";
                c["hypothesis_gap"] = center->hypothesis_gap;
                doc["center_bounds"] = c;
            }
            out << doc.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << kRowCsvHeader << '\n' << report_csv(report) << '\n';
            break;
        case Format::Plain:
            out << "p: " << rep.p() << '\n'
                << "rep: " << format_rep_string(rep) << '\n'
                << "d: " << to_string(report.inv.d) << '\n'
                << "l: " << to_string(report.inv.l) << '\n'
                << "codim: " << to_string(report.inv.codim) << '\n'
                << "D: " << to_string(report.inv.D) << '\n'
                << "delta: " << to_string(report.delta) << '\n'
                << "class: " << class_name(report.klass) << '\n'
                << "cm: " << (report.cm ? "true" : "false") << '\n';
            if (report.bounds) {
                out << "maximizers: " << join(report.maximizers, " ") << '\n'
                    << "upper bound: " << upper_text(report) << '\n'
                    << "lower bound: " << (report.bounds->lower ? lower_text(report) : "none") << '\n';
            }
            if (center) {
                out << "center dim: " << to_string(center->dim_center) << '\n'
                    << "center upper bound: " << to_string(center->upper) << '\n'
                    << "center lower bound: "
                    << (center->lower ? to_string(*center->lower) : "none") << '\n';
                if (center->hypothesis_gap) {
                    out << "note: D = p - 1; the center lower bound is "
                        << (remark_literal ? "applied literally" : "withheld (use --remark-literal)")
                        << '\n';
                }
            }
            break;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// sht

struct ShtArgs {
    std::string p;
    std::string rep;
    std::optional<std::string> j;
    bool profile = false;
    bool nu = false;
};

int cmd_sht(const ShtArgs& args, Format format, std::ostream& out) {
    Representation rep = parse_representation(parse_integer(args.p, "p"), args.rep);
    if (args.profile == args.j.has_value()) {
        throw ValidationError(Rule::Syntax, "give exactly one of -j or --profile");
    }

    if (args.profile) {
        ShiftProfile profile = shift_profile(rep);
        switch (format) {
            case Format::Json: {
                json doc = document("sht");
                doc["p"] = rep.p();
                doc["rep"] = format_rep_string(rep);
                json rows = json::array();
                for (std::int64_t s = 1; s < rep.p(); ++s) {
                    rows.push_back({{"s", s},
                                    {"sht", to_json(profile.sht_at(s))},
                                    {"jump", to_json(profile.jump_at(s))},
                                    {"nu", to_json(nu_stratum(rep, s))}});
                }
                doc["profile"] = rows;
                out << doc.dump() << '\n';
                break;
            }
            case Format::Csv:
                out << kProfileCsvHeader << '\n';
                for (std::int64_t s = 1; s < rep.p(); ++s) {
                    out << s << ',' << to_string(profile.sht_at(s)) << ','
                        << to_string(profile.jump_at(s)) << ',' << to_string(nu_stratum(rep, s)) << '\n';
                }
                break;
            case Format::Plain:
                out << std::setw(8) << "s" << std::setw(12) << "sht" << std::setw(12) << "jump"
                    << std::setw(12) << "nu" << '\n';
                for (std::int64_t s = 1; s < rep.p(); ++s) {
                    out << std::setw(8) << s << std::setw(12) << to_string(profile.sht_at(s))
                        << std::setw(12) << to_string(profile.jump_at(s)) << std::setw(12)
                        << to_string(nu_stratum(rep, s)) << '\n';
                }
                break;
        }
        return kOk;
    }

    Int j = parse_integer(*args.j, "j");
    // j = 0 is a valid stratum for nu but has no shift number.
    std::optional<Int> shift;
    if (j != 0 || !args.nu) shift = sht(rep, j);
    Int nu = nu_stratum(rep, j);
    switch (format) {
        case Format::Json: {
            json doc = document("sht");
            doc["p"] = rep.p();
            doc["rep"] = format_rep_string(rep);
            doc["j"] = to_json(j);
            doc["sht"] = shift ? to_json(*shift) : json(nullptr);
            doc["nu"] = to_json(nu);
            out << doc.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "j,sht,nu\n"
                << to_string(j) << ',' << (shift ? to_string(*shift) : "") << ',' << to_string(nu) << '\n';
            break;
        case Format::Plain:
            out << (args.nu ? to_string(nu) : to_string(*shift)) << '\n';
            break;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// search / table

void emit_rows(const std::string& command, const std::vector<TableRow>& rows, Format format,
               std::ostream& out) {
    switch (format) {
        case Format::Json: {
            json doc = document(command);
            json list = json::array();
            for (const auto& row : rows) list.push_back(report_json(row.report));
            doc["rows"] = list;
            out << doc.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << kRowCsvHeader << '\n';
            for (const auto& row : rows) out << report_csv(row.report) << '\n';
            break;
        case Format::Plain: {
            if (rows.empty()) {
                out << "(no matching representations)\n";
                break;
            }
            out << std::left << std::setw(6) << "p" << std::setw(16) << "rep" << std::setw(5) << "d"
                << std::setw(5) << "l" << std::setw(7) << "D" << std::setw(8) << "delta"
                << std::setw(22) << "class" << "cm" << '\n';
            for (const auto& row : rows) {
                const auto& r = row.report;
                out << std::setw(6) << r.rep.p() << std::setw(16) << format_rep_string(r.rep)
                    << std::setw(5) << to_string(r.inv.d) << std::setw(5) << to_string(r.inv.l)
                    << std::setw(7) << to_string(r.inv.D) << std::setw(8) << to_string(r.delta)
                    << std::setw(22) << class_name(r.klass) << (r.cm ? "true" : "false") << '\n';
            }
            out << std::right;
            break;
        }
    }
}

struct SearchArgs {
    std::vector<std::string> primes;
    std::int64_t d_min = 1;
    std::int64_t d_max = 0;
    bool terminal = false;
    bool canonical = false;
    bool log_canonical = false;
    bool cm = false;
    bool not_cm = false;
    std::vector<std::string> classes;
    bool minimal = false;
};

std::set<SingularityClass> at_least(SingularityClass weakest) {
    std::set<SingularityClass> out{SingularityClass::Terminal};
    if (weakest == SingularityClass::Terminal) return out;
    out.insert(SingularityClass::CanonicalStrict);
    if (weakest == SingularityClass::CanonicalStrict) return out;
    out.insert(SingularityClass::LogCanonicalStrict);
    return out;
}

void restrict_classes(std::optional<std::set<SingularityClass>>& current,
                      const std::set<SingularityClass>& allowed) {
    if (!current) {
        current = allowed;
        return;
    }
    std::set<SingularityClass> both;
    for (auto klass : *current) {
        if (allowed.contains(klass)) both.insert(klass);
    }
    current = both;
}

int cmd_search(const SearchArgs& args, Format format, std::ostream& out) {
    SearchQuery query;
    query.primes = parse_primes(args.primes);
    query.d_min = args.d_min;
    query.d_max = args.d_max;
    query.max_partitions = max_partitions_from_env();
    query.objective = args.minimal ? Objective::MinimizeDimension : Objective::None;
    auto& pred = query.predicate;
    if (args.terminal) restrict_classes(pred.classes, at_least(SingularityClass::Terminal));
    if (args.canonical) restrict_classes(pred.classes, at_least(SingularityClass::CanonicalStrict));
    if (args.log_canonical) restrict_classes(pred.classes, at_least(SingularityClass::LogCanonicalStrict));
    if (!args.classes.empty()) {
        std::set<SingularityClass> named;
        for (const auto& name : args.classes) {
            auto klass = parse_class_name(name);
            if (!klass) throw ValidationError(Rule::Syntax, "unknown class \"" + name + "\"");
            named.insert(*klass);
        }
        restrict_classes(pred.classes, named);
    }
    if (args.cm && args.not_cm) throw ValidationError(Rule::Syntax, "--cm and --not-cm exclude each other");
    if (args.cm) pred.cm = true;
    if (args.not_cm) pred.cm = false;

    emit_rows("search", run_search(query), format, out);
    return kOk;
}

struct TableArgs {
    std::vector<std::string> primes;
    std::int64_t d_max = 0;
};

int cmd_table(const TableArgs& args, Format format, std::ostream& out) {
    auto rows = build_table(parse_primes(args.primes), args.d_max, max_partitions_from_env());
    emit_rows("table", rows, format, out);
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::vector<std::string> primes;
    std::int64_t d_max = 0;
    std::int64_t n_max = 3;
};

int cmd_verify(const VerifyArgs& args, Format format, std::ostream& out) {
    if (args.d_max < 1) throw ValidationError(Rule::OutOfRange, "--d-max must be at least 1");
    VerifySummary summary =
        run_verification(parse_primes(args.primes), args.d_max, args.n_max, max_partitions_from_env());

    if (format == Format::Json) {
        json doc = document("verify");
        doc["representations"] = summary.representations;
        json props = json::object();
        for (const auto& tally : summary.tallies) props[tally.name] = tally.instances;
        doc["properties"] = props;
        doc["ok"] = summary.ok();
        if (summary.failure) {
            doc["counterexample"] = {{"property", summary.failure->property},
                                     {"p", summary.failure->p},
                                     {"rep", summary.failure->rep},
                                     {"detail", summary.failure->detail}};
        }
        out << doc.dump() << '\n';
    } else {
        out << "representations: " << summary.representations << '\n';
        for (const auto& tally : summary.tallies) {
            out << tally.name << ": " << tally.instances << " instances\n";
        }
        if (summary.failure) {
            const auto& f = *summary.failure;
            out << "FAIL " << f.property << " at p=" << f.p << " rep=" << f.rep;
            if (!f.detail.empty()) out << " (" << f.detail << ")";
            out << '\n';
        } else {
            out << "all properties hold\n";
        }
    }
    return summary.ok() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrepancies and singularity classes of Z/p quotient varieties in characteristic p",
                 "psing"};
    app.require_subcommand(1);

    Format format = Format::Plain;
    bool remark_literal = false;
    app.add_flag("--remark-literal", remark_literal,
                 "Apply the center lower bound whenever D >= p-1, not only when D >= p");

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
    };

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Classify the quotient singularity");
    classify_cmd->add_option("-p", classify_args.p, "Prime characteristic")->required();
    classify_cmd->add_option("--rep", classify_args.rep, "Summand sizes, e.g. 4 or 2^3,1^2")->required();
    classify_cmd->add_option("--center-dim", classify_args.center_dim,
                             "Also bound the discrepancy over centers in a closed C of this dimension");
    add_format(classify_cmd);

    ShtArgs sht_args;
    auto* sht_cmd = app.add_subcommand("sht", "Shift numbers and stratum dimensions");
    sht_cmd->add_option("-p", sht_args.p, "Prime characteristic")->required();
    sht_cmd->add_option("--rep", sht_args.rep, "Summand sizes")->required();
    sht_cmd->add_option("-j", sht_args.j, "Ramification jump");
    sht_cmd->add_flag("--profile", sht_args.profile, "Table over s = 1..p-1");
    sht_cmd->add_flag("--nu", sht_args.nu, "Print nu(M_j) instead of sht(j)");
    add_format(sht_cmd);

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Search all representations for a predicate");
    search_cmd->add_option("--primes", search_args.primes, "Comma-separated primes")
        ->required()
        ->delimiter(',');
    search_cmd->add_option("--d-min", search_args.d_min, "Smallest dimension");
    search_cmd->add_option("--d-max", search_args.d_max, "Largest dimension")->required();
    search_cmd->add_flag("--terminal", search_args.terminal, "Terminal");
    search_cmd->add_flag("--canonical", search_args.canonical, "Canonical (terminal included)");
    search_cmd->add_flag("--log-canonical", search_args.log_canonical,
                         "Log canonical (canonical included)");
    search_cmd->add_flag("--cm", search_args.cm, "Cohen-Macaulay");
    search_cmd->add_flag("--not-cm", search_args.not_cm, "Not Cohen-Macaulay");
    search_cmd->add_option("--class", search_args.classes, "Exact class name (repeatable)");
    search_cmd->add_flag("--minimal", search_args.minimal, "Keep only the smallest matching dimension");
    add_format(search_cmd);

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "Classify every representation up to a dimension");
    table_cmd->add_option("--primes", table_args.primes, "Comma-separated primes")
        ->required()
        ->delimiter(',');
    table_cmd->add_option("--d-max", table_args.d_max, "Largest dimension")->required();
    add_format(table_cmd);

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check the shift-number and discrepancy identities");
    verify_cmd->add_option("--primes", verify_args.primes, "Comma-separated primes")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--d-max", verify_args.d_max, "Largest dimension")->required();
    verify_cmd->add_option("--n-max", verify_args.n_max, "Periods scanned by the stratum oracle");
    add_format(verify_cmd);

    std::vector<std::string> argv_storage{"psing"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_args, format, remark_literal, out);
        if (*sht_cmd) return cmd_sht(sht_args, format, out);
        if (*search_cmd) return cmd_search(search_args, format, out);
        if (*table_cmd) return cmd_table(table_args, format, out);
        if (*verify_cmd) return cmd_verify(verify_args, format, out);
    } catch (const ValidationError& e) {
        err << "error [" << rule_name(e.rule()) << "]: " << e.what() << '\n';
        return kInvalid;
    } catch (const CapExceededError& e) {
        err << "error [CapExceeded]: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}

}  // namespace psing::cli
