#include "genera/cli.hpp"

#include "genera/algebra.hpp"
#include "genera/bordism.hpp"
#include "genera/dsl.hpp"
#include "genera/errors.hpp"
#include "genera/genus.hpp"
#include "genera/rational.hpp"
#include "genera/varieties.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace genera {
namespace {

using ordered_json = nlohmann::ordered_json;

// Bad input text exits 2; everything semantic exits 3.
int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::UsageError:
        case ErrorKind::SyntaxError:
        case ErrorKind::ExprError:
            return 2;
        default:
            return 3;
    }
}

std::string render(const ordered_json& doc, bool pretty) {
    return (pretty ? doc.dump(2) : doc.dump()) + "\n";
}

ordered_json rational_json(const Rational& q) { return rat_to_fraction_string(q); }

// For quantities that are integers by construction (Euler number, signature).
long long exact_integer(const Rational& q) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
        throw std::logic_error("expected a machine integer, got " + rat_to_string(q));
    }
    return q.get_num().get_si();
}

// Homogeneous components by weight: entry w is the degree step*w part.
ordered_json class_array(const Element& cls, int step, int top_weight) {
    ordered_json arr = ordered_json::array();
    for (int w = 0; w <= top_weight; ++w) {
        arr.push_back(cls.component(step * w).to_string());
    }
    return arr;
}

ordered_json partition_json(const Partition& p) {
    ordered_json arr = ordered_json::array();
    for (int part : p) arr.push_back(part);
    return arr;
}

struct LoadedVariety {
    ExprPtr expr;
    VarietyModel model;
};

LoadedVariety load_variety(const std::string& source) {
    ExprPtr expr = parse_variety(source);
    VarietyModel model = elaborate(*expr);
    return {std::move(expr), std::move(model)};
}

ordered_json make_doc(const std::string& command) {
    ordered_json doc;
    doc["command"] = command;
    doc["input"] = ordered_json::object();
    doc["result"] = ordered_json::object();
    return doc;
}

void echo_variety(ordered_json& doc, const VarietyModel& v) {
    doc["result"]["variety"] = v.name;
    doc["result"]["dim"] = v.dim;
}

int series_order_for(const VarietyModel& v) { return std::max(v.dim, 1); }

// ---- command handlers ------------------------------------------------

ordered_json cmd_todd(const std::string& source, int trunc) {
    auto [expr, v] = load_variety(source);
    GenusSpec spec = GenusSpec::todd(series_order_for(v));
    int bound = trunc >= 0 ? std::min(trunc, v.dim) : v.dim;
    Element cls = genus_class_of(v, spec);

    ordered_json doc = make_doc("todd");
    doc["input"]["expr"] = source;
    doc["input"]["trunc"] = trunc >= 0 ? ordered_json(trunc) : ordered_json(nullptr);
    echo_variety(doc, v);
    doc["result"]["t"] = class_array(cls, 2, bound);
    doc["result"]["genus"] = rational_json(genus_number(v, spec));
    return doc;
}

ordered_json cmd_genus(const std::string& source, const std::string& spec_name, int trunc) {
    auto [expr, v] = load_variety(source);
    GenusSpec spec = GenusSpec::by_name(spec_name, series_order_for(v));
    Element cls = genus_class_of(v, spec, trunc);
    Rational value = cls.pair_top();

    ordered_json doc = make_doc("genus");
    doc["input"]["expr"] = source;
    doc["input"]["spec"] = spec_name;
    doc["input"]["trunc"] = trunc >= 0 ? ordered_json(trunc) : ordered_json(nullptr);
    echo_variety(doc, v);
    doc["result"]["value"] = rational_json(value);
    return doc;
}

ordered_json cmd_chern(const std::string& source, int trunc) {
    auto [expr, v] = load_variety(source);
    int bound = trunc >= 0 ? std::min(trunc, v.dim) : v.dim;

    ordered_json doc = make_doc("chern");
    doc["input"]["expr"] = source;
    doc["input"]["trunc"] = trunc >= 0 ? ordered_json(trunc) : ordered_json(nullptr);
    echo_variety(doc, v);
    doc["result"]["c"] = class_array(v.total_chern, 2, bound);
    return doc;
}

ordered_json cmd_pontrjagin(const std::string& source, int trunc) {
    auto [expr, v] = load_variety(source);
    int jmax = v.dim / 2;  // p_j lives in degree 4j <= 2*dim
    int bound = trunc >= 0 ? std::min(trunc, jmax) : jmax;
    Element p = chern_to_pontrjagin(v.total_chern);

    ordered_json doc = make_doc("pontrjagin");
    doc["input"]["expr"] = source;
    doc["input"]["trunc"] = trunc >= 0 ? ordered_json(trunc) : ordered_json(nullptr);
    echo_variety(doc, v);
    doc["result"]["p"] = class_array(p, 4, bound);
    return doc;
}

ordered_json cmd_euler(const std::string& source) {
    auto [expr, v] = load_variety(source);
    ordered_json doc = make_doc("euler");
    doc["input"]["expr"] = source;
    echo_variety(doc, v);
    doc["result"]["value"] = exact_integer(v.euler_number());
    return doc;
}

ordered_json cmd_signature(const std::string& source) {
    auto [expr, v] = load_variety(source);
    GenusSpec spec = GenusSpec::l(std::max(v.dim, 2));
    ordered_json doc = make_doc("signature");
    doc["input"]["expr"] = source;
    echo_variety(doc, v);
    doc["result"]["value"] = exact_integer(genus_number(v, spec));
    return doc;
}

ordered_json cmd_higher_todd(const std::string& source, const std::string& label) {
    auto [expr, v] = load_variety(source);
    GenusSpec spec = GenusSpec::todd(series_order_for(v));
    std::string canonical = normalize_label(v, label);
    Rational value = higher_genus(v, spec, canonical);

    ordered_json doc = make_doc("higher-todd");
    doc["input"]["expr"] = source;
    doc["input"]["x"] = label;
    echo_variety(doc, v);
    doc["result"]["x"] = canonical;
    doc["result"]["value"] = rational_json(value);
    return doc;
}

ordered_json cmd_char_number(const std::string& source, const std::string& poly) {
    auto [expr, v] = load_variety(source);
    Rational value = char_number(v, poly);

    ordered_json doc = make_doc("char-number");
    doc["input"]["expr"] = poly;
    doc["input"]["variety"] = source;
    echo_variety(doc, v);
    doc["result"]["value"] = rational_json(value);
    return doc;
}

ordered_json cmd_verify_invariance(const std::string& source, int& exit_code) {
    ExprPtr expr = parse_variety(source);
    BlowupPair pair = elaborate_blowup(*expr);
    GenusSpec spec = GenusSpec::todd(series_order_for(pair.blown));
    InvarianceReport report = verify_blowup_invariance(pair, spec);

    ordered_json doc = make_doc("verify-invariance");
    doc["input"]["expr"] = source;
    doc["result"]["base"] = pair.base.name;
    doc["result"]["blown"] = pair.blown.name;
    doc["result"]["genus"] = "todd";
    ordered_json labels = ordered_json::array();
    for (const InvarianceRow& row : report.rows) {
        ordered_json entry;
        entry["x"] = row.label;
        entry["base"] = rational_json(row.base_value);
        entry["blown"] = rational_json(row.blown_value);
        entry["equal"] = row.equal;
        labels.push_back(std::move(entry));
    }
    doc["result"]["labels"] = std::move(labels);
    doc["result"]["verdict"] = report.pass ? "PASS" : "FAIL";
    exit_code = report.pass ? 0 : 1;
    return doc;
}

ordered_json cmd_bordism_basis(int k) {
    std::vector<Partition> basis = unitary_basis(k);
    ordered_json doc = make_doc("bordism-basis");
    doc["input"]["k"] = k;
    doc["result"]["dimension"] = basis.size();
    ordered_json parts = ordered_json::array();
    for (const Partition& p : basis) parts.push_back(partition_json(p));
    doc["result"]["partitions"] = std::move(parts);
    return doc;
}

ordered_json cmd_bordism_quotient(int k) {
    std::vector<Partition> basis = unitary_basis(k);
    IdealSpan span = birational_ideal_span(k);

    std::vector<Rational> todd_values;
    todd_values.reserve(basis.size());
    for (const Partition& p : basis) todd_values.push_back(todd_functional(p));

    bool vanishes = true;
    for (const std::vector<Rational>& vec : span.basis) {
        Rational s = 0;
        for (std::size_t i = 0; i < vec.size(); ++i) s += vec[i] * todd_values[i];
        if (s != 0) vanishes = false;
    }

    ordered_json doc = make_doc("bordism-quotient");
    doc["input"]["k"] = k;
    doc["result"]["space_dimension"] = span.ambient;
    doc["result"]["ideal_dimension"] = span.dimension;
    doc["result"]["codimension"] = span.ambient - span.dimension;
    ordered_json parts = ordered_json::array();
    for (const Partition& p : basis) parts.push_back(partition_json(p));
    doc["result"]["partitions"] = std::move(parts);
    ordered_json ideal = ordered_json::array();
    for (const std::vector<Rational>& vec : span.basis) {
        ordered_json row = ordered_json::array();
        for (const Rational& q : vec) row.push_back(rational_json(q));
        ideal.push_back(std::move(row));
    }
    doc["result"]["ideal_basis"] = std::move(ideal);
    ordered_json todd = ordered_json::array();
    for (const Rational& q : todd_values) todd.push_back(rational_json(q));
    doc["result"]["todd_values"] = std::move(todd);
    doc["result"]["todd_vanishes_on_ideal"] = vanishes;
    // The ideal lies in the Todd kernel, so the class of the first basis
    // partition carries the induced value on the quotient line.
    doc["result"]["todd_on_quotient"] = rational_json(todd_values.empty() ? Rational(0) : todd_values[0]);
    return doc;
}

int parse_pi_rank(const std::string& text) {
    if (text.size() < 3 || text.compare(0, 2, "Z^") != 0) {
        fail(ErrorKind::UsageError, "--pi must have the form Z^<2g>, e.g. Z^2");
    }
    const std::string digits = text.substr(2);
    if (digits.size() > 2 ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
        fail(ErrorKind::UsageError, "--pi must have the form Z^<2g>, e.g. Z^2");
    }
    int rank = std::stoi(digits);
    if (rank % 2 != 0 || rank > 8) {
        fail(ErrorKind::UsageError, "supported groups are Z^0, Z^2, ..., Z^8");
    }
    return rank;
}

// Values file: JSON array of {"label", "partition", "value"} covering every
// generator of the model exactly once.
GenusFunctional read_values_file(const BordismModel& model, const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::UsageError, "cannot open values file: " + path);

    nlohmann::json data;
    try {
        data = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::UsageError, std::string("values file: ") + e.what());
    }
    if (!data.is_array()) fail(ErrorKind::UsageError, "values file must be a JSON array");

    std::map<std::pair<std::string, Partition>, Rational> table;
    for (const auto& item : data) {
        if (!item.is_object() || !item.contains("label") || !item.contains("partition") ||
            !item.contains("value") || !item["label"].is_string() ||
            !item["partition"].is_array() || !item["value"].is_string()) {
            fail(ErrorKind::UsageError,
                 "values file entries must be objects with string \"label\", integer-array "
                 "\"partition\", and \"num/den\" string \"value\"");
        }
        Partition p;
        for (const auto& part : item["partition"]) {
            if (!part.is_number_integer() || part.get<long long>() < 1 ||
                part.get<long long>() > 1000000) {
                fail(ErrorKind::UsageError, "values file: partition parts must be positive integers");
            }
            p.push_back(part.get<int>());
        }
        std::sort(p.begin(), p.end(), std::greater<int>());
        Rational value;
        try {
            value = rat_from_string(item["value"].get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(ErrorKind::UsageError, std::string("values file: ") + e.what());
        }
        auto key = std::make_pair(item["label"].get<std::string>(), std::move(p));
        if (!table.emplace(std::move(key), std::move(value)).second) {
            fail(ErrorKind::UsageError, "values file: duplicate generator entry");
        }
    }

    GenusFunctional xi;
    xi.values.reserve(model.generators().size());
    for (const BordismGenerator& gen : model.generators()) {
        auto it = table.find({gen.label, gen.fiber});
        if (it == table.end()) {
            fail(ErrorKind::UsageError, "values file: missing generator label=" + gen.label +
                                            " partition=" + partition_to_string(gen.fiber));
        }
        xi.values.push_back(it->second);
        table.erase(it);
    }
    if (!table.empty()) {
        const auto& key = table.begin()->first;
        fail(ErrorKind::UsageError, "values file: unknown generator label=" + key.first +
                                        " partition=" + partition_to_string(key.second));
    }
    return xi;
}

ordered_json cmd_decompose(const std::string& pi_text, int k, const std::string& values_path) {
    int rank = parse_pi_rank(pi_text);
    BordismModel model(PiModel{rank / 2}, k, BordismVariant::Unitary);
    GenusFunctional xi = read_values_file(model, values_path);
    CohomologyClass cls = decompose_functional(model, xi);

    ordered_json doc = make_doc("decompose");
    doc["input"]["pi"] = pi_text;
    doc["input"]["k"] = k;
    doc["input"]["values"] = values_path;
    doc["result"]["pi"] = "Z^" + std::to_string(rank);
    doc["result"]["k"] = k;
    ordered_json functional = ordered_json::array();
    const auto& gens = model.generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        ordered_json entry;
        entry["label"] = gens[i].label;
        entry["partition"] = partition_json(gens[i].fiber);
        entry["value"] = rational_json(xi.values[i]);
        functional.push_back(std::move(entry));
    }
    doc["result"]["functional"] = std::move(functional);
    ordered_json terms = ordered_json::array();
    for (const auto& [label, coeff] : cls.terms) {
        ordered_json entry;
        entry["label"] = label;
        entry["coeff"] = rational_json(coeff);
        terms.push_back(std::move(entry));
    }
    doc["result"]["class"] = std::move(terms);
    // decompose_functional re-applies the class and rejects mismatches.
    doc["result"]["reproduces_functional"] = true;
    return doc;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    bool json_flag = false;
    bool pretty_flag = false;
    int trunc = -1;
    int k = 0;
    std::string expr_text;
    std::string spec_name;
    std::string label;
    std::string poly;
    std::string pi_text;
    std::string values_path;

    CLI::App app{"Characteristic classes, genera, and rational bordism of model varieties"};
    app.name("genera");
    app.set_version_flag("--version", "genera 0.1.0");
    app.require_subcommand(1);
    app.add_flag("--json", json_flag, "compact JSON output (default)");
    app.add_flag("--pretty", pretty_flag, "indented JSON output");

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--json", json_flag, "compact JSON output (default)");
        sub->add_flag("--pretty", pretty_flag, "indented JSON output");
        return sub;
    };
    auto add_trunc = [&](CLI::App* sub) {
        sub->add_option("--trunc", trunc, "cap the reported weights at N")
            ->check(CLI::NonNegativeNumber);
        return sub;
    };
    auto add_expr = [&](CLI::App* sub) {
        sub->add_option("expr", expr_text, "variety expression, e.g. \"blowup(E x P(1))\"")
            ->required();
        return sub;
    };

    CLI::App* todd = add_expr(add_trunc(add_common(
        app.add_subcommand("todd", "Todd class and Todd genus of a variety"))));
    CLI::App* genus = add_expr(add_trunc(add_common(
        app.add_subcommand("genus", "genus of a variety for a named spec"))));
    genus->add_option("--spec", spec_name, "todd | l | ahat")
        ->required()
        ->check(CLI::IsMember({"todd", "l", "ahat"}));
    CLI::App* chern = add_expr(add_trunc(add_common(
        app.add_subcommand("chern", "Chern classes of a variety"))));
    CLI::App* pontrjagin = add_expr(add_trunc(add_common(
        app.add_subcommand("pontrjagin", "Pontrjagin classes of a variety"))));
    CLI::App* euler = add_expr(add_common(
        app.add_subcommand("euler", "Euler number of a variety")));
    CLI::App* signature = add_expr(add_common(
        app.add_subcommand("signature", "signature of a variety (L-genus)")));
    CLI::App* higher_todd = add_expr(add_common(
        app.add_subcommand("higher-todd", "higher Todd genus for a group-cohomology class")));
    higher_todd->add_option("--x", label, "class label, e.g. \"x1*x2\" or \"1\"")->required();
    CLI::App* char_number = add_common(
        app.add_subcommand("char-number", "characteristic number of a class expression"));
    char_number->add_option("--expr", poly, "class polynomial, e.g. \"c1*x1*x2\"")->required();
    char_number->add_option("variety", expr_text, "variety expression")->required();
    CLI::App* verify = add_expr(add_common(app.add_subcommand(
        "verify-invariance", "compare higher Todd genera of a blow-up against its base")));
    CLI::App* basis = add_common(
        app.add_subcommand("bordism-basis", "partition basis of the rational bordism group"));
    basis->add_option("--k", k, "half-degree (complex dimension)")
        ->required()
        ->check(CLI::Range(0, 40));
    CLI::App* quotient = add_common(app.add_subcommand(
        "bordism-quotient", "birational ideal and the Todd functional on the quotient"));
    quotient->add_option("--k", k, "half-degree (complex dimension)")
        ->required()
        ->check(CLI::Range(1, 16));
    CLI::App* decompose = add_common(app.add_subcommand(
        "decompose", "express an invariant functional as a group-cohomology class"));
    decompose->add_option("--pi", pi_text, "fundamental group, Z^<2g>")->required();
    decompose->add_option("--k", k, "half-degree (complex dimension)")
        ->required()
        ->check(CLI::Range(0, 8));
    decompose->add_option("--values", values_path, "JSON file with the functional's values")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        ordered_json doc;
        doc["error"]["kind"] = to_string(ErrorKind::UsageError);
        doc["error"]["message"] = e.what();
        err << render(doc, pretty_flag);
        return 2;
    }

    bool pretty = pretty_flag;
    try {
        if (json_flag && pretty_flag) {
            fail(ErrorKind::UsageError, "choose at most one of --json and --pretty");
        }
        int exit_code = 0;
        ordered_json doc;
        if (*todd) {
            doc = cmd_todd(expr_text, trunc);
        } else if (*genus) {
            doc = cmd_genus(expr_text, spec_name, trunc);
        } else if (*chern) {
            doc = cmd_chern(expr_text, trunc);
        } else if (*pontrjagin) {
            doc = cmd_pontrjagin(expr_text, trunc);
        } else if (*euler) {
            doc = cmd_euler(expr_text);
        } else if (*signature) {
            doc = cmd_signature(expr_text);
        } else if (*higher_todd) {
            doc = cmd_higher_todd(expr_text, label);
        } else if (*char_number) {
            doc = cmd_char_number(expr_text, poly);
        } else if (*verify) {
            doc = cmd_verify_invariance(expr_text, exit_code);
        } else if (*basis) {
            doc = cmd_bordism_basis(k);
        } else if (*quotient) {
            doc = cmd_bordism_quotient(k);
        } else if (*decompose) {
            doc = cmd_decompose(pi_text, k, values_path);
        } else {
            fail(ErrorKind::UsageError, "a command is required; run with --help");
        }
        out << render(doc, pretty);
        return exit_code;
    } catch (const SyntaxError& e) {
        ordered_json doc;
        doc["error"]["kind"] = to_string(e.kind());
        doc["error"]["message"] = e.what();
        doc["error"]["line"] = e.line();
        doc["error"]["column"] = e.column();
        err << render(doc, pretty);
        return exit_code_for(e.kind());
    } catch (const DomainError& e) {
        ordered_json doc;
        doc["error"]["kind"] = to_string(e.kind());
        doc["error"]["message"] = e.what();
        err << render(doc, pretty);
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        ordered_json doc;
        doc["error"]["kind"] = "InternalError";
        doc["error"]["message"] = e.what();
        err << render(doc, pretty);
        return 3;
    }
}

} // namespace genera
