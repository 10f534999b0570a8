#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "addsys/classify.hpp"
#include "addsys/codec.hpp"
#include "addsys/dsl.hpp"
#include "addsys/json_io.hpp"
#include "addsys/sumset_lab.hpp"
#include "addsys/systems.hpp"
#include "addsys/transforms.hpp"

namespace {

using namespace addsys;

constexpr int kExitOk = 0;
constexpr int kExitFailedCheck = 1;  // verification failure / no witness
constexpr int kExitUsage = 2;        // usage or parse error

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw Error("empty entry in integer list \"" + text + "\"");
        out.emplace_back(tok);
    }
    return out;
}

std::vector<Int> radices_from_flags(const std::string& preset_name,
                                    const std::string& radices) {
    if (!preset_name.empty() && !radices.empty()) {
        throw Error("--preset and --radices are mutually exclusive");
    }
    if (!preset_name.empty()) return preset(preset_name);
    if (!radices.empty()) return parse_int_list(radices);
    throw Error("one of --preset or --radices is required");
}

GeneratorSchedule schedule_from_flags(const std::string& prefix,
                                      const std::string& tail_spec) {
    GeneratorSchedule s;
    if (!prefix.empty()) s.prefix = parse_int_list(prefix);
    if (tail_spec.empty() || tail_spec == "none") {
        s.tail = GeneratorSchedule::NoTail{};
    } else if (tail_spec.rfind("constant:", 0) == 0) {
        s.tail = GeneratorSchedule::ConstantTail{Int(tail_spec.substr(9))};
    } else if (tail_spec.rfind("periodic:", 0) == 0) {
        s.tail = GeneratorSchedule::PeriodicTail{parse_int_list(tail_spec.substr(9))};
    } else {
        throw Error("tail must be none, constant:G, or periodic:G1,G2,...");
    }
    s.validate();
    return s;
}

AdditiveSystem load_system(const std::string& path, const Bound& b) {
    return to_system(parse_system(read_file(path)), b);
}

// Parse a standalone set expression by wrapping it in a one-set document.
StructuredSet parse_set_expression(const std::string& text, const Bound& b) {
    SystemDocument doc = parse_system("system { set X = " + text + " }");
    return to_structured_set(doc.decls.front().expr, b);
}

void emit_system(const AdditiveSystem& sys, bool json, Json extra = Json::object()) {
    if (json) {
        Json out{{"verdict", "ok"}, {"system", system_to_json(sys)}};
        out.update(extra);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << print_system(to_document(sys));
    }
}

struct Options {
    std::string file;
    std::string preset_name, radices, prefix, tail = "constant:2";
    std::string partition_file, target, mode = "direct-sum", value, digits;
    Int bound{10000};
    std::size_t depth = 32;
    std::size_t members = 0;
    std::size_t slack = 0;
    unsigned long long budget = 50'000'000;
    bool json = false;
    bool display_msd = false;
    std::string compare_prefix, compare_tail;
};

int run_verify(const Options& o) {
    Bound b{o.bound};
    VerificationReport report = verify(load_system(o.file, b), b);
    if (o.json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << report.to_string() << "\n";
    }
    return report.valid() ? kExitOk : kExitFailedCheck;
}

int run_encode(const Options& o) {
    std::vector<Int> radices = radices_from_flags(o.preset_name, o.radices);
    MixedRadixDigits d = encode(Int(o.value), radices);
    if (o.json) {
        Json out = digits_to_json(d);
        out["verdict"] = "ok";
        out["text"] = format_digits(d, o.display_msd);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << format_digits(d, o.display_msd) << "\n";
    }
    return kExitOk;
}

int run_decode(const Options& o) {
    std::vector<Int> radices = radices_from_flags(o.preset_name, o.radices);
    MixedRadixDigits d = parse_digits(o.digits, o.display_msd);
    Int n = decode(d, radices);
    if (o.json) {
        std::cout << Json{{"verdict", "ok"}, {"n", int_to_json(n)}}.dump(2) << "\n";
    } else {
        std::cout << n << "\n";
    }
    return kExitOk;
}

int run_dilate(const Options& o) {
    Bound b{o.bound};
    auto [sys, rec] = dilate_family(load_system(o.file, b),
                                    radices_from_flags(o.preset_name, o.radices));
    emit_system(sys, o.json, {{"record", dilation_record_to_json(rec)}});
    return kExitOk;
}

int run_contract(const Options& o) {
    Bound b{o.bound};
    IndexPartition p = partition_from_json(Json::parse(read_file(o.partition_file)));
    emit_system(contract(load_system(o.file, b), p, b), o.json);
    return kExitOk;
}

int run_step(const Options& o) {
    Bound b{o.bound};
    ExtractionStep step = debruijn_step(load_system(o.file, b), b);
    if (o.json) {
        std::cout << extraction_step_to_json(step).dump(2) << "\n";
    } else {
        std::cout << "pivot " << step.pivot_label << ", g = " << step.g << ", "
                  << (step.kind == ExtractionStep::Case::Dilation ? "dilation"
                                                                  : "contraction")
                  << " case\n"
                  << print_system(to_document(step.quotient));
    }
    return kExitOk;
}

int run_classify(const Options& o) {
    Bound b{o.bound};
    ClassificationResult r = classify(load_system(o.file, b), o.depth, b);
    if (o.json) {
        std::cout << classification_to_json(r).dump(2) << "\n";
    } else {
        std::cout << "prefix (";
        for (std::size_t i = 0; i < r.bns.schedule.prefix.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << r.bns.schedule.prefix[i];
        }
        std::cout << "), depth " << r.depth
                  << (r.terminated ? ", terminated" : ", not terminated") << "\n";
        for (const auto& c : r.partition.classes) {
            std::cout << "  " << c.label << ":";
            for (std::size_t n : c.positions) std::cout << " " << n;
            if (r.partition.rest_label && *r.partition.rest_label == c.label) {
                std::cout << " rest";
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int run_expand(const Options& o) {
    Bound b{o.bound};
    ClassificationResult r = classification_from_json(Json::parse(read_file(o.file)));
    emit_system(expand(r, b), o.json);
    return kExitOk;
}

int run_bns(const Options& o) {
    GeneratorSchedule s = schedule_from_flags(o.prefix, o.tail);
    if (!o.compare_prefix.empty() || !o.compare_tail.empty()) {
        GeneratorSchedule other = schedule_from_flags(
            o.compare_prefix, o.compare_tail.empty() ? o.tail : o.compare_tail);
        bool equal = bns_equal(BritishNumberSystem(s), BritishNumberSystem(other));
        if (o.json) {
            std::cout << Json{{"verdict", equal ? "equal" : "not-equal"}}.dump(2) << "\n";
        } else {
            std::cout << (equal ? "equal" : "not-equal") << "\n";
        }
        return equal ? kExitOk : kExitFailedCheck;
    }
    std::size_t r = o.members ? o.members : std::max<std::size_t>(s.prefix.size(), 1);
    AdditiveSystem sys = build_bns(s, r);
    Json extra = Json::object();
    if (s.infinite()) {
        extra["indecomposable"] = is_indecomposable_system(BritishNumberSystem(s));
    }
    emit_system(sys, o.json, extra);
    return kExitOk;
}

int run_decompose(const Options& o) {
    Bound b{o.bound};
    StructuredSet s = parse_set_expression(o.target, b);
    auto witness = is_decomposable_set(s, b);
    if (o.json) {
        Json out{{"verdict", witness ? "decomposable" : "indecomposable"},
                 {"set", s.to_string()}};
        if (witness) {
            out["witness"] = {{"b", witness->first.to_string()},
                              {"c", witness->second.to_string()}};
        }
        std::cout << out.dump(2) << "\n";
    } else if (witness) {
        std::cout << "decomposable: " << witness->first.to_string() << "  (+)  "
                  << witness->second.to_string() << "\n";
    } else {
        std::cout << "indecomposable\n";
    }
    return witness ? kExitOk : kExitFailedCheck;
}

int run_search(const Options& o) {
    Bound b{o.bound};
    StructuredSet target = parse_set_expression(o.target, b);
    if (!target.is_finite()) throw Error("search target must be a finite set");
    SearchProblem p{target.enumerate(Bound(target.max_element() + 1)),
                    parse_mode(o.mode), o.slack};
    SearchOutcome outcome = search(p, SearchLimits{o.budget});
    if (o.json) {
        std::cout << search_outcome_to_json(p, outcome).dump(2) << "\n";
    } else {
        for (const auto& w : outcome.witnesses) {
            std::cout << StructuredSet::finite(w.a).to_string();
            if (p.mode != SearchMode::Square) {
                std::cout << "  ,  " << StructuredSet::finite(w.b).to_string();
            }
            std::cout << "\n";
        }
        std::cout << (outcome.exhausted ? "exhausted" : "budget exceeded (partial)")
                  << ", " << outcome.witnesses.size() << " witness(es), "
                  << outcome.nodes_explored << " nodes\n";
    }
    return outcome.witnesses.empty() ? kExitFailedCheck : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive systems toolkit"};
    app.require_subcommand(1);
    Options o;
    std::string bound_text = "10000";
    std::string seed_text;  // reserved; everything here is deterministic

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound_text, "verification window [0,N)");
        cmd->add_flag("--json", o.json, "machine-readable output");
        cmd->add_option("--seed", seed_text, "reserved");
    };

    auto* verify_cmd = app.add_subcommand("verify", "check a system file");
    verify_cmd->add_option("file", o.file)->required();
    add_common(verify_cmd);

    auto* encode_cmd = app.add_subcommand("encode", "mixed-radix encode");
    encode_cmd->add_option("n", o.value)->required();
    encode_cmd->add_option("--preset", o.preset_name);
    encode_cmd->add_option("--radices", o.radices);
    encode_cmd->add_flag("--display-msd", o.display_msd, "most significant digit first");
    add_common(encode_cmd);

    auto* decode_cmd = app.add_subcommand("decode", "mixed-radix decode");
    decode_cmd->add_option("digits", o.digits)->required();
    decode_cmd->add_option("--preset", o.preset_name);
    decode_cmd->add_option("--radices", o.radices);
    decode_cmd->add_flag("--display-msd", o.display_msd);
    add_common(decode_cmd);

    auto* dilate_cmd = app.add_subcommand("dilate", "dilate a system by radices");
    dilate_cmd->add_option("file", o.file)->required();
    dilate_cmd->add_option("--radices", o.radices);
    dilate_cmd->add_option("--preset", o.preset_name);
    add_common(dilate_cmd);

    auto* contract_cmd = app.add_subcommand("contract", "contract by an index partition");
    contract_cmd->add_option("file", o.file)->required();
    contract_cmd->add_option("--partition", o.partition_file)->required();
    add_common(contract_cmd);

    auto* step_cmd = app.add_subcommand("step", "one extraction step");
    step_cmd->add_option("file", o.file)->required();
    add_common(step_cmd);

    auto* classify_cmd = app.add_subcommand("classify", "classification certificate");
    classify_cmd->add_option("file", o.file)->required();
    classify_cmd->add_option("--depth", o.depth, "maximum extraction depth");
    add_common(classify_cmd);

    auto* expand_cmd = app.add_subcommand("expand", "rebuild a system from a certificate");
    expand_cmd->add_option("file", o.file)->required();
    add_common(expand_cmd);

    auto* bns_cmd = app.add_subcommand("bns", "build or compare number systems");
    bns_cmd->add_option("--prefix", o.prefix, "radix prefix g1,g2,...");
    bns_cmd->add_option("--tail", o.tail, "none | constant:G | periodic:G1,G2,...");
    bns_cmd->add_option("--members", o.members, "truncation length");
    bns_cmd->add_option("--compare-prefix", o.compare_prefix);
    bns_cmd->add_option("--compare-tail", o.compare_tail);
    add_common(bns_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "direct-sum split of one set");
    decompose_cmd->add_option("set", o.target, "set expression")->required();
    add_common(decompose_cmd);

    auto* search_cmd = app.add_subcommand("search", "sumset decomposition search");
    search_cmd->add_option("--target", o.target, "finite set expression")->required();
    search_cmd->add_option("--mode", o.mode,
                           "direct-sum | sumset | square | subset | superset");
    search_cmd->add_option("--slack", o.slack, "symmetric-difference budget");
    search_cmd->add_option("--budget", o.budget, "node budget");
    add_common(search_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        o.bound = Int(bound_text);
        if (verify_cmd->parsed()) return run_verify(o);
        if (encode_cmd->parsed()) return run_encode(o);
        if (decode_cmd->parsed()) return run_decode(o);
        if (dilate_cmd->parsed()) return run_dilate(o);
        if (contract_cmd->parsed()) return run_contract(o);
        if (step_cmd->parsed()) return run_step(o);
        if (classify_cmd->parsed()) return run_classify(o);
        if (expand_cmd->parsed()) return run_expand(o);
        if (bns_cmd->parsed()) return run_bns(o);
        if (decompose_cmd->parsed()) return run_decompose(o);
        if (search_cmd->parsed()) return run_search(o);
        return kExitUsage;
    } catch (const DuplicateRepresentationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailedCheck;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
