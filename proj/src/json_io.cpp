#include "addsys/json_io.hpp"

#include <limits>

namespace addsys {

Json int_to_json(const Int& n) {
    if (n >= std::numeric_limits<std::int64_t>::min() &&
        n <= std::numeric_limits<std::int64_t>::max()) {
        return n.convert_to<std::int64_t>();
    }
    return n.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw Error("expected an integer, got " + j.dump());
}

namespace {

Json ints_to_json(const std::vector<Int>& v) {
    Json out = Json::array();
    for (const Int& n : v) out.push_back(int_to_json(n));
    return out;
}

std::vector<Int> ints_from_json(const Json& j) {
    std::vector<Int> out;
    for (const auto& e : j) out.push_back(int_from_json(e));
    return out;
}

}  // namespace

Json system_to_json(const AdditiveSystem& sys) {
    Json members = Json::array();
    for (const auto& m : sys.members()) {
        members.push_back({{"label", m.label}, {"set", m.set.to_string()}});
    }
    return {{"members", members}};
}

Json representation_to_json(const Representation& r) {
    Json terms = Json::array();
    for (const auto& [label, e] : r.terms) {
        terms.push_back({{"label", label}, {"element", int_to_json(e)}});
    }
    return {{"terms", terms}};
}

Json report_to_json(const VerificationReport& r) {
    Json out{{"bound", int_to_json(r.bound.n_max)}, {"checked", int_to_json(r.checked)}};
    if (r.valid()) {
        out["verdict"] = "valid";
    } else if (const auto* m = std::get_if<MissingRepresentation>(&r.verdict)) {
        out["verdict"] = "missing-representation";
        out["n"] = int_to_json(m->n);
    } else if (const auto* d = std::get_if<DuplicateRepresentation>(&r.verdict)) {
        out["verdict"] = "duplicate-representation";
        out["n"] = int_to_json(d->n);
        out["rep1"] = representation_to_json(d->rep1);
        out["rep2"] = representation_to_json(d->rep2);
    } else if (const auto* o = std::get_if<OverlapViolation>(&r.verdict)) {
        out["verdict"] = "overlap-violation";
        out["n"] = int_to_json(o->n);
        out["labels"] = {o->i, o->j};
    }
    return out;
}

Json partition_to_json(const IndexPartition& p) {
    Json classes = Json::array();
    for (const auto& c : p.classes) {
        classes.push_back({{"label", c.label},
                           {"members", std::vector<std::string>(c.members.begin(),
                                                                c.members.end())}});
    }
    return {{"classes", classes}};
}

IndexPartition partition_from_json(const Json& j) {
    IndexPartition p;
    for (const auto& c : j.at("classes")) {
        IndexPartition::Class cls;
        cls.label = c.at("label").get<std::string>();
        for (const auto& m : c.at("members")) {
            cls.members.insert(m.get<std::string>());
        }
        p.classes.push_back(std::move(cls));
    }
    return p;
}

Json dilation_record_to_json(const DilationRecord& r) {
    return {{"radices", ints_to_json(r.radices)},
            {"partial_products", ints_to_json(r.partial_products)},
            {"introduced_labels", r.introduced_labels}};
}

Json schedule_to_json(const GeneratorSchedule& s) {
    Json out{{"prefix", ints_to_json(s.prefix)}};
    if (const auto* c = std::get_if<GeneratorSchedule::ConstantTail>(&s.tail)) {
        out["tail"] = {{"kind", "constant"}, {"g", int_to_json(c->g)}};
    } else if (const auto* p = std::get_if<GeneratorSchedule::PeriodicTail>(&s.tail)) {
        out["tail"] = {{"kind", "periodic"}, {"pattern", ints_to_json(p->pattern)}};
    } else {
        out["tail"] = {{"kind", "none"}};
    }
    return out;
}

GeneratorSchedule schedule_from_json(const Json& j) {
    GeneratorSchedule s;
    s.prefix = ints_from_json(j.at("prefix"));
    const Json& tail = j.at("tail");
    std::string kind = tail.at("kind").get<std::string>();
    if (kind == "constant") {
        s.tail = GeneratorSchedule::ConstantTail{int_from_json(tail.at("g"))};
    } else if (kind == "periodic") {
        s.tail = GeneratorSchedule::PeriodicTail{ints_from_json(tail.at("pattern"))};
    } else if (kind == "none") {
        s.tail = GeneratorSchedule::NoTail{};
    } else {
        throw Error("unknown tail kind: " + kind);
    }
    s.validate();
    return s;
}

Json classification_to_json(const ClassificationResult& r) {
    Json classes = Json::array();
    for (const auto& c : r.partition.classes) {
        classes.push_back(
            {{"label", c.label},
             {"positions", std::vector<std::size_t>(c.positions.begin(),
                                                    c.positions.end())}});
    }
    Json out{{"verdict", "ok"},
             {"prefix", ints_to_json(r.bns.schedule.prefix)},
             {"schedule", schedule_to_json(r.bns.schedule)},
             {"partition", {{"classes", classes}}},
             {"depth", r.depth},
             {"terminated", r.terminated}};
    if (r.partition.rest_label) {
        out["partition"]["rest"] = *r.partition.rest_label;
    }
    return out;
}

ClassificationResult classification_from_json(const Json& j) {
    PartitionSpec spec;
    const Json& partition = j.at("partition");
    for (const auto& c : partition.at("classes")) {
        PartitionSpec::Class cls;
        cls.label = c.at("label").get<std::string>();
        for (const auto& n : c.at("positions")) {
            cls.positions.insert(n.get<std::size_t>());
        }
        spec.classes.push_back(std::move(cls));
    }
    if (partition.contains("rest")) {
        spec.rest_label = partition.at("rest").get<std::string>();
    }
    return ClassificationResult{BritishNumberSystem(schedule_from_json(j.at("schedule"))),
                                std::move(spec), j.at("depth").get<std::size_t>(),
                                j.at("terminated").get<bool>()};
}

Json extraction_step_to_json(const ExtractionStep& s) {
    return {{"verdict", "ok"},
            {"pivot", s.pivot_label},
            {"g", int_to_json(s.g)},
            {"case", s.kind == ExtractionStep::Case::Dilation ? "dilation" : "contraction"},
            {"quotient", system_to_json(s.quotient)}};
}

Json digits_to_json(const MixedRadixDigits& d) {
    return {{"digits", ints_to_json(d.digits)}, {"overflow", int_to_json(d.overflow)}};
}

Json search_outcome_to_json(const SearchProblem& p, const SearchOutcome& o) {
    Json witnesses = Json::array();
    for (const auto& w : o.witnesses) {
        Json jw{{"a", ints_to_json(w.a)}};
        if (p.mode != SearchMode::Square) jw["b"] = ints_to_json(w.b);
        witnesses.push_back(std::move(jw));
    }
    return {{"verdict", o.witnesses.empty() ? "no-witness" : "witnesses-found"},
            {"mode", mode_name(p.mode)},
            {"target", ints_to_json(p.target)},
            {"witnesses", witnesses},
            {"exhausted", o.exhausted},
            {"nodes_explored", o.nodes_explored}};
}

}  // namespace addsys
