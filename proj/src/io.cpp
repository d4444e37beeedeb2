#include "superfat/io.hpp"

#include <sstream>

namespace superfat {

using nlohmann::json;

namespace {

std::int64_t as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw ParseError(std::string(what) + ": expected an integer");
    return v.get<std::int64_t>();
}

std::array<Elem, 3> triple(const PrimeField& field, const json& v, const char* what) {
    if (!v.is_array() || v.size() != 3) throw ParseError(std::string(what) + ": expected 3 integers");
    std::array<Elem, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) out[i] = field.from_int(as_int(v[i], what));
    if (out[0] == 0 && out[1] == 0 && out[2] == 0) throw SchemeError(std::string(what) + ": all coordinates zero");
    return out;
}

ProjPoint read_point(const PrimeField& field, const json& comp) {
    if (!comp.contains("point")) throw ParseError("component needs \"point\" unless \"random\" is true");
    return ProjPoint{triple(field, comp["point"], "point")};
}

Frame read_frame(const PrimeField& field, const json& comp) {
    const ProjPoint p = read_point(field, comp);
    if (!comp.contains("frame")) return default_frame(field, p);
    const json& fr = comp["frame"];
    if (!fr.is_array() || fr.size() != 2) throw ParseError("frame: expected two lines");
    Frame out{p, LinearForm{triple(field, fr[0], "frame")}, LinearForm{triple(field, fr[1], "frame")}};
    validate_frame(field, out);
    return out;
}

SchemeComponent read_component(const json& comp, ScalarStream& stream) {
    const PrimeField& field = stream.field();
    if (!comp.is_object()) throw ParseError("component must be an object");
    if (!comp.contains("kind") || !comp["kind"].is_string()) throw ParseError("component needs a string \"kind\"");
    const std::string kind = comp["kind"].get<std::string>();
    bool random = false;
    if (comp.contains("random")) {
        if (!comp["random"].is_boolean()) throw ParseError("random: expected a boolean");
        random = comp["random"].get<bool>();
    }
    auto frame = [&] { return random ? random_frame(stream) : read_frame(field, comp); };

    if (kind == "simple") return simple_point(field, random ? random_point(stream) : read_point(field, comp));
    if (kind == "fat") {
        if (!comp.contains("m")) throw ParseError("fat: missing \"m\"");
        const std::int64_t m = as_int(comp["m"], "m");
        if (m < 1 || m > 64) throw SchemeError("fat: multiplicity out of range");
        return fat_point(field, random ? random_point(stream) : read_point(field, comp), static_cast<int>(m));
    }
    if (kind == "jet") {
        const Frame fr = frame();
        return two_jet(field, fr.support, fr.first);
    }
    if (kind == "square") return two_square(field, frame());
    if (kind == "collision") return collision_component(field, frame());
    throw ParseError("unknown kind \"" + kind + "\"");
}

std::string prime_list(const std::vector<std::uint64_t>& primes) {
    std::string out;
    for (std::size_t i = 0; i < primes.size(); ++i) out += (i ? ";" : "") + std::to_string(primes[i]);
    return out;
}

}  // namespace

SchemeUnion parse_scheme_spec(const std::string& text, ScalarStream& stream) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    const json* list = &doc;
    if (doc.is_object()) {
        if (!doc.contains("components")) throw ParseError("object spec needs a \"components\" array");
        list = &doc["components"];
    }
    if (!list->is_array()) throw ParseError("scheme spec must be an array of components");
    SchemeUnion u;
    for (const json& comp : *list) u.add(stream.field(), read_component(comp, stream));
    return u;
}

json to_json(const RunHeader& h) {
    return {{"prime", h.primes.size() == 1 ? json(h.primes[0]) : json(h.primes)}, {"seed", h.seed}, {"trials", h.trials}};
}

json to_json(const Certificate& c) {
    return {{"d", c.d},
            {"s", c.s},
            {"extra_length", c.extra_length},
            {"expected", c.expected},
            {"computed", c.computed},
            {"status", to_string(c.status)},
            {"seed", c.seed},
            {"prime", c.primes.size() == 1 ? json(c.primes[0]) : json(c.primes)},
            {"trials", c.trials_used}};
}

json to_json(const HoraceStep& st) {
    return {{"line", st.line},
            {"degree", st.degree},
            {"trace_degree", st.trace_degree},
            {"expected_trace", st.expected_trace},
            {"length_before", st.length_before},
            {"length_after", st.length_after},
            {"dim_before", st.dim_before},
            {"dim_after", st.dim_after},
            {"line_dim", st.line_dim},
            {"respecialized", st.respecialized},
            {"ok", st.ok()}};
}

json to_json(const ReductionReport& r) {
    json steps = json::array();
    for (const HoraceStep& st : r.steps) steps.push_back(to_json(st));
    json out{{"lemma", r.lemma},
             {"d", r.d},
             {"s", r.s},
             {"steps", steps},
             {"terminal_degree", r.terminal_degree},
             {"terminal_length", r.terminal.length()},
             {"lhs", r.lhs},
             {"rhs", r.rhs},
             {"pass", r.pass}};
    if (!r.label.empty()) out["case"] = r.label;
    if (r.expected >= 0) out["expected"] = r.expected;
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

json to_json(const ObstructionReport& r) {
    return {{"d", r.d},
            {"squares_on_line", r.on_line},
            {"generic_squares", r.generic},
            {"trace_degree", r.trace},
            {"residue_length", r.residue_length},
            {"residue_space", r.residue_space},
            {"residue_dim", r.residue_dim},
            {"target", r.target},
            {"obstructed", r.obstructed}};
}

json to_json(const DoublePointReport& r) {
    json counts = json::array();
    json tangent = json::array();
    json triple = json::array();
    for (std::size_t i = 0; i < r.supports.size(); ++i) {
        const SupportCounts& c = r.supports[i];
        json row{{"support", i}};
        for (int t = 0; t < 4; ++t) row[to_string(static_cast<SingularityTag>(t))] = c.by_tag[static_cast<std::size_t>(t)];
        counts.push_back(row);
        tangent.push_back(c.tangent_drop);
        triple.push_back(c.triple_drop);
    }
    json out{{"s", r.s},
             {"d", r.d},
             {"dim", r.dim},
             {"expected", r.expected},
             {"samples", r.samples},
             {"seed", r.seed},
             {"prime", r.prime},
             {"counts", counts},
             {"degenerate_samples", r.degenerate_samples},
             {"drop_checks",
              {{"tangent_drop", r.tangent_drop_ok},
               {"triple_drop", r.triple_drop_ok},
               {"tangent_drop_per_support", tangent},
               {"triple_drop_per_support", triple}}},
             {"strict", r.strict},
             {"pass", r.pass}};
    if (!r.note.empty()) out["note"] = r.note;
    return out;
}

std::string certificates_json(const RunHeader& h, const std::vector<Certificate>& rows) {
    json arr = json::array();
    for (const Certificate& c : rows) arr.push_back(to_json(c));
    return json{{"header", to_json(h)}, {"certificates", arr}}.dump(2) + "\n";
}

std::string certificates_csv(const RunHeader& h, const std::vector<Certificate>& rows) {
    std::ostringstream os;
    os << "# prime=" << prime_list(h.primes) << " seed=" << h.seed << " trials=" << h.trials << "\n";
    os << "d,s,extra_length,expected,computed,status,seed,prime,trials\n";
    for (const Certificate& c : rows)
        os << c.d << ',' << c.s << ',' << c.extra_length << ',' << c.expected << ',' << c.computed << ','
           << to_string(c.status) << ',' << c.seed << ',' << prime_list(c.primes) << ',' << c.trials_used << "\n";
    return os.str();
}

std::string step_table(const ReductionReport& r) {
    std::ostringstream os;
    os << r.lemma;
    if (!r.label.empty()) os << ' ' << r.label;
    os << "  d=" << r.d << " s=" << r.s << "\n";
    os << "  line  deg  trace  len_before  len_after  dim_before  dim_after\n";
    for (const HoraceStep& st : r.steps) {
        os << "  " << st.line << (st.respecialized ? "*" : " ") << "    " << st.degree << "    " << st.trace_degree
           << "      " << st.length_before << "          " << st.length_after << "          " << st.dim_before
           << "          " << st.dim_after << (st.ok() ? "" : "   <- step check failed") << "\n";
    }
    os << "  lhs=" << r.lhs << " rhs=" << r.rhs << " (terminal degree " << r.terminal_degree << ")";
    if (r.expected >= 0) os << " expected=" << r.expected;
    os << "  " << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace superfat
