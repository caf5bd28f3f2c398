#include "mhx/runner.hpp"

#include <chrono>

#include "mhx/factorization.hpp"
#include "mhx/nilpotent.hpp"

namespace mhx {

using nlohmann::json;

namespace {

const Matrix& require_n(const InstanceDocument& doc) {
    if (!doc.n) throw InputError("command requires field N");
    return *doc.n;
}
const IncreasingFiltration& require_w(const InstanceDocument& doc) {
    if (!doc.weight) throw InputError("command requires field weight_filtration");
    return *doc.weight;
}
const DecreasingFiltration& require_f(const InstanceDocument& doc) {
    if (!doc.hodge) throw InputError("command requires field hodge_filtration");
    return *doc.hodge;
}

NilpotentOrbit orbit_of(const InstanceDocument& doc) {
    return NilpotentOrbit{require_n(doc), require_f(doc), require_w(doc)};
}

PeriodMapModel model_of(const InstanceDocument& doc) {
    return PeriodMapModel{orbit_of(doc), doc.gamma};
}

json bigrading_json(const MixedHodgeStructure& mhs) {
    json out = json::object();
    for (const auto& [type, space] : mhs.pieces()) {
        const std::string key =
            std::to_string(type.first) + "," + std::to_string(type.second);
        out[key] = to_json(space);
    }
    return out;
}

json orbit_check_json(const OrbitCheckReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        json e;
        e["y"] = s.y.get_str();
        e["is_mhs"] = s.is_mhs;
        if (!s.witness.empty()) e["witness"] = s.witness;
        json hn = json::object();
        for (const auto& [type, d] : s.hodge_numbers)
            hn[std::to_string(type.first) + "," + std::to_string(type.second)] = d;
        e["hodge_numbers"] = hn;
        samples.push_back(e);
    }
    return json{{"n_real", r.n_real},
                {"n_nilpotent", r.n_nilpotent},
                {"n_preserves_w", r.n_preserves_w},
                {"horizontal", r.horizontal},
                {"graded_dims_constant", r.graded_dims_constant},
                {"samples", samples},
                {"pass", r.pass()}};
}

json sl2_structure_json(const Sl2StructureReport& s) {
    json comps = json::object();
    for (const auto& [k, m] : s.components) comps[std::to_string(k)] = to_json(m);
    json hw = json::object();
    for (const auto& [k, ok] : s.highest_weight_ok) hw[std::to_string(k)] = ok;
    return json{{"components", comps},
                {"n0_equals_rho_nminus", s.n0_equals_rho_nminus},
                {"n_minus1_zero", s.n_minus1_zero},
                {"highest_weight_ok", hw},
                {"all_checks", s.all_checks()}};
}

json admissibility_json(const AdmissibilityReport& r) {
    json out;
    out["orbit_check"] = orbit_check_json(r.orbit_check);
    out["verdicts"] = json{{"admissible", r.admissible()},
                           {"limiting_filtration_exists", r.limiting_filtration_exists},
                           {"relative_weight_exists", r.relative_weight_exists},
                           {"is_mhs_pair", r.is_mhs_pair},
                           {"n_is_minus1minus1", r.n_is_minus1minus1},
                           {"w_by_sub_mhs", r.w_by_sub_mhs},
                           {"is_split", r.is_split},
                           {"graded_orbits_split", r.graded_orbits_split},
                           {"split_direct", r.split_verdict_direct()},
                           {"split_limit", r.split_verdict_limit()},
                           {"limit_constant", r.limit_constant},
                           {"limit_real", r.limit_real},
                           {"limit_grades_w", r.limit_grades_w},
                           {"y_infty_real", r.y_infty_real}};
    if (r.rel_w) out["filtrations"] = json{{"relative_weight", to_json(*r.rel_w)}};
    if (r.y_infty) out["gradings"] = json{{"Y_infinity", to_json(*r.y_infty)}};
    if (r.obstruction && !r.obstruction->is_zero())
        out["obstruction_0_minus1"] = to_json(*r.obstruction);
    if (r.sl2_structure) out["sl2_structure"] = sl2_structure_json(*r.sl2_structure);
    if (!r.witness.empty()) out["failure_witness"] = r.witness;
    return out;
}

json trace_json(const TraceReport& r) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        json e;
        e["y"] = s.y.get_str();
        e["valid"] = s.valid;
        e["flagged"] = s.flagged;
        if (!s.witness.empty()) e["witness"] = s.witness;
        if (s.grading) e["grading"] = to_json(*s.grading);
        if (!s.approx.empty()) {
            json m = json::array();
            for (const auto& row : s.approx) {
                json jr = json::array();
                for (const auto& x : row) jr.push_back(json::array({x.real(), x.imag()}));
                m.push_back(jr);
            }
            e["operator"] = m;
        }
        e["distance_to_prediction"] = s.distance;
        e["norm"] = s.norm;
        samples.push_back(e);
    }
    return json{{"mode", r.mode == TraceMode::Float ? "float" : "exact"},
                {"prediction", to_json(r.prediction)},
                {"samples", samples},
                {"bounded", r.bounded},
                {"converged", r.converged}};
}

ReportDocument dispatch(const std::string& command, const InstanceDocument& doc,
                        const RunOptions& options) {
    ReportDocument report;
    json& body = report.body;

    if (command == "bigrading") {
        std::string witness;
        auto mhs = MixedHodgeStructure::try_build(require_f(doc), require_w(doc), &witness);
        if (!mhs) {
            report.exit_code = 1;
            body["verdicts"] = json{{"is_mhs", false}};
            body["failure_witness"] = witness;
            return report;
        }
        body["verdicts"] = json{{"is_mhs", true}, {"split_real", mhs->is_split_real()}};
        body["bigrading"] = bigrading_json(*mhs);
        body["gradings"] = json{{"Y", to_json(mhs->grading())}};
        return report;
    }
    if (command == "wfilt") {
        body["filtrations"] = json{{"monodromy_weight", to_json(monodromy_weight(require_n(doc)))}};
        return report;
    }
    if (command == "relwfilt") {
        RelWeightResult r = relative_weight(require_n(doc), require_w(doc));
        body["verdicts"] = json{{"exists", r.exists}};
        if (r.exists)
            body["filtrations"] = json{{"relative_weight", to_json(*r.filtration)}};
        else {
            body["failure_witness"] = r.failure_witness;
            report.exit_code = 1;
        }
        return report;
    }
    if (command == "grading-y") {
        TripleCheck tc = check_triple(require_f(doc), require_w(doc), require_n(doc));
        body["verdicts"] = json{{"admissible_triple", tc.admissible()},
                                {"relative_weight_exists", tc.rel_weight_exists},
                                {"is_mhs_pair", tc.is_mhs_pair},
                                {"n_is_minus1minus1", tc.n_is_minus1_minus1},
                                {"w_by_sub_mhs", tc.w_by_sub_mhs}};
        if (!tc.admissible()) {
            report.exit_code = 1;
            body["failure_witness"] = tc.witness;
            return report;
        }
        const Grading y = y_of_triple(require_f(doc), require_w(doc), require_n(doc));
        body["gradings"] = json{{"Y", to_json(y)}};
        body["certificates"] = json{{"real", y.is_real()}};
        return report;
    }
    if (command == "factorize") {
        if (!doc.alpha) throw InputError("factorize requires field alpha");
        const MixedHodgeStructure mhs = MixedHodgeStructure::build(require_f(doc), require_w(doc));
        const FactorizationResult r = exp_triple_factorization(*doc.alpha, mhs);
        const auto defects = first_order_defect(r, *doc.alpha, mhs);
        body["factors"] = json{{"gamma", to_json(r.gamma)},
                               {"lambda", to_json(r.lambda)},
                               {"phi", to_json(r.phi)}};
        body["iterations"] = r.iterations;
        body["residual_degree"] = r.residual_degree;
        body["certificates"] =
            json{{"product_identity", true},  // verified inside exp_triple_factorization
                 {"memberships", true},
                 {"first_order_defects_in_lie2", true}};
        json d = json::array();
        for (const auto& m : defects) d.push_back(to_json(m));
        body["first_order_defects"] = d;
        return report;
    }
    if (command == "orbit-check") {
        const OrbitCheckReport r = check_orbit(orbit_of(doc), options.ys);
        body["orbit_check"] = orbit_check_json(r);
        body["verdicts"] = json{{"pass", r.pass()}};
        if (!r.pass()) report.exit_code = 1;
        return report;
    }
    if (command == "admissible") {
        const AdmissibilityReport r = doc.has_gamma
                                          ? unipotent_admissibility(model_of(doc))
                                          : split_admissibility(orbit_of(doc), options.ys);
        body = admissibility_json(r);
        if (!r.admissible()) report.exit_code = 1;
        return report;
    }
    if (command == "theorem4") {
        const Grading y = y_of_triple(require_f(doc), require_w(doc), require_n(doc));
        if (!y.is_real()) {
            report.exit_code = 1;
            body["verdicts"] = json{{"y_infty_real", false}};
            body["failure_witness"] = "limiting grading is not real";
            return report;
        }
        const Sl2StructureReport r = sl2_structure_report(orbit_of(doc), y);
        body["gradings"] = json{{"Y_infinity", to_json(y)}};
        body["sl2_structure"] = sl2_structure_json(r);
        body["verdicts"] = json{{"all_checks", r.all_checks()}};
        if (!r.all_checks()) report.exit_code = 1;
        return report;
    }
    if (command == "trace") {
        const TraceReport r = grading_trace(model_of(doc), options.ys, options.mode,
                                            options.s_exact);
        body["trace"] = trace_json(r);
        const bool ok = std::all_of(r.samples.begin(), r.samples.end(),
                                    [](const TraceSample& s) { return s.valid; });
        body["verdicts"] = json{{"all_samples_valid", ok}};
        if (!ok) report.exit_code = 1;
        return report;
    }
    throw InputError("unknown command '" + command + "'");
}

}  // namespace

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands = {
        "bigrading", "wfilt",      "relwfilt", "grading-y", "factorize",
        "orbit-check", "admissible", "theorem4", "trace",     "gen"};
    return commands;
}

ReportDocument run(const std::string& command, const InstanceDocument& doc,
                   const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    ReportDocument report;
    try {
        report = dispatch(command, doc, options);
    } catch (const InputError& e) {
        report.exit_code = 2;
        report.body["error"] = e.what();
    } catch (const InternalError& e) {
        report.exit_code = 3;
        report.body["error"] = e.what();
    } catch (const std::exception& e) {
        report.exit_code = 3;
        report.body["error"] = e.what();
    }
    report.body["command"] = command;
    report.body["instance"] = doc.name;
    report.body["exit_code"] = report.exit_code;
    json ys = json::array();
    for (const Rational& y : options.ys) ys.push_back(y.get_str());
    report.body["options"] =
        json{{"ys", ys},
             {"mode", options.mode == TraceMode::Float ? "float" : "exact"},
             {"seed", options.seed}};
    report.body["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count();
    return report;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        if (!tok.empty()) {
            const Scalar s = parse_scalar(tok);
            if (!s.is_real()) throw InputError("expected a real rational in list: " + tok);
            out.push_back(s.re);
        }
        pos = comma + 1;
    }
    if (out.empty()) throw InputError("empty rational list");
    return out;
}

GeneratorSpec parse_generator_spec(const std::string& weights, const std::string& content,
                                   const std::string& extensions, unsigned long seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    std::vector<int> ws;
    for (const Rational& r : parse_rational_list(weights)) {
        if (r.get_den() != 1) throw InputError("weights must be integers");
        ws.push_back(static_cast<int>(r.get_num().get_si()));
    }
    for (int k : ws) spec.content[k] = {GeneratorIrrep{0, 1, 0}};

    if (!content.empty()) {
        spec.content.clear();
        std::size_t pos = 0;
        while (pos < content.size()) {
            std::size_t semi = content.find(';', pos);
            if (semi == std::string::npos) semi = content.size();
            const std::string group = content.substr(pos, semi - pos);
            const std::size_t colon = group.find(':');
            if (colon == std::string::npos)
                throw InputError("content group '" + group + "' must be weight:entries");
            const int k = std::stoi(group.substr(0, colon));
            std::vector<GeneratorIrrep> irreps;
            std::size_t ep = colon + 1;
            while (ep < group.size()) {
                std::size_t comma = group.find(',', ep);
                if (comma == std::string::npos) comma = group.size();
                std::string entry = group.substr(ep, comma - ep);
                GeneratorIrrep ir;
                const std::size_t xpos = entry.find('x');
                const std::size_t tpos = entry.find('t');
                const std::size_t dend = std::min(xpos, tpos);
                ir.d = std::stoi(entry.substr(0, dend));
                if (xpos != std::string::npos)
                    ir.count = std::stoi(entry.substr(
                        xpos + 1, (tpos != std::string::npos && tpos > xpos ? tpos - xpos - 1
                                                                            : std::string::npos)));
                if (tpos != std::string::npos) ir.twist = std::stoi(entry.substr(tpos + 1));
                irreps.push_back(ir);
                ep = comma + 1;
            }
            if (irreps.empty()) throw InputError("content group '" + group + "' is empty");
            spec.content[k] = irreps;
            pos = semi + 1;
        }
    }

    if (!extensions.empty()) {
        std::size_t pos = 0;
        while (pos < extensions.size()) {
            std::size_t comma = extensions.find(',', pos);
            if (comma == std::string::npos) comma = extensions.size();
            const std::string entry = extensions.substr(pos, comma - pos);
            const std::size_t colon = entry.find(':');
            if (colon == std::string::npos)
                throw InputError("extension entry '" + entry + "' must be degree:count");
            spec.extensions[std::stoi(entry.substr(0, colon))] =
                std::stoi(entry.substr(colon + 1));
            pos = comma + 1;
        }
    } else if (!spec.content.empty()) {
        const int span = spec.content.rbegin()->first - spec.content.begin()->first;
        if (span >= 2) spec.extensions[2] = 1;
    }
    return spec;
}

ReportDocument run_generate(const GeneratorSpec& spec) {
    ReportDocument report;
    try {
        const NilpotentOrbit orbit = generate_split_orbit(spec);
        InstanceDocument doc;
        doc.name = "generated-split-orbit-seed" + std::to_string(spec.seed);
        doc.coordinate = "limits taken along (ds)_0 for the disk coordinate s";
        doc.dimension = orbit.w.ambient();
        doc.weight = orbit.w;
        doc.hodge = orbit.f;
        doc.n = orbit.n;
        report.body = emit_instance(doc);
    } catch (const InputError& e) {
        report.exit_code = 2;
        report.body["error"] = e.what();
    } catch (const std::exception& e) {
        report.exit_code = 3;
        report.body["error"] = e.what();
    }
    return report;
}

}  // namespace mhx
