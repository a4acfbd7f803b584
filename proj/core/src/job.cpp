#include "gsp4/job.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <thread>

namespace gsp4 {

using nlohmann::json;

const char* to_string(Task t) {
    switch (t) {
        case Task::Classify: return "classify";
        case Task::Weight: return "weight";
        case Task::Generic: return "generic";
        case Task::Lift: return "lift";
        case Task::Classical: return "classical";
        case Task::Pdcris: return "pdcris";
        case Task::FlCheck: return "fl-check";
    }
    return "?";
}

Task task_from_string(const std::string& name) {
    if (name == "classify") return Task::Classify;
    if (name == "weight") return Task::Weight;
    if (name == "generic") return Task::Generic;
    if (name == "lift") return Task::Lift;
    if (name == "classical") return Task::Classical;
    if (name == "pdcris") return Task::Pdcris;
    if (name == "fl-check" || name == "flcheck") return Task::FlCheck;
    throw validation_error("unknown task '" + name +
                           "'; tasks: classify, weight, generic, lift, classical, pdcris, fl-check");
}

JobSpec::JobSpec(Prime p, LocalRepresentation r, std::set<Task> t, SearchWindow w)
    : prime(p), rep(std::move(r)), tasks(std::move(t)), window(w) {
    if (tasks.empty()) throw validation_error("a job needs at least one task");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

ExtensionFlag flag_from_string(const std::string& s, int line) {
    if (s == "peu" || s == "peu-ramifiee") return ExtensionFlag::PeuRamifiee;
    if (s == "tres" || s == "tres-ramifiee") return ExtensionFlag::TresRamifiee;
    if (s == "unramified") return ExtensionFlag::Unramified;
    if (s == "ramified") return ExtensionFlag::Ramified;
    throw parse_error("unknown flag '" + s + "'; flags: unramified, peu, tres, ramified", line);
}

// Parsed key -> (value, line). The text and JSON front ends both fill this.
struct Document {
    std::map<std::string, std::pair<std::string, int>> fields;
    std::vector<std::int64_t> digits;
    bool has_digits = false;

    bool has(const std::string& k) const { return fields.count(k) != 0; }
    std::string str(const std::string& k) const { return fields.at(k).first; }
    int line(const std::string& k) const { return fields.at(k).second; }

    std::int64_t integer(const std::string& k) const {
        const auto& [v, ln] = fields.at(k);
        try {
            std::size_t pos = 0;
            std::int64_t r = std::stoll(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw parse_error("field '" + k + "' expects an integer, got '" + v + "'", ln);
        }
    }
};

const char* kKnownKeys[] = {"prime", "type",  "x",     "y",    "w",      "delta", "a",
                            "b",     "c",     "d",     "e",    "exponent", "digits", "twist",
                            "tau0",  "tau1",  "corner", "tasks", "format", "window"};

Document parse_text_document(const std::string& text) {
    Document doc;
    std::stringstream ss(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(ss, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected 'key = value'", line_no);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw parse_error("expected 'key = value'", line_no);
        bool known = false;
        for (const char* k : kKnownKeys)
            if (key == k) { known = true; break; }
        if (key.rfind("window.", 0) == 0) known = true;
        if (!known) throw parse_error("unknown field '" + key + "'", line_no);
        if (doc.has(key)) throw parse_error("duplicate field '" + key + "'", line_no);
        if (key == "digits") {
            std::string v = value;
            v.erase(std::remove_if(v.begin(), v.end(),
                                   [](char c) { return c == '[' || c == ']'; }),
                    v.end());
            for (const auto& part : split(v, ','))
                try {
                    doc.digits.push_back(std::stoll(part));
                } catch (const std::exception&) {
                    throw parse_error("digits expects integers", line_no);
                }
            doc.has_digits = true;
        }
        doc.fields[key] = {value, line_no};
    }
    return doc;
}

Document parse_json_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("JSON input must be an object");
    Document doc;
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : kKnownKeys)
            if (key == k) { known = true; break; }
        if (key.rfind("window.", 0) == 0) known = true;
        if (!known) throw parse_error("unknown field '" + key + "'");
        if (key == "digits") {
            if (!value.is_array()) throw parse_error("digits expects an array");
            for (const auto& d : value) doc.digits.push_back(d.get<std::int64_t>());
            doc.has_digits = true;
            doc.fields[key] = {"[]", 0};
        } else if (value.is_string()) {
            doc.fields[key] = {value.get<std::string>(), 0};
        } else if (value.is_number_integer()) {
            doc.fields[key] = {std::to_string(value.get<std::int64_t>()), 0};
        } else if (value.is_array() && key == "tasks") {
            std::string joined;
            for (const auto& t : value) {
                if (!joined.empty()) joined += ",";
                joined += t.get<std::string>();
            }
            doc.fields[key] = {joined, 0};
        } else {
            throw parse_error("field '" + key + "' has an unsupported JSON type");
        }
    }
    return doc;
}

std::int64_t derive_w(const Document& doc, const std::string& type) {
    if (doc.has("w") && doc.has("delta"))
        throw parse_error("give either w or delta, not both", doc.line("delta"));
    if (doc.has("w")) return doc.integer("w");
    if (doc.has("delta")) {
        if (!doc.has("x") || !doc.has("y"))
            throw parse_error("delta requires x and y");
        return doc.integer("x") + doc.integer("y") - 3 + 2 * doc.integer("delta");
    }
    throw parse_error("type '" + type + "' requires w (or delta)");
}

LocalRepresentation build_rep(Prime p, const Document& doc) {
    if (!doc.has("type")) throw parse_error("missing field 'type'");
    const std::string type = doc.str("type");
    const std::string twist = doc.has("twist") ? doc.str("twist") : std::string{};

    auto need = [&](const char* key) {
        if (!doc.has(key))
            throw parse_error("type '" + type + "' requires field '" + key + "'");
        return doc.integer(key);
    };

    if (type == "borel") {
        ExtensionFlag tau0 = doc.has("tau0") ? flag_from_string(doc.str("tau0"), doc.line("tau0"))
                                             : ExtensionFlag::PeuRamifiee;
        ExtensionFlag tau1 = doc.has("tau1") ? flag_from_string(doc.str("tau1"), doc.line("tau1"))
                                             : ExtensionFlag::PeuRamifiee;
        return LocalRepresentation::borel(p, need("x"), need("y"), derive_w(doc, type), tau0, tau1,
                                          twist);
    }
    if (type == "siegel") {
        std::optional<ExtensionFlag> corner;
        if (doc.has("corner")) corner = flag_from_string(doc.str("corner"), doc.line("corner"));
        return LocalRepresentation::siegel(p, need("x"), need("y"), derive_w(doc, type), corner,
                                           twist);
    }
    if (type == "klingen")
        return LocalRepresentation::klingen(p, need("x"), need("y"), need("w"));
    if (type == "endoscopic")
        return LocalRepresentation::endoscopic(p, need("a"), need("b"), need("c"), need("d"),
                                               need("e"));
    if (type == "irreducible") {
        if (doc.has_digits) {
            if (doc.digits.size() != 4)
                throw parse_error("irreducible digits expect exactly 4 entries");
            std::int64_t v = 0, pw = 1;
            for (std::int64_t d : doc.digits) {
                v += d * pw;
                pw *= p.value();
            }
            return LocalRepresentation::irreducible(p, v, twist);
        }
        if (!doc.has("exponent"))
            throw parse_error("type 'irreducible' requires 'exponent' or 'digits'");
        return LocalRepresentation::irreducible(p, doc.integer("exponent"), twist);
    }
    throw parse_error("unknown type '" + type +
                      "'; types: borel, siegel, klingen, endoscopic, irreducible");
}

}  // namespace

SearchWindow parse_window_spec(const std::string& spec, SearchWindow base) {
    if (spec.empty()) return base;
    for (const auto& part : split(spec, ',')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw parse_error("window expects key=lo:hi entries, got '" + part + "'");
        const std::string key = trim(part.substr(0, eq));
        const std::string range = trim(part.substr(eq + 1));
        std::int64_t lo, hi;
        try {
            if (auto colon = range.find(':'); colon != std::string::npos) {
                lo = std::stoll(range.substr(0, colon));
                hi = std::stoll(range.substr(colon + 1));
            } else {
                lo = -1;  // keep the base minimum
                hi = std::stoll(range);
            }
        } catch (const std::exception&) {
            throw parse_error("window range '" + range + "' is not numeric");
        }
        auto apply = [&](std::int64_t& mn, std::int64_t& mx) {
            if (lo >= 0) mn = lo;
            mx = hi;
        };
        if (key == "a") apply(base.a_min, base.a_max);
        else if (key == "b") apply(base.b_min, base.b_max);
        else if (key == "c") apply(base.c_min, base.c_max);
        else if (key == "w") apply(base.w_min, base.w_max);
        else throw parse_error("unknown window key '" + key + "'");
    }
    return base;
}

JobSpec parse_job(const std::string& document, const std::vector<std::string>& task_override,
                  std::optional<std::int64_t> prime_override, const std::string& window_override) {
    std::string body = trim(document);
    Document doc = (!body.empty() && body.front() == '{') ? parse_json_document(body)
                                                          : parse_text_document(document);

    std::optional<std::int64_t> p_doc;
    if (doc.has("prime")) p_doc = doc.integer("prime");
    if (p_doc && prime_override && *p_doc != *prime_override)
        throw validation_error("prime on the command line (" + std::to_string(*prime_override) +
                               ") disagrees with the input file (" + std::to_string(*p_doc) + ")");
    if (!p_doc && !prime_override) throw parse_error("missing field 'prime'");
    Prime p(prime_override ? *prime_override : *p_doc);

    LocalRepresentation rep = build_rep(p, doc);

    std::set<Task> tasks;
    if (!task_override.empty()) {
        for (const auto& t : task_override) tasks.insert(task_from_string(t));
    } else if (doc.has("tasks")) {
        for (const auto& t : split(doc.str("tasks"), ',')) tasks.insert(task_from_string(t));
    } else {
        tasks = {Task::Classify, Task::Weight, Task::Generic, Task::Lift, Task::Classical};
    }

    SearchWindow window = SearchWindow::defaults(p);
    for (const char* key : {"a", "b", "c", "w"}) {
        const std::string field = std::string("window.") + key;
        if (doc.has(field))
            window = parse_window_spec(std::string(key) + "=" + doc.str(field), window);
    }
    window = parse_window_spec(window_override, window);

    return JobSpec(p, std::move(rep), std::move(tasks), window);
}

namespace {

json window_json(const SearchWindow& w) {
    return json{{"a", {w.a_min, w.a_max}},
                {"b", {w.b_min, w.b_max}},
                {"c", {w.c_min, w.c_max}},
                {"w", {w.w_min, w.w_max}}};
}

json input_echo(const LocalRepresentation& rep) {
    json j;
    j["prime"] = rep.prime().value();
    j["type"] = to_string(classify(rep));
    if (const auto* bd = std::get_if<BorelData>(&rep.data())) {
        j["x"] = bd->x;
        j["y"] = bd->y;
        j["w"] = bd->w;
        j["tau0"] = to_string(bd->tau0);
        j["tau1"] = to_string(bd->tau1);
        if (!bd->twist.empty()) j["twist"] = bd->twist;
    } else if (const auto* sd = std::get_if<SiegelData>(&rep.data())) {
        j["x"] = sd->x;
        j["y"] = sd->y;
        j["w"] = sd->w;
        if (sd->corner) j["corner"] = to_string(*sd->corner);
        if (!sd->twist.empty()) j["twist"] = sd->twist;
    } else if (const auto* kd = std::get_if<KlingenData>(&rep.data())) {
        j["x"] = kd->x;
        j["y"] = kd->y;
        j["w"] = kd->w;
    } else if (const auto* ed = std::get_if<EndoscopicData>(&rep.data())) {
        j["a"] = ed->a;
        j["b"] = ed->b;
        j["c"] = ed->c;
        j["d"] = ed->d;
        j["e"] = ed->e;
        if (ed->swapped) j["blocks_reordered"] = true;
    } else if (const auto* id = std::get_if<IrreducibleData>(&rep.data())) {
        j["exponent"] = id->exponent;
        if (!id->twist.empty()) j["twist"] = id->twist;
    }
    return j;
}

json plan_json(const LocalRepresentation& rep, const LiftPlan& plan) {
    json j;
    j["ht"] = plan.ht;
    j["certificate"] = to_string(plan.certificate);
    j["regular"] = plan.regular;
    j["ledger"] = plan.ledger;
    j["reduction_consistent"] = plan.reduction(rep.prime()) == inertia_pattern(rep);
    return j;
}

json label_json(const SerreWeightLabel& l) {
    return json{{"a", l.a}, {"b", l.b}, {"c", l.c}};
}

}  // namespace

json run(const JobSpec& job) {
    json report;
    report["schema"] = "gsp4-weights/1";
    report["input"] = input_echo(job.rep);
    json& results = report["results"];
    results = json::object();

    const auto lambda = associated_weight(job.rep);

    for (Task task : job.tasks) {
        switch (task) {
            case Task::Classify:
                results["classify"] = {{"type", to_string(classify(job.rep))}};
                break;
            case Task::Weight: {
                json j;
                j["present"] = lambda.has_value();
                if (lambda) {
                    j["a"] = lambda->a;
                    j["b"] = lambda->b;
                    j["c"] = lambda->c;
                } else {
                    j["reason"] = "no restricted representative in the lowest alcoves";
                }
                results["weight"] = j;
                break;
            }
            case Task::Generic: {
                json j;
                j["applicable"] = lambda.has_value();
                if (lambda) {
                    j["generic"] = is_generic(job.rep, *lambda);
                    j["alcove"] = to_string(shifted_alcove(job.rep.prime(), *lambda));
                    j["m1"] = lambda->a + 2;
                    j["m2"] = lambda->b + 1;
                }
                results["generic"] = j;
                break;
            }
            case Task::Lift:
                results["lift"] = plan_json(job.rep, lift_gsp4(job.rep));
                break;
            case Task::Classical: {
                json j;
                try {
                    const ClassicalWeight cw = classical_weight(job.rep, job.window);
                    j["found"] = true;
                    j["k1"] = cw.k1;
                    j["k2"] = cw.k2;
                    j["w"] = cw.w;
                    j["witness"] = {{"a", cw.witness.a},
                                    {"b", cw.witness.b},
                                    {"c", cw.witness.c},
                                    {"ht", cw.witness.witness.ht}};
                } catch (const window_too_small& e) {
                    j["found"] = false;
                    j["reason"] = e.what();
                }
                j["method"] = "constructive-lift-search";
                j["window"] = window_json(job.window);
                results["classical"] = j;
                break;
            }
            case Task::Pdcris: {
                const WeightSetReport wr = enumerate_pdcris_weights(job.rep, job.window);
                json entries = json::array();
                for (const auto& e : wr.entries) {
                    json ej = label_json(e.label);
                    ej["m1"] = e.m1;
                    ej["m2"] = e.m2;
                    ej["w_param"] = e.wprime;
                    ej["ht"] = e.ht;
                    ej["alcove"] = to_string(e.alcove);
                    ej["case"] = e.case_tag;
                    entries.push_back(ej);
                }
                results["pdcris"] = {{"weights", entries},
                                     {"method", "constructive-lift-search"},
                                     {"window", window_json(job.window)}};
                break;
            }
            case Task::FlCheck: {
                json j;
                try {
                    j["obstructed"] = fl_obstruction_check(job.rep);
                    j["applicable"] = true;
                } catch (const unsupported_weight& e) {
                    j["applicable"] = false;
                    j["reason"] = e.what();
                }
                results["fl_check"] = j;
                break;
            }
        }
    }
    return report;
}

std::string render_text(const json& report) {
    std::ostringstream os;
    if (report.contains("input")) {
        os << "input:";
        for (const auto& [k, v] : report["input"].items())
            os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
        os << "\n";
    }
    if (!report.contains("results")) return os.str();
    const json& results = report["results"];
    for (const auto& [task, body] : results.items()) {
        os << task << ":";
        if (body.is_object()) {
            for (const auto& [k, v] : body.items()) {
                if (k == "weights" && v.is_array()) {
                    os << " " << v.size() << " weight(s)";
                    continue;
                }
                os << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
            }
        }
        os << "\n";
    }
    if (report.contains("summary")) os << "summary: " << report["summary"].dump() << "\n";
    return os.str();
}

namespace {

std::vector<LocalRepresentation> instances_of_type(Prime p, RepType type) {
    const std::int64_t m = p.residue_modulus();
    std::vector<LocalRepresentation> out;

    auto default_flag = [&](std::int64_t residue) {
        return mod_reduce(residue, m) == 0 ? ExtensionFlag::Unramified : ExtensionFlag::PeuRamifiee;
    };
    auto lift_w = [&](std::int64_t x, std::int64_t y, std::int64_t delta) {
        std::int64_t w = x + y - 3 + 2 * delta;
        while (w < 0) w += 2 * m;
        return w;
    };

    switch (type) {
        case RepType::BorelOrdinary:
            for (std::int64_t x = 0; x < m; ++x)
                for (std::int64_t y = 0; y < m; ++y)
                    for (std::int64_t d = 0; d < m; ++d)
                        out.push_back(LocalRepresentation::borel(p, x, y, lift_w(x, y, d),
                                                                 default_flag(y),
                                                                 default_flag(x - y)));
            break;
        case RepType::SiegelOrdinary:
            for (std::int64_t x = 1; x <= p.value() - 1; ++x)
                for (std::int64_t y = 0; y < x; ++y)
                    for (std::int64_t d = 0; d < m; ++d)
                        out.push_back(LocalRepresentation::siegel(p, x, y, lift_w(x, y, d)));
            break;
        case RepType::KlingenOrdinary:
            for (std::int64_t x = 1; x <= p.value() - 1; ++x)
                for (std::int64_t y = 0; y < x; ++y)
                    for (std::int64_t w = 0; w <= p.value() - 2; ++w) {
                        if (mod_reduce(x + y - (w + 1), 2) != 0) continue;
                        out.push_back(LocalRepresentation::klingen(p, x, y, w));
                    }
            break;
        case RepType::Endoscopic:
            for (std::int64_t a = 1; a <= p.value() - 1; ++a)
                for (std::int64_t b = 0; b < a; ++b)
                    for (std::int64_t c = 1; c <= p.value() - 1; ++c)
                        for (std::int64_t d = 0; d < c; ++d) {
                            if (a + b < c + d) continue;  // normalized order only
                            if (mod_reduce(a + b - c - d, m) != 0) continue;
                            for (std::int64_t e = 0; e < m; ++e)
                                try {
                                    out.push_back(LocalRepresentation::endoscopic(p, a, b, c, d, e));
                                } catch (const validation_error&) {
                                    // twist-isomorphic pair; not an endoscopic datum
                                }
                        }
            break;
        case RepType::Irreducible: {
            const std::int64_t m4 = p.level_modulus(4);
            for (std::int64_t a = 0; a < m4; ++a) {
                if (a % (p.value() + 1) != 0) continue;
                if (a % (p.value() * p.value() + 1) == 0) continue;
                // one representative per Frobenius orbit
                bool minimal = true;
                std::int64_t cur = a;
                for (int i = 1; i < 4 && minimal; ++i) {
                    cur = mod_reduce(cur * p.value(), m4);
                    if (cur < a) minimal = false;
                }
                if (minimal) out.push_back(LocalRepresentation::irreducible(p, a));
            }
            break;
        }
    }
    return out;
}

}  // namespace

EnumerationResult enumerate_mode(Prime p, RepType type, const SearchWindow& window, int jobs) {
    const std::vector<LocalRepresentation> instances = instances_of_type(p, type);
    std::vector<json> reports(instances.size());

    const std::set<Task> tasks = {Task::Classify, Task::Weight, Task::Generic,
                                  Task::Lift,     Task::Classical, Task::FlCheck};

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < instances.size(); i += stride)
            reports[i] = run(JobSpec(p, instances[i], tasks, window));
    };

    if (jobs <= 1) {
        work(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& th : pool) th.join();
    }

    std::int64_t generic = 0, non_generic = 0, with_weight = 0, applicable = 0, obstructed = 0;
    for (const auto& r : reports) {
        const json& res = r["results"];
        if (res["weight"]["present"].get<bool>()) ++with_weight;
        const json& gen = res["generic"];
        if (gen["applicable"].get<bool>() && gen["generic"].get<bool>())
            ++generic;
        else
            ++non_generic;
        if (res["fl_check"]["applicable"].get<bool>()) {
            ++applicable;
            if (res["fl_check"]["obstructed"].get<bool>()) ++obstructed;
        }
    }

    EnumerationResult result;
    result.reports = std::move(reports);
    result.summary = {{"type", to_string(type)},
                      {"instances", instances.size()},
                      {"with_weight", with_weight},
                      {"generic", generic},
                      {"non_generic", non_generic},
                      {"fl_applicable", applicable},
                      {"fl_obstructed", obstructed},
                      {"fl_counterexamples", applicable - obstructed}};
    return result;
}

}  // namespace gsp4
