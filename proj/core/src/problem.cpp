#include "powerlog/problem.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "powerlog/parser.hpp"

namespace powerlog {

using nlohmann::json;

void SectorSpec::validate() const {
    if (!(radius > 0))
        throw eval_error("sector radius must be positive");
    if (!(opening_deg > 0) || !(opening_deg < 360))
        throw eval_error("sector opening must lie in (0, 360) degrees");
    double lo = bisector_deg - opening_deg / 2;
    double hi = bisector_deg + opening_deg / 2;
    if (lo <= -180.0 || hi >= 180.0)
        throw eval_error("sector crosses the branch cut at arg = +-180 degrees");
    if (samples < 1)
        throw eval_error("sector sample count must be positive");
}

PowerLogSeries Problem::seed_series(int upto) const {
    PowerLogSeries s(kTruncExact);
    for (const auto &[k, r] : seed) {
        if (k > upto)
            break;
        s.set_coeff(k, r);
    }
    return s;
}

namespace {

Problem from_json(const json &doc, const std::string &origin) {
    auto fail = [&](const std::string &msg) -> error {
        return error("problem file " + origin + ": " + msg);
    };
    if (!doc.is_object())
        throw fail("top level must be a JSON object");
    for (const char *key : {"order", "equation", "seed"})
        if (!doc.contains(key))
            throw fail(std::string("missing field '") + key + "'");

    Problem p;
    if (!doc["order"].is_number_integer())
        throw fail("'order' must be an integer");
    int order = doc["order"].get<int>();
    if (order < 0)
        throw fail("'order' must be nonnegative");

    if (!doc["equation"].is_string())
        throw fail("'equation' must be a string");
    p.ode = parse_ode(doc["equation"].get<std::string>(), order);

    if (!doc["seed"].is_array())
        throw fail("'seed' must be an array");
    std::set<int> seen;
    for (const auto &entry : doc["seed"]) {
        if (!entry.is_object() || !entry.contains("k") || !entry.contains("value"))
            throw fail("each seed entry needs 'k' and 'value'");
        int k = entry["k"].get<int>();
        if (k < 0)
            throw fail("seed exponent k must be nonnegative");
        if (!seen.insert(k).second)
            throw fail("duplicate seed exponent k = " + std::to_string(k));
        p.seed_covered = std::max(p.seed_covered, k);
        RatFunc v = parse_ratfunc(entry["value"].get<std::string>());
        if (!v.is_zero())
            p.seed.emplace_back(k, v);
    }
    std::sort(p.seed.begin(), p.seed.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });

    if (doc.contains("expand_to"))
        p.options.expand_to = doc["expand_to"].get<int>();
    if (p.options.expand_to < 0)
        throw fail("'expand_to' must be nonnegative");
    if (doc.contains("check_depth"))
        p.options.check_depth = doc["check_depth"].get<int>();
    if (doc.contains("precision_bits")) {
        p.options.precision_bits = doc["precision_bits"].get<long>();
        if (p.options.precision_bits < 16)
            throw fail("'precision_bits' must be at least 16");
    }
    if (doc.contains("sector")) {
        const auto &s = doc["sector"];
        if (s.contains("radius"))
            p.options.sector.radius = s["radius"].get<double>();
        if (s.contains("opening_deg"))
            p.options.sector.opening_deg = s["opening_deg"].get<double>();
        if (s.contains("bisector_deg"))
            p.options.sector.bisector_deg = s["bisector_deg"].get<double>();
        if (s.contains("samples"))
            p.options.sector.samples = s["samples"].get<int>();
        p.options.sector.validate();
    }
    return p;
}

} // namespace

Problem problem_from_json_text(const std::string &text, const std::string &origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw error("problem file " + origin + ": invalid JSON: " + e.what());
    }
    return from_json(doc, origin);
}

Problem load_problem(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw error("cannot open problem file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return problem_from_json_text(buf.str(), path);
}

} // namespace powerlog
