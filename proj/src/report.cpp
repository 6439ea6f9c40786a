#include "gbent/report.hpp"

#include <algorithm>
#include <set>

#include "gbent/transform.hpp"

namespace gbent {

using nlohmann::json;

json table_json(const GbfTable& f) {
    json values = json::array();
    for (std::uint32_t x = 0; x < f.size(); ++x) values.push_back(f.value(x));
    return json{{"n", f.vars()}, {"k", f.level()}, {"values", std::move(values)}};
}

GbfTable table_from_json(const json& j) {
    try {
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        std::vector<std::uint8_t> values;
        for (const auto& v : j.at("values")) {
            const int x = v.get<int>();
            if (x < 0 || x > 255) throw ParseError("table value out of range");
            values.push_back(static_cast<std::uint8_t>(x));
        }
        return GbfTable(n, k, std::move(values));
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad table JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json plateau_json(const PlateauResult& p) {
    if (p.kind == PlateauResult::Kind::plateaued) {
        return json{{"kind", "plateaued"}, {"s", p.s}};
    }
    json j{{"kind", "not_plateaued"}};
    if (p.witness) j["witness_u"] = *p.witness;
    return j;
}

json boolean_class_json(const BooleanClass& c) {
    json j;
    switch (c.kind) {
        case BooleanClass::Kind::bent:
            j["kind"] = "bent";
            j["s"] = 0;
            break;
        case BooleanClass::Kind::plateaued:
            j["kind"] = "plateaued";
            j["s"] = c.s;
            break;
        case BooleanClass::Kind::not_plateaued:
            j["kind"] = "not_plateaued";
            if (c.witness) j["witness_u"] = *c.witness;
            break;
    }
    if (c.kind != BooleanClass::Kind::not_plateaued) j["semibent"] = c.is_semibent();
    return j;
}

json verdict_json(const TheoremVerdict& v) {
    json j{{"holds", v.holds}};
    if (v.failure) {
        j["failure"] = json{{"u", v.failure->u}, {"observed", v.failure->observed}};
    }
    return j;
}

namespace {

json spectrum_json(const GwhtSpectrum& s, bool with_approx) {
    json rows = json::array();
    for (std::uint32_t u = 0; u < s.size(); ++u) {
        json row = json::array();
        for (const std::int64_t c : s.row(u)) row.push_back(c);
        rows.push_back(std::move(row));
    }
    json j{{"coeffs", std::move(rows)}};
    if (with_approx) {
        json approx = json::array();
        for (std::uint32_t u = 0; u < s.size(); ++u) {
            const auto z = s.value(u).approx();
            approx.push_back(json{{"re", z.real()}, {"im", z.imag()}});
        }
        j["approx"] = std::move(approx);
    }
    return j;
}

json classification_json(const GbfTable& f, const GwhtSpectrum& spectrum) {
    json j;
    const bool gbent = is_gbent(spectrum);
    j["gbent"] = gbent;
    j["plateau"] = plateau_json(plateau_level(spectrum));
    if (gbent) {
        const DualResult d = regular_dual(f);
        switch (d.kind) {
            case DualResult::Kind::regular: {
                j["regular"] = json{{"kind", "regular"}};
                json dual = json::array();
                for (std::uint32_t u = 0; u < d.dual->size(); ++u) {
                    dual.push_back(d.dual->value(u));
                }
                j["dual"] = std::move(dual);
                break;
            }
            case DualResult::Kind::not_representable:
                j["regular"] = json{{"kind", "not_representable"}};
                break;
            case DualResult::Kind::not_regular:
                j["regular"] = json{{"kind", "not_regular"}, {"witness_u", *d.witness}};
                break;
        }
    } else {
        j["regular"] = json{{"kind", "not_applicable"}};
    }
    return j;
}

json theorems_json(const GbfTable& f) {
    json j = json::object();
    switch (f.level()) {
        case 2:
            j["check_k2"] = verdict_json(check_k2(f));
            break;
        case 3:
            j["check_k3"] = verdict_json(check_k3(f));
            break;
        case 4:
            j["check_k4_gbent"] = verdict_json(check_k4_gbent(f));
            j["check_k4_z4"] = verdict_json(check_k4_z4(f));
            j["check_k4_gsemibent"] = verdict_json(check_k4_gsemibent(f));
            break;
        default:
            break;
    }
    if (f.level() >= 2) {
        j["check_inductive"] = verdict_json(check_inductive(f));
        if (f.vars() % 2 == 0) {
            j["components_bent_necessary"] = verdict_json(components_bent_necessary(f));
        }
    }
    return j;
}

}  // namespace

json analyze_report(const GbfTable& f, bool gray_only, bool with_approx) {
    json report;
    report["input"] = table_json(f);
    json gray;
    if (f.level() >= 2) {
        const BoolTable image = gray_map(f);
        const IntSpectrum ws = wht(image);
        const BooleanClass cls = boolean_class(ws);
        gray["vars"] = image.vars();
        gray["class"] = boolean_class_json(cls);
        std::int64_t max_abs = 0;
        std::set<std::int64_t> distinct;
        for (std::uint32_t u = 0; u < ws.size(); ++u) {
            distinct.insert(ws[u]);
            max_abs = std::max<std::int64_t>(max_abs, std::abs(ws[u]));
        }
        gray["distinct_values"] = json(distinct);
        gray["max_abs"] = max_abs;
        report["gray"] = std::move(gray);
    }
    if (gray_only) return report;

    const GwhtSpectrum spectrum = gwht(f);
    report["classification"] = classification_json(f, spectrum);
    report["spectrum"] = spectrum_json(spectrum, with_approx);
    report["theorems"] = theorems_json(f);
    return report;
}

json search_record(const GbfTable& f) {
    json rec = table_json(f);
    const GwhtSpectrum spectrum = gwht(f);
    rec["classification"] = classification_json(f, spectrum);
    json verdicts = json::object();
    switch (f.level()) {
        case 2:
            verdicts["check_k2"] = check_k2(f).holds;
            break;
        case 3:
            verdicts["check_k3"] = check_k3(f).holds;
            break;
        case 4:
            verdicts["check_k4_gbent"] = check_k4_gbent(f).holds;
            verdicts["check_k4_z4"] = check_k4_z4(f).holds;
            verdicts["check_k4_gsemibent"] = check_k4_gsemibent(f).holds;
            break;
        default:
            break;
    }
    if (f.level() >= 2) {
        verdicts["check_inductive"] = check_inductive(f).holds;
        if (f.vars() % 2 == 0) {
            verdicts["components_bent_necessary"] = components_bent_necessary(f).holds;
        }
    }
    rec["theorem_verdicts"] = std::move(verdicts);
    if (rec["classification"].contains("dual")) {
        rec["dual"] = rec["classification"]["dual"];
    }
    return rec;
}

}  // namespace gbent
