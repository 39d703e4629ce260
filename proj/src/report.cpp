#include "affsurf/report.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "affsurf/sampling.hpp"

namespace affsurf {

namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

const char* sig_name(SigClass s) {
    switch (s) {
        case SigClass::plus: return "plus";
        case SigClass::minus: return "minus";
        default: return "zero";
    }
}

const char* region_name(RegionPos r) {
    switch (r) {
        case RegionPos::interior: return "interior";
        case RegionPos::boundary: return "boundary";
        default: return "cusp";
    }
}

const char* which_name(RegionWhich w) {
    switch (w) {
        case RegionWhich::C_minus: return "C_minus";
        case RegionWhich::C_zero: return "C_zero";
        default: return "C_plus";
    }
}

const char* position_name(RegionPosition p) {
    switch (p) {
        case RegionPosition::interior: return "interior";
        case RegionPosition::on_sigma_plus: return "on_sigma_plus";
        case RegionPosition::on_sigma_minus: return "on_sigma_minus";
        case RegionPosition::cusp: return "cusp";
        default: return "outside_all";
    }
}

const char* variant_name(CanonicalVariant v) {
    switch (v) {
        case CanonicalVariant::def_plus: return "def_plus";
        case CanonicalVariant::def_minus: return "def_minus";
        case CanonicalVariant::indef1: return "indef1";
        case CanonicalVariant::indef2: return "indef2";
        default: return "indef_exceptional";
    }
}

const char* chart_name(ChartName c) {
    switch (c) {
        case ChartName::o0_plus: return "o0_plus";
        case ChartName::o0_minus: return "o0_minus";
        case ChartName::o1_plus: return "o1_plus";
        case ChartName::o1_minus: return "o1_minus";
        case ChartName::o3_plus: return "o3_plus";
        default: return "o3_minus";
    }
}

const char* membership_name(MembershipB m) {
    switch (m) {
        case MembershipB::flat: return "flat";
        case MembershipB::kappa_four: return "kappa_four";
        default: return "z23b";
    }
}

json mat_json(const Mat2& m) {
    return json::array({json::array({m.m11, m.m12}), json::array({m.m21, m.m22})});
}

json witness_json(const LinearMap2& w) {
    return json::array({json::array({w.a11, w.a12}), json::array({w.a21, w.a22})});
}

json gauge_json(const GaugeTransform& g) {
    return json{{"b", g.b}, {"c", g.c}, {"flip", g.flip}};
}

json tolerances_json(const Tolerances& tol) {
    return json{{"zero", tol.zero_tol}, {"invariant", tol.invariant_tol}, {"rank", tol.rank_tol}};
}

// Orientation "minus" is realized by an orientation-reversing coordinate
// change up front; everything downstream then treats the record as "plus".
ChristoffelA effective_a(const InputRecord& rec) {
    const ChristoffelA g = ChristoffelA::from_array(rec.gamma);
    if (!rec.orientation_minus) return g;
    return pullback_a(g, LinearMap2::diagonal(1.0, -1.0));
}

TypeBSymbol effective_b(const InputRecord& rec) {
    const TypeBSymbol c = TypeBSymbol::from_array(rec.gamma);
    return rec.orientation_minus ? flip_b(c) : c;
}

json canonical_json(const CanonicalFormA& c) {
    return json{{"variant", variant_name(c.variant)},
                {"x", c.x},
                {"y", c.y},
                {"witness", witness_json(c.witness)},
                {"form", c.form.to_array()}};
}

json chart_json(const ChartAssignment& c) {
    return json{{"name", chart_name(c.chart)},
                {"z", c.z},
                {"gauge", gauge_json(c.gauge)},
                {"normalized", c.normalized.to_array()}};
}

json tensors_json(const InvariantTensorsB& t) {
    json rho4 = json::array();
    for (int a = 0; a < 2; ++a) {
        json plane = json::array();
        for (int b = 0; b < 2; ++b)
            plane.push_back(json::array({t.rho4[a][b][0], t.rho4[a][b][1]}));
        rho4.push_back(plane);
    }
    return json{
        {"rho0", {{"coeff", t.rho0}, {"x1_power", InvariantTensorsB::x1_power_rho0}}},
        {"rho1", {{"coeff", mat_json(t.rho1)}, {"x1_power", InvariantTensorsB::x1_power_rho1}}},
        {"rho2", {{"coeff", mat_json(t.rho2)}, {"x1_power", InvariantTensorsB::x1_power_rho2}}},
        {"rho3", {{"coeff", mat_json(t.rho3)}, {"x1_power", InvariantTensorsB::x1_power_rho3}}},
        {"rho4", {{"coeff", rho4}, {"x1_power", InvariantTensorsB::x1_power_rho4}}}};
}

json record_header(const InputRecord& rec) {
    return json{{"id", rec.id},
                {"family", rec.family == Family::A ? "A" : "B"},
                {"gamma", rec.gamma},
                {"orientation", rec.orientation_minus ? "minus" : "plus"}};
}

json error_record(const std::string& id, const std::string& message) {
    json out;
    if (!id.empty()) out["id"] = id;
    out["error"] = message;
    return out;
}

} // namespace

ParseResult parse_input_record(const std::string& line) {
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) return std::string("invalid JSON");
    if (!j.is_object()) return std::string("record must be a JSON object");
    InputRecord rec;
    if (!j.contains("id") || !j["id"].is_string())
        return std::string("missing or non-string 'id'");
    rec.id = j["id"].get<std::string>();
    if (rec.id.empty()) return std::string("empty 'id'");
    if (!j.contains("family") || !j["family"].is_string())
        return std::string("missing or non-string 'family'");
    const std::string fam = j["family"].get<std::string>();
    if (fam == "A")
        rec.family = Family::A;
    else if (fam == "B")
        rec.family = Family::B;
    else
        return std::string("'family' must be \"A\" or \"B\"");
    if (!j.contains("gamma") || !j["gamma"].is_array() || j["gamma"].size() != 6)
        return std::string("'gamma' must be an array of 6 numbers");
    for (int i = 0; i < 6; ++i) {
        const auto& v = j["gamma"][i];
        if (!v.is_number()) return std::string("'gamma' must be an array of 6 numbers");
        rec.gamma[i] = v.get<double>();
        if (!std::isfinite(rec.gamma[i])) return std::string("'gamma' entries must be finite");
    }
    if (j.contains("orientation")) {
        if (!j["orientation"].is_string()) return std::string("'orientation' must be a string");
        const std::string o = j["orientation"].get<std::string>();
        if (o == "minus")
            rec.orientation_minus = true;
        else if (o != "plus")
            return std::string("'orientation' must be \"plus\" or \"minus\"");
    }
    return rec;
}

nlohmann::ordered_json input_record_json(const InputRecord& rec) { return record_header(rec); }

nlohmann::ordered_json classification_record(const InputRecord& rec, const Tolerances& tol) {
    json out = record_header(rec);
    if (rec.family == Family::A) {
        const ChristoffelA g = effective_a(rec);
        const ClassificationA cls = classify_a(g, tol);
        switch (cls.rank) {
            case RankClass::flat:
                out["class"] = "flat";
                break;
            case RankClass::rank1: {
                out["class"] = "rank1";
                out["invariants"] = json{{"alpha", cls.rank1->alpha},
                                         {"epsilon", cls.rank1->epsilon}};
                out["symmetric"] = cls.rank1->is_symmetric;
                out["also_type_b"] = cls.rank1->also_type_b;
                break;
            }
            case RankClass::rank2: {
                const Rank2Invariants& inv = *cls.rank2;
                out["class"] = "rank2";
                out["sig"] = sig_name(inv.sig);
                out["invariants"] =
                    json{{"psi3", inv.psi3}, {"Psi3", inv.Psi3}, {"chi", inv.chi}};
                out["region"] = region_name(inv.region);
                const RegionTag tag = region_classify(inv.psi3, inv.Psi3, tol);
                out["region_tag"] =
                    json{{"which", which_name(tag.which)}, {"position", position_name(tag.position)}};
                out["isotropy"] = json::array({inv.iso_plus, inv.iso_full});
                if (cls.canonical)
                    out["canonical"] = canonical_json(*cls.canonical);
                else
                    out["canonical"] = nullptr;  // reduction defeated by conditioning
                break;
            }
        }
    } else {
        const TypeBSymbol c = effective_b(rec);
        const MembershipB m = membership_b(c, tol);
        out["membership"] = membership_name(m);
        const RicciData rho = ricci_b(c, tol);
        out["ricci"] = mat_json(rho.matrix());
        out["tensors"] = tensors_json(invariant_tensors_b(c));
        if (m == MembershipB::kappa_four) out["kappa"] = "four";
        if (m == MembershipB::z23b) {
            out["kappa"] = "two_or_three";
            const bool amp = amphichiral_b(c, tol);
            out["amphichiral"] = amp;
            out["isotropy"] = json::array({1, amp ? 2 : 1});
            out["chart"] = chart_json(chart_assign(c, tol));
        }
    }
    out["tool"] = tool_version();
    out["tolerances"] = tolerances_json(tol);
    return out;
}

nlohmann::ordered_json canonical_record(const InputRecord& rec, const Tolerances& tol) {
    json out = record_header(rec);
    if (rec.family == Family::A) {
        const ChristoffelA g = effective_a(rec);
        const RicciData rd = ricci_type_a(g, tol);
        if (rd.rank != 2) {
            out["class"] = rd.rank == 0 ? "flat" : "rank1";
        } else if (rd.signature == SignatureTag::indefinite) {
            out["canonical"] = canonical_json(canonicalize_indefinite(g, tol));
        } else {
            out["canonical"] = canonical_json(canonicalize_definite(g, tol));
        }
    } else {
        const TypeBSymbol c = effective_b(rec);
        const MembershipB m = membership_b(c, tol);
        out["membership"] = membership_name(m);
        if (m == MembershipB::z23b) out["chart"] = chart_json(chart_assign(c, tol));
    }
    out["tool"] = tool_version();
    out["tolerances"] = tolerances_json(tol);
    return out;
}

nlohmann::ordered_json equivalence_record(const InputRecord& a, const InputRecord& b,
                                          bool oriented, const Tolerances& tol) {
    json out;
    out["id1"] = a.id;
    out["id2"] = b.id;
    out["family"] = a.family == Family::A ? "A" : "B";
    out["oriented"] = oriented;
    if (a.family == Family::A) {
        const ChristoffelA g1 = effective_a(a), g2 = effective_a(b);
        const bool eq = equivalent_a(g1, g2, oriented, tol);
        out["verdict"] = eq ? "equivalent" : "inequivalent";
        out["witness"] = nullptr;
        if (eq) {
            if (const auto w = linear_witness_a(g1, g2, tol)) out["witness"] = witness_json(*w);
        }
    } else {
        const TypeBSymbol c1 = effective_b(a), c2 = effective_b(b);
        const auto w = equivalent_b(c1, c2, oriented, tol);
        out["verdict"] = w ? "equivalent" : "inequivalent";
        out["witness"] = w ? gauge_json(*w) : json(nullptr);
    }
    return out;
}

namespace {

std::string classify_csv_row(const json& r) {
    auto get = [&](const char* key) -> std::string {
        if (!r.contains(key)) return "";
        const auto& v = r[key];
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_float()) return fmt_double(v.get<double>());
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
        return "";
    };
    std::string sig = get("sig"), alpha, epsilon, psi, Psi, chi_s;
    if (r.contains("invariants")) {
        const auto& inv = r["invariants"];
        if (inv.contains("psi3")) psi = fmt_double(inv["psi3"].get<double>());
        if (inv.contains("Psi3")) Psi = fmt_double(inv["Psi3"].get<double>());
        if (inv.contains("chi")) chi_s = fmt_double(inv["chi"].get<double>());
        if (inv.contains("alpha")) alpha = fmt_double(inv["alpha"].get<double>());
        if (inv.contains("epsilon")) epsilon = std::to_string(inv["epsilon"].get<int>());
    }
    std::string iso_plus, iso_full;
    if (r.contains("isotropy")) {
        iso_plus = std::to_string(r["isotropy"][0].get<int>());
        iso_full = std::to_string(r["isotropy"][1].get<int>());
    }
    std::string chart;
    if (r.contains("chart")) chart = r["chart"]["name"].get<std::string>();
    std::string cells[15] = {csv_escape(get("id")),
                             get("family"),
                             r.contains("error") ? "error" : get("class"),
                             get("membership"),
                             sig,
                             psi,
                             Psi,
                             chi_s,
                             alpha,
                             epsilon,
                             get("region"),
                             iso_plus,
                             iso_full,
                             get("amphichiral"),
                             chart};
    std::string row;
    for (int i = 0; i < 15; ++i) {
        if (i) row += ',';
        row += cells[i];
    }
    return row;
}

constexpr const char* kClassifyCsvHeader =
    "id,family,class,membership,sig,psi3,Psi3,chi,alpha,epsilon,region,iso_plus,iso_full,"
    "amphichiral,chart";

int run_stream(std::istream& in, std::ostream& out, const std::string& format,
               const std::function<json(const InputRecord&)>& make) {
    bool any_error = false;
    std::set<std::string> seen;
    if (format == "csv") out << kClassifyCsvHeader << "\n";
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json rec;
        const ParseResult parsed = parse_input_record(line);
        if (std::holds_alternative<std::string>(parsed)) {
            any_error = true;
            rec = error_record("", std::get<std::string>(parsed));
        } else {
            const InputRecord& r = std::get<InputRecord>(parsed);
            if (!seen.insert(r.id).second) {
                any_error = true;
                rec = error_record(r.id, "duplicate id in batch");
            } else {
                try {
                    rec = make(r);
                } catch (const std::exception& e) {
                    any_error = true;
                    rec = error_record(r.id, e.what());
                }
            }
        }
        if (format == "csv")
            out << classify_csv_row(rec) << "\n";
        else
            out << rec.dump() << "\n";
    }
    return any_error ? 1 : 0;
}

} // namespace

int run_classify(std::istream& in, std::ostream& out, const Tolerances& tol,
                 const std::string& format) {
    return run_stream(in, out, format,
                      [&](const InputRecord& r) { return classification_record(r, tol); });
}

int run_canon(std::istream& in, std::ostream& out, const Tolerances& tol,
              const std::string& format) {
    return run_stream(in, out, format,
                      [&](const InputRecord& r) { return canonical_record(r, tol); });
}

int run_equiv(std::istream& in, std::ostream& out, bool oriented, const Tolerances& tol,
              const std::string& format) {
    std::vector<InputRecord> records;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const ParseResult parsed = parse_input_record(line);
        if (std::holds_alternative<std::string>(parsed)) {
            out << error_record("", std::get<std::string>(parsed)).dump() << "\n";
            return 1;
        }
        records.push_back(std::get<InputRecord>(parsed));
    }
    if (records.size() != 2) {
        out << error_record("", "equiv requires exactly two records").dump() << "\n";
        return 2;
    }
    if (records[0].family != records[1].family) {
        out << error_record("", "equiv requires records of the same family").dump() << "\n";
        return 2;
    }
    try {
        const json rec = equivalence_record(records[0], records[1], oriented, tol);
        if (format == "csv") {
            out << "id1,id2,verdict\n"
                << csv_escape(records[0].id) << ',' << csv_escape(records[1].id) << ','
                << rec["verdict"].get<std::string>() << "\n";
        } else {
            out << rec.dump() << "\n";
        }
    } catch (const std::exception& e) {
        out << error_record(records[0].id, e.what()).dump() << "\n";
        return 1;
    }
    return 0;
}

int run_sample(std::ostream& out, Family family, std::optional<SigClass> sig, int n,
               std::uint64_t seed, const std::string& format) {
    Rng rng(seed);
    if (format == "csv") out << "id,family,g111,g112,g121,g122,g221,g222\n";
    for (int i = 0; i < n; ++i) {
        InputRecord rec;
        char id[64];
        if (family == Family::A) {
            const SigClass s = sig.value_or(SigClass::plus);
            rec.family = Family::A;
            rec.gamma = sample_type_a_rank2(s, rng).to_array();
            std::snprintf(id, sizeof(id), "A-%s-%06d", sig_name(s), i);
        } else {
            rec.family = Family::B;
            rec.gamma = sample_z23b(rng).to_array();
            std::snprintf(id, sizeof(id), "B-%06d", i);
        }
        rec.id = id;
        if (format == "csv") {
            out << csv_escape(rec.id) << ',' << (family == Family::A ? "A" : "B");
            for (double v : rec.gamma) out << ',' << fmt_double(v);
            out << "\n";
        } else {
            out << input_record_json(rec).dump() << "\n";
        }
    }
    return 0;
}

} // namespace affsurf
