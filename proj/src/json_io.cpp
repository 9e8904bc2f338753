#include "splift/json_io.hpp"

#include <fstream>

namespace splift {

using nlohmann::json;

namespace {

std::string kind_name(DatumKind k) {
    switch (k) {
        case DatumKind::elliptic: return "elliptic";
        case DatumKind::sym2: return "sym2";
        case DatumKind::trivial_char: return "trivial";
        case DatumKind::siegel_spin: return "siegel2";
        case DatumKind::siegel_std: return "siegel_std";
        default: return "custom";
    }
}

json ap_to_json(const std::map<long, Int>& ap) {
    json out = json::object();
    for (const auto& [p, a] : ap) {
        if (a.fits_slong_p())
            out[std::to_string(p)] = a.get_si();
        else
            out[std::to_string(p)] = a.get_str();
    }
    return out;
}

std::map<long, Int> ap_from_json(const json& j) {
    std::map<long, Int> ap;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long p = std::stol(it.key());
        if (it->is_number_integer())
            ap[p] = Int(static_cast<long>(it->get<long long>()));
        else if (it->is_string())
            ap[p] = Int(it->get<std::string>());
        else
            throw Error(errc::parse, "a_p values must be integers or decimal strings");
    }
    return ap;
}

Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (...) {
        throw Error(errc::parse, "cannot parse rational '" + s + "'");
    }
}

} // namespace

json datum_to_json(const CuspidalDatum& tau) {
    json j;
    j["kind"] = kind_name(tau.kind);
    if (tau.kind != DatumKind::trivial_char) j["name"] = tau.name;
    switch (tau.kind) {
        case DatumKind::elliptic:
        case DatumKind::sym2:
            j["weight"] = tau.weight;
            break;
        case DatumKind::siegel_spin:
        case DatumKind::siegel_std:
            j["k"] = tau.siegel_k;
            j["j"] = tau.siegel_j;
            break;
        case DatumKind::custom: {
            j["m"] = tau.gl_rank;
            j["type"] = tau.type == SelfDualType::orthogonal ? "orthogonal" : "symplectic";
            json arch = json::array();
            for (const auto& c : tau.arch.constituents()) {
                if (c.is_two_dim())
                    arch.push_back(json{{"rho", c.alpha()}});
                else
                    arch.push_back(c.kind() == ArchConstituent::Kind::sign ? "sgn" : "1");
            }
            j["arch"] = arch;
            break;
        }
        default:
            break;
    }
    if (tau.hecke && !tau.hecke->ap.empty()) j["ap"] = ap_to_json(tau.hecke->ap);
    if (!tau.spin_traces.empty()) {
        json st = json::object();
        for (const auto& [p, traces] : tau.spin_traces) {
            json arr = json::array();
            for (const auto& t : traces)
                arr.push_back(json::array({t.a.get_str(), t.b.get_str()}));
            st[std::to_string(p)] = arr;
        }
        j["spin_satake"] = st;
    }
    return j;
}

CuspidalDatum datum_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw Error(errc::parse, "datum must be an object with a 'kind' field");
    std::string kind = j["kind"].get<std::string>();
    CuspidalDatum tau;
    if (kind == "elliptic") {
        tau = elliptic_datum(j.value("name", std::string("f") + std::to_string(j.value("weight", 0))),
                             j.value("weight", 0));
    } else if (kind == "sym2") {
        tau = sym2_datum(j.value("name", std::string("sym2_g") + std::to_string(j.value("weight", 0))),
                         j.value("weight", 0));
    } else if (kind == "trivial") {
        tau = trivial_datum();
    } else if (kind == "siegel_spin" || kind == "siegel2") {
        tau = siegel_spin_datum(j.value("name", "f_siegel"), j.value("k", 0), j.value("j", 0));
    } else if (kind == "siegel_std") {
        tau = siegel_std_datum(j.value("name", "g_siegel"), j.value("k", 0), j.value("j", 0));
    } else if (kind == "custom") {
        tau.kind = DatumKind::custom;
        tau.name = j.value("name", "custom");
        tau.gl_rank = j.value("m", 0);
        std::string type = j.value("type", "orthogonal");
        tau.type = type == "symplectic" ? SelfDualType::symplectic : SelfDualType::orthogonal;
        std::vector<ArchConstituent> cs;
        for (const auto& a : j.value("arch", json::array())) {
            if (a.is_object() && a.contains("rho"))
                cs.push_back(ArchConstituent::rho(a["rho"].get<int>()));
            else if (a.is_string() && a.get<std::string>() == "sgn")
                cs.push_back(ArchConstituent::sign());
            else if (a.is_string() && a.get<std::string>() == "1")
                cs.push_back(ArchConstituent::trivial());
            else
                throw Error(errc::parse, "arch entries must be {\"rho\": a}, \"sgn\" or \"1\"");
        }
        tau.arch = ArchRep(std::move(cs));
    } else {
        throw Error(errc::parse, "unknown datum kind '" + kind + "'");
    }
    if (j.contains("ap")) {
        HeckeData h;
        h.name = tau.name;
        h.weight = tau.weight;
        h.ap = ap_from_json(j["ap"]);
        tau.hecke = std::move(h);
    }
    if (j.contains("spin_satake")) {
        for (auto it = j["spin_satake"].begin(); it != j["spin_satake"].end(); ++it) {
            std::vector<QuadValue> traces;
            for (const auto& t : *it) {
                if (!t.is_array() || t.size() != 2)
                    throw Error(errc::parse, "spin trace must be a [rational, rational] pair");
                traces.push_back({rat_from_string(t[0].get<std::string>()),
                                  rat_from_string(t[1].get<std::string>())});
            }
            tau.spin_traces[std::stol(it.key())] = std::move(traces);
        }
    }
    return tau;
}

json param_to_json(const GlobalAParameter& psi) {
    json j;
    json cs = json::array();
    for (const auto& c : psi.constituents()) {
        json e = datum_to_json(c.tau);
        e["d"] = c.d;
        cs.push_back(e);
    }
    j["constituents"] = cs;
    return j;
}

GlobalAParameter param_from_json(const json& j) {
    if (!j.is_object() || !j.contains("constituents") || !j["constituents"].is_array())
        throw Error(errc::parse, "parameter must be an object with a 'constituents' array");
    std::vector<Constituent> cs;
    for (const auto& e : j["constituents"]) {
        Constituent c;
        c.tau = datum_from_json(e);
        c.d = e.value("d", 1);
        cs.push_back(std::move(c));
    }
    return GlobalAParameter(std::move(cs));
}

GlobalAParameter load_parameter(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(errc::parse, path + ": " + e.what());
    }
    return param_from_json(j);
}

json lift_result_to_json(const LiftResult& r, const LiftSpec& spec) {
    json j;
    j["mode"] = mode_name(r.mode);
    j["d"] = r.d;
    j["f"] = datum_to_json(r.f);
    j["g"] = param_to_json(spec.g);
    j["g_weights"] = spec.g_weights;
    j["automorphic"] = r.automorphic;
    j["multiplicity"] = r.multiplicity;
    j["cuspidal"] = r.cuspidal;
    j["rank"] = static_cast<int>(r.k_prime.size());
    j["k_prime"] = r.k_prime;
    j["factorization"] = r.factorization.str();
    j["base"] = r.factorization.base;
    j["spin"] = r.factorization.spin;
    j["shifts2"] = r.factorization.shifts2;
    j["psi"] = param_to_json(r.psi_lift);
    return j;
}

LiftSpec lift_spec_from_json(const json& j) {
    LiftSpec s;
    std::string mode = j.value("mode", "a");
    if (mode == "a")
        s.mode = LiftMode::a;
    else if (mode == "b")
        s.mode = LiftMode::b;
    else if (mode == "general")
        s.mode = LiftMode::general;
    else
        throw Error(errc::parse, "unknown lift mode '" + mode + "'");
    if (!j.contains("f")) throw Error(errc::parse, "lift JSON needs an 'f' datum");
    s.f = datum_from_json(j["f"]);
    if (j.contains("g"))
        s.g = param_from_json(j["g"]);
    else
        s.g = GlobalAParameter({{trivial_datum(), 1}});
    if (j.contains("g_weights")) s.g_weights = j["g_weights"].get<std::vector<int>>();
    s.d = j.value("d", 1);
    return s;
}

json hecke_to_json(const HeckeData& h) {
    json j;
    j["name"] = h.name;
    j["kind"] = "elliptic";
    j["weight"] = h.weight;
    j["ap"] = ap_to_json(h.ap);
    return j;
}

} // namespace splift
