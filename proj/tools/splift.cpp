#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splift/ajpackets.hpp"
#include "splift/json_io.hpp"
#include "splift/lfunctions.hpp"
#include "splift/lifting.hpp"
#include "splift/params.hpp"
#include "splift/qexp.hpp"

using nlohmann::json;
using namespace splift;

namespace {

int emit(const json& j, bool human, const std::string& text, int code) {
    if (human)
        std::cout << text;
    else
        std::cout << j.dump() << "\n";
    return code;
}

int emit_error(const Error& e, bool human) {
    if (human) {
        std::cout << "error [" << e.code() << "]: " << e.what() << "\n";
    } else {
        json j;
        j["error"] = {{"code", e.code()}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
    }
    return 1;
}

json character_table(const GlobalAParameter& psi, const SignCharacter& eps) {
    json gens = json::array();
    for (size_t i = 0; i < psi.rank(); ++i) {
        const auto& c = psi.constituents()[i];
        gens.push_back(json{{"tau", c.tau.name}, {"d", c.d}, {"epsilon", eps.on_generator(i)}});
    }
    return gens;
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

int run_validate(const std::string& path, bool human) {
    auto psi = load_parameter(path);
    auto violations = validate(psi);
    json j;
    j["parameter"] = psi.str();
    j["valid"] = violations.empty();
    j["violations"] = violations;
    std::string text = psi.str() + (violations.empty() ? ": valid\n" : ": invalid\n");
    for (const auto& v : violations) text += "  - " + v + "\n";
    return emit(j, human, text, violations.empty() ? 0 : 1);
}

int run_epsilon(const std::string& path, const std::string& method, bool human) {
    auto psi = load_parameter(path);
    auto violations = validate(psi);
    if (!violations.empty())
        throw Error(errc::domain, "invalid parameter: " + violations.front());
    json j;
    j["parameter"] = psi.str();
    j["rank"] = psi.rank();
    std::string text = psi.str() + "\n";
    bool agree = true;
    auto describe = [&](const char* label, const SignCharacter& eps) {
        text += std::string(label) + ":\n";
        for (size_t i = 0; i < psi.rank(); ++i) {
            const auto& c = psi.constituents()[i];
            text += "  eps(alpha_{" + c.tau.name + "[" + std::to_string(c.d) + "]}) = " +
                    sign_str(eps.on_generator(i)) + "\n";
        }
    };
    if (method == "direct" || method == "both") {
        auto eps = epsilon_direct(psi);
        j["direct"] = character_table(psi, eps);
        j["z_value"] = eps(component_group(psi).z());
        describe("direct", eps);
    }
    if (method == "adjoint" || method == "both") {
        auto eps = epsilon_adjoint_character(psi);
        j["adjoint"] = character_table(psi, eps);
        describe("adjoint", eps);
    }
    if (method == "both") {
        auto eps = epsilon_direct(psi);
        for (std::uint32_t el : component_group(psi).elements())
            if (eps(el) != epsilon_adjoint(psi, el)) agree = false;
        j["methods_agree"] = agree;
        text += agree ? "methods agree on all elements\n" : "METHODS DISAGREE\n";
    }
    return emit(j, human, text, agree ? 0 : 1);
}

int run_packet(const std::string& path, bool human) {
    auto psi = load_parameter(path);
    AJParameter aj = require_adams_johnson(localize_infinity(psi));
    json j;
    json blocks = json::array();
    for (const auto& b : aj.blocks()) blocks.push_back(json{{"alpha", b.alpha}, {"d", b.d}});
    j["blocks"] = blocks;
    j["tail"] = {{"delta", aj.tail_delta()}, {"d", aj.tail_d()}};
    j["rank"] = aj.group_rank();
    json members = json::array();
    for (const auto& w : packet_members(aj)) {
        json m;
        json sig = json::array();
        for (auto [p, q] : w.signature) sig.push_back(json::array({p, q}));
        m["signature"] = sig;
        auto chi = member_character(aj, w);
        std::vector<int> vals;
        for (size_t i = 0; i < chi.rank(); ++i) vals.push_back(chi.on_generator(i));
        m["character"] = vals;
        members.push_back(m);
    }
    j["members"] = members;
    j["size"] = members.size();
    std::string text;
    for (const auto& b : aj.blocks())
        text += "rho_" + std::to_string(b.alpha) + " (x) S_" + std::to_string(b.d) + "  ";
    text += std::string(aj.tail_delta() ? "sgn" : "1") + " (x) S_" + std::to_string(aj.tail_d());
    text += "\n" + std::to_string(members.size()) + " members:\n";
    for (const auto& m : j["members"]) {
        text += "  signature";
        for (const auto& pq : m["signature"])
            text += " (" + std::to_string(pq[0].get<int>()) + "," + std::to_string(pq[1].get<int>()) + ")";
        text += "  character";
        for (const auto& v : m["character"]) text += " " + sign_str(v.get<int>());
        text += "\n";
    }
    return emit(j, human, text, 0);
}

// embed oracle eigenvalues wherever the underlying weight has a
// one-dimensional cusp space, so emitted lifts verify against independent data
void attach_oracle_data(LiftSpec& spec) {
    auto attach = [](CuspidalDatum& tau) {
        if (tau.kind != DatumKind::elliptic && tau.kind != DatumKind::sym2) return;
        if (tau.hecke) return;
        switch (tau.weight) {
            case 12: case 16: case 18: case 20: case 22: case 26:
                tau.hecke = eigenform_hecke_data(tau.name, tau.weight, 29);
                break;
            default:
                break;
        }
    };
    attach(spec.f);
    std::vector<Constituent> cs = spec.g.constituents();
    for (auto& c : cs) attach(c.tau);
    spec.g = GlobalAParameter(std::move(cs));
}

LiftSpec lift_spec_from_flags(const std::string& mode, int k, int n0, int m, int fweight, int fk,
                              int fj, int d, const std::string& param_path,
                              const std::vector<int>& gweights) {
    if (mode == "miyawaki1") return miyawaki1_spec(k);
    if (mode == "miyawaki2") return miyawaki2_spec(k);
    if (mode == "ibukiyama1") return ibukiyama1_spec(n0, m);
    if (mode == "ibukiyama2") return ibukiyama2_spec(n0, m);
    if (mode == "ikeda") return ikeda_spec(fweight, d);

    LiftSpec s;
    if (mode == "a")
        s.mode = LiftMode::a;
    else if (mode == "b")
        s.mode = LiftMode::b;
    else if (mode == "general")
        s.mode = LiftMode::general;
    else
        throw Error(errc::parse, "unknown mode '" + mode + "'");
    s.d = d;
    if (fweight > 0) {
        s.f = elliptic_datum("f" + std::to_string(fweight), fweight);
    } else if (fk > 0) {
        s.f = siegel_spin_datum("f_k" + std::to_string(fk) + "_j" + std::to_string(fj), fk, fj);
    } else {
        throw Error(errc::parse, "mode " + mode + " needs --fweight or --fk/--fj");
    }
    if (!param_path.empty()) {
        s.g = load_parameter(param_path);
        s.g_weights = gweights;
    } else {
        s.g = GlobalAParameter({{trivial_datum(), 1}});
    }
    return s;
}

int run_lift(LiftSpec spec, bool human) {
    attach_oracle_data(spec);
    LiftResult r = evaluate_lift(spec);
    std::string text = r.psi_lift.str() + "\n";
    text += "  automorphic: " + std::string(r.automorphic ? "yes" : "no") +
            " (multiplicity " + std::to_string(r.multiplicity) + ")\n";
    text += "  weight: (";
    for (size_t i = 0; i < r.k_prime.size(); ++i)
        text += (i ? "," : "") + std::to_string(r.k_prime[i]);
    text += ")\n  factorization: " + r.factorization.str() + "\n";
    return emit(lift_result_to_json(r, spec), human, text, r.automorphic ? 0 : 1);
}

int run_euler(const std::string& path, long p, bool human) {
    auto psi = load_parameter(path);
    auto sat = satake_unramified(p, local_factors(psi));
    auto factor = std_euler_factor(sat, bindings_for(psi, p));
    json j;
    j["parameter"] = psi.str();
    j["prime"] = p;
    j["degree"] = factor.degree();
    json coeffs = json::array();
    for (const auto& c : factor.coefficients) coeffs.push_back(c.str());
    j["coefficients"] = coeffs;
    j["factor"] = factor.str();
    std::string text = psi.str() + " at p = " + std::to_string(p) + ":\n  " + factor.str() + "\n";
    return emit(j, human, text, 0);
}

int run_verify(const std::string& lift_path, const std::string& f_path, long p, bool human) {
    std::ifstream in(lift_path);
    if (!in) throw Error(errc::parse, "cannot open " + lift_path);
    json lj;
    try {
        in >> lj;
    } catch (const json::exception& e) {
        throw Error(errc::parse, lift_path + ": " + e.what());
    }
    LiftSpec spec = lift_spec_from_json(lj);
    LiftResult r = evaluate_lift(spec);
    HeckeData fdata = load_eigenform_data(f_path);
    auto g_satake = satake_unramified(p, local_factors(spec.g));
    auto res = verify_factorization(r, fdata, g_satake, p);
    json j;
    j["prime"] = p;
    j["factorization"] = r.factorization.str();
    j["match"] = res.match;
    if (!res.match) j["first_diff"] = res.detail;
    std::string text = r.factorization.str() + "\n  at p = " + std::to_string(p) + ": " +
                       (res.match ? "exact match" : "MISMATCH\n  " + res.detail) + "\n";
    return emit(j, human, text, res.match ? 0 : 1);
}

int run_smo(int n, int k1, int k2, bool human) {
    bool ex = smo_exception(n, k1, k2);
    json j;
    j["n"] = n;
    j["k1"] = k1;
    j["k2"] = k2;
    j["exception"] = ex;
    std::string text = "n = " + std::to_string(n) + ", weights {" + std::to_string(k1) + ", " +
                       std::to_string(k2) + "}: " +
                       (ex ? "coincidence exception\n" : "no exception\n");
    return emit(j, human, text, ex ? 0 : 1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for level-one symplectic parameters, packets and liftings"};
    app.require_subcommand(1);
    bool human = false;
    app.add_flag("--human", human, "plain-text output instead of JSON");

    std::string param_path, method = "direct", lift_path, f_path, mode;
    long prime = 2;
    int n = 0, k1 = 0, k2 = 0, k = 0, n0 = 0, m = 0, fweight = 0, fk = 0, fj = 0, d = 1;
    std::vector<int> gweights;

    auto* c_validate = app.add_subcommand("validate", "check a parameter file");
    c_validate->add_option("--param", param_path, "parameter JSON")->required();

    auto* c_epsilon = app.add_subcommand("epsilon", "sign character of a parameter");
    c_epsilon->add_option("--param", param_path, "parameter JSON")->required();
    c_epsilon->add_option("--method", method, "direct|adjoint|both")
        ->check(CLI::IsMember({"direct", "adjoint", "both"}));

    auto* c_packet = app.add_subcommand("packet", "archimedean packet members and characters");
    c_packet->add_option("--param", param_path, "parameter JSON")->required();

    auto* c_lift = app.add_subcommand("lift", "evaluate a lifting");
    c_lift->add_option("--mode", mode, "a|b|general|miyawaki1|miyawaki2|ibukiyama1|ibukiyama2|ikeda")
        ->required();
    c_lift->add_option("--k", k, "scalar weight (miyawaki modes)");
    c_lift->add_option("--n0", n0, "half the target rank (ibukiyama modes)");
    c_lift->add_option("--m", m, "target scalar weight (ibukiyama modes)");
    c_lift->add_option("--fweight", fweight, "modular weight of the elliptic input");
    c_lift->add_option("--fk", fk, "degree-2 input: det power k");
    c_lift->add_option("--fj", fj, "degree-2 input: Sym(j)");
    c_lift->add_option("--d", d, "SL2 half-multiplicity d");
    c_lift->add_option("--param", param_path, "source parameter JSON (default: rank-0 source)");
    c_lift->add_option("--gweights", gweights, "certified source weight vector")->delimiter(',');

    auto* c_euler = app.add_subcommand("euler", "standard Euler factor of the unramified member");
    c_euler->add_option("--param", param_path, "parameter JSON")->required();
    c_euler->add_option("--prime", prime, "prime p")->required();

    auto* c_verify = app.add_subcommand("verify-lfactor", "check the lift factorization at p");
    c_verify->add_option("--lift", lift_path, "lift JSON emitted by the lift subcommand")->required();
    c_verify->add_option("--f", f_path, "eigenform JSON for the input form")->required();
    c_verify->add_option("--prime", prime, "prime p")->required();

    auto* c_smo = app.add_subcommand("smo-check", "scalar-weight coincidence exception");
    c_smo->add_option("--n", n, "group rank")->required();
    c_smo->add_option("--k1", k1, "first scalar weight")->required();
    c_smo->add_option("--k2", k2, "second scalar weight")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*c_validate) return run_validate(param_path, human);
        if (*c_epsilon) return run_epsilon(param_path, method, human);
        if (*c_packet) return run_packet(param_path, human);
        if (*c_lift)
            return run_lift(
                lift_spec_from_flags(mode, k, n0, m, fweight, fk, fj, d, param_path, gweights),
                human);
        if (*c_euler) return run_euler(param_path, prime, human);
        if (*c_verify) return run_verify(lift_path, f_path, prime, human);
        if (*c_smo) return run_smo(n, k1, k2, human);
    } catch (const Error& e) {
        return emit_error(e, human);
    } catch (const std::exception& e) {
        json j;
        j["error"] = {{"code", "internal"}, {"message", e.what()}};
        std::cout << j.dump() << "\n";
        return 2;
    }
    return 2;
}
