#include "splift/lifting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace splift {

namespace {

// archimedean character values of the lowest weight module pulled back to
// the global generators through the localization map
std::vector<int> pullback_values(const GlobalAParameter& psi, const AJParameter& aj,
                                 const SignCharacter& lw) {
    std::vector<int> values(psi.rank(), 1);
    for (size_t b = 0; b < aj.blocks().size(); ++b) {
        int src = aj.blocks()[b].source;
        if (src >= 0) values.at(static_cast<size_t>(src)) *= lw.on_generator(b);
    }
    if (aj.tail_source() >= 0)
        values.at(static_cast<size_t>(aj.tail_source())) *= lw.on_generator(aj.blocks().size());
    return values;
}

std::vector<int> kprime_from_exponents(const AJParameter& aj) {
    std::vector<int> mu;
    for (size_t i = 0; i < aj.blocks().size(); ++i) {
        auto e = aj.block_exponents(i);
        mu.insert(mu.end(), e.begin(), e.end());
    }
    std::sort(mu.rbegin(), mu.rend());
    std::vector<int> k(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) k[i] = mu[i] + static_cast<int>(i) + 1;
    return k;
}

std::vector<int> merge_weight_sets(const std::vector<int>& base, const std::vector<int>& added) {
    std::set<int> seen;
    std::vector<int> mu;
    for (size_t i = 0; i < base.size(); ++i) {
        int e = base[i] - static_cast<int>(i) - 1;
        if (!seen.insert(e).second)
            throw Error(errc::interval_violation, "repeated source exponent " + std::to_string(e));
        mu.push_back(e);
    }
    for (int e : added) {
        if (e <= 0)
            throw Error(errc::interval_violation,
                        "interval hypothesis violated: non-positive exponent " + std::to_string(e));
        if (!seen.insert(e).second)
            throw Error(errc::interval_violation,
                        "interval hypothesis violated: exponent " + std::to_string(e) + " collides");
        mu.push_back(e);
    }
    std::sort(mu.rbegin(), mu.rend());
    std::vector<int> k(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) k[i] = mu[i] + static_cast<int>(i) + 1;
    return k;
}

} // namespace

int multiplicity(const GlobalAParameter& psi, const std::vector<int>& k) {
    auto violations = validate(psi);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid parameter:";
        for (const auto& v : violations) os << " " << v << ";";
        throw Error(errc::domain, os.str());
    }
    AJParameter aj = require_adams_johnson(localize_infinity(psi));
    auto lw = lowest_weight_test(aj, k);
    if (!lw)
        throw Error(errc::not_lowest_weight,
                    "the packet of " + psi.str() + " has no lowest weight member of the given weight");
    SignCharacter eps = epsilon_direct(psi);
    auto arch = pullback_values(psi, aj, *lw);
    for (size_t i = 0; i < psi.rank(); ++i)
        if (arch[i] != eps.on_generator(i)) return 0;
    return 1;
}

std::vector<int> lift_a_weights(const std::vector<int>& k, int kt, int d) {
    if (kt < 1 || d < 1) throw Error(errc::domain, "lift_a_weights needs positive k and d");
    std::vector<int> added;
    for (int i = 1; i <= 2 * d; ++i) added.push_back(kt + d - i);
    return merge_weight_sets(k, added);
}

std::vector<int> lift_b_weights(const std::vector<int>& k, int kt, int j, int d) {
    if (kt < 1 || d < 1) throw Error(errc::domain, "lift_b_weights needs positive k and d");
    if (j % 2 != 0) throw Error(errc::domain, "lift_b_weights needs even j");
    if (kt <= 2 * d + 1)
        throw Error(errc::interval_violation, "interval hypothesis violated: k <= 2d+1");
    if (j <= 2 * d - 1)
        throw Error(errc::interval_violation, "interval hypothesis violated: j <= 2d-1");
    int lo = j / 2 - d + 1, hi = j / 2 + kt + d - 2;
    for (size_t i = 0; i < k.size(); ++i) {
        int e = k[i] - static_cast<int>(i) - 1;
        if (e >= lo && e <= hi)
            throw Error(errc::interval_violation,
                        "interval hypothesis violated: k_i - i = " + std::to_string(e) +
                            " lies in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    std::vector<int> added;
    for (int i = 0; i < 2 * d; ++i) added.push_back(j / 2 + kt + d - 2 - i);
    for (int i = 0; i < 2 * d; ++i) added.push_back(j / 2 + d - i);
    return merge_weight_sets(k, added);
}

std::string Factorization::str() const {
    std::ostringstream os;
    os << base;
    for (int s2 : shifts2) {
        os << "\xC2\xB7L(s"; // middle dot
        if (s2 != 0) {
            os << (s2 > 0 ? "+" : "-");
            int a = s2 > 0 ? s2 : -s2;
            if (a % 2 == 0)
                os << a / 2;
            else
                os << a << "/2";
        }
        os << ",f";
        if (spin) os << ",spin";
        os << ")";
    }
    return os.str();
}

LiftResult evaluate_lift(const LiftSpec& spec) {
    if (spec.d < 1) throw Error(errc::domain, "lift needs d >= 1");
    const GlobalAParameter& g = spec.g;

    try {
        if (multiplicity(g, spec.g_weights) != 1)
            throw Error(errc::source_not_realizable,
                        "source parameter " + g.str() + " is not realized by a weight-" +
                            "certified eigenform");
    } catch (const Error& e) {
        if (std::string(e.code()) == errc::source_not_realizable) throw;
        throw Error(errc::source_not_realizable,
                    "source certificate failed for " + g.str() + ": " + e.what());
    }

    const int n = g.group_rank();
    int kt = 0;
    if (spec.f.kind == DatumKind::elliptic) {
        kt = spec.f.weight / 2;
    } else if (spec.f.kind == DatumKind::siegel_spin) {
        kt = spec.f.siegel_k;
    } else {
        throw Error(errc::domain, "lift input must be an elliptic or degree-2 spin datum");
    }

    if (spec.mode == LiftMode::a) {
        if (spec.f.kind != DatumKind::elliptic)
            throw Error(errc::domain, "mode a needs an elliptic datum");
        if (kt <= spec.d)
            throw Error(errc::interval_violation, "interval hypothesis violated: k <= d");
        if (n > 0) {
            bool below = kt + spec.d - 1 < spec.g_weights.back() - n;
            bool above = kt - spec.d > spec.g_weights.front() - 1;
            if (!below && !above)
                throw Error(errc::interval_violation,
                            "interval hypothesis violated: [k-d, k+d-1] meets the source exponents");
        }
        (void)lift_a_weights(spec.g_weights, kt, spec.d); // union disjointness
    } else if (spec.mode == LiftMode::b) {
        if (spec.f.kind != DatumKind::siegel_spin)
            throw Error(errc::domain, "mode b needs a degree-2 spin datum");
        (void)lift_b_weights(spec.g_weights, kt, spec.f.siegel_j, spec.d);
    }

    // discreteness of tau_f[2d] +++ psi_g
    for (const auto& c : g.constituents())
        if (c.d == 2 * spec.d && c.tau.arch == spec.f.arch)
            throw Error(errc::not_discrete_param,
                        "not a discrete parameter: " + spec.f.name + "[" + std::to_string(2 * spec.d) +
                            "] collides with " + c.tau.name + "[" + std::to_string(c.d) + "]");

    LiftResult out;
    out.mode = spec.mode;
    out.f = spec.f;
    out.d = spec.d;
    out.psi_lift = g.boxplus({spec.f, 2 * spec.d});

    auto violations = validate(out.psi_lift);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "lifted parameter is invalid:";
        for (const auto& v : violations) os << " " << v << ";";
        throw Error(errc::domain, os.str());
    }

    AJParameter aj = require_adams_johnson(localize_infinity(out.psi_lift));
    out.k_prime = kprime_from_exponents(aj);

    auto lw = lowest_weight_test(aj, out.k_prime);
    if (!lw) throw Error(errc::not_lowest_weight, "derived weight is not a packet member");
    SignCharacter eps = epsilon_direct(out.psi_lift);
    auto arch = pullback_values(out.psi_lift, aj, *lw);

    int eps_product = 1, arch_product = 1;
    bool equal = true;
    for (size_t i = 0; i < out.psi_lift.rank(); ++i) {
        eps_product *= eps.on_generator(i);
        arch_product *= arch[i];
        if (eps.on_generator(i) != arch[i]) equal = false;
    }
    if (eps_product != 1 || arch_product != 1)
        throw Error(errc::domain, "sign product consistency violated");
    out.multiplicity = equal ? 1 : 0;
    out.automorphic = equal;
    out.cuspidal = !out.k_prime.empty() && out.k_prime.back() > static_cast<int>(out.k_prime.size());

    out.factorization.base = n == 0 ? "zeta(s)" : "L(s,g,std)";
    out.factorization.spin = spec.f.kind == DatumKind::siegel_spin;
    for (int i = 1; i <= 2 * spec.d; ++i)
        out.factorization.shifts2.push_back(out.factorization.spin ? 2 * spec.d + 1 - 2 * i
                                                                   : 2 * (kt + spec.d - i));
    return out;
}

LiftSpec miyawaki1_spec(int k) {
    if (k % 2 != 0 || k < 12)
        throw Error(errc::bad_instance, "miyawaki1 needs even k >= 12");
    LiftSpec s;
    s.mode = LiftMode::a;
    s.g = GlobalAParameter({{sym2_datum("sym2_g" + std::to_string(k), k), 1}});
    s.g_weights = {k};
    s.f = elliptic_datum("f" + std::to_string(2 * k - 4), 2 * k - 4);
    s.d = 1;
    return s;
}

LiftSpec miyawaki2_spec(int k) {
    if (k % 2 != 0 || k < 14)
        throw Error(errc::bad_instance, "miyawaki2 needs even k >= 14");
    LiftSpec s;
    s.mode = LiftMode::a;
    s.g = GlobalAParameter({{sym2_datum("sym2_g" + std::to_string(k - 2), k - 2), 1}});
    s.g_weights = {k - 2};
    s.f = elliptic_datum("f" + std::to_string(2 * k - 2), 2 * k - 2);
    s.d = 1;
    return s;
}

LiftSpec ikeda_spec(int fweight, int d) {
    if (fweight < 2 || fweight % 2 != 0)
        throw Error(errc::bad_instance, "ikeda needs a positive even modular weight");
    if (d < 1) throw Error(errc::bad_instance, "ikeda needs d >= 1");
    LiftSpec s;
    s.mode = LiftMode::a;
    s.g = GlobalAParameter({{trivial_datum(), 1}});
    s.f = elliptic_datum("f" + std::to_string(fweight), fweight);
    s.d = d;
    return s;
}

LiftSpec ibukiyama1_spec(int n0, int m) {
    if (n0 < 2 || n0 % 2 != 0)
        throw Error(errc::bad_instance, "ibukiyama1 needs even n0 >= 2");
    if (m % 2 != 0) throw Error(errc::bad_instance, "ibukiyama1 needs even m");
    if (m <= 2 * n0) throw Error(errc::bad_instance, "ibukiyama1 needs m > 2 n0");
    LiftSpec s;
    s.mode = LiftMode::b;
    s.g = GlobalAParameter({{trivial_datum(), 1}});
    int k = n0 + 2, j = 2 * m - 3 * n0 - 2;
    s.f = siegel_spin_datum("f_k" + std::to_string(k) + "_j" + std::to_string(j), k, j);
    s.d = n0 / 2;
    return s;
}

LiftSpec ibukiyama2_spec(int n0, int m) {
    if (n0 < 2) throw Error(errc::bad_instance, "ibukiyama2 needs n0 >= 2");
    if (m < 2 * n0 + 2)
        throw Error(errc::bad_instance, "ibukiyama2 needs m >= 2 n0 + 2 (degree-2 source weight >= 4)");
    int kg = m - 2 * n0 + 2, jg = 2 * n0 - 2;
    LiftSpec s;
    s.mode = LiftMode::general;
    s.g = GlobalAParameter(
        {{siegel_std_datum("std_g_k" + std::to_string(kg) + "_j" + std::to_string(jg), kg, jg), 1}});
    s.g_weights = {m, kg};
    s.f = elliptic_datum("f" + std::to_string(2 * m - 2 * n0), 2 * m - 2 * n0);
    s.d = n0 - 1;
    return s;
}

std::string mode_name(LiftMode m) {
    switch (m) {
        case LiftMode::a: return "a";
        case LiftMode::b: return "b";
        default: return "general";
    }
}

} // namespace splift
