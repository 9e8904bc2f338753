#include "splift/qexp.hpp"

#include <fstream>

#include <json.hpp>

#include "splift/errors.hpp"

namespace splift {

namespace {

using Series = std::vector<Int>; // coefficients of q^0..q^N

Series mul(const Series& a, const Series& b) {
    size_t n = a.size();
    Series c(n, Int(0));
    for (size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// sum of e-th powers of divisors
Int sigma(long n, int e) {
    Int s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(e));
        s += p;
    }
    return s;
}

Series eisenstein(int weight, size_t n, long factor) {
    Series s(n + 1, Int(0));
    s[0] = 1;
    for (size_t m = 1; m <= n; ++m) s[m] = factor * sigma(static_cast<long>(m), weight - 1);
    return s;
}

Series delta_series(size_t n) {
    // q * prod_{m>=1} (1 - q^m)^24
    Series s(n + 1, Int(0));
    s[0] = 1;
    for (size_t m = 1; m <= n; ++m) {
        Series f(n + 1, Int(0));
        f[0] = 1;
        f[m] = -1;
        for (int rep = 0; rep < 24; ++rep) s = mul(s, f);
    }
    Series shifted(n + 1, Int(0));
    for (size_t i = 0; i + 1 <= n; ++i) shifted[i + 1] = s[i];
    return shifted;
}

} // namespace

std::vector<Int> eigenform_q_expansion(int weight, int count) {
    if (count < 1) throw Error(errc::domain, "q-expansion length must be positive");
    size_t n = static_cast<size_t>(count);
    Series s;
    switch (weight) {
        case 12: s = delta_series(n); break;
        case 16: s = mul(eisenstein(4, n, 240), delta_series(n)); break;
        case 18: s = mul(eisenstein(6, n, -504), delta_series(n)); break;
        case 20: {
            Series e4 = eisenstein(4, n, 240);
            s = mul(mul(e4, e4), delta_series(n));
            break;
        }
        case 22: s = mul(mul(eisenstein(4, n, 240), eisenstein(6, n, -504)), delta_series(n)); break;
        case 26: {
            Series e4 = eisenstein(4, n, 240);
            s = mul(mul(mul(e4, e4), eisenstein(6, n, -504)), delta_series(n));
            break;
        }
        default:
            throw Error(errc::bad_weight,
                        "weight " + std::to_string(weight) + " has no one-dimensional level-one cusp space");
    }
    return std::vector<Int>(s.begin() + 1, s.end()); // a_1..a_count
}

std::vector<long> primes_up_to(long bound) {
    std::vector<long> out;
    for (long p = 2; p <= bound; ++p) {
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) { prime = false; break; }
        if (prime) out.push_back(p);
    }
    return out;
}

HeckeData eigenform_hecke_data(const std::string& name, int weight, long prime_bound) {
    HeckeData h;
    h.name = name;
    h.weight = weight;
    auto coeffs = eigenform_q_expansion(weight, static_cast<int>(prime_bound));
    for (long p : primes_up_to(prime_bound)) h.ap[p] = coeffs[static_cast<size_t>(p - 1)];
    return h;
}

HeckeData load_eigenform_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse, "cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse, path + ": " + e.what());
    }
    if (!j.is_object() || j.value("kind", "") != "elliptic")
        throw Error(errc::parse, path + ": expected an elliptic eigenform object");
    HeckeData h;
    h.name = j.value("name", "");
    if (!j.contains("weight") || !j["weight"].is_number_integer())
        throw Error(errc::parse, path + ": missing integer field 'weight'");
    h.weight = j["weight"].get<int>();
    if (!j.contains("ap") || !j["ap"].is_object())
        throw Error(errc::parse, path + ": missing object field 'ap'");
    for (auto it = j["ap"].begin(); it != j["ap"].end(); ++it) {
        long p;
        try {
            p = std::stol(it.key());
        } catch (...) {
            throw Error(errc::parse, path + ": ap key '" + it.key() + "' is not a prime written in decimal");
        }
        if (h.ap.count(p)) throw Error(errc::parse, path + ": duplicate prime " + it.key());
        const auto& v = *it;
        if (v.is_number_integer()) {
            h.ap[p] = Int(static_cast<long>(v.get<long long>()));
        } else if (v.is_string()) {
            h.ap[p] = Int(v.get<std::string>()); // big eigenvalues arrive as decimal strings
        } else {
            throw Error(errc::parse, path + ": a_" + it.key() + " must be an integer");
        }
    }
    return h;
}

} // namespace splift
