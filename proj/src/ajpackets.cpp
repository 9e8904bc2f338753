#include "splift/ajpackets.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splift {

AJParameter::AJParameter(std::vector<AJBlock> blocks, int tail_delta, int tail_d, int tail_source)
    : blocks_(std::move(blocks)), tail_delta_(tail_delta), tail_d_(tail_d), tail_source_(tail_source) {
    if (tail_d_ < 1 || tail_d_ % 2 == 0) throw Error(errc::domain, "tail dimension must be odd");
    if (tail_delta_ != 0 && tail_delta_ != 1) throw Error(errc::domain, "tail delta must be 0 or 1");
}

int AJParameter::group_rank() const {
    int s = 0;
    for (const auto& b : blocks_) s += b.d;
    return s + (tail_d_ - 1) / 2;
}

std::vector<int> AJParameter::block_exponents(size_t i) const {
    const auto& b = blocks_.at(i);
    std::vector<int> out;
    out.reserve(static_cast<size_t>(b.d));
    for (int l = 0; l < b.d; ++l) out.push_back((b.alpha + b.d - 1 - 2 * l) / 2);
    return out;
}

AJClassification classify_adams_johnson(const std::vector<LocalArchFactor>& localized) {
    AJClassification out;
    std::vector<AJBlock> blocks;
    std::vector<const LocalArchFactor*> quads;
    for (const auto& f : localized) {
        if (f.d < 1) {
            out.violations.push_back("factor with non-positive SL2 dimension");
            return out;
        }
        if (f.constituent.is_two_dim())
            blocks.push_back({f.constituent.alpha(), f.d, f.source});
        else
            quads.push_back(&f);
    }

    const bool have_tail = quads.size() == 1;
    if (!have_tail) {
        // two quadratic factors always share the restriction exponent 0
        out.violations.push_back(quads.empty()
                                     ? "no quadratic factor (total dimension is even)"
                                     : "diagonal restriction not multiplicity-free: " +
                                           std::to_string(quads.size()) + " quadratic factors");
    }

    int tail_delta = 0, tail_d = 1, tail_source = -1;
    if (have_tail) {
        tail_delta = quads[0]->constituent.kind() == ArchConstituent::Kind::sign ? 1 : 0;
        tail_d = quads[0]->d;
        tail_source = quads[0]->source;
        if (tail_d % 2 == 0) out.violations.push_back("quadratic factor with even SL2 dimension");
    }

    std::sort(blocks.begin(), blocks.end(),
              [](const AJBlock& a, const AJBlock& b) { return a.alpha > b.alpha; });

    int sum_d = 0;
    for (size_t i = 0; i < blocks.size(); ++i) {
        const auto& b = blocks[i];
        sum_d += b.d;
        if ((b.alpha + b.d) % 2 != 1)
            out.violations.push_back("block rho_" + std::to_string(b.alpha) + " (x) S_" +
                                     std::to_string(b.d) + " violates alpha + d = 1 mod 2");
        if (i + 1 < blocks.size()) {
            if (blocks[i].alpha == blocks[i + 1].alpha)
                out.violations.push_back("repeated alpha = " + std::to_string(b.alpha) +
                                         " (diagonal restriction not multiplicity-free)");
            else if (blocks[i].alpha - blocks[i + 1].alpha < blocks[i].d + blocks[i + 1].d)
                out.violations.push_back("gap condition fails between rho_" + std::to_string(b.alpha) +
                                         " and rho_" + std::to_string(blocks[i + 1].alpha));
        }
    }
    if (have_tail && !blocks.empty() && blocks.back().alpha < blocks.back().d + tail_d)
        out.violations.push_back("gap condition fails between rho_" +
                                 std::to_string(blocks.back().alpha) + " and the quadratic tail");
    if (have_tail && tail_d % 2 == 1 && tail_delta != sum_d % 2)
        out.violations.push_back("tail character exponent " + std::to_string(tail_delta) +
                                 " violates delta = sum d_i mod 2");

    if (out.violations.empty())
        out.parameter.emplace(std::move(blocks), tail_delta, tail_d, tail_source);
    return out;
}

AJParameter require_adams_johnson(const std::vector<LocalArchFactor>& localized) {
    auto cls = classify_adams_johnson(localized);
    if (!cls.parameter) {
        std::ostringstream os;
        os << "parameter is not Adams-Johnson:";
        for (const auto& v : cls.violations) os << " " << v << ";";
        throw Error(errc::not_adams_johnson, os.str());
    }
    return *cls.parameter;
}

std::vector<AJMember> packet_members(const AJParameter& psi) {
    std::vector<AJMember> out;
    out.push_back(AJMember{});
    for (const auto& b : psi.blocks()) {
        std::vector<AJMember> next;
        next.reserve(out.size() * static_cast<size_t>(b.d + 1));
        for (const auto& m : out) {
            for (int p = 0; p <= b.d; ++p) {
                AJMember ext = m;
                ext.signature.emplace_back(p, b.d - p);
                next.push_back(std::move(ext));
            }
        }
        out = std::move(next);
    }
    return out;
}

int delta_sign(const AJParameter& psi, size_t i) {
    const auto& blocks = psi.blocks();
    if (blocks.at(i).d % 2 == 0) return 0;
    int s = 0;
    for (size_t j = 0; j < i; ++j) s += blocks[j].d;
    return s % 2 == 0 ? 1 : -1;
}

SignCharacter member_character(const AJParameter& psi, const AJMember& w) {
    const auto& blocks = psi.blocks();
    if (w.signature.size() != blocks.size())
        throw Error(errc::domain, "member signature length mismatch");
    std::vector<int> values;
    values.reserve(blocks.size() + 1);
    int product = 1;
    for (size_t i = 0; i < blocks.size(); ++i) {
        auto [p, q] = w.signature[i];
        if (p < 0 || q < 0 || p + q != blocks[i].d)
            throw Error(errc::domain, "signature entry out of range");
        int num = p - q - delta_sign(psi, i);
        if (num % 2 != 0) throw Error(errc::domain, "signature parity violation");
        int v = ((num / 2) % 2 == 0) ? 1 : -1;
        values.push_back(v);
        product *= v;
    }
    values.push_back(product); // tail value forced by <z, .> = 1
    return SignCharacter(std::move(values));
}

std::optional<SignCharacter> lowest_weight_test(const AJParameter& psi, const std::vector<int>& k) {
    const int n = psi.group_rank();
    if (static_cast<int>(k.size()) != n)
        throw Error(errc::domain, "weight vector length " + std::to_string(k.size()) +
                                      " does not match rank " + std::to_string(n));
    for (size_t i = 0; i + 1 < k.size(); ++i)
        if (k[i] < k[i + 1]) throw Error(errc::domain, "weight vector must be weakly decreasing");
    if (!k.empty() && k.back() <= n)
        throw Error(errc::weight_not_discrete,
                    "weight k_n = " + std::to_string(k.back()) + " <= n = " + std::to_string(n) +
                        " is outside the discrete-series range");

    if (psi.tail_d() != 1) return std::nullopt;

    std::vector<int> exps;
    for (size_t i = 0; i < psi.blocks().size(); ++i) {
        auto be = psi.block_exponents(i);
        exps.insert(exps.end(), be.begin(), be.end());
    }
    std::vector<int> target;
    target.reserve(k.size());
    for (size_t i = 0; i < k.size(); ++i) target.push_back(k[i] - static_cast<int>(i) - 1);
    std::sort(exps.begin(), exps.end());
    std::sort(target.begin(), target.end());
    if (exps != target) return std::nullopt;

    std::vector<int> values;
    values.reserve(psi.blocks().size() + 1);
    int product = 1;
    for (size_t i = 0; i < psi.blocks().size(); ++i) {
        int num = psi.blocks()[i].d - delta_sign(psi, i);
        int v = ((num / 2) % 2 == 0) ? 1 : -1;
        values.push_back(v);
        product *= v;
    }
    values.push_back(product);
    return SignCharacter(std::move(values));
}

std::vector<int> infinitesimal_character(const std::vector<int>& k) {
    std::vector<int> out;
    out.reserve(2 * k.size() + 1);
    for (size_t i = 0; i < k.size(); ++i) {
        int e = k[i] - static_cast<int>(i) - 1;
        out.push_back(e);
        out.push_back(-e);
    }
    out.push_back(0);
    std::sort(out.begin(), out.end());
    return out;
}

bool smo_exception(int n, int k1, int k2) {
    if (k1 == k2) throw Error(errc::domain, "smo_exception expects distinct weights");
    if (n % 2 != 0) return false;
    int lo = std::min(k1, k2), hi = std::max(k1, k2);
    return lo == n / 2 && hi == n / 2 + 1;
}

} // namespace splift
