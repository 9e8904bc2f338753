// Regenerates the shipped JSON fixtures under data/ from the q-expansion
// oracle. Run from the repository root:  make_fixtures [outdir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "splift/json_io.hpp"
#include "splift/lifting.hpp"
#include "splift/params.hpp"
#include "splift/qexp.hpp"

using namespace splift;
using nlohmann::json;

namespace {

constexpr long kPrimeBound = 29;

void write(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
    std::cout << "wrote " << path.string() << "\n";
}

CuspidalDatum with_hecke(CuspidalDatum tau, int underlying_weight) {
    tau.hecke = eigenform_hecke_data(tau.name, underlying_weight, kPrimeBound);
    return tau;
}

} // namespace

int main(int argc, char** argv) {
    std::filesystem::path outdir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(outdir);

    HeckeData delta = eigenform_hecke_data("delta", 12, kPrimeBound);
    write(outdir / "delta.json", hecke_to_json(delta));
    for (int w : {16, 18, 20, 22, 26}) {
        std::string name = "f" + std::to_string(w);
        write(outdir / (name + ".json"), hecke_to_json(eigenform_hecke_data(name, w, kPrimeBound)));
    }

    // miyawaki1(k = 12): f20[2] +++ Sym^2(Delta)[1]
    {
        GlobalAParameter psi({{with_hecke(elliptic_datum("f20", 20), 20), 2},
                              {with_hecke(sym2_datum("sym2_g12", 12), 12), 1}});
        write(outdir / "miyawaki1.json", param_to_json(psi));
    }
    // miyawaki2(k = 14): f26[2] +++ Sym^2(Delta)[1]
    {
        GlobalAParameter psi({{with_hecke(elliptic_datum("f26", 26), 26), 2},
                              {with_hecke(sym2_datum("sym2_g12", 12), 12), 1}});
        write(outdir / "miyawaki2.json", param_to_json(psi));
    }
    // ikeda(Delta, d = 2): delta[4] +++ 1[1]
    {
        GlobalAParameter psi({{with_hecke(elliptic_datum("delta", 12), 12), 4},
                              {trivial_datum(), 1}});
        write(outdir / "ikeda_delta_d2.json", param_to_json(psi));
    }
    // ibukiyama1(n0 = 2, m = 6): f_{k=4,j=4}[2] +++ 1[1]
    {
        GlobalAParameter psi(
            {{siegel_spin_datum("f_k4_j4", 4, 4), 2}, {trivial_datum(), 1}});
        write(outdir / "ibukiyama1.json", param_to_json(psi));
    }
    // rank-1 source Sym^2(Delta)[1], certified weight (12)
    {
        GlobalAParameter psi({{with_hecke(sym2_datum("sym2_g12", 12), 12), 1}});
        write(outdir / "sym2_g12_param.json", param_to_json(psi));
    }
    return 0;
}
