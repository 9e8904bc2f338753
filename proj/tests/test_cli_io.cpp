#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "splift/json_io.hpp"

using namespace splift;
using nlohmann::json;

TEST_CASE("datum JSON round trip") {
    for (const CuspidalDatum& tau :
         {elliptic_datum("f20", 20), sym2_datum("sym2_g12", 12), trivial_datum(),
          siegel_spin_datum("f44", 4, 4), siegel_std_datum("g_std", 6, 2)}) {
        CuspidalDatum back = datum_from_json(datum_to_json(tau));
        CHECK(back.kind == tau.kind);
        CHECK(back.gl_rank == tau.gl_rank);
        CHECK(back.arch == tau.arch);
        CHECK(datum_to_json(back) == datum_to_json(tau));
    }
}

TEST_CASE("parameter JSON round trip keeps hecke data") {
    CuspidalDatum delta = elliptic_datum("delta", 12);
    delta.hecke = eigenform_hecke_data("delta", 12, 11);
    GlobalAParameter psi({{delta, 4}, {trivial_datum(), 1}});
    json j = param_to_json(psi);
    GlobalAParameter back = param_from_json(j);
    CHECK(param_to_json(back) == j);
    REQUIRE(back.constituents()[0].tau.hecke.has_value());
    CHECK(back.constituents()[0].tau.hecke->ap.at(7) == -16744);
}

TEST_CASE("shipped parameter fixtures parse, validate, and agree on both methods") {
    std::string dir = SPLIFT_DATA_DIR;
    for (const char* name : {"miyawaki1", "miyawaki2", "ikeda_delta_d2", "ibukiyama1"}) {
        GlobalAParameter psi = load_parameter(dir + "/" + name + ".json");
        CHECK(validate(psi).empty());
        SignCharacter eps = epsilon_direct(psi);
        for (auto el : component_group(psi).elements())
            CHECK(eps(el) == epsilon_adjoint(psi, el));
    }
    GlobalAParameter ik = load_parameter(dir + "/ikeda_delta_d2.json");
    CHECK(ik.total_dimension() == 9);
    CHECK(ik.constituents()[0].tau.hecke->ap.at(2) == -24);
}

TEST_CASE("lift result JSON re-evaluates identically") {
    for (LiftSpec spec : {miyawaki1_spec(12), ikeda_spec(12, 2), ibukiyama1_spec(2, 6),
                          ibukiyama2_spec(2, 8)}) {
        LiftResult r = evaluate_lift(spec);
        json emitted = lift_result_to_json(r, spec);
        LiftSpec back = lift_spec_from_json(emitted);
        LiftResult r2 = evaluate_lift(back);
        CHECK(lift_result_to_json(r2, back) == emitted);
    }
}

TEST_CASE("spin traces survive the JSON round trip") {
    CuspidalDatum f = siegel_spin_datum("f44", 4, 4);
    f.spin_traces[2] = {QuadValue{Rat(1, 2), Rat(3, 4)}, QuadValue{Rat(-2), Rat(0)}};
    CuspidalDatum back = datum_from_json(datum_to_json(f));
    REQUIRE(back.spin_traces.count(2) == 1);
    CHECK(back.spin_traces.at(2)[0].a == Rat(1, 2));
    CHECK(back.spin_traces.at(2)[0].b == Rat(3, 4));
    CHECK(back.spin_traces.at(2)[1].a == Rat(-2));
}

TEST_CASE("malformed inputs raise parse errors") {
    CHECK_THROWS_AS(datum_from_json(json::parse("{\"kind\": \"nonsense\"}")), Error);
    CHECK_THROWS_AS(param_from_json(json::parse("{}")), Error);
    CHECK_THROWS_AS(lift_spec_from_json(json::parse("{\"mode\": \"a\"}")), Error);
    CHECK_THROWS_AS(load_parameter("missing_file.json"), Error);
}
