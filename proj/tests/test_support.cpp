#include "doctest.h"
#include "scene_util.hpp"
#include "topos/support.hpp"

using namespace topos;
using tt::Status;

namespace {
EntityId ent(tt::Scene& s, const char* n) { return *s.kb.find_entity(n); }
}  // namespace

TEST_CASE("sur cases on the shipped scenes") {
    struct Row {
        const char* file;
        const char* x;
        const char* y;
        const char* tag;
        Status status;
    };
    const Row rows[] = {
        {"livre-table.scene", "livre", "table", "Sur1", Status::Entailed},
        {"affiche-mur.scene", "affiche", "mur", "Sur2", Status::Entailed},
        {"mouche-plafond.scene", "mouche", "plafond", "Sur3", Status::Entailed},
        {"tv-etagere.scene", "télévision", "mur", "Sur2", Status::Entailed},
    };
    for (const auto& r : rows) {
        CAPTURE(r.file);
        auto s = tt::scene_file(r.file);
        auto v = sur(s.kb, ent(s, r.x), ent(s, r.y));
        CHECK(v.status == r.status);
        CHECK(v.case_tag == r.tag);
    }
}

TEST_CASE("sur refusals name the missing conjunct") {
    auto s = tt::scene_file("tv-table.scene");
    CHECK(tt::st(s, "Sur2(télévision, mur)") == Status::Refuted);
    auto v = tt::ask(s, "Sur2(télévision, mur)");
    CHECK(v.failed.find("Stab_tot") != std::string::npos);

    auto l = tt::scene_file("lustre-plafond.scene");
    CHECK(tt::st(l, "Sur3(lustre, plafond)") == Status::Refuted);
    CHECK(tt::st(l, "Catcomp3(lustre, plafond)") == Status::Refuted);
}

TEST_CASE("dans on the shipped scenes") {
    struct Row {
        const char* file;
        const char* lit;
        Status status;
    };
    const Row rows[] = {
        {"paul-ile.scene", "TDs(paul, île)", Status::Entailed},
        {"paul-ile.scene", "Dans(paul, île)", Status::Entailed},
        {"paul-mer.scene", "TDs(paul, mer)", Status::Unknown},
        {"trou-tiroir.scene", "TDs(trou, tiroir)", Status::Unknown},
        {"trois-objets.scene", "TDs(clef, armoire)", Status::Entailed},
        {"trois-objets-part.scene", "TDs(tiroir, commode)", Status::Refuted},
        {"abeille-vase.scene", "Dans(abeille, vase)", Status::Refuted},
        {"nez-tete.scene", "Dans(nez, tête)", Status::Refuted},
        {"noix-coquille.scene", "DPt(noix, coquille)", Status::Entailed},
        {"cotentin-manche.scene", "Dans(Cotentin, Manche)", Status::Entailed},
    };
    for (const auto& r : rows) {
        CAPTURE(r.lit);
        auto s = tt::scene_file(r.file);
        CHECK(tt::st(s, r.lit) == r.status);
    }
}

TEST_CASE("dans refusal lists every disjunct") {
    auto s = tt::scene_file("nez-tete.scene");
    auto v = dans(s.kb, ent(s, "nez"), ent(s, "tête"));
    CHECK(v.status == Status::Refuted);
    const std::string& all = v.failed;
    CHECK(all.find("TDs") != std::string::npos);
    CHECK(all.find("PDs") != std::string::npos);
    CHECK(all.find("DPt") != std::string::npos);
}

TEST_CASE("stabilisation") {
    auto s = tt::scene_file("livre-table.scene");
    CHECK(stabilizes(s.kb, ent(s, "table"), ent(s, "livre")).status == Status::Entailed);
    CHECK(cont_kind(s.kb, s.kb.sref(ent(s, "livre")), s.kb.sref(ent(s, "table"))) == "Cont1");
}

TEST_CASE("size compatibility") {
    auto s = tt::scene(R"(
entity miette : Obj attrs {HSize:tiny, VSize:tiny};
entity table : Obj attrs {HSize:medium, VSize:medium};
entity maison : Obj attrs {HSize:huge, VSize:large};
)");
    CHECK(tt::st(s, "Catcomp1(miette, table)") == Status::Entailed);
    CHECK(tt::st(s, "Catcomp1(maison, table)") == Status::Refuted);
    CHECK(tt::st(s, "Catcomp3(miette, table)") == Status::Entailed);
    CHECK(tt::st(s, "Catcomp3(table, maison)") == Status::Refuted);
}
