#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace topos {

enum class Sort : uint8_t { Entity, Individual, Direction };

// X(enum, canonical name, signature, module)
// signature letters: e entity, i individual, d direction
#define TOPOS_RELATIONS(X)                                   \
    X(C, "C", "ii", "geometry")                              \
    X(Eqs, "Eqs", "ii", "geometry")                          \
    X(P, "P", "ii", "geometry")                              \
    X(PP, "PP", "ii", "geometry")                            \
    X(O, "O", "ii", "geometry")                              \
    X(EC, "EC", "ii", "geometry")                            \
    X(TP, "TP", "ii", "geometry")                            \
    X(NTP, "NTP", "ii", "geometry")                          \
    X(ICont, "ICont", "ii", "geometry")                      \
    X(WCont, "WCont", "ii", "geometry")                      \
    X(Cont, "Cont", "ii", "geometry")                        \
    X(Sp, "Sp", "ii", "geometry")                            \
    X(Con, "Con", "i", "geometry")                           \
    X(OP, "OP", "i", "geometry")                             \
    X(CL, "CL", "i", "geometry")                             \
    X(Env, "Env", "ii", "geometry")                          \
    X(Contour, "Contour", "ii", "geometry")                  \
    X(Ends, "Ends", "ii", "geometry")                        \
    X(Lim1, "Lim1", "ii", "geometry")                        \
    X(Lim2, "Lim2", "ii", "geometry")                        \
    X(Lim3, "Lim3", "ii", "geometry")                        \
    X(Surface, "Surface", "ii", "geometry")                  \
    X(Line, "Line", "ii", "geometry")                        \
    X(Point, "Point", "ii", "geometry")                      \
    X(Closer, "Closer", "iii", "geometry")                   \
    X(Equidist, "Equidist", "iii", "geometry")               \
    X(Allen, "Allen", "iid", "geometry")                     \
    X(Ext, "Ext", "iid", "geometry")                         \
    X(Exts, "Exts", "iiid", "geometry")                      \
    X(Salient, "Salient", "ii", "geometry")                  \
    X(PlusHaut, "Plus_haut", "ii", "support-containment")    \
    X(Zonecont, "Zonecont", "iii", "support-containment")    \
    X(Cont1, "Cont1", "ii", "support-containment")           \
    X(Cont2, "Cont2", "ii", "support-containment")           \
    X(Cont3, "Cont3", "ii", "support-containment")           \
    X(Kd, "Kd", "ddd", "geometry")                           \
    X(DirEq, "DirEq", "dd", "geometry")                      \
    X(InMed, "In-med", "ddd", "geometry")                    \
    X(InOrtho, "In-ortho", "dd", "geometry")                 \
    X(InSum, "In-sum", "ddd", "geometry")                    \
    X(Obj, "Obj", "e", "kb-core")                            \
    X(Mat, "Mat", "e", "kb-core")                            \
    X(Subst, "Subst", "e", "kb-core")                        \
    X(Loc, "Loc", "e", "kb-core")                            \
    X(SpPort, "Sp-port", "e", "kb-core")                     \
    X(At, "At", "e", "kb-core")                              \
    X(Coll, "Coll", "e", "kb-core")                          \
    X(Leq, "Leq", "ee", "kb-core")                           \
    X(IsColl, "Is-coll", "ee", "kb-core")                    \
    X(Q, "Q", "ee", "kb-core")                               \
    X(Depend, "Depend", "ee", "kb-core")                     \
    X(Same, "Same", "ee", "kb-core")                         \
    X(Member, "Member", "ee", "meronymy")                    \
    X(Subcoll, "Subcoll", "ee", "meronymy")                  \
    X(Portion, "Portion", "ee", "meronymy")                  \
    X(SubstWh, "Subst-Wh", "ee", "meronymy")                 \
    X(Component, "Component", "ee", "meronymy")              \
    X(Piece, "Piece", "ee", "meronymy")                      \
    X(Part, "Part", "ee", "meronymy")                        \
    X(CanUse, "Can-Use", "e", "orientation-functional")      \
    X(InUse, "In-Use", "e", "orientation-functional")        \
    X(Container, "Container", "e", "support-containment")    \
    X(CanContain, "Can-contain", "e", "support-containment") \
    X(IntrinsicStabilizer, "Stabilisateur_Intrinseque", "e", "support-containment") \
    X(Speaker, "Speaker", "e", "orientation-functional")     \
    X(ComplexShape, "Complex-shape", "e", "orientation-functional") \
    X(Utilise, "Utilise", "ee", "orientation-functional")    \
    X(OrientGen, "Orient-gen", "ed", "orientation-functional") \
    X(DirExt, "Dir-ext", "eeed", "orientation-functional")   \
    X(OrientHaut, "Orient-haut", "de", "orientation-functional") \
    X(OrientBas, "Orient-bas", "de", "orientation-functional") \
    X(OrientAvant1, "Orient-avant1", "de", "orientation-functional") \
    X(OrientAvant2, "Orient-avant2", "de", "orientation-functional") \
    X(OrientAvant3, "Orient-avant3", "de", "orientation-functional") \
    X(OrientAvant, "Orient-avant", "de", "orientation-functional") \
    X(OrientArriere, "Orient-arriere", "de", "orientation-functional") \
    X(InSp, "In-sp", "eed", "orientation-functional")        \
    X(DevantI, "Etre-devant-i", "eed", "orientation-functional") \
    X(DevantD, "Etre-devant-d", "eed", "orientation-functional") \
    X(DerriereI, "Etre-derriere-i", "eed", "orientation-functional") \
    X(DerriereD, "Etre-derriere-d", "eed", "orientation-functional") \
    X(Stabilise, "Stabilise", "ee", "support-containment")   \
    X(StabTot, "Stab_tot", "ee", "support-containment")      \
    X(Catcomp1, "Catcomp1", "ee", "support-containment")     \
    X(Catcomp2, "Catcomp2", "ee", "support-containment")     \
    X(Catcomp3, "Catcomp3", "ee", "support-containment")     \
    X(Sur1, "Sur1", "ee", "support-containment")             \
    X(Sur2, "Sur2", "ee", "support-containment")             \
    X(Sur3, "Sur3", "ee", "support-containment")             \
    X(Rest, "Rest", "eee", "support-containment")            \
    X(TDs, "TDs", "ee", "support-containment")               \
    X(PDs, "PDs", "ee", "support-containment")               \
    X(DPt, "DPt", "ee", "support-containment")               \
    X(Dans, "Dans", "ee", "support-containment")

enum class Rel : uint16_t {
#define TOPOS_REL_ENUM(e, n, s, m) e,
    TOPOS_RELATIONS(TOPOS_REL_ENUM)
#undef TOPOS_REL_ENUM
};

inline constexpr int kRelCount = 0
#define TOPOS_REL_COUNT(e, n, s, m) +1
    TOPOS_RELATIONS(TOPOS_REL_COUNT)
#undef TOPOS_REL_COUNT
    ;

struct RelInfo {
    Rel rel;
    std::string_view name;
    std::vector<Sort> sig;
    std::string_view module;
};

const RelInfo& rel_info(Rel r);
std::string_view rel_name(Rel r);
inline int arity(Rel r) { return int(rel_info(r).sig.size()); }
// Accepts canonical names and a few spelling aliases (e.g. "CanUse", "Stab-tot").
std::optional<Rel> find_rel(std::string_view name);
const std::vector<Rel>& all_relations();

bool is_entity_class(Rel r);  // Obj, Mat, Subst, Loc, Sp-port
bool is_part_kind(Rel r);     // the six meronymies
bool is_symmetric(Rel r);     // C, O, EC, Sp, ICont, Eqs, DirEq

std::string_view sort_name(Sort s);

}  // namespace topos
