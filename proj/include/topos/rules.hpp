#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace topos {

enum class RuleKind : uint8_t {
    Asserted,
    DefinitionForward,
    DefinitionBackward,
    Axiom,
    Theorem,
    Constructor,
    Postulate,
    Closure,
    Default,
    Integrity,
};

// X(enum, label, kind, statement)
// Labels carry the axiom/definition identifiers used in proofs and dumps.
#define TOPOS_RULES(X)                                                                          \
    X(Asserted, "asserted", Asserted, "fact stated in the scene")                              \
    X(Assumed, "assume", Default, "scene-declared defeasible assumption")                       \
    X(A1, "A1", Axiom, "C(x,x)")                                                                \
    X(A2, "A2", Axiom, "C(x,y) -> C(y,x)")                                                      \
    X(A3, "A3", Closure, "forall z in domain (C(z,x) <-> C(z,y)) -> x =s y")                   \
    X(A3P, "A3", Theorem, "P(x,y) & P(y,x) -> x =s y")                                          \
    X(EqsSym, "=s", Axiom, "x =s y -> y =s x")                                                  \
    X(Cong, "=s-cong", Theorem, "x =s y -> f(x) =s f(y) for every term constructor f")         \
    X(D1F, "D1", DefinitionForward, "P(x,y) & C(z,x) -> C(z,y)")                                \
    X(D1N, "D1", DefinitionBackward, "C(z,x) & ~C(z,y) -> ~P(x,y)")                             \
    X(D1C, "D1", Closure, "forall z in domain (C(z,x) -> C(z,y)) -> P(x,y)")                   \
    X(PRefl, "T-P-refl", Theorem, "P(x,x)")                                                     \
    X(DirRefl, "T-DirEq-refl", Theorem, "DirEq(d,d)")                                           \
    X(PTrans, "T-P-trans", Theorem, "P(x,y) & P(y,z) -> P(x,z)")                                \
    X(D2F, "D2", DefinitionForward, "PP(x,y) -> P(x,y) & ~P(y,x)")                              \
    X(D2B, "D2", DefinitionBackward, "P(x,y) & ~P(y,x) -> PP(x,y)")                            \
    X(D2N, "D2", DefinitionBackward, "~P(x,y) | P(y,x) -> ~PP(x,y)")                            \
    X(PPTrans, "T-PP-trans", Theorem, "PP(x,y) & PP(y,z) -> PP(x,z)")                          \
    X(D3B, "D3", DefinitionBackward, "P(z,x) & P(z,y) -> O(x,y)")                              \
    X(D3N, "D3", DefinitionForward, "~O(x,y) & P(z,x) -> ~P(z,y)")                              \
    X(OC, "T-O-C", Theorem, "O(x,y) -> C(x,y)")                                                 \
    X(OUp, "T-O-up", Theorem, "P(x,y) & O(x,z) -> O(y,z)")                                      \
    X(D4F, "D4", DefinitionForward, "EC(x,y) -> C(x,y) & ~O(x,y)")                              \
    X(D4B, "D4", DefinitionBackward, "C(x,y) & ~O(x,y) -> EC(x,y)")                            \
    X(D4N, "D4", DefinitionBackward, "~C(x,y) | O(x,y) -> ~EC(x,y)")                            \
    X(D5B, "D5", DefinitionBackward, "P(x,y) & EC(z,x) & EC(z,y) -> TP(x,y)")                  \
    X(D5F, "D5", DefinitionForward, "TP(x,y) -> P(x,y) & ~NTP(x,y)")                            \
    X(D6F, "D6", DefinitionForward, "NTP(x,y) -> P(x,y) & ~TP(x,y); NTP(x,y) & EC(z,x) -> ~EC(z,y)") \
    X(D56, "D5/D6", DefinitionBackward, "P(x,y) & ~TP(x,y) -> NTP(x,y); P(x,y) & ~NTP(x,y) -> TP(x,y)") \
    X(D56N, "D5/D6", DefinitionBackward, "~P(x,y) -> ~TP(x,y) & ~NTP(x,y)")                     \
    X(NTPTrans, "T-NTP-trans", Theorem, "NTP(x,y) & NTP(y,z) -> NTP(x,z)")                     \
    X(NtpEcO, "T-NTP-EC-O", Theorem, "NTP(x,y) & EC(x,z) -> O(y,z)")                           \
    X(A4, "A4", Constructor, "x+y: P(x,x+y), P(y,x+y); C(z,x+y) iff C(z,x) | C(z,y)")          \
    X(SumLub, "A4", Theorem, "P(x,z) & P(y,z) -> P(x+y,z)")                                    \
    X(SumSplit, "T-sum-split", Theorem, "P(x,y+z) & ~O(x,y) -> P(x,z)")                        \
    X(A5, "A5", Constructor, "P(x,a*)")                                                         \
    X(A6, "A6", Constructor, "-x: ~O(x,-x); ~O(z,x) <-> P(z,-x)")                              \
    X(A7, "A7", Constructor, "x.y (under O(x,y)): P(x.y,x), P(x.y,y); P(z,x) & P(z,y) -> P(z,x.y)") \
    X(A8, "A8", Constructor, "ix: P(ix,x), OP(ix)")                                            \
    X(IntMono, "T-i-mono", Theorem, "P(x,y) -> P(ix,iy); P(x,iy) -> P(ix,iy); P(ix,y) -> P(ix,iy)") \
    X(A9, "A9", Constructor, "cx: P(x,cx), CL(cx)")                                            \
    X(D8, "D8", DefinitionForward, "OP(x) <-> x =s ix")                                         \
    X(D9, "D9", DefinitionForward, "CL(x) <-> x =s cx")                                         \
    X(A10, "A10", Axiom, "OP(x) & OP(y) & O(x,y) -> OP(x.y)")                                  \
    X(D10, "D10", DefinitionForward, "Sp(x,y) <-> ~C(cx,cy)")                                  \
    X(SpC, "D10", Theorem, "Sp(x,y) -> ~C(x,y)")                                                \
    X(D11, "D11", DefinitionForward, "x =s y+z & Sp(y,z) -> ~Con(x)")                          \
    X(D12, "D12", DefinitionForward, "ICont(x,y) <-> ~C(x,y) & C(cx,cy)")                      \
    X(D13, "D13", DefinitionForward, "WCont(x,y) -> ~C(cx,cy) & forall z (P(x,z) & OP(z) -> C(cz,y))") \
    X(D14, "D14", DefinitionForward, "Cont(x,y) <-> EC(x,y) | ICont(x,y) | WCont(x,y)")        \
    X(ContExcl, "D4/D12/D13", Theorem, "contact kinds are mutually exclusive and exclude O")  \
    X(D15, "D15/D16", Constructor, "env(y): Env(env(y),y), TP(env(y),y)")                      \
    X(D17, "D17-D19", DefinitionBackward, "Env(z,y) & TP(x,z) -> Lim1(x,y); contour/ends analogues") \
    X(D24, "D24-D26", DefinitionBackward, "Con(x) & Lim1/2/3 tiers -> Surface/Line/Point")     \
    X(A11, "A11", Axiom, "Closer(x,y,z) -> ~Closer(x,z,y)")                                     \
    X(A12, "A12", Axiom, "Closer(x,y,z) -> Closer(x,y,t) | Closer(x,t,z) (unit resolution)")  \
    X(A13, "A13", Axiom, "Closer(x,y,z) & ~Closer(z,y,x) -> Closer(y,x,z)")                    \
    X(A14, "A14", Axiom, "Closer(x,y,z) & ~Closer(x,t,z) -> Closer(x,y,t)")                    \
    X(A15, "A15", Axiom, "C(x,y) -> ~Closer(x,z,y)")                                            \
    X(A16, "A16", Axiom, "C(x,y) & ~C(x,z) -> Closer(x,y,z)")                                  \
    X(A17, "A17", Axiom, "WCont(x,y) & ~C(x,z) -> ~Closer(x,z,y)")                             \
    X(A18, "A18", Axiom, "WCont(x,y) & ~WCont(x,z) & ~C(x,z) -> Closer(x,y,z)")                \
    X(A19, "A19", Axiom, "P(x,y) -> ~Closer(z,x,y)")                                            \
    X(D27, "D27", DefinitionForward, "Equidist(x,y,z) <-> ~Closer(x,y,z) & ~Closer(x,z,y)")    \
    X(A20, "A20", Integrity, "~Kd(D1,D2,D2)")                                                   \
    X(KdNeq, "A20", Theorem, "Kd(D1,D2,D3) -> D2 != D3")                                        \
    X(A21, "A21", Axiom, "Kd(D1,D2,D3) & Kd(D1,D3,D4) -> Kd(D1,D2,D4)")                        \
    X(KdAsym, "A20/A21", Theorem, "Kd(D1,D2,D3) -> ~Kd(D1,D3,D2)")                              \
    X(A22, "A22", Axiom, "Kd(D1,D2,D3) & Kd(D3,D1,D2) -> Kd(D2,D1,D3)")                        \
    X(D28, "A23/D28", DefinitionForward, "D3 != -D1 -> Kd(D1,D3,-D1)")                         \
    X(A24, "A24", Axiom, "pairwise distinct -> Kd(D1,D2,D3) | Kd(D1,D3,D2) | D1 in Med(D2,D3) (unit resolution)") \
    X(A25, "A25", Axiom, "Kd(D1,D2,D3) <-> Kd(D1,-D3,-D2)")                                     \
    X(A26, "A26", Axiom, "Kd(D1,D2,D3) <-> Kd(-D1,-D2,-D3)")                                    \
    X(A27, "A27", Axiom, "D in Med(D1,D2) & D in Med(D2,D3) & D1 != D3 -> D in Med(D1,D3)")    \
    X(A28, "A28", Axiom, "Kd(D,D2,D3) & D1 in Sum(D2,D3) -> Kd(D3,D1,D) & Kd(-D2,-D1,D)")      \
    X(D29, "D29", DefinitionForward, "D2 in Ortho(D1) <-> ~Kd(D2,D1,-D1) & ~Kd(D2,-D1,D1)")    \
    X(D30, "D30", DefinitionForward, "D3 in Med(D1,D2) <-> (D1=D2 & D3=D1) | (D1!=D2 & ~Kd(D3,D1,D2) & ~Kd(D3,D2,D1))") \
    X(D31, "D31", Closure, "D3 in Sum(D1,D2) <-> D3 in Med(D1,D2) & forall D4 in Med(D1,D2) ~Kd(D1,D4,D3)") \
    X(DirCong, "=", Axiom, "D1 = D2 -> -D1 = -D2")                                             \
    X(AllenMeet, "Allen-meet", Theorem, "R1(x,y,D) & R2(x,y,D) -> (R1 n R2)(x,y,D)")          \
    X(AllenConv, "Allen-conv", Theorem, "R(x,y,D) -> conv(R)(y,x,D)")                          \
    X(AllenComp, "Allen-comp", Theorem, "R1(x,y,D) & R2(y,z,D) -> (R1;R2)(x,z,D)")            \
    X(AllenRev, "Allen-rev", Theorem, "R(x,y,D) -> rev(R)(x,y,-D)")                            \
    X(A29, "A29", Axiom, "C(x,y) -> mosdf=mioisidifi(x,y,D)")                                  \
    X(Fn4, "T-P-sfd=", Theorem, "P(x,y) -> sfd=(x,y,D)")                                        \
    X(D32, "D32", Closure, "Ext(y,x,D) <-> Lim1(y,x) & forall v (P(v,x) & ~P(v,y) -> <m(v,y,D))") \
    X(D33, "D33", DefinitionBackward, "Ext(y,x,D) & exists u (...) -> Exts(y,z,x,D)")          \
    X(A30, "A30", Axiom, "x<=y & y<=z -> x<=z")                                                 \
    X(A31, "A31", Axiom, "x<=y & y<=x -> x=y")                                                  \
    X(A32, "A32", Constructor, "x u y: x<=x u y, y<=x u y; sref(x u y) =s sref(x)+sref(y)")            \
    X(A34, "A34", Axiom, "x<=y -> P(sref(x),sref(y))")                                          \
    X(A36, "A36", Axiom, "Is-coll(x,y) -> sref(x) =s sref(y)")                                  \
    X(A38, "A38", Axiom, "Q(x,y) -> Mat(x) & Subst(y) & P(sref(x),sref(y))")                  \
    X(A40, "A40", Constructor, "Q(x,y) & Q(z,y) -> Q(t,y) & sref(t) =s sref(x)+sref(z)")       \
    X(A41, "A41", Axiom, "~Coll(x) & ~Coll(y) & sref(x) =s sref(y) & Q(x,z) & Q(y,z) -> x=y")  \
    X(A43, "A43", Axiom, "At(x) -> exactly one of Obj, Mat, Subst, Loc, Sp-port")              \
    X(A37, "A37", Integrity, "Is-coll(x,y) & Is-coll(x,z) -> y=z")                             \
    X(A39, "A39", Integrity, "Mat(x) -> exactly one substance")                                \
    X(A35, "A35", Integrity, "Is-coll(x,y) -> At(x) & ~At(y)")                                  \
    X(A42, "A42", Integrity, "Sp-port(x) -> exists y (Obj|Mat|Loc)(y) & Depend(x,y)")          \
    X(D34, "D34", DefinitionForward, "At(x) for declared atoms; ~At for plural sums")          \
    X(D35, "D35", DefinitionBackward, "Coll(x) <-> ~At(x) | exists y Is-coll(x,y)")            \
    X(SameMerge, "=", Axiom, "x = y -> sref(x) =s sref(y)")                                     \
    X(D36, "D36", DefinitionBackward, "Member|Subcoll|Portion|Subst-Wh|Component|Piece(x,y) -> Part(x,y)") \
    X(D36N, "D36", DefinitionForward, "~Part(x,y) -> ~K(x,y) for each kind K")                  \
    X(PartP, "Part-sref", Axiom, "Part(x,y) -> P(sref(x),sref(y))")                             \
    X(PieceCon, "Piece-con", Axiom, "Piece(x,y) -> Con(sref(x))")                               \
    X(MemberDer, "Member-der", Theorem, "z<=y & At(z) & ~At(y) & z!=y -> Member(z,y)")         \
    X(SubcollDer, "Subcoll-der", Theorem, "z<=y & ~At(z) & z!=y -> Subcoll(z,y)")              \
    X(PortionDer, "Portion-der", Theorem, "Q(x,s) & Q(y,s) & P(sref(x),sref(y)) & x!=y -> Portion(x,y)") \
    X(SubstWhDer, "Subst-Wh-der", Theorem, "Q(z,x) & Part(z,y) -> Subst-Wh(x,y)")              \
    X(MeroComp, "Part-comp", Axiom, "K1(x,y) & K2(y,z) -> K3(x,z) per composition table")      \
    X(A44, "A44", DefinitionForward, "dir-ext(y,z,x)=D <-> Part(y,x) & Part(z,x) & Exts(sref(y),sref(z),sref(x),D)") \
    X(D37, "D37", DefinitionBackward, "dir-ext(y,z,x)=D & Can-Use(x) & D=haut-grav -> Orient-haut(D,x)") \
    X(D37Def, "D37 >", Default, "dir-ext(y,z,x)=D & Can-Use(x) & In-Use(x) > D=haut-grav")     \
    X(D38, "D38", DefinitionBackward, "dir-ext(y,z,x)=D & Can-Use(x) & D=bas-grav -> Orient-bas(D,x)") \
    X(D38Def, "D38 >", Default, "dir-ext(y,z,x)=D & Can-Use(x) & In-Use(x) > D=bas-grav")      \
    X(D40, "D40", DefinitionForward, "Orient-avant1(D,x) <-> exists y,z dir-ext(y,z,x)=D & Orient-gen(x,D)") \
    X(D41, "D41", Closure, "Orient-avant2 over declared Utilise pairs")                        \
    X(D42, "D42", Closure, "Orient-avant3 over declared Utilise pairs")                        \
    X(D43, "D43", DefinitionForward, "Orient-avant <-> Orient-avant1 | Orient-avant2 | Orient-avant3") \
    X(A45, "A45", Axiom, "Orient-avant(D,x) <-> Orient-arriere(-D,x)")                         \
    X(D44, "D44", DefinitionForward, "In-sp(y,x,D) <-> mi>(sref(y),sref(x),D)")                 \
    X(D45, "D45", DefinitionForward, "Etre-devant-i(y,x,D) <-> Orient-avant(D,x) & In-sp(y,x,D)") \
    X(D46, "D46", DefinitionForward, "Etre-devant-d(y,x,D) <-> exists s (Orient-avant(-D,s) & s!=x & s!=y & Speaker(s) & In-sp(y,x,D) & Etre-devant-i(x,s,-D))") \
    X(DerI, "derriere-i", DefinitionForward, "Etre-derriere-i(y,x,D) <-> Orient-arriere(D,x) & In-sp(y,x,D)") \
    X(DerD, "derriere-d", DefinitionForward, "Etre-derriere-d(y,x,D) <-> exists s (Orient-arriere(-D,s) & s!=x & s!=y & Speaker(s) & In-sp(y,x,D) & Etre-devant-i(x,s,D))") \
    X(Zone, "Zonecont", Constructor, "Cont(x,y) -> Zonecont(zone(x,y),x,y) & P(zone(x,y),x)")  \
    X(PlusHautDef, "Plus_haut", DefinitionForward, "Plus_haut(z1,z2) <-> mi>(z1,z2,haut-grav)") \
    X(D47, "D47", DefinitionForward, "Cont1(x,y) <-> Cont(x,y) & Zonecont(z1,x,y) & Zonecont(z2,y,x) & Plus_haut(z1,z2)") \
    X(Cont2Def, "Cont2", DefinitionForward, "Cont2(x,y) <-> Cont(x,y) & zones at the same level along haut-grav") \
    X(Cont3Def, "Cont3", DefinitionForward, "Cont3(x,y) <-> Cont(x,y) & Plus_haut(z2,z1)")      \
    X(A46, "A46", Axiom, "Stabilise(x,y) & Stabilise(y,z) -> Stabilise(x,z)")                  \
    X(A47, "A47", Integrity, "~Stabilisateur_Intrinseque(x) -> exists y (y!=x & Stabilise(y,x) & Cont(sref(y),sref(x)))") \
    X(A48, "A48", Axiom, "Part(z,y) & ~Part(x,y) & Stabilise(z,x) -> Stabilise(y,x)")          \
    X(D48, "D48", Closure, "Stab_tot as least fixpoint over the stabilisation graph")          \
    X(StabTotF, "D48", DefinitionForward, "Stab_tot(y,x) -> Stabilise(y,x)")                   \
    X(CatcompDesc, "Catcomp", Theorem, "Catcomp1/2/3 from declared size descriptors")          \
    X(D49, "D49", DefinitionForward, "Sur1(x,y) <-> Catcomp1(x,y) & Cont1(sref(x),sref(y)) & Stabilise(y,x)") \
    X(D50, "D50", DefinitionForward, "Sur2(x,y) <-> Catcomp2(x,y) & Cont2(sref(x),sref(y)) & Stab_tot(y,x)") \
    X(D51, "D51", DefinitionForward, "Sur3(x,y) <-> Catcomp3(x,y) & Cont3(sref(x),sref(y)) & Stab_tot(y,x)") \
    X(A49, "A49", Constructor, "t=int(x): Sp-port(t), Depend(t,x), ICont(sref(x),sref(t)), P(i(sref(t)),preint(sref(x)))") \
    X(A50, "A50", Axiom, "t=int(x) & u=int(y) & Part(x,y) & Rest(y,x,r) -> P(sref(t),sref(u)+sref(r))") \
    X(A51, "A51", Axiom, "t=int(x) & u=int(y) & P(i(sref(x)),sref(u)) -> P(sref(t),sref(u)+sref(y))") \
    X(LieuSep, "lieu-separation", Postulate, "int(x) of a non-lieu x does not overlap an unrelated lieu") \
    X(RestDef, "Rest", Constructor, "Rest(y,x,r): sref(r)+sref(x) =s sref(y) & ~O(sref(r),sref(x))") \
    X(D52, "D52", DefinitionForward, "TDs(x,y) <-> four class-keyed clauses")                   \
    X(D52C4, "D52 clause 4", Closure, "Loc/Loc enclave clause under domain closure")          \
    X(D53, "D53", DefinitionForward, "PDs(x,y) <-> class-keyed overlap of interiors")          \
    X(D54, "D54", Closure, "DPt(x,y) with the contrast principle")                             \
    X(DansDef, "dans", DefinitionForward, "Dans(x,y) <-> TDs(x,y) | PDs(x,y) | DPt(x,y)")      \
    X(Fn10, "Fn10", Theorem, "Part(x,z) & (Obj|Mat)(x) & (Obj|Mat|Loc)(z) -> ~TDs(x,z)")

enum class RuleId : uint16_t {
#define TOPOS_RULE_ENUM(e, l, k, s) e,
    TOPOS_RULES(TOPOS_RULE_ENUM)
#undef TOPOS_RULE_ENUM
};

struct RuleInfo {
    RuleId id;
    std::string_view name;   // enum spelling, unique
    std::string_view label;  // axiom/definition id shown in proofs
    RuleKind kind;
    std::string_view statement;
};

const RuleInfo& rule_info(RuleId id);
const std::vector<RuleInfo>& all_rules();
std::string_view rule_kind_name(RuleKind k);

}  // namespace topos
