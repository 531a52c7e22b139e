#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace topos::oracle {

// Point sets of a finite space; bit p set when point p belongs to the set.
// Spaces are capped at 32 points so a region is one word.
using PointSet = uint32_t;
inline constexpr int kMaxPoints = 32;

// Finite topological space given by its specialization preorder.
// Opens are the down-closed sets; closure is up-closure.
class AlexandrovSpace {
public:
    AlexandrovSpace() = default;
    // le[p] = set of q with p <= q. Throws std::invalid_argument unless reflexive and transitive.
    AlexandrovSpace(int n, std::vector<PointSet> le);

    int size() const { return n_; }
    PointSet full() const { return n_ == 32 ? ~PointSet(0) : (PointSet(1) << n_) - 1; }
    bool le(int p, int q) const { return (up_[size_t(p)] >> q) & 1u; }
    PointSet up(int p) const { return up_[size_t(p)]; }
    PointSet down(int p) const { return down_[size_t(p)]; }

    PointSet closure(PointSet s) const;
    PointSet interior(PointSet s) const;
    PointSet complement(PointSet s) const { return full() & ~s; }
    bool is_open(PointSet s) const { return interior(s) == s; }
    bool is_closed(PointSet s) const { return closure(s) == s; }
    // Connected as a subspace.
    bool connected(PointSet s) const;

    // Order pairs p<q with p != q, for model files.
    std::vector<std::pair<int, int>> order_pairs() const;
    std::string str() const;

private:
    int n_ = 0;
    std::vector<PointSet> up_, down_;
};

enum class DomainKind : uint8_t {
    All,         // every non-empty subset
    FlagRegular, // x subset of c(i(x))
    Regular,     // c(i(x)) = c(x) and i(c(x)) = i(x)
};
std::string_view domain_name(DomainKind k);
std::optional<DomainKind> parse_domain(std::string_view s);

struct Region {
    PointSet points = 0;
    bool regular = false;  // x subset of c(i(x))
};

std::vector<Region> region_domain(const AlexandrovSpace& sp, DomainKind kind);

// All preorders on n points up to isomorphism, in a fixed order.
std::vector<AlexandrovSpace> enumerate_spaces(int n);

// C and the relations defined from it, tabulated over a region domain.
// Quantifiers in D1, D3, D5, D6 range over the domain.
class RegionModel {
public:
    RegionModel(const AlexandrovSpace& sp, std::vector<Region> domain);

    const AlexandrovSpace& space() const { return sp_; }
    size_t size() const { return dom_.size(); }
    PointSet at(size_t i) const { return dom_[i].points; }
    const std::vector<Region>& domain() const { return dom_; }

    static bool C(PointSet a, PointSet b) { return (a & b) != 0; }
    bool C(size_t i, size_t j) const { return C(at(i), at(j)); }
    bool P(size_t i, size_t j) const { return p_[i * n_ + j]; }
    bool PP(size_t i, size_t j) const { return P(i, j) && !P(j, i); }
    bool O(size_t i, size_t j) const { return o_[i * n_ + j]; }
    bool EC(size_t i, size_t j) const { return C(i, j) && !O(i, j); }
    bool TP(size_t i, size_t j) const { return P(i, j) && tang_[i * n_ + j]; }
    bool NTP(size_t i, size_t j) const { return P(i, j) && !tang_[i * n_ + j]; }
    // =s by extensionality over the domain, for arbitrary point sets.
    bool eqs(PointSet a, PointSet b) const;
    bool OP(size_t i) const { return eqs(at(i), sp_.interior(at(i))); }
    bool CL(size_t i) const { return eqs(at(i), sp_.closure(at(i))); }
    bool Sp(size_t i, size_t j) const { return !C(sp_.closure(at(i)), sp_.closure(at(j))); }
    // D11 with y, z ranging over the domain.
    bool Con(size_t i) const;
    bool ICont(size_t i, size_t j) const { return !C(i, j) && C(sp_.closure(at(i)), sp_.closure(at(j))); }

private:
    AlexandrovSpace sp_;
    std::vector<Region> dom_;
    size_t n_;
    std::vector<bool> p_, o_, tang_;
};

struct Counterexample {
    std::string check;
    std::vector<PointSet> regions;
    std::string detail;
};

// Exhaustive sweep of one check over the model; lexicographic search order.
// Check ids: A1, A2, A3, O-sym, EC-sym, P-trans, PP-trans, NTP-trans, NTP-EC-O,
// D1 .. D12 (definitional consistency against the point-set reading).
std::optional<Counterexample> check_region(const std::string& id, const RegionModel& m);
const std::vector<std::string>& region_checks();

std::string set_str(PointSet s, int n);

}  // namespace topos::oracle
