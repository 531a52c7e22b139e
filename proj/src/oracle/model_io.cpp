#include "topos/oracle/model_io.hpp"

#include <fstream>
#include <sstream>

namespace topos::oracle {

namespace {

struct Pending {
    std::string name;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    DomainKind domain = DomainKind::Regular;
    int line = 0;
};

AlexandrovSpace build(const Pending& p, const std::string& where) {
    if (p.n < 1 || p.n > kMaxPoints) throw ModelError(where + ": points must be in 1.." + std::to_string(kMaxPoints));
    std::vector<PointSet> up(size_t(p.n));
    for (int i = 0; i < p.n; ++i) up[size_t(i)] = PointSet(1) << i;
    for (auto [a, b] : p.pairs) {
        if (a < 0 || b < 0 || a >= p.n || b >= p.n) throw ModelError(where + ": order pair outside the space");
        up[size_t(a)] |= PointSet(1) << b;
    }
    // transitive closure
    for (bool changed = true; changed;) {
        changed = false;
        for (int a = 0; a < p.n; ++a)
            for (int b = 0; b < p.n; ++b)
                if (((up[size_t(a)] >> b) & 1u) && (up[size_t(b)] & ~up[size_t(a)])) {
                    up[size_t(a)] |= up[size_t(b)];
                    changed = true;
                }
    }
    return AlexandrovSpace(p.n, up);
}

}  // namespace

std::vector<NamedSpace> parse_models(const std::string& text, const std::string& file) {
    std::vector<NamedSpace> out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<Pending> cur;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::string where = file + ":" + std::to_string(lineno);
        if (kw == "space") {
            if (cur) throw ModelError(where + ": missing 'end' before new space");
            cur.emplace();
            cur->line = lineno;
            if (!(ls >> cur->name)) throw ModelError(where + ": space needs a name");
            continue;
        }
        if (!cur) throw ModelError(where + ": '" + kw + "' outside a space block");
        if (kw == "points") {
            if (!(ls >> cur->n)) throw ModelError(where + ": points needs a count");
        } else if (kw == "le") {
            int a, b;
            if (!(ls >> a >> b)) throw ModelError(where + ": le needs two point indices");
            cur->pairs.emplace_back(a, b);
        } else if (kw == "domain") {
            std::string d;
            ls >> d;
            auto k = parse_domain(d);
            if (!k) throw ModelError(where + ": unknown domain '" + d + "'");
            cur->domain = *k;
        } else if (kw == "end") {
            out.push_back({cur->name, build(*cur, where), cur->domain});
            cur.reset();
        } else {
            throw ModelError(where + ": unknown keyword '" + kw + "'");
        }
    }
    if (cur) throw ModelError(file + ":" + std::to_string(cur->line) + ": space '" + cur->name + "' has no 'end'");
    return out;
}

std::vector<NamedSpace> load_models(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ModelError("cannot open model file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_models(ss.str(), path);
}

std::string write_model(const NamedSpace& m) {
    std::string out = "space " + m.name + "\npoints " + std::to_string(m.space.size()) + "\n";
    for (auto [p, q] : m.space.order_pairs()) out += "le " + std::to_string(p) + " " + std::to_string(q) + "\n";
    out += "domain " + std::string(domain_name(m.domain)) + "\nend\n";
    return out;
}

}  // namespace topos::oracle
