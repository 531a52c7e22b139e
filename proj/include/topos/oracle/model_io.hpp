#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "topos/oracle/alexandrov.hpp"

namespace topos::oracle {

// Text format, one or more blocks:
//   space <name>
//   points <n>
//   le <p> <q>        # p <= q in the specialization preorder; reflexive-transitive closure is taken
//   domain <all|flag-regular|regular>   # optional, default regular
//   end
struct NamedSpace {
    std::string name;
    AlexandrovSpace space;
    DomainKind domain = DomainKind::Regular;
};

class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<NamedSpace> parse_models(const std::string& text, const std::string& file = "<model>");
std::vector<NamedSpace> load_models(const std::string& path);
std::string write_model(const NamedSpace& m);

}  // namespace topos::oracle
