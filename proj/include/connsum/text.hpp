#pragma once

#include <string>

#include "connsum/core.hpp"
#include "connsum/relation.hpp"

namespace connsum {

std::string to_text(const Pair& p);
std::string to_text(const ZTerm& t);
std::string to_text(const ZExpr& e);
std::string to_text(const MplTerm& m);
std::string to_text(const MplExpr& e);
std::string to_text(const Relation& r);

}  // namespace connsum
