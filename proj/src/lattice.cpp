#include "puregaps/lattice.hpp"

namespace puregaps {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) { return os << '(' << p.a << ',' << p.b << ')'; }

}  // namespace puregaps
