#include "atanderiv/report.hpp"

#include <sstream>

namespace atanderiv {

std::string describe(Mismatch const& mm) {
    std::ostringstream os;
    os << mm.label << " mismatch at n=" << mm.n;
    if (mm.m) os << " m=" << *mm.m;
    if (mm.point) os << " x=" << *mm.point;
    os << ": " << mm.lhs << " != " << mm.rhs;
    return os.str();
}

}  // namespace atanderiv
