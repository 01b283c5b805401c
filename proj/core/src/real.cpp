#include "joints/real.hpp"

#include <sstream>

namespace joints {

std::string format_real(const Real& value, int digits) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(digits);
  os << value;
  return os.str();
}

}  // namespace joints
