#include "adrcsim/errors.hpp"

#include <sstream>

namespace adrcsim
{

DivergenceError::DivergenceError(double time, std::string signal)
: std::runtime_error([&] {
    std::ostringstream os;
    os << "divergence: non-finite " << signal << " at t=" << time;
    return os.str();
  }()),
  time_(time),
  signal_(std::move(signal))
{
}

}  // namespace adrcsim
