#include "pleb/fiber.hpp"

namespace pleb {

int space_dim(Space s) {
  switch (s) {
    case Space::TM: return 4;
    case Space::S: return 13;
    case Space::E: return 3;
    case Space::EL1: return 12;
    case Space::ETF: return 18;
    case Space::SE: return 16;
    case Space::TA: return 16;
    case Space::SPLIT: return 16;
  }
  return 0;
}

const char* space_name(Space s) {
  switch (s) {
    case Space::TM: return "TM";
    case Space::S: return "S";
    case Space::E: return "E";
    case Space::EL1: return "EL1";
    case Space::ETF: return "ETF";
    case Space::SE: return "SE";
    case Space::TA: return "TA";
    case Space::SPLIT: return "SPLIT";
  }
  return "?";
}

}  // namespace pleb
