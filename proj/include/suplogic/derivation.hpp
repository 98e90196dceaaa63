#pragma once

#include <string>
#include <vector>

#include "suplogic/formula.hpp"

namespace suplogic {

struct Justification {
  enum class Kind { Axiom, MP, Gen, NecO, ReKw };

  Kind kind;
  std::string axiom;      // Kind::Axiom only
  int ref1 = 0, ref2 = 0; // cited line indices (ref2 for MP only)
};

struct DerivationLine {
  int index;
  Formula formula;
  Justification just;
};

struct Derivation {
  std::vector<DerivationLine> lines;
};

}  // namespace suplogic
