#include "eulerian/variables.hpp"

namespace eulerian {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::X: return "x";
    case Var::T: return "t";
    case Var::Lambda: return "\xce\xbb";  // λ
    case Var::U: return "u";
    case Var::Q: return "q";
  }
  return "?";
}

std::optional<Var> var_from_name(std::string_view name) {
  if (name == "x") return Var::X;
  if (name == "t") return Var::T;
  if (name == "\xce\xbb" || name == "lambda") return Var::Lambda;
  if (name == "u") return Var::U;
  if (name == "q") return Var::Q;
  return std::nullopt;
}

}  // namespace eulerian
