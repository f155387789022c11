#include "bitblas/semiring.hpp"

#include "bitblas/error.hpp"

namespace bitblas {

Semiring Semiring::min_plus(double edge_increment) {
  if (edge_increment != 0.0 && edge_increment != 1.0)
    throw ParameterError("min-plus edge increment must be 0 or 1");
  return {Kind::MinPlus, edge_increment};
}

std::string Semiring::name() const {
  switch (kind) {
    case Kind::Boolean:
      return "boolean";
    case Kind::Arithmetic:
      return "arithmetic";
    case Kind::MinPlus:
      return edge_increment == 0.0 ? "min-plus(0)" : "min-plus(1)";
    case Kind::MaxTimes:
      return "max-times";
  }
  return "unknown";
}

}  // namespace bitblas
