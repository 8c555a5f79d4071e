#include "legspec/field.hpp"

#include <string>

#include "legspec/errors.hpp"

namespace legspec {

F2 operator/(F2 a, F2 b) {
  if (b.is_zero()) {
    throw std::domain_error("division by zero in F2");
  }
  return a;
}

std::string_view to_string(Field field) {
  return field == Field::f2 ? "f2" : "q";
}

Field parse_field(std::string_view text) {
  if (text == "f2") return Field::f2;
  if (text == "q") return Field::q;
  throw InputError("field: expected 'f2' or 'q', got '" + std::string(text) + "'");
}

}  // namespace legspec
