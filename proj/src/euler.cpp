#include "asymcone/euler.hpp"

namespace asymcone {

Int complement_euler(const IntersectionPoset& p) {
  return char_poly(p).eval(1);
}

Int complement_euler(const Arrangement& a) {
  return complement_euler(build_poset(a));
}

Int decone_euler(const IntersectionPoset& p) {
  return divide_by_t_minus_1(char_poly(p)).eval(1);
}

Int decone_euler(const Arrangement& a) {
  return decone_euler(build_poset(a));
}

Int milnor_euler(const IntersectionPoset& p) {
  return p.arrangement.total_degree() * decone_euler(p);
}

Int milnor_euler(const Arrangement& a) {
  return milnor_euler(build_poset(a));
}

Int milnor_euler_localized(const IntersectionPoset& p, int i) {
  Polynomial q = divide_by_t_minus_1(char_poly_localized(p, i));
  return p.localized_degree(i) * q.eval(1);
}

}  // namespace asymcone
