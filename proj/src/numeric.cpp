#include "wdp/numeric.hpp"

namespace wdp {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("malformed rational: empty string");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw Error("malformed rational: \"" + s + "\"");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("malformed rational: \"" + s + "\"");
  if (q.get_den() == 0) throw Error("malformed rational: zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Vec3q normalize_homogeneous(const Vec3q& p) {
  for (size_t i = 0; i < 3; ++i) {
    if (p[i] != 0) {
      Vec3q r;
      for (size_t j = 0; j < 3; ++j) r[j] = p[j] / p[i];
      return r;
    }
  }
  throw Error("degenerate homogeneous triple (0:0:0)");
}

Rat dot(const Vec3q& a, const Vec3q& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool proportional(const Vec3q& a, const Vec3q& b) {
  if (a.is_zero() || b.is_zero()) return false;
  return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

Vec3q line_through(const Vec3q& p, const Vec3q& q) {
  Vec3q l = vec3(p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]);
  if (l.is_zero()) throw Error("line through coincident points");
  return l;
}

}  // namespace wdp
