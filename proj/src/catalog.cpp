#include "cremona/catalog.hpp"

#include <cstdlib>
#include <numeric>

#include "cremona/classify.hpp"
#include "cremona/io.hpp"
#include "cremona/ratmap.hpp"

namespace cremona {

namespace {

Transform sigma123() {
  Mat m(3);
  m.at(0, 1) = Cyclo(1);
  m.at(1, 2) = Cyclo(1);
  m.at(2, 0) = Cyclo(1);
  return Transform(m);
}

Transform sigma12() {
  Mat m(3);
  m.at(0, 1) = Cyclo(1);
  m.at(1, 0) = Cyclo(1);
  m.at(2, 2) = Cyclo(1);
  return Transform(m);
}

Transform diag(const Cyclo& a, const Cyclo& b, const Cyclo& c) {
  return Transform(Mat::diagonal({a, b, c}));
}

// chi_r with weight t1: (x1, z_r^t1 x2, z_r^t1 x3)
Transform chi_gen(long r, long t1) {
  Cyclo z = Cyclo::zeta(r, t1 % r < 0 ? t1 % r + r : t1 % r);
  return diag(Cyclo(1), z, z);
}

// (x1, u x3, u x2)
Transform swap23(const Cyclo& u) {
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 2) = u;
  m.at(2, 1) = u;
  return Transform(m);
}

// (x1, s w^2 x2, s(w x3 - x2)) with w = zeta_3
Transform a4_rotation(const Cyclo& s) {
  Cyclo w = Cyclo::zeta(3);
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 1) = s * w * w;
  m.at(2, 1) = -s;
  m.at(2, 2) = s * w;
  return Transform(m);
}

// (x1, x3, -x2)
Transform a4_involution() {
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 2) = Cyclo(1);
  m.at(2, 1) = Cyclo(-1);
  return Transform(m);
}

// (x1, u(-2 x2 + s1 x3), u(s2 x2 + 2 x3))
Transform s4_rotation(const Cyclo& u) {
  Cyclo z8 = Cyclo::zeta(8);
  Cyclo s1 = z8.pow(3) + z8 - Cyclo(1);
  Cyclo s2 = z8.pow(3) + z8 + Cyclo(1);
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 1) = -Cyclo(2) * u;
  m.at(1, 2) = s1 * u;
  m.at(2, 1) = s2 * u;
  m.at(2, 2) = Cyclo(2) * u;
  return Transform(m);
}

// (x1, -s2 x2 - x3, s1 x2 + (s1+1) x3)
Transform s4_involution() {
  Cyclo z8 = Cyclo::zeta(8);
  Cyclo s1 = z8.pow(3) + z8 - Cyclo(1);
  Cyclo s2 = z8.pow(3) + z8 + Cyclo(1);
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 1) = -s2;
  m.at(1, 2) = Cyclo(-1);
  m.at(2, 1) = s1;
  m.at(2, 2) = s1 + Cyclo(1);
  return Transform(m);
}

Transform a5_gen_a() {
  Cyclo z = Cyclo::zeta(5);
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 1) = z.pow(3) + z.pow(4);
  m.at(1, 2) = -(z.pow(4) + Cyclo(1));
  m.at(2, 1) = z.pow(3);
  m.at(2, 2) = z.pow(2) + z;
  return Transform(m);
}

Transform a5_gen_b() {
  Cyclo z = Cyclo::zeta(5);
  Mat m(3);
  m.at(0, 0) = Cyclo(1);
  m.at(1, 2) = z.pow(2);
  m.at(2, 1) = -z.pow(3);
  return Transform(m);
}

long norm_mod(long v, long mod) {
  v %= mod;
  return v < 0 ? v + mod : v;
}

long pow2(long e) { return 1L << e; }

long pow_base(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool coprime(long a, long b) { return std::gcd(norm_mod(a, b) == 0 ? b : a, b) == 1; }

std::string primitive_file(Family f) {
  switch (f) {
    case Family::PRIM_A5: return "prim_a5.action";
    case Family::PRIM_A6: return "prim_a6.action";
    case Family::PRIM_PSL27: return "prim_psl27.action";
    case Family::PRIM_HESSIAN: return "prim_hessian.action";
    case Family::PRIM_PSU3F2: return "prim_psu3f2.action";
    case Family::PRIM_C32C4: return "prim_c32c4.action";
    default: return "";
  }
}

}  // namespace

std::string family_to_string(Family f) {
  switch (f) {
    case Family::IMPRIM_CN2_C3: return "IMPRIM_CN2_C3";
    case Family::IMPRIM_CN2_S3: return "IMPRIM_CN2_S3";
    case Family::IMPRIM_CNCNR_C3: return "IMPRIM_CNCNR_C3";
    case Family::IMPRIM_CNCN3_S3: return "IMPRIM_CNCN3_S3";
    case Family::INTR_CYCLIC: return "INTR_CYCLIC";
    case Family::INTR_DN_ODD: return "INTR_DN_ODD";
    case Family::INTR_DN_EVEN_A: return "INTR_DN_EVEN_A";
    case Family::INTR_DN_EVEN_B: return "INTR_DN_EVEN_B";
    case Family::INTR_DN_EVEN_C: return "INTR_DN_EVEN_C";
    case Family::INTR_A4_A: return "INTR_A4_A";
    case Family::INTR_A4_B: return "INTR_A4_B";
    case Family::INTR_S4: return "INTR_S4";
    case Family::INTR_A5: return "INTR_A5";
    case Family::PRIM_A5: return "PRIM_A5";
    case Family::PRIM_A6: return "PRIM_A6";
    case Family::PRIM_PSL27: return "PRIM_PSL27";
    case Family::PRIM_HESSIAN: return "PRIM_HESSIAN";
    case Family::PRIM_PSU3F2: return "PRIM_PSU3F2";
    case Family::PRIM_C32C4: return "PRIM_C32C4";
  }
  return "?";
}

std::vector<Family> all_families() {
  return {Family::IMPRIM_CN2_C3, Family::IMPRIM_CN2_S3, Family::IMPRIM_CNCNR_C3,
          Family::IMPRIM_CNCN3_S3, Family::INTR_CYCLIC, Family::INTR_DN_ODD,
          Family::INTR_DN_EVEN_A, Family::INTR_DN_EVEN_B, Family::INTR_DN_EVEN_C,
          Family::INTR_A4_A, Family::INTR_A4_B, Family::INTR_S4, Family::INTR_A5,
          Family::PRIM_A5, Family::PRIM_A6, Family::PRIM_PSL27,
          Family::PRIM_HESSIAN, Family::PRIM_PSU3F2, Family::PRIM_C32C4};
}

std::optional<Family> family_from_string(const std::string& s) {
  for (Family f : all_families())
    if (family_to_string(f) == s) return f;
  return std::nullopt;
}

std::vector<std::string> validate(const FamilySpec& spec) {
  std::vector<std::string> v;
  auto need = [&](bool ok, const std::string& msg) {
    if (!ok) v.push_back(msg);
  };
  switch (spec.family) {
    case Family::IMPRIM_CN2_C3:
    case Family::IMPRIM_CN2_S3:
      need(spec.n >= 1, "n >= 1");
      break;
    case Family::IMPRIM_CNCNR_C3:
      need(spec.n >= 1, "n >= 1");
      need(spec.r >= 1, "r >= 1");
      need(spec.r >= 1 && spec.n % spec.r == 0, "r | n");
      need(spec.r >= 1 &&
               norm_mod(spec.s * spec.s - spec.s + 1, spec.r) == 0,
           "s^2 - s + 1 == 0 (mod r)");
      break;
    case Family::IMPRIM_CNCN3_S3:
      need(spec.n >= 3, "n >= 3");
      need(spec.n % 3 == 0, "3 | n");
      break;
    case Family::INTR_CYCLIC:
      need(spec.n >= 1, "n >= 1");
      need(spec.r >= 1, "r >= 1");
      need(spec.m >= 0, "m >= 0");
      break;
    case Family::INTR_DN_ODD:
      need(spec.n >= 3 && spec.n % 2 == 1, "n odd, n >= 3");
      need(spec.r >= 1, "r >= 1");
      need(spec.m >= 0, "m >= 0");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(coprime(spec.t2, spec.m >= 1 ? 2 * spec.n : spec.n),
           "t2 primitive");
      if (spec.m >= 1) need(coprime(spec.t3, pow2(spec.m)), "t3 primitive mod 2^m");
      break;
    case Family::INTR_DN_EVEN_A:
      need(spec.n >= 2 && spec.n % 2 == 0, "n even, n >= 2");
      need(spec.r >= 1, "r >= 1");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(coprime(spec.t2, 2 * spec.n), "t2 primitive mod 2n");
      break;
    case Family::INTR_DN_EVEN_B:
      need(spec.n >= 2 && spec.n % 2 == 0, "n even, n >= 2");
      need(spec.r >= 1, "r >= 1");
      need(spec.m >= 1, "m >= 1");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(coprime(spec.t2, 2 * spec.n), "t2 primitive mod 2n");
      need(coprime(spec.t3, pow2(spec.m + 1)), "t3 primitive mod 2^(m+1)");
      break;
    case Family::INTR_DN_EVEN_C:
      need(spec.n >= 4 && spec.n % 2 == 0, "n even, n != 2");
      need(spec.r >= 1, "r >= 1");
      need(spec.m >= 1, "m >= 1");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(coprime(spec.t2, 2 * spec.n), "t2 primitive mod 2n");
      need(coprime(spec.t4, pow2(spec.m + 1)), "t4 primitive mod 2^(m+1)");
      break;
    case Family::INTR_A4_A:
      need(spec.r >= 1, "r >= 1");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(spec.t2 >= 0 && spec.t2 <= 2, "t2 in {0,1,2}");
      break;
    case Family::INTR_A4_B:
      need(spec.r >= 1, "r >= 1");
      need(spec.m >= 1, "m >= 1");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(spec.t2 >= 0 && spec.t2 <= 2, "t2 in {0,1,2}");
      need(coprime(spec.t3, pow_base(3, spec.m + 1)), "t3 primitive mod 3^(m+1)");
      break;
    case Family::INTR_S4:
      need(spec.r >= 1, "r >= 1");
      need(spec.m >= 0, "m >= 0");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      need(coprime(spec.t2, pow2(spec.m + 1)), "t2 primitive mod 2^(m+1)");
      need(spec.t3 % 2 == 1, "t3 primitive mod 4");
      break;
    case Family::INTR_A5:
      need(spec.r >= 1, "r >= 1");
      need(coprime(spec.t1, spec.r), "t1 primitive mod r");
      break;
    case Family::PRIM_A5:
    case Family::PRIM_A6:
    case Family::PRIM_PSL27:
    case Family::PRIM_HESSIAN:
    case Family::PRIM_PSU3F2:
    case Family::PRIM_C32C4:
      break;
  }
  return v;
}

std::string data_directory() {
  if (const char* env = std::getenv("CREMONA_DATA_DIR")) return env;
#ifdef CREMONA_DATA_DIR
  return CREMONA_DATA_DIR;
#else
  return "data";
#endif
}

GroupAction build(const FamilySpec& spec) {
  auto violations = validate(spec);
  if (!violations.empty()) {
    std::string msg = family_to_string(spec.family) + ":";
    for (const auto& s : violations) msg += " " + s + ";";
    throw InvalidParams(msg);
  }
  Cyclo one(1);
  switch (spec.family) {
    case Family::IMPRIM_CN2_C3:
      return make_action({"d1", "c"},
                         {diag(Cyclo::zeta(spec.n), one, one), sigma123()});
    case Family::IMPRIM_CN2_S3:
      return make_action(
          {"d1", "c", "t"},
          {diag(Cyclo::zeta(spec.n), one, one), sigma123(), sigma12()});
    case Family::IMPRIM_CNCNR_C3: {
      long s = norm_mod(spec.s, spec.r == 0 ? 1 : spec.r);
      long alt = norm_mod(1 - s, spec.r == 0 ? 1 : spec.r);
      std::string note;
      if (spec.r > 1 && alt < s) {
        note = "normalized s from " + std::to_string(s) + " to " +
               std::to_string(alt) + "; sigma_12 conjugates the two choices";
        s = alt;
      }
      GroupAction a = make_action(
          {"d1", "d2", "c"},
          {diag(Cyclo::zeta(spec.n, spec.r), one, one),
           diag(Cyclo::zeta(spec.n, s), Cyclo::zeta(spec.n), one), sigma123()});
      a.note = note;
      return a;
    }
    case Family::IMPRIM_CNCN3_S3:
      return make_action(
          {"d1", "d2", "c", "t"},
          {diag(Cyclo::zeta(spec.n, 3), one, one),
           diag(Cyclo::zeta(spec.n, 2), Cyclo::zeta(spec.n), one), sigma123(),
           sigma12()});
    case Family::INTR_CYCLIC:
      return make_action(
          {"chi", "d"},
          {chi_gen(spec.r, spec.t1),
           diag(one, Cyclo::zeta(spec.n, spec.r), Cyclo::zeta(spec.n, spec.m))});
    case Family::INTR_DN_ODD: {
      long base = spec.m >= 1 ? 2 * spec.n : spec.n;
      Cyclo w = Cyclo::zeta(base, spec.t2);
      Cyclo u = spec.m >= 1 ? Cyclo::zeta(pow2(spec.m), spec.t3) : one;
      return make_action({"chi", "rot", "ref"},
                         {chi_gen(spec.r, spec.t1),
                          diag(one, w, w.inverse()), swap23(u)});
    }
    case Family::INTR_DN_EVEN_A: {
      Cyclo w = Cyclo::zeta(2 * spec.n, spec.t2);
      return make_action({"chi", "rot", "ref"},
                         {chi_gen(spec.r, spec.t1), diag(one, w, w.inverse()),
                          swap23(Cyclo::zeta(4))});
    }
    case Family::INTR_DN_EVEN_B: {
      Cyclo w = Cyclo::zeta(2 * spec.n, spec.t2);
      Cyclo v = Cyclo::zeta(pow2(spec.m + 1), spec.t3);
      return make_action({"chi", "rot", "ref"},
                         {chi_gen(spec.r, spec.t1),
                          diag(one, v * w, v * w.inverse()),
                          swap23(Cyclo::zeta(4))});
    }
    case Family::INTR_DN_EVEN_C: {
      Cyclo w = Cyclo::zeta(2 * spec.n, spec.t2);
      Cyclo v = Cyclo::zeta(pow2(spec.m + 1), spec.t4);
      return make_action({"chi", "rot", "ref"},
                         {chi_gen(spec.r, spec.t1), diag(one, w, w.inverse()),
                          swap23(v * Cyclo::zeta(4))});
    }
    case Family::INTR_A4_A:
      return make_action({"chi", "a", "b"},
                         {chi_gen(spec.r, spec.t1),
                          a4_rotation(Cyclo::zeta(3, spec.t2)), a4_involution()});
    case Family::INTR_A4_B: {
      Cyclo s = Cyclo::zeta(pow_base(3, spec.m + 1), spec.t3) * Cyclo::zeta(3, spec.t2);
      return make_action({"chi", "a", "b"},
                         {chi_gen(spec.r, spec.t1), a4_rotation(s), a4_involution()});
    }
    case Family::INTR_S4: {
      Cyclo u = Cyclo::zeta(pow2(spec.m + 1), spec.t2) * Cyclo::zeta(4, spec.t3);
      return make_action({"chi", "a", "b"},
                         {chi_gen(spec.r, spec.t1), s4_rotation(u), s4_involution()});
    }
    case Family::INTR_A5:
      return make_action({"chi", "a", "b"},
                         {chi_gen(spec.r, spec.t1), a5_gen_a(), a5_gen_b()});
    case Family::PRIM_A5:
    case Family::PRIM_A6:
    case Family::PRIM_PSL27:
    case Family::PRIM_HESSIAN:
    case Family::PRIM_PSU3F2:
    case Family::PRIM_C32C4:
      return read_action_file(data_directory() + "/" + primitive_file(spec.family));
  }
  throw InvalidParams("unknown family");
}

bool normalizer_finite(const GroupAction& g) {
  ActionType type = action_type(g);
  if (type.tag == ActionTypeTag::I) return false;
  GroupTable t = GroupTable::from_group(g.group);
  GroupSignature sig = signature_of(t);
  if (sig == signature_a4() || sig == signature_c3c3() || sig == signature_c3_s3() ||
      sig == signature_c7_c3() || sig == signature_c32_c4())
    return false;
  return true;
}

}  // namespace cremona
