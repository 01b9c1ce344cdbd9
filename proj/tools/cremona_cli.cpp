// Command-line front end: catalog construction, classification, Burnside
// invariants, orbit scans, map verification, and conjugacy decisions.
// Output is plain text or line-oriented key=value records (--format lines),
// deterministic for identical inputs.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cremona/burnside.hpp"
#include "cremona/catalog.hpp"
#include "cremona/classify.hpp"
#include "cremona/decide.hpp"
#include "cremona/io.hpp"
#include "cremona/ratmap.hpp"

using namespace cremona;

namespace {

struct Options {
  std::string format = "text";
  long order_bound = 20000;
  bool lines() const { return format == "lines"; }
};

void print_kv(const Options& opt, const std::string& key, const std::string& value) {
  if (opt.lines())
    std::cout << key << "=" << value << "\n";
  else
    std::cout << key << ": " << value << "\n";
}

std::string type_name(ActionTypeTag t) {
  switch (t) {
    case ActionTypeTag::I: return "I";
    case ActionTypeTag::T: return "T";
    case ActionTypeTag::P: return "P";
  }
  return "?";
}

int cmd_catalog(const Options& opt, const std::string& family, FamilySpec sp,
                const std::string& out) {
  auto fam = family_from_string(family);
  if (!fam) {
    std::cerr << "unknown family " << family << "\n";
    return 64;
  }
  sp.family = *fam;
  auto violations = validate(sp);
  if (!violations.empty()) {
    for (const auto& v : violations) print_kv(opt, "violation", v);
    return 1;
  }
  GroupAction g = build(sp);
  if (!out.empty()) {
    write_action_file(out, g);
    print_kv(opt, "written", out);
  }
  print_kv(opt, "order", std::to_string(g.group.size()));
  if (!g.note.empty()) print_kv(opt, "note", g.note);
  return 0;
}

int cmd_classify(const Options& opt, const GroupAction& g) {
  ActionType t = action_type(g);
  print_kv(opt, "type", type_name(t.tag));
  if (t.tag == ActionTypeTag::I) {
    print_kv(opt, "fixed_point", t.fixed_points.front().str());
    IntransitiveData d = intransitive_data(g);
    print_kv(opt, "line", d.line.str());
    print_kv(opt, "t", std::to_string(d.t));
    print_kv(opt, "chi", std::to_string(d.chi));
    std::string gbar = residual_tag_name(d.residual_tag);
    if (d.residual_tag == ResidualTag::Cyclic)
      gbar += std::to_string(d.residual_order);
    if (d.residual_tag == ResidualTag::Dihedral)
      gbar += std::to_string(d.residual_order / 2);
    print_kv(opt, "Gbar", gbar);
  } else if (t.tag == ActionTypeTag::T) {
    std::string orbit_str;
    for (const auto& p : t.witness_orbit) orbit_str += p.str();
    print_kv(opt, "witness_orbit", orbit_str);
  }
  return 0;
}

int cmd_invariants(const Options& opt, const GroupAction& g) {
  print_kv(opt, "order", std::to_string(g.group.size()));
  GroupTable t = GroupTable::from_group(g.group);
  print_kv(opt, "abelian", t.is_abelian() ? "yes" : "no");
  std::string orders;
  long last = -1, count = 0;
  for (long o : t.element_orders()) {
    if (o != last) {
      if (count) orders += std::to_string(last) + "^" + std::to_string(count) + " ";
      last = o;
      count = 0;
    }
    ++count;
  }
  if (count) orders += std::to_string(last) + "^" + std::to_string(count);
  print_kv(opt, "element_orders", orders);
  return cmd_classify(opt, g);
}

int cmd_burnside(const Options& opt, const GroupAction& g) {
  try {
    BurnsideClass c = burnside_class(g);
    std::cout << class_to_text(c);
    return 0;
  } catch (const NotApplicable& e) {
    print_kv(opt, "error", e.what());
    return 1;
  }
}

int cmd_orbits(const Options& opt, const GroupAction& g, long max_len) {
  auto orbs = small_orbits(g.group, max_len);
  long finite = 0;
  for (const auto& r : orbs) {
    if (r.is_family) {
      print_kv(opt, "family",
               "length=" + std::to_string(r.length) + " line=" + r.family_line.str());
      continue;
    }
    ++finite;
    std::string pts;
    for (const auto& p : r.points) pts += p.str();
    auto gp = general_position(r.points);
    print_kv(opt, "orbit",
             "length=" + std::to_string(r.length) +
                 " collinear=" + (gp.any_three_collinear ? "yes" : "no") +
                 " conic=" + (gp.on_common_conic ? "yes" : "no") + " points=" + pts);
  }
  print_kv(opt, "orbits", std::to_string(finite));
  return 0;
}

int cmd_verify_map(const Options& opt, const RationalMap& f, const GroupAction& a,
                   const GroupAction* b) {
  const GroupAction& target = b ? *b : a;
  auto cert = equivariance_certificate(f, a, target);
  if (!cert.ok) {
    print_kv(opt, "verified", "no");
    print_kv(opt, "failure", cert.failure);
    return 1;
  }
  print_kv(opt, "verified", "yes");
  print_kv(opt, "psi_identity_on_generators",
           cert.psi_is_identity_on_gens ? "yes" : "no");
  std::string images;
  for (int i : cert.psi_gen_images) images += std::to_string(i) + " ";
  print_kv(opt, "psi_generator_images", images);
  return 0;
}

void emit_certificate(const std::string& path, const Verdict& v,
                      const GroupAction& b) {
  std::ofstream out(path);
  out << "kind: " << v.certificate_kind << "\n";
  if (v.certificate_kind == "pgl") {
    out << "conjugator:\n" << map_to_text(RationalMap::from_matrix(v.pgl_conjugator.mat()));
  }
  for (std::size_t i = 0; i < v.chain.size(); ++i) {
    out << "map " << (i + 1) << " of " << v.chain.size() << ":\n";
    out << map_to_text(v.chain[i]);
  }
  if (!v.psi_gen_images.empty()) {
    out << "psi:";
    for (std::size_t k = 0; k < v.psi_gen_images.size(); ++k)
      out << " " << b.gen_names[k] << "->elt" << v.psi_gen_images[k];
    out << "\n";
  }
  if (!v.detail.empty()) out << "detail: " << v.detail << "\n";
}

int cmd_decide(const Options& opt, const GroupAction& a, const GroupAction& b,
               bool up_to_aut, const std::string& cert_path) {
  Verdict v = decide_cr2(a, b, up_to_aut ? CompareMode::UpToAut : CompareMode::Strict);
  print_kv(opt, "answer", answer_name(v.answer));
  if (!v.invariant.empty()) print_kv(opt, "invariant", v.invariant);
  if (!v.detail.empty()) print_kv(opt, "detail", v.detail);
  if (v.certificate_kind == "chain") {
    print_kv(opt, "chain_length", std::to_string(v.chain.size()));
    print_kv(opt, "chain_verified", verify_chain(v, a, b) ? "yes" : "no");
  }
  if (!cert_path.empty() && v.answer != Answer::NotConjugate &&
      v.answer != Answer::OutOfScope) {
    emit_certificate(cert_path, v, b);
    print_kv(opt, "certificate", cert_path);
  }
  switch (v.answer) {
    case Answer::ConjugateInPGL3:
    case Answer::ConjugateInCr2: return 0;
    case Answer::NotConjugate: return 1;
    case Answer::OutOfScope: return 2;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for linear actions on the plane and their Cremona conjugacy"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "text or lines")
      ->check(CLI::IsMember({"text", "lines"}));
  app.add_option("--order-bound", opt.order_bound, "group closure bound");

  // catalog
  auto* cat = app.add_subcommand("catalog", "build a classified family member");
  std::string family, out_path;
  FamilySpec sp;
  cat->add_option("family", family)->required();
  cat->add_option("--n", sp.n);
  cat->add_option("--r", sp.r);
  cat->add_option("--m", sp.m);
  cat->add_option("--s", sp.s);
  cat->add_option("--t1", sp.t1);
  cat->add_option("--t2", sp.t2);
  cat->add_option("--t3", sp.t3);
  cat->add_option("--t4", sp.t4);
  cat->add_option("--out", out_path);

  auto add_file_cmd = [&](const char* name, const char* desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("action", "action file")->required();
    return c;
  };
  std::string file_a, file_b, map_path, cert_path;
  long max_len = 8;
  bool up_to_aut = false, birational = false;

  auto* cls = app.add_subcommand("classify", "type and intransitive invariants");
  cls->add_option("action", file_a)->required();
  auto* inv = app.add_subcommand("invariants", "order, element orders, classification");
  inv->add_option("action", file_a)->required();
  auto* burn = app.add_subcommand("burnside", "incompressible Burnside class");
  burn->add_option("action", file_a)->required();
  auto* orb = app.add_subcommand("orbits", "orbits of bounded length");
  orb->add_option("action", file_a)->required();
  orb->add_option("--max-len", max_len);
  auto* ver = app.add_subcommand("verify-map", "equivariance certificate for a map");
  ver->add_option("map", map_path)->required();
  ver->add_option("actionA", file_a)->required();
  ver->add_option("actionB", file_b);
  auto* dec = app.add_subcommand("decide", "conjugacy of two matched actions");
  dec->add_option("fileA", file_a)->required();
  dec->add_option("fileB", file_b)->required();
  dec->add_flag("--up-to-aut", up_to_aut);
  dec->add_option("--emit-certificate", cert_path);
  auto* nf = app.add_subcommand("normalizer-finite", "Cremona normalizer finiteness");
  nf->add_option("action", file_a)->required();
  auto* cnt = app.add_subcommand("count-actions", "number of actions, when tabulated");
  cnt->add_option("action", file_a)->required();
  cnt->add_flag("--birational", birational);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  try {
    if (cat->parsed()) return cmd_catalog(opt, family, sp, out_path);
    GroupAction a = read_action_file(file_a, opt.order_bound);
    if (cls->parsed()) return cmd_classify(opt, a);
    if (inv->parsed()) return cmd_invariants(opt, a);
    if (burn->parsed()) return cmd_burnside(opt, a);
    if (orb->parsed()) return cmd_orbits(opt, a, max_len);
    if (ver->parsed()) {
      RationalMap f = read_map_file(map_path);
      if (!file_b.empty()) {
        GroupAction b = read_action_file(file_b, opt.order_bound);
        return cmd_verify_map(opt, f, a, &b);
      }
      return cmd_verify_map(opt, f, a, nullptr);
    }
    if (dec->parsed()) {
      GroupAction b = read_action_file(file_b, opt.order_bound);
      return cmd_decide(opt, a, b, up_to_aut, cert_path);
    }
    if (nf->parsed()) {
      print_kv(opt, "normalizer_finite", normalizer_finite(a) ? "yes" : "no");
      return 0;
    }
    if (cnt->parsed()) {
      auto c = count_actions(a, birational);
      print_kv(opt, "count", c.known ? std::to_string(c.count) : "Unknown");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 64;
}
