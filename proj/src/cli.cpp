#include "tgq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tgq/dirlim_suites.hpp"
#include "tgq/egg.hpp"
#include "tgq/gq.hpp"
#include "tgq/io.hpp"
#include "tgq/kernel.hpp"

namespace tgq {

namespace {

KernelMode mode_from_string(const std::string& mode) {
  if (mode == "f") return KernelMode::FOnly;
  if (mode == "fstar") return KernelMode::FAndFStar;
  throw ParseError("unknown kernel mode '" + mode + "' (expected f or fstar)");
}

std::vector<ProjPoint> read_oval_points(const std::string& path, const Fq& fq) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::vector<ProjPoint> pts;
  std::string raw;
  while (std::getline(in, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream is(raw);
    std::uint64_t a, b, c;
    if (is >> a >> b >> c) {
      if (a >= fq.q() || b >= fq.q() || c >= fq.q()) throw ParseError("oval point coordinate out of range");
      pts.push_back({a, b, c});
    }
  }
  if (pts.empty()) throw ParseError("no points in '" + path + "'");
  return pts;
}

void emit_kf_report(Report& report, const KFReport& kf) {
  auto emit = [&](const std::string& name, const KFVerdict& v) {
    if (v.pass) {
      report.pass(name);
      return;
    }
    std::vector<std::string> toks{"kind", v.witness->kind};
    toks.push_back("indices");
    for (auto i : v.witness->indices) toks.push_back(std::to_string(i));
    if (v.witness->element) {
      toks.push_back("g");
      toks.push_back(format_vec(*v.witness->element));
    }
    report.fail(name, std::move(toks));
  };
  emit("kf1", kf.kf1);
  emit("kf2", kf.kf2);
  emit("kf3", kf.kf3);
  emit("kf4", kf.kf4);
  report.info("kf.params", {"s", std::to_string(kf.s), "t", std::to_string(kf.t),
                            std::string("consistent=") + (kf.size_consistent ? "yes" : "no")});
}

void emit_gq_report(Report& report, const GQReport& gq) {
  if (gq.no_digon && gq.no_triangle) {
    report.pass("gq.axiom_i");
  } else if (!gq.no_triangle) {
    const auto& w = *gq.triangle;
    report.fail("gq.axiom_i",
                {"triangle", "points", std::to_string(w.points[0]), std::to_string(w.points[1]),
                 std::to_string(w.points[2]), "lines", std::to_string(w.lines[0]), std::to_string(w.lines[1]),
                 std::to_string(w.lines[2])});
  } else {
    const auto& w = *gq.digon;
    report.fail("gq.axiom_i", {"digon", "points", std::to_string(w.point_a), std::to_string(w.point_b), "lines",
                               std::to_string(w.line_a), std::to_string(w.line_b)});
  }
  if (gq.projection_unique) {
    report.pass("gq.axiom_ii");
  } else {
    const auto& w = *gq.projection;
    report.fail("gq.axiom_ii",
                {"point", std::to_string(w.point), "line", std::to_string(w.line), "count", std::to_string(w.count)});
  }
  switch (gq.thickness) {
    case Thickness::Thick: report.pass("gq.axiom_iii", {"thick"}); break;
    case Thickness::Thin: report.info("gq.axiom_iii", {"thin"}); break;
    default: report.fail("gq.axiom_iii", {"nonconstant-degrees"}); break;
  }
  if (gq.order) {
    report.info("gq.order", {"s", std::to_string(gq.order->first), "t", std::to_string(gq.order->second)});
  }
}

struct GeometryInput {
  CosetGeometry coset;     // populated when the input was a family
  IncidenceStructure inc;  // always populated
  bool has_family = false;
};

GeometryInput load_geometry(const std::string& path) {
  std::ifstream probe(path);
  if (!probe) throw ParseError("cannot open '" + path + "'");
  std::string first_tok;
  probe >> first_tok;
  probe.close();
  GeometryInput in;
  if (first_tok == "KF") {
    KantorFamily fam = parse_kf_file(path);
    in.coset = expand(fam);
    in.inc = in.coset.inc;
    in.has_family = true;
  } else if (first_tok == "INC") {
    in.inc = parse_inc_file(path);
  } else {
    throw ParseError("unrecognized file header in '" + path + "'");
  }
  return in;
}

std::uint32_t resolve_point(const IncidenceStructure& inc, const std::string& token, const std::string& flag) {
  const std::uint32_t idx = inc.find_point(token);
  if (idx == inc.num_points()) throw ParseError("no point labeled '" + token + "' (from " + flag + ")");
  return idx;
}

int finish(const Report& report, std::ostream& out) {
  report.write(out);
  return report.any_fail() ? 1 : 0;
}

// ---------------------------------------------------------------------------

int cmd_build(const std::string& construction, std::uint64_t q, const std::string& oval_kind,
              const std::string& oval_points_path, std::size_t c_index, const std::string& out_path,
              std::ostream& out) {
  FieldSpec field = field_for_order(q);
  KantorFamily fam;
  if (construction == "t2-oval") {
    OvalSpec spec;
    spec.field = field;
    if (!oval_points_path.empty()) {
      spec.kind = OvalSpec::Kind::Explicit;
      Fq fq(field);
      spec.points = read_oval_points(oval_points_path, fq);
    } else if (oval_kind == "conic") {
      spec.kind = OvalSpec::Kind::Conic;
    } else {
      throw ParseError("unknown oval kind '" + oval_kind + "'");
    }
    fam = build_t2_oval(spec);
  } else if (construction == "secant2") {
    fam = build_secant2(field, c_index);
  } else {
    throw ParseError("unknown construction '" + construction + "' (expected t2-oval or secant2)");
  }
  std::ofstream os(out_path);
  if (!os) throw ParseError("cannot write '" + out_path + "'");
  os << serialize_kf(fam);
  Report report;
  report.info("build", {"construction", construction, "q", std::to_string(q), "members",
                        std::to_string(fam.members.size()), "file", out_path});
  return finish(report, out);
}

int cmd_kf_verify(const std::string& path, std::ostream& out) {
  KantorFamily fam = parse_kf_file(path);
  Report report;
  emit_kf_report(report, verify_kf(fam));
  return finish(report, out);
}

int cmd_kf_expand(const std::string& path, const std::string& out_path, std::ostream& out) {
  KantorFamily fam = parse_kf_file(path);
  Report report;
  KFReport kf = verify_kf(fam);
  if (!kf.all_pass()) {
    emit_kf_report(report, kf);
    return finish(report, out);
  }
  CosetGeometry geom = expand(fam, Exec::Parallel, /*waive_verification=*/true);
  std::ofstream os(out_path);
  if (!os) throw ParseError("cannot write '" + out_path + "'");
  os << serialize_inc(geom.inc);
  report.info("expand", {"points", std::to_string(geom.inc.num_points()), "lines",
                         std::to_string(geom.inc.num_lines()), "file", out_path});
  return finish(report, out);
}

int cmd_gq_verify(const std::string& path, std::ostream& out) {
  GeometryInput in = load_geometry(path);
  Report report;
  emit_gq_report(report, verify_gq(in.inc));
  report.info("gq.counts", {"points", std::to_string(in.inc.num_points()), "lines",
                            std::to_string(in.inc.num_lines())});
  return finish(report, out);
}

int cmd_gq_analyze(const std::string& path, bool do_regularity, bool do_symmetry, bool do_core,
                   std::string x_token, std::string z_token, std::ostream& out) {
  GeometryInput in = load_geometry(path);
  Report report;
  if (do_symmetry && !in.has_family) throw ParseError("--symmetry needs a family (.kf) input");
  if (!do_regularity && !do_symmetry && !do_core) do_regularity = do_symmetry = do_core = true;
  if (do_symmetry && !in.has_family) do_symmetry = false;

  if (x_token.empty()) x_token = "inf";
  const std::uint32_t x = resolve_point(in.inc, x_token, "--x");
  std::uint32_t z = in.inc.num_points();
  if (!z_token.empty()) {
    z = resolve_point(in.inc, z_token, "--z");
  } else {
    CollinearityIndex coll(in.inc);
    for (std::uint32_t pt = 0; pt < in.inc.num_points(); ++pt) {
      if (pt != x && !coll.collinear(x, pt)) {
        z = pt;
        break;
      }
    }
    if (z == in.inc.num_points()) throw ParseError("no point noncollinear with '" + x_token + "'");
  }

  if (do_regularity) {
    auto res = is_regular_point(in.inc, x);
    if (res.regular) {
      report.pass("regular_point." + x_token);
    } else {
      auto pair = regular_pair(in.inc, x, *res.witness);
      report.fail("regular_point." + x_token,
                  {"witness", in.inc.point_labels()[*res.witness], "perpperp", std::to_string(pair.perpperp_size)});
    }
  }
  if (do_symmetry) {
    for (std::size_t i = 0; i < in.coset.fam.members.size(); ++i) {
      AxisReport axis = verify_axis_of_symmetry(in.coset, i);
      if (axis.pass()) {
        report.pass("axis_of_symmetry." + std::to_string(i));
      } else {
        std::vector<std::string> toks{"detail", axis.detail.empty() ? "line-not-regular" : axis.detail};
        if (axis.witness_g) {
          toks.push_back("g");
          toks.push_back(format_vec(*axis.witness_g));
        }
        report.fail("axis_of_symmetry." + std::to_string(i), std::move(toks));
      }
    }
  }
  if (do_core) {
    ClosureResult closure = ideal_closure(in.inc, x, z);
    report.info("core.classification",
                {closure_class_name(closure.cls), "points", std::to_string(closure.sub.points.size()), "lines",
                 std::to_string(closure.sub.lines.size())});
    if (closure.cls == ClosureClass::ThinIdeal || closure.cls == ClosureClass::ThickIdeal) {
      if (verify_ideal_subgq(in.inc, closure.sub)) {
        report.pass("core.ideal_subgq");
      } else {
        report.fail("core.ideal_subgq", {"classification-mismatch"});
      }
    }
  }
  return finish(report, out);
}

int cmd_kernel(const std::string& path, const std::string& mode_str, bool do_classify, std::ostream& out) {
  KantorFamily fam = parse_kf_file(path);
  const KernelMode mode = mode_from_string(mode_str);
  KernelRing ring = compute_kernel(fam, mode);
  Report report;
  report.info("kernel.mode", {mode_str});
  report.info("kernel.dim", {std::to_string(ring.dim())});
  report.info("kernel.size", {std::to_string(ring.size())});
  for (const auto& b : ring.basis()) report.info("kernel.basis", {b.format()});
  report.pass("kernel.closure");  // construction verifies ring closure
  if (do_classify) {
    KernelClassification cls = classify(ring);
    report.info("kernel.commutative", {cls.commutative ? "yes" : "no"});
    if (cls.integral_domain) {
      report.info("kernel.integral_domain", {"yes"});
    } else {
      report.info("kernel.integral_domain",
                  {"no", "zero-divisors", cls.zero_divisor_witness->first.format(),
                   cls.zero_divisor_witness->second.format()});
    }
    report.info("kernel.field", {cls.is_field ? "yes" : "no"});
    report.info("kernel.characteristic", {std::to_string(cls.characteristic)});
    report.info("kernel.prime_field_size", {std::to_string(cls.prime_field_size)});
    report.info("kernel.unit_count", {std::to_string(cls.unit_count)});
    InjectivityReport inj = injectivity_check(ring);
    if (inj.all_injective) {
      report.pass("kernel.injectivity");
    } else {
      report.fail("kernel.injectivity", {"element", inj.failures[0].first.format(), "kernel_vector",
                                         format_vec(inj.failures[0].second)});
    }
    // scalar units obey lambda^(p-1) = id
    bool scalars_ok = true;
    for (std::uint32_t lam = 1; lam < fam.p; ++lam) {
      const FpMat s = multiplication_endo(fam, lam);
      if (!s.pow(fam.p - 1).is_identity()) scalars_ok = false;
    }
    if (scalars_ok) {
      report.pass("kernel.scalar_orders");
    } else {
      report.fail("kernel.scalar_orders", {"multiplicative-order-violation"});
    }
  }
  return finish(report, out);
}

int cmd_egg(const std::string& path, const std::string& mode_str, std::ostream& out) {
  KantorFamily fam = parse_kf_file(path);
  KernelRing ring = compute_kernel(fam, mode_from_string(mode_str));
  EggRepresentation egg = build_egg(fam, ring);
  Report report;
  report.info("egg.field", {"size", std::to_string(egg.k_size()), "e", std::to_string(egg.e)});
  report.info("egg.dimension", {"m", std::to_string(egg.m), "n", std::to_string(egg.n)});
  for (std::size_t i = 0; i < egg.members.size(); ++i) {
    report.info("egg.member." + std::to_string(i),
                {"kdim", std::to_string(egg.members[i].kdim_line), "star_kdim",
                 std::to_string(egg.members[i].kdim_star)});
  }
  report.pass("egg.invariants");  // build_egg throws when any invariant fails
  bool perms_ok = true;
  for (const auto& u : ring.units()) {
    auto res = verify_unit_egg_permutation(fam, ring, u);
    if (!res.ok) perms_ok = false;
  }
  if (perms_ok) {
    report.pass("egg.unit_permutations");
  } else {
    report.fail("egg.unit_permutations", {"unit-does-not-permute-members"});
  }
  return finish(report, out);
}

int cmd_chain_verify(const std::string& path, const std::string& mode_str, std::ostream& out) {
  KantorFamily fam = parse_kf_file(path);
  KernelRing ring = compute_kernel(fam, mode_from_string(mode_str));
  CosetGeometry geom = expand(fam);
  Report report;
  const auto units = ring.units();
  report.info("chain.units", {std::to_string(units.size())});
  for (std::size_t k = 0; k < units.size(); ++k) {
    const std::string prefix = "chain.unit." + std::to_string(k);
    const KantorFamily image = image_family(fam, units[k]);
    if (image == fam) {
      report.pass(prefix + ".family_fixpoint");
    } else {
      report.fail(prefix + ".family_fixpoint", {"unit", units[k].format()});
    }
    const auto coll = geom.endo_collineation(units[k]);
    if (geom.is_automorphism(coll)) {
      report.pass(prefix + ".collineation");
    } else {
      report.fail(prefix + ".collineation", {"unit", units[k].format()});
    }
    // image substructure: every point/line reached by the collineation
    Substructure sub;
    sub.points.assign(coll.point_map.begin(), coll.point_map.end());
    std::sort(sub.points.begin(), sub.points.end());
    sub.points.erase(std::unique(sub.points.begin(), sub.points.end()), sub.points.end());
    sub.lines.assign(coll.line_map.begin(), coll.line_map.end());
    std::sort(sub.lines.begin(), sub.lines.end());
    sub.lines.erase(std::unique(sub.lines.begin(), sub.lines.end()), sub.lines.end());
    if (verify_ideal_subgq(geom.inc, sub)) {
      report.pass(prefix + ".ideal_subgq");
    } else {
      report.fail(prefix + ".ideal_subgq", {"unit", units[k].format()});
    }
  }
  return finish(report, out);
}

int cmd_colimit(const std::string& base, const std::string& zeta_text, std::uint32_t depth, bool strictness,
                const std::string& commute_text, std::uint64_t samples, std::uint64_t seed, std::ostream& out) {
  Report report;
  if (depth > 16) throw ParseError("--depth too large (max 16)");

  auto run_z = [&](std::uint32_t rank) {
    MatZ zeta = parse_z_matrix(zeta_text);
    if (zeta.rows() != rank || zeta.cols() != rank) throw ParseError("--zeta shape does not match the base rank");
    ZSystem sys(std::move(zeta));
    report.info("colimit.base", {"Z^" + std::to_string(rank), "det", std::to_string(sys.det())});
    if (strictness) {
      StrictnessReport s = sys.strictness(depth);
      for (const auto& w : s.witnesses) {
        report.info("colimit.strictness.level." + std::to_string(w.level),
                    {"witness", [&] {
                       std::string t;
                       for (std::size_t i = 0; i < w.g.size(); ++i) t += (i ? "," : "") + std::to_string(w.g[i]);
                       return t;
                     }(),
                     "level", std::to_string(w.level)});
      }
      report.info("colimit.strictness", {strictness_verdict_name(s.verdict)});
    }
    if (!commute_text.empty()) {
      MatZ phi = parse_z_matrix(commute_text);
      std::vector<std::vector<std::int64_t>> pts;
      for (std::uint32_t b = 0; b < sys.rank(); ++b) {
        std::vector<std::int64_t> e(sys.rank(), 0);
        e[b] = 1;
        pts.push_back(std::move(e));
      }
      auto res = sys.verify_commuting_square(phi, depth, pts);
      if (res.pass) {
        report.pass("colimit.commuting_square", {"depth", std::to_string(depth)});
      } else {
        report.fail("colimit.commuting_square", {"level", std::to_string(res.level)});
      }
    }
    if (!strictness && commute_text.empty()) {
      auto laws = group_law_suite(sys, samples, seed);
      laws.pass ? report.pass("colimit.group_laws", {"samples", std::to_string(laws.samples)})
                : report.fail("colimit.group_laws", {laws.detail});
      auto alpha = alpha_suite(sys, samples, seed + 1);
      alpha.pass ? report.pass("colimit.alpha_automorphism", {"samples", std::to_string(alpha.samples)})
                 : report.fail("colimit.alpha_automorphism", {alpha.detail});
    }
  };

  auto run_fp = [&](std::uint32_t p, std::uint32_t rank) {
    FpMat zeta = parse_fp_matrix(zeta_text, p);
    if (zeta.rows() != rank || zeta.cols() != rank) throw ParseError("--zeta shape does not match the base rank");
    FpSystem sys(p, std::move(zeta));
    report.info("colimit.base", {"F" + std::to_string(p) + "^" + std::to_string(rank)});
    if (strictness) {
      StrictnessReport s = sys.strictness(depth);
      report.info("colimit.strictness", {strictness_verdict_name(s.verdict)});
    }
    if (!commute_text.empty()) {
      FpMat phi = parse_fp_matrix(commute_text, p);
      std::vector<FpVec> pts;
      for (std::uint32_t b = 0; b < sys.rank(); ++b) {
        FpVec e(sys.rank(), 0);
        e[b] = 1;
        pts.push_back(std::move(e));
      }
      auto res = sys.verify_commuting_square(phi, depth, pts);
      if (res.pass) {
        report.pass("colimit.commuting_square", {"depth", std::to_string(depth)});
      } else {
        report.fail("colimit.commuting_square", {"level", std::to_string(res.level)});
      }
    }
    if (!strictness && commute_text.empty()) {
      auto laws = group_law_suite(sys, samples, seed);
      laws.pass ? report.pass("colimit.group_laws", {"samples", std::to_string(laws.samples)})
                : report.fail("colimit.group_laws", {laws.detail});
      auto alpha = alpha_suite(sys, samples, seed + 1);
      alpha.pass ? report.pass("colimit.alpha_automorphism", {"samples", std::to_string(alpha.samples)})
                 : report.fail("colimit.alpha_automorphism", {alpha.detail});
    }
  };

  // base grammar: Z, Z^r, F<p>^<n>
  if (base == "Z") {
    run_z(1);
  } else if (base.rfind("Z^", 0) == 0) {
    run_z(static_cast<std::uint32_t>(std::stoul(base.substr(2))));
  } else if (base.rfind("F", 0) == 0) {
    const auto caret = base.find('^');
    if (caret == std::string::npos) throw ParseError("finite base must look like F<p>^<n>");
    const std::uint32_t p = static_cast<std::uint32_t>(std::stoul(base.substr(1, caret - 1)));
    const std::uint32_t rank = static_cast<std::uint32_t>(std::stoul(base.substr(caret + 1)));
    if (!is_prime(p)) throw ParseError("finite base characteristic must be prime");
    run_fp(p, rank);
  } else {
    throw ParseError("unknown base '" + base + "' (expected Z, Z^r or F<p>^<n>)");
  }
  return finish(report, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kantor-family quadrangle workbench"};
  app.name("tgq");
  app.require_subcommand(1);

  // build
  auto* build = app.add_subcommand("build", "construct a Kantor family");
  std::string construction = "t2-oval", oval_kind = "conic", oval_points_path, build_out;
  std::uint64_t q = 2;
  std::size_t c_index = 0;
  build->add_option("--construction", construction, "t2-oval or secant2");
  build->add_option("--q", q, "field order (prime power)")->required();
  build->add_option("--oval", oval_kind, "oval kind for t2-oval (conic)");
  build->add_option("--oval-points", oval_points_path, "file with explicit oval points");
  build->add_option("--c-index", c_index, "removed point index for secant2");
  build->add_option("-o,--output", build_out, "output .kf file")->required();

  // kf verify / kf expand
  auto* kf = app.add_subcommand("kf", "Kantor family operations");
  kf->require_subcommand(1);
  auto* kf_verify = kf->add_subcommand("verify", "check the four axioms");
  std::string kf_verify_path;
  kf_verify->add_option("file", kf_verify_path, ".kf input")->required();
  auto* kf_expand = kf->add_subcommand("expand", "expand into the coset geometry");
  std::string kf_expand_path, kf_expand_out;
  kf_expand->add_option("file", kf_expand_path, ".kf input")->required();
  kf_expand->add_option("-o,--output", kf_expand_out, "output .inc file")->required();

  // gq verify / gq analyze
  auto* gq = app.add_subcommand("gq", "incidence structure analysis");
  gq->require_subcommand(1);
  auto* gq_verify = gq->add_subcommand("verify", "check the quadrangle axioms");
  std::string gq_verify_path;
  gq_verify->add_option("file", gq_verify_path, ".inc or .kf input")->required();
  auto* gq_analyze = gq->add_subcommand("analyze", "regularity, symmetry and core analysis");
  std::string gq_analyze_path, x_token, z_token;
  bool do_regularity = false, do_symmetry = false, do_core = false;
  gq_analyze->add_option("file", gq_analyze_path, ".inc or .kf input")->required();
  gq_analyze->add_flag("--regularity", do_regularity, "regular-point check at --x");
  gq_analyze->add_flag("--symmetry", do_symmetry, "axis-of-symmetry checks (needs .kf)");
  gq_analyze->add_flag("--core", do_core, "ideal closure of {--x, --z}");
  gq_analyze->add_option("--x", x_token, "point label (default inf)");
  gq_analyze->add_option("--z", z_token, "point label (default: least point noncollinear with --x)");

  // kernel compute / classify
  auto* kernel = app.add_subcommand("kernel", "kernel ring of a family");
  kernel->require_subcommand(1);
  auto* kernel_compute = kernel->add_subcommand("compute", "solve the preservation constraints");
  auto* kernel_classify = kernel->add_subcommand("classify", "compute and classify the ring");
  std::string kernel_path, kernel_mode = "fstar";
  for (auto* sub : {kernel_compute, kernel_classify}) {
    sub->add_option("file", kernel_path, ".kf input")->required();
    sub->add_option("--mode", kernel_mode, "f or fstar (default fstar)");
  }

  // egg
  auto* egg_cmd = app.add_subcommand("egg", "projective representation over the kernel field");
  std::string egg_path, egg_mode = "fstar";
  egg_cmd->add_option("file", egg_path, ".kf input")->required();
  egg_cmd->add_option("--mode", egg_mode, "f or fstar (default fstar)");

  // chain verify
  auto* chain = app.add_subcommand("chain", "kernel-unit chain checks");
  chain->require_subcommand(1);
  auto* chain_verify = chain->add_subcommand("verify", "image-family fixpoint per kernel unit");
  std::string chain_path, chain_mode = "fstar";
  chain_verify->add_option("file", chain_path, ".kf input")->required();
  chain_verify->add_option("--mode", chain_mode, "f or fstar (default fstar)");

  // colimit
  auto* colimit = app.add_subcommand("colimit", "directed-system checks");
  std::string base = "Z", zeta_text, commute_text;
  std::uint32_t depth = 5;
  bool strictness = false;
  std::uint64_t samples = 1000, seed = 20240301;
  colimit->add_option("--base", base, "Z, Z^r or F<p>^<n>");
  colimit->add_option("--zeta", zeta_text, "matrix, rows ';'-separated")->required();
  colimit->add_option("--depth", depth, "chain depth (default 5)");
  colimit->add_flag("--strictness", strictness, "strict-embedding test per level");
  colimit->add_option("--commute", commute_text, "matrix phi for the commuting-square check");
  colimit->add_option("--samples", samples, "property-suite sample count");
  colimit->add_option("--seed", seed, "property-suite seed");

  std::vector<const char*> argv;
  argv.push_back("tgq");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(construction, q, oval_kind, oval_points_path, c_index, build_out, out);
    if (kf_verify->parsed()) return cmd_kf_verify(kf_verify_path, out);
    if (kf_expand->parsed()) return cmd_kf_expand(kf_expand_path, kf_expand_out, out);
    if (gq_verify->parsed()) return cmd_gq_verify(gq_verify_path, out);
    if (gq_analyze->parsed())
      return cmd_gq_analyze(gq_analyze_path, do_regularity, do_symmetry, do_core, x_token, z_token, out);
    if (kernel_compute->parsed()) return cmd_kernel(kernel_path, kernel_mode, /*do_classify=*/false, out);
    if (kernel_classify->parsed()) return cmd_kernel(kernel_path, kernel_mode, /*do_classify=*/true, out);
    if (egg_cmd->parsed()) return cmd_egg(egg_path, egg_mode, out);
    if (chain_verify->parsed()) return cmd_chain_verify(chain_path, chain_mode, out);
    if (colimit->parsed())
      return cmd_colimit(base, zeta_text, depth, strictness, commute_text, samples, seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace tgq
