#include <chrono>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "canext/canext.hpp"

using namespace canext;
using report::Json;

namespace {

enum Exit { pass = 0, claim_failure = 1, input_error = 2 };

struct Invocation {
  Json report = Json::object();
  int exit_code = Exit::pass;

  void input(const std::string& path, const std::string& bytes) {
    report["inputs"].push_back({{"path", path}, {"fnv1a", report::digest(bytes)}});
  }
};

struct Loaded {
  Lattice lattice;
  std::string text;
};

Loaded load(Invocation& inv, const std::string& path) {
  const std::string text = io::read_file(path);
  inv.input(path, text);
  return {io::load_lattice(text), text};
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

void emit_dot(Invocation& inv, const std::string& dir, const std::string& base, const Completion& c) {
  std::filesystem::create_directories(dir);
  const auto src = (std::filesystem::path(dir) / (base + ".source.dot")).string();
  const auto dst = (std::filesystem::path(dir) / (base + ".target.dot")).string();
  report::write_text(src, report::hasse_dot(c.L(), base + " source"));
  const ElementSet image = c.image();
  report::write_text(dst, report::hasse_dot(c.C(), base + " target", &image));
  inv.report["dot"] = {src, dst};
}

// canext / macneille

void completion_command(Invocation& inv, const std::string& path, bool macneille, bool dot, const std::string& dot_dir) {
  const auto in = load(inv, path);
  const auto L = share(in.lattice);
  const Completion c = macneille ? macneille_completion(L) : canonical_extension(L);
  Json r = report::completion_json(c);
  r["isomorphic_to_source"] = isomorphic(c.C(), c.L().without_operations());
  inv.report["result"] = r;
  if (dot) emit_dot(inv, dot_dir, stem(path), c);
}

// envelope

void envelope_command(Invocation& inv, const std::string& path, const std::string& op, const std::string& completion,
                      bool certify) {
  const auto in = load(inv, path);
  const auto L = share(in.lattice);
  const Operation& operation = L->operation(op);
  const Completion c = completion == "identity" ? identity_completion(L) : canonical_extension(L);
  const auto e = operation_envelopes(c, op);
  const Lattice& Csrc = e.src->C();
  const Lattice& Cdst = e.dst->C();
  Json r;
  r["operation"] = {{"name", op}, {"arity", operation.arity}};
  Json tags = Json::array();
  for (auto t : e.tags) tags.push_back(std::string(1, to_symbol(t)));
  r["operation"]["monotone"] = tags;
  r["completion"] = completion;
  r["sigma"] = report::map_of(Csrc, Cdst, e.sigma);
  r["pi"] = report::map_of(Csrc, Cdst, e.pi);
  const auto smooth = is_smooth(e);
  r["smooth"] = {{"smooth", smooth.smooth}};
  if (smooth.witness) r["smooth"]["witness"] = Csrc.name(*smooth.witness);
  const bool tagged =
      std::none_of(e.tags.begin(), e.tags.end(), [](Monotonicity m) { return m == Monotonicity::untagged; });
  if (tagged || certify) {
    const auto cert = universality_certificate(e);
    r["certificate"] = report::certificate_json(Csrc, Cdst, cert);
    if (!cert.holds()) inv.exit_code = Exit::claim_failure;
  }
  inv.report["result"] = r;
}

// duality

KripkeFrame load_frame(Invocation& inv, const std::string& path) {
  const std::string text = io::read_file(path);
  inv.input(path, text);
  return frame_from_json(io::parse_json_text(text));
}

void duality_command(Invocation& inv, const std::string& which, const std::string& path) {
  Json r;
  if (which == "stone") {
    const auto in = load(inv, path);
    const auto c = stone_embedding(in.lattice);
    r["embedding"] = report::map_of(c.L(), c.C(), c.embed);
    r["atoms"] = c.C().size() > 1 ? report::names_of(in.lattice, atoms(in.lattice)) : Json::array();
    r["dense"] = is_dense(c).dense;
    r["compact"] = report::compactness_json(c.L(), is_compact(c));
    r["lattice_embedding"] = is_homomorphism(c.L(), c.C(), c.embed) && is_injective(c.embed, c.C().size());
    if (!(r["dense"].get<bool>() && r["compact"]["pass"].get<bool>() && r["lattice_embedding"].get<bool>()))
      inv.exit_code = Exit::claim_failure;
  } else if (which == "birkhoff") {
    const auto in = load(inv, path);
    const auto d = birkhoff_dual(in.lattice);
    Json points = Json::array();
    for (Elem p : d.points) points.push_back(in.lattice.name(p));
    Json order = Json::array();
    for (const auto& [lo, hi] : d.order.covers()) order.push_back({d.order.name(lo), d.order.name(hi)});
    r["points"] = points;
    r["point_covers"] = order;
    r["iso"] = report::map_of(in.lattice, d.upsets, d.iso);
    r["round_trip"] = is_order_isomorphism(in.lattice, d.upsets, d.iso);
    if (!r["round_trip"].get<bool>()) inv.exit_code = Exit::claim_failure;
  } else if (which == "complex") {
    const auto fr = load_frame(inv, path);
    const auto A = complex_algebra(fr);
    const auto back = at_functor(A);
    r["algebra"] = io::lattice_to_json(A.lattice);
    r["frame"] = frame_to_json(back);
    const auto iso = frame_isomorphism(fr, back);
    r["round_trip"] = iso.has_value();
    if (iso) {
      Json m = Json::object();
      for (Elem w = 0; w < fr.size(); ++w) m[fr.worlds[w]] = back.worlds[(*iso)[w]];
      r["iso"] = m;
    }
    if (!iso) inv.exit_code = Exit::claim_failure;
  } else if (which == "at") {
    const auto in = load(inv, path);
    const auto A = modal_algebra_from_lattice(in.lattice);
    const auto fr = at_functor(A);
    const auto back = complex_algebra(fr);
    const auto iso = modal_isomorphism(A, back);
    r["frame"] = frame_to_json(fr);
    r["round_trip"] = iso.has_value();
    if (iso) r["iso"] = report::map_of(A.lattice, back.lattice, *iso);
    if (!iso) inv.exit_code = Exit::claim_failure;
  }
  inv.report["result"] = r;
}

// fgv

void fgv_command(Invocation& inv, const std::string& which, const std::string& path, std::size_t power_k) {
  const auto in = load(inv, path);
  const Lattice L = in.lattice.without_operations();
  Json r;
  bool ok = true;
  if (which == "star-check") {
    const auto s = star_check(L);
    r = report::star_json(L, s);
    ok = s.pass();
  } else if (which == "product-check") {
    const auto v = product_irreducibles_check(L, power_k);
    const Lattice P = power(L, power_k);
    r = {{"power", power_k},
         {"direct_J", report::names_of(P, v.direct_J)},
         {"formula_J", report::names_of(P, v.formula_J)},
         {"direct_M", report::names_of(P, v.direct_M)},
         {"formula_M", report::names_of(P, v.formula_M)},
         {"pass", v.pass()}};
    ok = v.pass();
  } else if (which == "remark-bound") {
    const auto b = remark_bound(L);
    r = {{"bound", b.bound},
         {"subalgebras", b.subalgebra_count},
         {"witness_subalgebra", report::names_of(L, b.witness_subalgebra)},
         {"members_checked", b.members_checked},
         {"verified", b.verified}};
    if (b.violation) r["violation"] = *b.violation;
    ok = b.verified;
  }
  inv.report["result"] = r;
  if (!ok) inv.exit_code = Exit::claim_failure;
}

// verify-paper

void verify_command(Invocation& inv, const std::string& example, bool all) {
  const auto registry = report::claims_registry();
  Json rows = Json::array();
  std::size_t failed = 0, ran = 0;
  for (const auto& c : registry) {
    if (!all && c.group != example && c.id != example) continue;
    const auto run = report::run_claim(c);
    ++ran;
    failed += !run.result.pass;
    rows.push_back({{"id", c.id},
                    {"group", c.group},
                    {"statement", c.statement},
                    {"pass", run.result.pass},
                    {"detail", run.result.detail},
                    {"seconds", run.seconds}});
    std::cerr << (run.result.pass ? "PASS " : "FAIL ") << c.id << "  " << c.statement << "\n";
  }
  if (ran == 0) {
    Json groups = Json::array();
    for (const auto& c : registry)
      if (groups.empty() || groups.back() != c.group) groups.push_back(c.group);
    throw Error(ErrorKind::unknown_element, "no claim group named '" + example + "'; known groups: " + groups.dump());
  }
  inv.report["result"] = {{"claims", rows}, {"ran", ran}, {"failed", failed}};
  if (failed) inv.exit_code = Exit::claim_failure;
}

// corpus

void corpus_command(Invocation& inv, std::size_t max_size, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  Json files = Json::array();
  Json counts = Json::object();
  for (std::size_t n = 1; n <= max_size; ++n) {
    const auto level = lattices_of_size(n);
    counts[std::to_string(n)] = level.size();
    for (const auto& e : level) {
      const auto path = (std::filesystem::path(out_dir) / (e.name + ".json")).string();
      const std::string text = io::lattice_to_json(e.lattice, e.name).dump(2) + "\n";
      report::write_text(path, text);
      files.push_back({{"name", e.name}, {"path", path}, {"fnv1a", report::digest(text)}});
    }
  }
  inv.report["result"] = {{"max_size", max_size}, {"counts", counts}, {"files", files}};
}

// symbolic instances

void symbolic_command(Invocation& inv, const std::string& name) {
  using namespace symbolic;
  Json r;
  if (name == "chang-chain") {
    const auto mac = chain_compactness(ChainVariant::macneille);
    const auto cx = chain_compactness(ChainVariant::canext);
    Json iso = Json::array();
    for (const auto& e : chain_isolated_points()) iso.push_back({{"point", e.point.name()}, {"isolated", e.isolated}, {"reason", e.reason}});
    r = {{"macneille_compact", {{"pass", mac.pass}, {"S", mac.S_description}, {"T", mac.T_description}}},
         {"canext_compact", {{"pass", cx.pass}}},
         {"isolated_points", iso},
         {"truncation_check", chain_truncation_check(ChainVariant::canext) && chain_truncation_check(ChainVariant::macneille)}};
  } else if (name == "finite-cofinite-gl") {
    const FiniteCofiniteInstance inst;
    const auto sweep = gl_axiom_sweep(10000);
    const auto at_inf = inst.gl_axiom_check_at(inst.infinity());
    r = {{"algebra", {{"trials", sweep.trials}, {"failures", sweep.failures}}},
         {"canext_at_infinity", {{"holds", at_inf.holds}, {"lhs", at_inf.lhs}, {"rhs", at_inf.rhs}}},
         {"diamond_sigma_infinity", inst.diamond_sigma(inst.infinity()).describe()}};
  } else if (name == "disjointness-map") {
    const auto u = DefinableSubset::parameter(evens());
    const auto v = disjointness_envelopes(u);
    r = {{"u", u.describe()},
         {"sigma", v.sigma.describe()},
         {"pi", v.pi.describe()},
         {"smooth", v.smooth},
         {"sigma_pair", v.sigma_witness},
         {"pi_pair", v.pi_witness},
         {"pairs_checked", v.pairs_checked}};
  } else if (name == "noncontinuous-grid") {
    const auto g = grid_noncontinuity();
    r = {{"a", g.a.name()},
         {"family", g.family},
         {"lhs", g.lhs.name()},
         {"rhs", g.rhs.name()},
         {"meet_continuous", g.continuous},
         {"n5_sublattice", g.n5_sublattice},
         {"truncation", g.truncation},
         {"truncation_check", g.acc_on_truncation}};
  } else {
    throw Error(ErrorKind::unknown_element,
                "unknown instance '" + name + "' (chang-chain, finite-cofinite-gl, disjointness-map, noncontinuous-grid)");
  }
  inv.report["result"] = r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical extensions of finite lattices and lattice expansions"};
  app.require_subcommand(1);

  std::string path, op = "", completion = "canext", example, dot_dir = ".", which, instance, out_dir = "corpus";
  bool dot = false, certify = false, all = false;
  std::size_t max_size = 5, power_k = 2;

  auto* canext_cmd = app.add_subcommand("canext", "canonical extension of a lattice file");
  canext_cmd->add_option("lattice", path, "lattice JSON file")->required();
  canext_cmd->add_flag("--emit-dot", dot, "write Hasse diagrams of source and target");
  canext_cmd->add_option("--dot-dir", dot_dir, "directory for DOT files");

  auto* mac_cmd = app.add_subcommand("macneille", "Dedekind-MacNeille completion of a lattice file");
  mac_cmd->add_option("lattice", path, "lattice JSON file")->required();
  mac_cmd->add_flag("--emit-dot", dot, "write Hasse diagrams of source and target");
  mac_cmd->add_option("--dot-dir", dot_dir, "directory for DOT files");

  auto* env_cmd = app.add_subcommand("envelope", "σ- and π-extensions of an attached operation");
  env_cmd->add_option("expansion", path, "lattice expansion JSON file")->required();
  env_cmd->add_option("--op", op, "operation name")->required();
  env_cmd->add_option("--completion", completion, "canext or identity")->check(CLI::IsMember({"canext", "identity"}));
  env_cmd->add_flag("--certify", certify, "build a universality certificate");

  auto* dual_cmd = app.add_subcommand("duality", "duality round trips");
  dual_cmd->add_option("kind", which, "stone, birkhoff, complex or at")
      ->required()
      ->check(CLI::IsMember({"stone", "birkhoff", "complex", "at"}));
  dual_cmd->add_option("file", path, "lattice or frame JSON file")->required();

  auto* fgv_cmd = app.add_subcommand("fgv", "checks on finitely generated varieties");
  fgv_cmd->add_option("kind", which, "star-check, product-check or remark-bound")
      ->required()
      ->check(CLI::IsMember({"star-check", "product-check", "remark-bound"}));
  fgv_cmd->add_option("lattice", path, "lattice JSON file")->required();
  fgv_cmd->add_option("--power", power_k, "exponent X for product-check")->check(CLI::Range(1, 3));

  auto* verify_cmd = app.add_subcommand("verify-paper", "regression suite of the claims");
  auto* ex_opt = verify_cmd->add_option("--example", example, "claim group or claim id");
  auto* all_opt = verify_cmd->add_flag("--all", all, "run every claim");
  ex_opt->excludes(all_opt);

  auto* corpus_cmd = app.add_subcommand("corpus", "write all bounded lattices up to a size");
  corpus_cmd->add_option("--max-size", max_size, "largest lattice size");
  corpus_cmd->add_option("--out", out_dir, "output directory");

  auto* sym_cmd = app.add_subcommand("symbolic", "decision routines of the infinite instances");
  sym_cmd->add_option("instance", instance, "chang-chain, finite-cofinite-gl, disjointness-map or noncontinuous-grid")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : Exit::input_error;
  }

  Invocation inv;
  inv.report["command"] = std::vector<std::string>(argv, argv + argc);
  inv.report["inputs"] = Json::array();
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (*canext_cmd) completion_command(inv, path, false, dot, dot_dir);
    if (*mac_cmd) completion_command(inv, path, true, dot, dot_dir);
    if (*env_cmd) envelope_command(inv, path, op, completion, certify);
    if (*dual_cmd) duality_command(inv, which, path);
    if (*fgv_cmd) fgv_command(inv, which, path, power_k);
    if (*verify_cmd) {
      if (!all && example.empty()) throw Error(ErrorKind::invalid_document, "verify-paper needs --example or --all");
      verify_command(inv, example, all);
    }
    if (*corpus_cmd) corpus_command(inv, max_size, out_dir);
    if (*sym_cmd) symbolic_command(inv, instance);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    inv.report["error"] = report::error_json(e);
    inv.exit_code = Exit::input_error;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << e.what() << "\n";
    inv.report["error"] = {{"kind", "Io"}, {"message", e.what()}};
    inv.exit_code = Exit::input_error;
  }
  inv.report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  inv.report["exit_code"] = inv.exit_code;
  std::cout << inv.report.dump(2) << "\n";
  return inv.exit_code;
}
