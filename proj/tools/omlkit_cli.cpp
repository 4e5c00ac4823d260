// omlkit command-line front end.
//
// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "omlkit/acceptance.hpp"
#include "omlkit/omlkit.hpp"

namespace {

using namespace omlkit;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
  out << text;
}

EnumerateOptions enumerate_options(unsigned threads) {
  EnumerateOptions opts;
  opts.threads = threads;
  if (const char* cap = std::getenv("OMLKIT_NODE_CAP")) {
    try {
      opts.node_cap = std::stoull(cap);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "OMLKIT_NODE_CAP must be a positive integer");
    }
  }
  return opts;
}

std::string flavor_line(const FiniteOrtholattice& L) {
  return L.is_orthomodular() ? "orthomodular" : "ortholattice (NOT orthomodular)";
}

int print_checks(const std::vector<std::pair<std::string, bool>>& checks) {
  bool all = true;
  for (const auto& [what, ok] : checks) {
    std::cout << (ok ? "PASS  " : "FAIL  ") << what << '\n';
    all = all && ok;
  }
  return all ? 0 : 1;
}

int check_sachs(const FiniteOrtholattice& B, const EnumerateOptions& opts) {
  require_boolean(B);
  const SubalgebraPoset S = sub(B, opts);
  const auto pd = pd_order_flags(S.order());
  int dual_agree = 0;
  int pd_agree = 0;
  for (Node x = 0; x < S.size(); ++x) {
    const Mask m = S.node(x);
    dual_agree += dual_order_test(S, x) == dual_decomposition(B, m).has_value() ? 1 : 0;
    bool direct = false;
    for (int a = 0; a < B.size(); ++a) direct = direct || principal_dual_subalgebra(B, a) == m;
    pd_agree += pd[x] == direct ? 1 : 0;
  }
  long long violations = 0;
  for (Node x = 0; x < S.size(); ++x) {
    const Mask m = S.node(x);
    if (!dual_decomposition(B, m)) continue;
    for (int a = 0; a < B.size(); ++a) {
      if (has(m, a)) continue;
      const Mask xa = generated_subalgebra(B, m | bit(a));
      for (int b = 0; b < B.size(); ++b) {
        if (!has(m, b) && has(xa, b) != has(generated_subalgebra(B, m | bit(b)), a)) ++violations;
      }
    }
  }
  const int atoms = popcount(B.atoms());
  const auto dual_iso = poset_isomorphic(S.order(), partition_lattice(atoms).dual());
  std::vector<std::pair<std::string, bool>> checks = {
      {"dual order test agrees with decomposition on " + std::to_string(dual_agree) + "/" +
           std::to_string(S.size()) + " subalgebras",
       dual_agree == static_cast<int>(S.size())},
      {"principal dual order test agrees with definition on " + std::to_string(pd_agree) + "/" +
           std::to_string(S.size()) + " subalgebras",
       pd_agree == static_cast<int>(S.size())},
      {"exchange symmetry for dual subalgebras: " + std::to_string(violations) + " violations", violations == 0},
      {"Sub(B) dually isomorphic to P_" + std::to_string(atoms) + " (" + std::to_string(S.size()) + " nodes)",
       dual_iso.has_value()},
  };
  for (Node x = 0; x < S.size(); ++x) {
    std::cout << to_string(subalgebra_to_partition(B, S.node(x))) << (pd[x] ? "  p.d." : "")
              << (dual_order_test(S, x) ? "  dual" : "") << '\n';
  }
  return print_checks(checks);
}

std::vector<Morphism> lift(const std::string& l_path, const std::string& m_path, const std::string& iso_path,
                           bool whole_sub, bool canonical, const EnumerateOptions& opts) {
  const FiniteOrtholattice L = io::parse_lattice(read_input(l_path));
  const FiniteOrtholattice M = io::parse_lattice(read_input(m_path));
  const auto pairs = io::parse_iso_pairs(read_input(iso_path));
  const SubalgebraPoset P = enumerate_subalgebras(L, !whole_sub, opts);
  const SubalgebraPoset Q = enumerate_subalgebras(M, !whole_sub, opts);
  const std::vector<Node> phi = io::resolve_iso(P, Q, pairs);
  const LiftOptions options{canonical};
  return whole_sub ? lift_sub_iso(P, Q, phi, options) : lift_bsub_iso(P, Q, phi, options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"omlkit: subalgebras of finite orthomodular lattices"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads for enumeration-heavy verbs")->check(CLI::PositiveNumber);

  std::string in1, in2, in3, out_path, format = "text";
  bool dot = false, frame = false, all = false, canonical = false, over_sub = false;

  auto* validate_cmd = app.add_subcommand("validate", "validate a lattice file and report its flavor");
  validate_cmd->add_option("lattice", in1, "lattice file (- for stdin)");

  auto* catalog_cmd = app.add_subcommand("catalog", "emit a catalog lattice");
  catalog_cmd->add_option("name", in1, "2^n, MOk, MO2x2, example22, benzene, hsum(...)")->required();
  catalog_cmd->add_option("-o,--output", out_path, "output file");

  auto add_poset_flags = [&](CLI::App* cmd) {
    cmd->add_option("lattice", in1, "lattice file (- for stdin)");
    cmd->add_flag("--dot", dot, "emit the Hasse diagram as DOT");
    cmd->add_option("--format", format, "text or dot")->check(CLI::IsMember({"text", "dot"}));
    cmd->add_option("-o,--output", out_path, "output file");
  };
  auto* sub_cmd = app.add_subcommand("sub", "emit Sub(L) as a poset file");
  add_poset_flags(sub_cmd);
  auto* bsub_cmd = app.add_subcommand("bsub", "emit BSub(L) as a poset file");
  add_poset_flags(bsub_cmd);

  auto* blocks_cmd = app.add_subcommand("blocks", "list the blocks of an OML");
  blocks_cmd->add_option("lattice", in1, "lattice file (- for stdin)");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "rebuild an OML from its BSub poset");
  reconstruct_cmd->add_option("poset", in1, "poset file (- for stdin)");
  reconstruct_cmd->add_flag("--frame", frame, "also emit the orthogonality frame");
  reconstruct_cmd->add_option("-o,--output", out_path, "lattice output file");

  auto add_lift = [&](CLI::App* cmd) {
    cmd->add_option("L", in1, "source lattice file")->required();
    cmd->add_option("M", in2, "target lattice file")->required();
    cmd->add_option("iso", in3, "iso file of label pairs")->required();
    auto* a = cmd->add_flag("--all", all, "every lift (default)");
    auto* c = cmd->add_flag("--canonical", canonical, "only the canonical lift");
    a->excludes(c);
    cmd->add_option("-o,--output", out_path, "output file");
  };
  auto* lift_bsub_cmd = app.add_subcommand("lift-bsub", "lift a BSub isomorphism to OML isomorphisms");
  add_lift(lift_bsub_cmd);
  auto* lift_sub_cmd = app.add_subcommand("lift-sub", "lift a Sub isomorphism to OML isomorphisms");
  add_lift(lift_sub_cmd);

  auto* poset_iso_cmd = app.add_subcommand("poset-iso", "find an isomorphism BSub(L) -> BSub(M) as an iso file");
  poset_iso_cmd->add_option("L", in1, "source lattice file")->required();
  poset_iso_cmd->add_option("M", in2, "target lattice file")->required();
  poset_iso_cmd->add_flag("--sub", over_sub, "use Sub instead of BSub");

  auto* sachs_cmd = app.add_subcommand("check-sachs", "check the Boolean subalgebra characterizations");
  sachs_cmd->add_option("lattice", in1, "Boolean lattice file (- for stdin)");

  auto* det_cmd = app.add_subcommand("check-determination", "compare BSub posets and lattices");
  det_cmd->add_option("L", in1, "first lattice file")->required();
  det_cmd->add_option("M", in2, "second lattice file")->required();

  auto* hom_cmd = app.add_subcommand("classify-hom", "decide whether a hom is determined by its preimage map");
  hom_cmd->add_option("L", in1, "source lattice file")->required();
  hom_cmd->add_option("M", in2, "target lattice file")->required();
  hom_cmd->add_option("morphism", in3, "morphism file")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const EnumerateOptions opts = enumerate_options(threads);
    if (validate_cmd->parsed()) {
      const auto L = io::parse_lattice(read_input(in1));
      std::cout << "valid: " << L.size() << " elements"
                << (L.name().empty() ? "" : " (" + L.name() + ")") << ", flavor " << flavor_line(L) << '\n';
      return 0;
    }
    if (catalog_cmd->parsed()) {
      write_output(out_path, io::emit_lattice(catalog(in1)));
      return 0;
    }
    if (sub_cmd->parsed() || bsub_cmd->parsed()) {
      const bool boolean_only = bsub_cmd->parsed();
      const auto L = io::parse_lattice(read_input(in1));
      const auto P = enumerate_subalgebras(L, boolean_only, opts);
      const std::string name = std::string(boolean_only ? "BSub" : "Sub") + "(" + L.name() + ")";
      write_output(out_path, dot || format == "dot" ? io::emit_dot(P, name) : io::emit_poset(P));
      return 0;
    }
    if (blocks_cmd->parsed()) {
      const auto L = io::parse_lattice(read_input(in1));
      for (Mask b : blocks(L, opts.node_cap)) {
        const auto members = bits_of(b);
        std::cout << '{';
        for (std::size_t i = 0; i < members.size(); ++i) std::cout << (i ? "," : "") << members[i];
        std::cout << "}\n";
      }
      return 0;
    }
    if (reconstruct_cmd->parsed()) {
      const auto doc = io::parse_poset(read_input(in1));
      const auto result = reconstruct_with_frame(doc.poset);
      if (frame) std::cout << io::emit_frame(result.frame);
      write_output(out_path, io::emit_lattice(result.lattice));
      return 0;
    }
    if (lift_bsub_cmd->parsed() || lift_sub_cmd->parsed()) {
      const auto lifts = lift(in1, in2, in3, lift_sub_cmd->parsed(), canonical, opts);
      write_output(out_path, canonical ? io::emit_morphism(lifts.front()) : io::emit_morphisms(lifts));
      return 0;
    }
    if (poset_iso_cmd->parsed()) {
      const auto L = io::parse_lattice(read_input(in1));
      const auto M = io::parse_lattice(read_input(in2));
      const auto P = enumerate_subalgebras(L, !over_sub, opts);
      const auto Q = enumerate_subalgebras(M, !over_sub, opts);
      const auto phi = poset_isomorphic(P.order(), Q.order());
      if (!phi) {
        std::cerr << "posets are not isomorphic\n";
        return 1;
      }
      std::cout << io::emit_iso(P, Q, *phi);
      return 0;
    }
    if (sachs_cmd->parsed()) return check_sachs(io::parse_lattice(read_input(in1)), opts);
    if (det_cmd->parsed()) {
      const auto L = io::parse_lattice(read_input(in1));
      const auto M = io::parse_lattice(read_input(in2));
      const auto report = verify_determination(L, M, opts);
      std::cout << report.summary();
      return report.consistent ? 0 : 1;
    }
    if (hom_cmd->parsed()) {
      const auto L = io::parse_lattice(read_input(in1));
      const auto M = io::parse_lattice(read_input(in2));
      const auto f = io::parse_morphism(read_input(in3));
      const auto report = classify_recovery(L, M, f);
      const auto image = bits_of(report.image);
      std::cout << "class: " << to_string(report.kind) << "\nimage size: " << image.size() << '\n';
      if (report.witness) std::cout << "witness g:\n" << io::emit_morphism(*report.witness);
      std::cout << "verified: " << (report.verified ? "yes" : "no") << '\n';
      return report.verified ? 0 : 1;
    }
    if (selftest_cmd->parsed()) return acceptance::run_all(std::cout) ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
