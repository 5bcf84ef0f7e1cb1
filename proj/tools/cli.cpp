#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>

#include "gkm/algebra.hpp"
#include "gkm/charpair.hpp"
#include "gkm/errors.hpp"
#include "gkm/families.hpp"
#include "gkm/hodge.hpp"
#include "gkm/hypergraph.hpp"
#include "gkm/io.hpp"
#include "gkm/obstruction.hpp"

namespace gkm::cli {

namespace {

int param_count(const std::string& kind) {
  if (kind == "bf") return 1;
  if (kind == "br" || kind == "r" || kind == "h") return 2;
  fail("InvalidParams", "unknown family kind: " + kind);
}

WeightHypergraph build_family(const std::string& kind,
                              const std::vector<int>& p) {
  if ((int)p.size() != param_count(kind))
    fail("InvalidParams", kind + " takes " +
                              std::to_string(param_count(kind)) +
                              " integer parameter(s)");
  if (kind == "bf") return bf_graph(p[0]);
  if (kind == "br") return br_graph(p[0], p[1]);
  if (kind == "r") return r_graph(p[0], p[1]);
  return hij_graph(p[0], p[1]);
}

void print_graph_text(const WeightHypergraph& g, std::ostream& out) {
  out << "rank " << g.rank << ", valence " << g.valence << ", "
      << g.num_vertices() << " vertices\n";
  for (size_t r = 0; r < g.records.size(); ++r) {
    const Hyperedge& e = g.records[r];
    if (e.dim == 1) {
      if (e.vertices[0] > e.vertices[1]) continue;
      out << "edge " << g.label(e.vertices[0]) << " -- "
          << g.label(e.vertices[1]) << "  " << weight_str(e.weight) << "\n";
    } else {
      out << "hyperedge dim " << e.dim << " {";
      for (size_t t = 0; t < e.vertices.size(); ++t)
        out << (t ? ", " : "") << g.label(e.vertices[t]);
      out << "}  " << weight_str(e.weight) << "\n";
    }
  }
}

void emit_graph(const WeightHypergraph& g, const std::string& format,
                std::ostream& out) {
  if (format == "json")
    out << hypergraph_to_json(g).dump(2) << "\n";
  else if (format == "dot")
    out << hypergraph_to_dot(g);
  else
    print_graph_text(g, out);
}

// ambient ring and hypersurface class whose annihilator presents H*
std::pair<GradedZAlgebra, IntVec> hypersurface_setup(const std::string& kind,
                                                     const std::vector<int>& p) {
  if (p.size() != 2) fail("InvalidParams", kind + " takes 2 parameters");
  if (kind == "br") {
    int i = p[0], j = p[1];
    if (i < 1 || j < 0) fail("InvalidParams", "br needs i >= 1, j >= 0");
    GradedZAlgebra a = ring_tensor(ring_bf(i, "x"), ring_projective(j, "y"));
    IntVec cls = gen_element(a, "x" + std::to_string(i));
    if (j >= 1) {
      IntVec y = gen_element(a, "y");
      for (size_t t = 0; t < cls.size(); ++t) cls[t] += y[t];
    }
    return {std::move(a), std::move(cls)};
  }
  if (kind == "r") {
    int i = p[0], j = p[1];
    if (i < 1 || j < 1) fail("InvalidParams", "r needs i, j >= 1");
    GradedZAlgebra a = ring_tensor(ring_bf(i, "x"), ring_bf(j, "y"));
    IntVec xi = gen_element(a, "x" + std::to_string(i));
    IntVec yj = gen_element(a, "y" + std::to_string(j));
    for (size_t t = 0; t < xi.size(); ++t) xi[t] += yj[t];
    return {std::move(a), std::move(xi)};
  }
  fail("InvalidParams", "cohomology supports kinds br, r");
}

Poly betti_poly(const std::string& kind, const std::vector<int>& p) {
  if (kind == "h") fail("InvalidParams", "betti supports kinds bf, br, r");
  if ((int)p.size() != param_count(kind))
    fail("InvalidParams", kind + " takes " +
                              std::to_string(param_count(kind)) +
                              " integer parameter(s)");
  if (kind == "bf") return poly_one_plus_t_pow(p[0]);
  if (kind == "br") return hd_br(p[0], p[1]);
  if (kind == "r") return hd_r(p[0], p[1]);
  fail("InvalidParams", "betti supports kinds bf, br, r");
}

int run_impl(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"weight hypergraphs, toric obstructions and cohomology"};
  app.require_subcommand(1);

  std::string kind, format = "text", file, outfile, which;
  std::vector<int> params;
  int max_cycle_len = 6, max_growth = 64, face_valence = 3;

  auto add_family_args = [&](CLI::App* c) {
    c->add_option("kind", kind, "bf | br | r | h")->required();
    c->add_option("params", params, "family parameters")->expected(1, 2);
  };

  CLI::App* fam = app.add_subcommand("family", "build a weight hypergraph");
  add_family_args(fam);
  fam->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "dot"}));

  CLI::App* exp = app.add_subcommand("export", "serialize a family graph");
  add_family_args(exp);
  format = "text";
  exp->add_option("--format", format)
      ->check(CLI::IsMember({"text", "json", "dot"}));
  exp->add_option("-o,--output", outfile, "write to file instead of stdout");

  CLI::App* obs = app.add_subcommand("obstruct", "run the monodromy engines");
  add_family_args(obs);
  obs->add_option("--max-cycle-len", max_cycle_len)->check(CLI::PositiveNumber);
  obs->add_option("--max-growth", max_growth)->check(CLI::PositiveNumber);
  obs->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  CLI::App* coh = app.add_subcommand("cohomology", "integral cohomology ring");
  add_family_args(coh);
  bool relations = false;
  coh->add_flag("--relations", relations, "print the quotient presentation");

  CLI::App* bet = app.add_subcommand("betti", "Betti numbers");
  add_family_args(bet);

  CLI::App* tor = app.add_subcommand("toric", "characteristic pair checks");
  tor->add_option("action", which, "check")->required();
  tor->add_option("file", file, "characteristic pair json")->required();
  tor->add_option("--max-cycle-len", max_cycle_len)->check(CLI::PositiveNumber);

  CLI::App* rep = app.add_subcommand("reproduce", "replay an obstruction run");
  rep->add_option("theorem", which, "thm1.2 | thm1.3")->required();
  rep->add_option("params", params, "i j")->expected(2);

  {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return 0;
    }
  }

  if (const char* tv = std::getenv("GKM_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(tv, &end, 10);
    if (end == tv || *end != '\0' || n < 1)
      fail("InvalidParams", "GKM_THREADS must be a positive integer");
    // searches run sequentially; any positive cap is honored
  }

  if (fam->parsed()) {
    emit_graph(build_family(kind, params), format, out);
    return 0;
  }

  if (exp->parsed()) {
    WeightHypergraph g = build_family(kind, params);
    if (format == "text") format = "json";
    if (outfile.empty()) {
      emit_graph(g, format, out);
    } else {
      std::ofstream f(outfile);
      if (!f) fail("InvalidParams", "cannot write " + outfile);
      emit_graph(g, format, f);
      out << "wrote " << outfile << "\n";
    }
    return 0;
  }

  if (obs->parsed()) {
    WeightHypergraph g = build_family(kind, params);
    std::optional<ObstructionWitness> w = cycle_obstruction(g, max_cycle_len);
    if (!w) w = face_exclusion_obstruction(g, face_valence, max_growth);
    if (w) {
      if (format == "json") {
        nlohmann::json j = witness_to_json(*w);
        j["verdict"] = "NOT TORIC (obstruction found)";
        out << j.dump(2) << "\n";
      } else {
        out << witness_text(*w);
        out << "NOT TORIC (obstruction found)\n";
      }
      return 0;
    }
    if (format == "json")
      out << nlohmann::json{{"verdict", "no obstruction found"}}.dump(2)
          << "\n";
    else
      out << "no obstruction found (consistent with toric)\n";
    return 1;
  }

  if (coh->parsed()) {
    auto [ring, cls] = hypersurface_setup(kind, params);
    IdealZ ann = annihilator(ring, cls);
    QuotientRing q = quotient(ring, ann);
    out << "hypersurface class: " << elem_str(ring, cls) << "\n";
    out << "graded ranks:";
    for (int r : q.ring.graded_ranks()) out << " " << r;
    out << "\n";
    if (relations) {
      out << "relations (annihilator generators):\n";
      for (const IntVec& g : ann.generators)
        out << "  " << elem_str(ring, g) << "\n";
    }
    return 0;
  }

  if (bet->parsed()) {
    std::vector<Int> b = betti_from_hd(betti_poly(kind, params));
    for (size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
    out << "\n";
    return 0;
  }

  if (tor->parsed()) {
    if (which != "check") fail("InvalidParams", "supported action: check");
    std::ifstream f(file);
    if (!f) fail("InvalidParams", "cannot read " + file);
    nlohmann::json j;
    f >> j;
    CharPair cp = charpair_from_json(j);
    validate_charpair(cp);
    WeightHypergraph g = gkm_from_charpair(cp);
    ValidationReport rep1 = validate_axial(g);
    if (!rep1.ok()) {
      for (const std::string& s : rep1.issues) err << s << "\n";
      fail("InvalidParams", "characteristic pair gives no valid graph");
    }
    Connection c = unique_connection(g);
    int checked = 0;
    for (const std::set<int>& fs : proper_faces(cp.polytope, 2)) {
      std::set<int> vs;
      for (int pv : cp.polytope.vertices_on(fs))
        vs.insert(g.vertex(cp.polytope.vertex_label(pv)));
      Subgraph face = induced_subgraph(g, vs);
      std::string diag;
      if (!check_external_monodromy(g, c, face, max_cycle_len, &diag)) {
        out << "external monodromy violated: " << diag << "\n";
        return 1;
      }
      ++checked;
    }
    out << "characteristic pair valid; external monodromy identity on "
        << checked << " faces (cycles up to " << max_cycle_len << ")\n";
    return 0;
  }

  if (rep->parsed()) {
    ReplayReport r;
    if (which == "thm1.2")
      r = reproduce_thm12(params[0], params[1]);
    else if (which == "thm1.3")
      r = reproduce_thm13(params[0], params[1]);
    else
      fail("InvalidParams", "theorem must be thm1.2 or thm1.3");
    for (const ReplayStep& s : r.steps)
      out << "along " << s.along << ": " << s.before << " -> " << s.after
          << "\n";
    out << r.conclusion << "\n";
    if (r.contradiction) {
      out << "NOT TORIC (obstruction found)\n";
      return 0;
    }
    out << "no obstruction found (consistent with toric)\n";
    return 1;
  }

  return 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "error [" << e.kind() << "] " << e.what() << "\n";
    if (e.kind() == "InvalidParams" || e.kind() == "NonIsolatedFixedPoints" ||
        e.kind() == "MinorNotUnimodular")
      return 2;
    return 3;
  } catch (const std::exception& e) {
    err << "error [Internal] " << e.what() << "\n";
    return 3;
  }
}

}  // namespace gkm::cli
