// lagmat: command-line analyzer for Lagrangian matroids given by matrix
// representations -- basis extraction, orientations, polytope skeletons,
// indices, quadratic-form cross-checks, censuses and the acceptance suite.
// JSON on stdout by default (--pretty indents); exit status 0 on success,
// 1 on domain errors, 2 on I/O or parse errors.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagmat/census.hpp"
#include "lagmat/io.hpp"
#include "lagmat/pathindex.hpp"
#include "lagmat/selftest.hpp"

using nlohmann::json;

namespace {

struct Options {
  bool pretty = false;
  std::uint64_t seed = lagmat::kDefaultSeed;
};

void emit(const json& j, const Options& opt) {
  if (opt.pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

json ordering_to_json(const lagmat::AdmissibleOrdering& w) {
  json flips = json::array();
  for (int k = 0; k < w.n; ++k) flips.push_back((w.flips >> k) & 1);
  return json{{"perm", w.perm}, {"flips", flips}};
}

json signs_to_json(const lagmat::BasisSystem& m, const lagmat::RelativeSigns& rs) {
  json signs = json::object();
  for (std::size_t i = 0; i < m.bases.size(); ++i)
    signs[lagmat::to_string(m.bases[i])] = static_cast<int>(rs.signs[i]);
  return json{{"fundamental", lagmat::to_string(rs.fundamental)},
              {"signs", signs}};
}

json table_to_json(const lagmat::SignTable& st) {
  json rows = json::object();
  for (const auto& g : st.bases) {
    json row = json::object();
    for (const auto& a : st.bases)
      row[lagmat::to_string(a)] = st.sign(g, a);
    rows[lagmat::to_string(g)] = row;
  }
  return rows;
}

lagmat::BasisSystem bases_of(const lagmat::MatrixDocument& doc, int k) {
  if (doc.field == lagmat::MatrixDocument::Field::Q)
    return lagmat::extract_bases(*doc.rat, k);
  return lagmat::extract_bases(*doc.gf2, k);
}

// Orientation induced by a rational representation, seeded at the
// lexicographically least basis.
lagmat::SignTable representation_table(const lagmat::MatrixDocument& doc,
                                       const lagmat::BasisSystem& m) {
  const auto& rep = doc.rational();
  const lagmat::Transversal f{m.n, m.bases.front().stars};
  return lagmat::extend_signs(
      m, lagmat::orientation_from_representation(
             lagmat::fundamental_reduction(rep, f), m));
}

std::vector<lagmat::Transversal> parse_basis_list(const std::string& text,
                                                  int n_hint) {
  // Bases separated by ';' (always) or ',' (single-digit ground sets).
  const char sep = text.find(';') != std::string::npos ? ';' : ',';
  std::vector<std::string> tokens;
  std::string cur;
  for (const char ch : text) {
    if (ch == sep) {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  tokens.push_back(cur);
  int n = n_hint;
  if (n == 0) {
    for (const char ch : tokens.at(0))
      if (std::isdigit(static_cast<unsigned char>(ch))) ++n;
  }
  std::vector<lagmat::Transversal> out;
  for (const auto& t : tokens) out.push_back(lagmat::parse_transversal(t, n));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Lagrangian matroid analyzer"};
  app.require_subcommand(1);
  app.fallthrough();  // lets --pretty/--seed follow the subcommand
  Options opt;
  app.add_flag("--pretty", opt.pretty, "indent JSON output");
  app.add_option("--seed", opt.seed, "seed for randomized property runs");

  std::string file, file_b, fundamental, basis_list;
  int rank_k = -1, census_n = 3, ground_n = 0;
  bool full = false, oriented = false, dot = false, json_out = false,
       verify_paths = false;

  auto* cmd_bases = app.add_subcommand("bases", "extract the basis system");
  cmd_bases->add_option("file", file)->required();
  cmd_bases->add_option("--rank", rank_k, "extract rank-k members");

  auto* cmd_check =
      app.add_subcommand("check", "representation invariants and maximality");
  cmd_check->add_option("file", file)->required();

  auto* cmd_signs =
      app.add_subcommand("signs", "relative signs from the representation");
  cmd_signs->add_option("file", file)->required();
  cmd_signs->add_option("--fundamental", fundamental)->required();
  cmd_signs->add_flag("--full", full, "also emit the full two-argument table");

  auto* cmd_orient =
      app.add_subcommand("orientations", "enumerate all orientations");
  cmd_orient->add_option("file", file);
  cmd_orient->add_option("--bases", basis_list,
                         "explicit basis list instead of a file");
  cmd_orient->add_option("--n", ground_n, "ground size for --bases");
  cmd_orient->add_flag("--full", full, "emit full tables");

  auto* cmd_index = app.add_subcommand("index", "index relative to a basis");
  cmd_index->add_option("file", file)->required();
  cmd_index->add_option("--fundamental", fundamental)->required();
  cmd_index->add_flag("--verify-paths", verify_paths,
                      "exhaustively verify path-independence");

  auto* cmd_cross = app.add_subcommand(
      "crosscheck", "matroid index vs quadratic-form inertia, all bases");
  cmd_cross->add_option("file", file)->required();

  auto* cmd_poly = app.add_subcommand("polytope", "2-skeleton export");
  cmd_poly->add_option("file", file)->required();
  cmd_poly->add_flag("--oriented", oriented,
                     "direct short edges by the representation orientation");
  cmd_poly->add_flag("--dot", dot, "DOT output");
  cmd_poly->add_flag("--json", json_out, "JSON output (default)");

  auto* cmd_iso = app.add_subcommand("isomorphic", "search for an isomorphism");
  cmd_iso->add_option("fileA", file)->required();
  cmd_iso->add_option("fileB", file_b)->required();
  cmd_iso->add_flag("--oriented", oriented, "require sign preservation");

  auto* cmd_census = app.add_subcommand("census", "exhaustive small-n census");
  cmd_census->add_option("--n", census_n)->required();

  auto* cmd_selftest =
      app.add_subcommand("selftest", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_bases->parsed()) {
    const auto doc = lagmat::load_matrix_document(file);
    const int k = rank_k < 0 ? doc.n : rank_k;
    const auto m = bases_of(doc, k);
    json names = json::array();
    for (const auto& b : m.bases) names.push_back(lagmat::to_string(b));
    emit({{"n", m.n}, {"k", m.k}, {"bases", names}}, opt);
  } else if (cmd_check->parsed()) {
    const auto doc = lagmat::load_matrix_document(file);
    const auto m = bases_of(doc, doc.n);
    const auto report = lagmat::check_maximality(m);
    json j{{"ok", report.holds},
           {"field", doc.field == lagmat::MatrixDocument::Field::Q ? "Q" : "GF2"},
           {"n", doc.n},
           {"bases", m.bases.size()},
           {"maximality", report.holds}};
    if (report.witness) j["witness"] = ordering_to_json(*report.witness);
    emit(j, opt);
    return report.holds ? 0 : 1;
  } else if (cmd_signs->parsed()) {
    const auto doc = lagmat::load_matrix_document(file);
    const auto m = bases_of(doc, doc.n);
    const auto f = lagmat::parse_transversal(fundamental, doc.n);
    const auto rs = lagmat::orientation_from_representation(
        lagmat::fundamental_reduction(doc.rational(), f), m);
    json j = signs_to_json(m, rs);
    if (full) j["table"] = table_to_json(lagmat::extend_signs(m, rs));
    emit(j, opt);
  } else if (cmd_orient->parsed()) {
    lagmat::BasisSystem m = [&] {
      if (!basis_list.empty()) {
        const auto listed = parse_basis_list(basis_list, ground_n);
        auto sys = lagmat::BasisSystem::lagrangian(listed.front().n, listed);
        // A file-backed system is a matroid by construction; a hand-typed
        // list is not.
        const auto report = lagmat::check_maximality(sys);
        if (!report.holds)
          throw lagmat::domain_error(
              "orientations: the basis list fails the Maximality Property");
        return sys;
      }
      if (file.empty())
        throw lagmat::domain_error("orientations: pass a file or --bases");
      const auto doc = lagmat::load_matrix_document(file);
      return bases_of(doc, doc.n);
    }();
    const auto tables = lagmat::enumerate_orientations(m);
    json list = json::array();
    for (const auto& st : tables) {
      json j = signs_to_json(
          m, lagmat::change_fundamental(st, st.bases.front()));
      if (full) j["table"] = table_to_json(st);
      list.push_back(j);
    }
    emit({{"count", tables.size()}, {"orientations", list}}, opt);
  } else if (cmd_index->parsed()) {
    const auto doc = lagmat::load_matrix_document(file);
    const auto m = bases_of(doc, doc.n);
    const auto f = lagmat::parse_transversal(fundamental, doc.n);
    const auto st = representation_table(doc, m);
    const auto report = lagmat::index_relative(m, st, f);
    json path = json::array();
    for (const auto& v : report.path.vertices)
      path.push_back(lagmat::to_string(v));
    json j{{"fundamental", lagmat::to_string(f)},
           {"index", report.index},
           {"max_height", report.max_height},
           {"path", path}};
    if (verify_paths)
      j["well_defined"] = lagmat::verify_index_well_defined(m, st, f);
    emit(j, opt);
  } else if (cmd_cross->parsed()) {
    const auto doc = lagmat::load_matrix_document(file);
    const auto& rep = doc.rational();
    const auto m = lagmat::extract_bases(rep, doc.n);
    json records = json::array();
    bool all = true;
    for (const auto& f : m.transversals()) {
      const auto r = lagmat::crosscheck_quadratic(rep, f);
      all = all && r.agree;
      records.push_back({{"fundamental", lagmat::to_string(f)},
                         {"matroid_index", r.matroid_index},
                         {"kronecker_index", r.kronecker_index},
                         {"oracle_index", r.oracle_index},
                         {"max_height", r.max_height},
                         {"rank", r.rank},
                         {"agree", r.agree}});
    }
    emit({{"n", doc.n}, {"records", records}, {"all_agree", all}}, opt);
  } else if (cmd_poly->parsed()) {
    const auto doc = lagmat::load_matrix_document(file);
    const auto m = bases_of(doc, doc.n);
    if (oriented) {
      const auto st = representation_table(doc, m);
      const auto os = lagmat::orient_skeleton(m, st);
      if (dot)
        std::cout << lagmat::skeleton_to_dot(os);
      else
        emit(lagmat::skeleton_to_json(os, st), opt);
    } else {
      const auto sk = lagmat::scan_faces(m);
      if (dot)
        std::cout << lagmat::skeleton_to_dot(sk);
      else
        emit(lagmat::skeleton_to_json(sk), opt);
    }
  } else if (cmd_iso->parsed()) {
    const auto doc_a = lagmat::load_matrix_document(file);
    const auto doc_b = lagmat::load_matrix_document(file_b);
    const auto ma = bases_of(doc_a, doc_a.n);
    const auto mb = bases_of(doc_b, doc_b.n);
    const auto found =
        oriented ? lagmat::find_isomorphism(ma, representation_table(doc_a, ma),
                                            mb, representation_table(doc_b, mb))
                 : lagmat::find_isomorphism(ma, mb);
    json j{{"isomorphic", found.has_value()}, {"oriented", oriented}};
    if (found) j["map"] = ordering_to_json(*found);
    emit(j, opt);
  } else if (cmd_census->parsed()) {
    const auto summary = lagmat::run_census(census_n);
    json orient_hist = json::object();
    for (const auto& [count, matroids] : summary.orientation_histogram)
      orient_hist[std::to_string(count)] = matroids;
    emit({{"n", summary.n},
          {"matroids", summary.matroids},
          {"even_matroids", summary.even_matroids},
          {"orientation_histogram", orient_hist},
          {"face_histogram", summary.face_histogram}},
         opt);
  } else if (cmd_selftest->parsed()) {
    int failures = 0;
    for (const auto& r : lagmat::run_acceptance(opt.seed)) {
      std::printf("criterion %d: %s  %s (%.2f s)%s%s\n", r.id,
                  r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                  r.detail.empty() ? "" : " -- ", r.detail.c_str());
      failures += r.passed ? 0 : 1;
    }
    return failures ? 1 : 0;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const lagmat::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lagmat::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
