#include "eqv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eqv/congruence.hpp"
#include "eqv/document.hpp"
#include "eqv/moduli.hpp"
#include "eqv/series.hpp"

namespace eqv {

using nlohmann::json;

namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool machine = false;
};

// Raised for conditions that map to a specific exit code without an Error.
struct Exit {
  int code;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw Error(Errc::parse_error, "cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

ActionDocument load(const std::string& path, Io& io) { return parse_document(read_source(path, io.in)); }

void require_validated(const GroupAction& action, Io& io, bool congruence) {
  const ValidationReport report = validate(action);
  bool ok = report.passed();
  for (const auto& c : report.checks) {
    if (!c.passed) io.err << "validation: " << c.name << " failed (" << c.detail << ")\n";
  }
  if (ok && congruence && report.moduli_only) {
    io.err << "validation: congruence checks need an odd prime; p = 2 is for dimension only\n";
    ok = false;
  }
  if (!ok) throw Exit{kExitValidationFailure};
}

json relation_json(const RelationResult& r) {
  return {{"name", r.name},
          {"lhs", r.lhs.str()},
          {"required", r.required.str()},
          {"modulus", r.modulus},
          {"passed", r.passed}};
}

int emit_report(const CongruenceReport& report, const std::string& title, Io& io) {
  if (io.machine) {
    json doc{{"check", title}, {"passed", report.passed()}, {"relations", json::array()}};
    for (const auto& r : report.relations) doc["relations"].push_back(relation_json(r));
    io.out << doc.dump() << "\n";
  } else {
    io.out << title << "\n";
    for (const auto& r : report.relations) {
      io.out << "  " << std::left << std::setw(14) << r.name << " " << r.lhs << " vs " << r.required;
      if (r.modulus != 0) io.out << " (mod " << r.modulus << ")";
      io.out << "  " << (r.passed ? "pass" : "FAIL") << "\n";
    }
    io.out << "result: " << (report.passed() ? "pass" : "FAIL") << "\n";
  }
  return report.passed() ? kExitPass : kExitRelationFailure;
}

int cmd_check(const std::string& file, const std::string& mode, Io& io) {
  const ActionDocument doc = load(file, io);
  require_validated(doc.action, io, true);
  if (mode == "rotation") return emit_report(check_rotation_relations(doc.action), "rotation relations", io);
  if (mode == "gsign") return emit_report(gsignature_check(doc.action), "G-signature", io);
  if (mode == "line") {
    if (!doc.line) {
      io.err << "document has no line section\n";
      return kExitValidationFailure;
    }
    const LineIsotropy iso = complete_line(*doc.line);
    CongruenceReport report = theorem_a_condition(doc.action, iso);
    const CongruenceReport bundle = check_line_bundle(doc.action, iso);
    report.relations.insert(report.relations.end(), bundle.relations.begin(), bundle.relations.end());
    return emit_report(report, "line bundle relations", io);
  }
  if (!doc.su2) {
    io.err << "document has no su2 section\n";
    return kExitValidationFailure;
  }
  return emit_report(check_su2(doc.action, *doc.su2), "SU(2) relation", io);
}

// lambda[i], lambda_F[j] or m[j].
void mark_free(PartialLineIsotropy& iso, const std::string& id) {
  static const std::regex pattern(R"((lambda|lambda_F|m)\[(\d+)\])");
  std::smatch match;
  if (!std::regex_match(id, match, pattern)) {
    throw Error(Errc::parse_error, "free unknown must look like lambda[i], lambda_F[j] or m[j]; got " + id);
  }
  const std::size_t index = std::stoul(match[2].str());
  auto& slots = match[1] == "lambda" ? iso.lambda_points : (match[1] == "lambda_F" ? iso.lambda_spheres : iso.m_spheres);
  if (index >= slots.size()) throw Error(Errc::invalid_argument, id + " is out of range");
  slots[index].reset();
}

int cmd_solve(const std::string& file, const std::vector<std::string>& free, Io& io) {
  ActionDocument doc = load(file, io);
  require_validated(doc.action, io, true);
  if (!doc.line) {
    io.err << "document has no line section\n";
    return kExitValidationFailure;
  }
  for (const auto& id : free) mark_free(*doc.line, id);
  const PartialLineIsotropy before = *doc.line;
  const LineIsotropy solved = solve_theorem_a(doc.action, before);
  if (!io.machine) {
    auto report = [&](const char* name, const auto& was, const auto& now) {
      for (std::size_t i = 0; i < was.size(); ++i) {
        if (!was[i]) io.out << "solved " << name << "[" << i << "] = " << now[i] << " (mod " << doc.action.p << ")\n";
      }
    };
    report("lambda", before.lambda_points, solved.lambda_points);
    report("lambda_F", before.lambda_spheres, solved.lambda_spheres);
    report("m", before.m_spheres, solved.m_spheres);
  }
  doc.line = to_partial(solved);
  io.out << serialize_document(doc) << "\n";
  return kExitPass;
}

int cmd_dimension(const std::string& file, std::optional<std::int64_t> k, Io& io) {
  const ActionDocument doc = load(file, io);
  require_validated(doc.action, io, false);
  if (!doc.su2) {
    io.err << "document has no su2 section\n";
    return kExitValidationFailure;
  }
  const std::int64_t charge = k.value_or(doc.su2->c2);
  DimensionReport report;
  try {
    report = dim_invariant_moduli(doc.action, *doc.su2, charge);
  } catch (const Error& e) {
    if (e.code() != Errc::non_integer_dimension) throw;
    io.out << e.what() << "\n";
    return kExitRelationFailure;
  }
  if (io.machine) {
    json out{{"dimension", report.dimension},
             {"chi_quotient", report.quotient.euler.str()},
             {"sign_quotient", report.quotient.signature.str()},
             {"terms", json::object()}};
    for (const auto& t : report.terms) out["terms"][t.name] = t.value.str();
    io.out << out.dump() << "\n";
  } else {
    io.out << "dimension: " << report.dimension << "\n" << format_breakdown(report);
  }
  return kExitPass;
}

int cmd_expand(const std::string& kind, const std::vector<std::int64_t>& v, int order, std::optional<std::int64_t> p,
               Io& io) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (v.size() < lo || v.size() > hi) {
      throw Error(Errc::parse_error, kind + " takes " + std::to_string(lo) +
                                         (lo == hi ? "" : "-" + std::to_string(hi)) + " integers");
    }
  };
  auto opt = [&](std::size_t i) { return i < v.size() ? v[i] : 0; };
  PowerSeries s(0);
  try {
    if (kind == "point") {
      need(2, 3);
      s = expand_point_term(v[0], v[1], opt(2), order);
    } else if (kind == "sphere") {
      need(2, 3);
      s = expand_sphere_term(v[0], v[1], opt(2), order);
    } else if (kind == "boundary") {
      need(2, 3);
      s = expand_boundary_term(v[0], v[1], opt(2), order);
    } else if (kind == "su2-point") {
      need(3, 3);
      s = expand_su2_point_term(v[0], v[1], v[2], order);
    } else {
      need(4, 4);
      s = expand_su2_sphere_term(v[0], v[1], v[2], v[3], order);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::zero_rotation || e.code() == Errc::invalid_argument) {
      throw Error(Errc::parse_error, e.what());
    }
    throw;
  }
  if (p && !is_prime(*p)) throw Error(Errc::parse_error, "--p must be prime");
  json doc{{"kind", kind}, {"coefficients", json::array()}};
  for (int i = 0; i <= s.order(); ++i) {
    std::optional<std::int64_t> reduced;
    if (p) {
      try {
        reduced = rational_mod(s[i], *p).value();
      } catch (const Error&) {
        // denominator divisible by p: no reduction
      }
    }
    if (io.machine) {
      json c{{"order", i}, {"value", s[i].str()}};
      if (reduced) c["mod_p"] = *reduced;
      doc["coefficients"].push_back(c);
    } else {
      io.out << "s^" << i << ": " << s[i];
      if (p) io.out << "  (mod " << *p << ": " << (reduced ? std::to_string(*reduced) : std::string("undefined")) << ")";
      io.out << "\n";
    }
  }
  if (io.machine) io.out << doc.dump() << "\n";
  return kExitPass;
}

int cmd_sum(const std::string& file_a, std::size_t i, const std::string& file_b, std::size_t j,
            const std::string& mode, Io& io) {
  const ActionDocument a = load(file_a, io);
  const ActionDocument b = load(file_b, io);
  ActionDocument out;
  out.action = mode == "spheres" ? connected_sum_spheres(a.action, i, b.action, j)
                                 : connected_sum_points(a.action, i, b.action, j);
  io.out << serialize_document(out) << "\n";
  return kExitPass;
}

std::string format_action(const GroupAction& action) {
  std::ostringstream os;
  os << "points {";
  for (std::size_t i = 0; i < action.points.size(); ++i) {
    os << (i ? ", " : "") << format_point(action.points[i], action.p);
  }
  os << "} spheres {";
  for (std::size_t j = 0; j < action.spheres.size(); ++j) {
    os << (j ? ", " : "") << "(c=" << display_residue(action.spheres[j].c, action.p)
       << ", alpha=" << action.spheres[j].alpha << ")";
  }
  os << "}";
  return os.str();
}

int cmd_search(const SearchProfile& profile, std::optional<std::size_t> limit, Io& io) {
  const std::size_t n = search_realizable(
      profile,
      [&](const GroupAction& action) {
        if (io.machine) {
          io.out << json::parse(serialize_document({action, std::nullopt, std::nullopt})).dump() << "\n";
        } else {
          io.out << format_action(action) << "\n";
        }
        return true;
      },
      limit);
  if (!io.machine) io.err << n << " result(s)\n";
  return kExitPass;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::parse_error:
      return kExitParseError;
    case Errc::non_integer_dimension:
      return kExitRelationFailure;
    default:
      return kExitValidationFailure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Congruence checks and invariant-moduli dimensions for cyclic group actions on 4-manifolds",
               "eqvbundle"};
  app.require_subcommand(1);
  app.fallthrough();
  Io io{in, out, err};
  app.add_flag("--machine", io.machine, "emit JSON instead of text");

  std::string file, file_b, mode = "rotation", kind;
  std::vector<std::string> free;
  std::optional<std::int64_t> k, p_mod;
  std::vector<std::int64_t> values;
  int order = 4;
  std::size_t i = 0, j = 0;
  std::optional<std::size_t> limit;
  SearchProfile profile;
  std::size_t n_points = 0;

  auto* check = app.add_subcommand("check", "check congruence relations for a document");
  check->add_option("file", file, "document path or -")->required();
  check->add_option("--mode", mode, "rotation | line | su2 | gsign")
      ->check(CLI::IsMember({"rotation", "line", "su2", "gsign"}));

  auto* gsign = app.add_subcommand("gsign", "exact G-signature check");
  gsign->add_option("file", file, "document path or -")->required();

  auto* solve = app.add_subcommand("solve", "complete line isotropy so that the existence condition holds");
  solve->add_option("file", file, "document path or -")->required();
  solve->add_option("--free", free, "unknown to solve for: lambda[i], lambda_F[j] or m[j]");

  auto* dimension = app.add_subcommand("dimension", "dimension of the invariant instanton moduli space");
  dimension->add_option("file", file, "document path or -")->required();
  dimension->add_option("--k", k, "instanton number (defaults to the document's c2)");

  auto* expand = app.add_subcommand("expand", "series of a fixed-point term about t = 1");
  expand->add_option("kind", kind, "point | sphere | boundary | su2-point | su2-sphere")
      ->required()
      ->check(CLI::IsMember({"point", "sphere", "boundary", "su2-point", "su2-sphere"}));
  expand->add_option("values", values, "integer parameters")->required();
  expand->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber);
  expand->add_option("--p", p_mod, "also reduce coefficients mod this prime");

  auto* sum = app.add_subcommand("sum", "equivariant connected sum of two documents");
  sum->add_option("first", file, "first document")->required();
  sum->add_option("i", i, "fixed point or sphere index in the first")->required();
  sum->add_option("second", file_b, "second document")->required();
  sum->add_option("j", j, "fixed point or sphere index in the second")->required();
  std::string sum_mode = "points";
  sum->add_option("--mode", sum_mode, "points | spheres")->check(CLI::IsMember({"points", "spheres"}));

  auto* search = app.add_subcommand("search", "enumerate rotation data passing all relations");
  search->add_option("--p", profile.p, "group order")->required();
  search->add_option("--points", n_points, "number of isolated fixed points")->required();
  search->add_option("--alphas", profile.sphere_alphas, "self-intersections of fixed spheres")->delimiter(',');
  search->add_option("--signature", profile.signature, "signature")->required();
  search->add_option("--euler", profile.euler, "Euler characteristic")->required();
  search->add_option("--b2", profile.b2, "second Betti number")->required();
  search->add_option("--limit", limit, "stop after this many results");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitParseError;
  }

  try {
    if (*check) return cmd_check(file, mode, io);
    if (*gsign) return cmd_check(file, "gsign", io);
    if (*solve) return cmd_solve(file, free, io);
    if (*dimension) return cmd_dimension(file, k, io);
    if (*expand) return cmd_expand(kind, values, order, p_mod, io);
    if (*sum) return cmd_sum(file, i, file_b, j, sum_mode, io);
    profile.n_points = n_points;
    return cmd_search(profile, limit, io);
  } catch (const Exit& e) {
    return e.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace eqv
