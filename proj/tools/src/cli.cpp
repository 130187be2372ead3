#include "csg/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csg/classify.hpp"
#include "csg/enumerate.hpp"
#include "csg/errors.hpp"
#include "csg/gensys.hpp"
#include "csg/oracle.hpp"
#include "csg/serialize.hpp"

namespace csg::cli {
namespace {

using nlohmann::json;

json point_json(const Point& x) {
  if (x.dim() == 1) return x[0];
  return json(std::vector<Coord>(x.coords().begin(), x.coords().end()));
}

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& x : pts) arr.push_back(point_json(x));
  return arr;
}

std::string join(const std::vector<Point>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += pts[i].to_string();
  }
  return s;
}

std::string read_text(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw_input("cannot read \"" + arg + "\"");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Shared ambient flags: --cone accepts JSON, a file, or "(12,1),(7,4)";
// --order accepts JSON, "grlex" or "lex".
struct Session {
  std::string cone;
  std::string order = "grlex";

  AmbientPtr ambient() const {
    if (cone.empty()) return numerical_ambient();
    Cone c = parse_cone();
    const std::size_t dim = c.dim();
    return make_ambient(std::move(c), parse_order(dim));
  }

  std::size_t dim() const { return cone.empty() ? 1 : parse_cone().dim(); }

 private:
  Cone parse_cone() const {
    const std::string text = cone.front() == '(' ? cone : read_text(cone);
    if (text.front() == '{') return io::cone_from_json(text);
    const auto open = text.find('(');
    const auto close = text.find(')');
    if (open == std::string::npos || close == std::string::npos) {
      throw_input("cannot parse cone \"" + text + "\"");
    }
    const std::size_t dim = io::parse_point(text.substr(open, close - open + 1)).dim();
    return Cone(io::parse_point_list(text, dim));
  }

  MonomialOrder parse_order(std::size_t dim) const {
    if (order == "grlex") return MonomialOrder::graded_lex(dim);
    if (order == "lex") return MonomialOrder::lex(dim);
    return io::order_from_json(read_text(order), dim);
  }
};

void add_session(CLI::App* cmd, Session& s) {
  cmd->add_option("--cone", s.cone, "cone rays: JSON, file, or (a,b),(c,d); default N");
  cmd->add_option("--order", s.order, "grlex, lex, or order JSON")->capture_default_str();
}

struct SemigroupSource {
  std::string gaps;
  std::string file;

  GapSemigroup load(const Session& session) const {
    if (!file.empty()) return io::semigroup_from_json(read_text(file));
    if (gaps.empty()) throw_input("give a semigroup with --gaps or --semigroup");
    const auto ambient = session.ambient();
    return GapSemigroup::from_gaps(ambient, io::parse_point_list(gaps, ambient->dim()));
  }
};

void add_source(CLI::App* cmd, SemigroupSource& s) {
  cmd->add_option("--gaps", s.gaps, "gap list, e.g. 1..27\\{10,13} or (1,0),(2,1)");
  cmd->add_option("--semigroup", s.file, "semigroup JSON (inline or file)");
}

Point parse_f(const std::string& text, std::size_t dim) {
  const Point f = io::parse_point(text);
  if (f.dim() != dim) throw_input("f = " + f.to_string() + " does not match the cone dimension");
  if (f.is_zero()) throw_input("f must be a nonzero element of the cone");
  return f;
}

Coord numerical_arg(const std::string& text, const char* name) {
  const Point x = io::parse_point(text);
  if (x.dim() != 1) throw_input(std::string(name) + " must be an integer for this family");
  return x[0];
}

void emit_tree(const SemigroupTree& tree, const std::string& format, std::ostream& out) {
  if (format == "count") {
    out << tree.size() << "\n";
  } else if (format == "json") {
    out << io::tree_to_json(tree) << "\n";
  } else if (format == "dot") {
    out << io::to_dot(tree);
  } else {
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
      const auto& n = tree.nodes[i];
      out << i << " " << (n.parent ? std::to_string(*n.parent) : std::string("-")) << " "
          << (n.adjoined ? n.adjoined->to_string() : std::string("Δ")) << " "
          << n.semigroup.to_string() << "\n";
    }
  }
}

json verdict_json(const std::string& name, const Verdict& v) {
  json j{{"predicate", name}, {"value", v.value}};
  if (!v.value && !v.witness.empty()) j["witness"] = points_json(v.witness);
  return j;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Infeasible:
    case ErrorKind::NotPresent: return 1;
    default: return 2;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"C-semigroups with restricted small elements"};
  app.name("csg");
  app.require_subcommand(1);
  const std::vector<std::string> formats{"count", "nodes", "json", "dot"};

  // check
  Session check_session;
  SemigroupSource check_source;
  std::string predicate = "A";
  Coord residue_b = 0;
  auto* check = app.add_subcommand("check", "evaluate a predicate, print a JSON verdict");
  add_session(check, check_session);
  add_source(check, check_source);
  check->add_option("--predicate", predicate)
      ->check(CLI::IsMember({"A", "A-upsilon", "MED", "Arf", "Sat", "residue"}))
      ->capture_default_str();
  check->add_option("--b", residue_b, "residue base (numerical); default m(S)");

  // invariants
  Session inv_session;
  SemigroupSource inv_source;
  std::string show = "all";
  std::string apery_base;
  auto* invariants = app.add_subcommand("invariants", "print invariants of a semigroup");
  add_session(invariants, inv_session);
  add_source(invariants, inv_source);
  invariants
      ->add_option("--show", show)
      ->check(CLI::IsMember({"all", "genus", "frobenius", "multiplicity", "ratio", "msg",
                             "embedding", "small", "pf", "sg", "apery"}))
      ->capture_default_str();
  invariants->add_option("--b", apery_base, "Apéry base; default m(S)");

  // enumerate
  Session enum_session;
  std::string family_name;
  std::string f_text;
  std::string m_text;
  std::string b_text;
  std::string format = "nodes";
  std::size_t workers = 1;
  bool force_tree = false;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate a family as a rooted tree");
  add_session(enumerate, enum_session);
  enumerate->add_option("--family", family_name)
      ->required()
      ->check(CLI::IsMember({"af", "afm", "afmb", "amed", "arf", "sat"}));
  enumerate->add_option("--f", f_text)->required();
  enumerate->add_option("--m", m_text);
  enumerate->add_option("--B", b_text, "removed window points, e.g. (6,2),(7,1)");
  enumerate->add_option("--format", format)->check(CLI::IsMember(formats))->capture_default_str();
  enumerate->add_option("--workers", workers)->check(CLI::PositiveNumber)->capture_default_str();
  enumerate->add_flag("--force-tree", force_tree, "A(f,m) with f < 2m through the tree");

  // closure
  Session closure_session;
  std::string closure_f;
  std::string closure_set;
  auto* closure_cmd = app.add_subcommand("closure", "least member of A(f) containing a set");
  add_session(closure_cmd, closure_session);
  closure_cmd->add_option("--f", closure_f)->required();
  closure_cmd->add_option("--set", closure_set)->required();

  // rank
  Session rank_session;
  SemigroupSource rank_source;
  std::vector<Coord> pair;
  Coord pair_f = 0;
  auto* rank = app.add_subcommand("rank", "A(f)-system and rank, or the rank-two test");
  add_session(rank, rank_session);
  add_source(rank, rank_source);
  rank->add_option("--pair", pair, "m r for the numerical rank-two test")->expected(2);
  rank->add_option("--f", pair_f, "Frobenius number for --pair");

  // tree
  std::string tree_file;
  std::string tree_format = "dot";
  auto* tree_cmd = app.add_subcommand("tree", "re-emit a serialized tree");
  tree_cmd->add_option("--input", tree_file, "tree JSON (inline or file)")->required();
  tree_cmd->add_option("--format", tree_format)->check(CLI::IsMember(formats))->capture_default_str();

  // oracle
  Session oracle_session;
  SemigroupSource oracle_source;
  std::string what;
  std::string oracle_f;
  std::string filter = "A";
  Coord bound = 10;
  bool force = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference computations");
  add_session(oracle_cmd, oracle_session);
  add_source(oracle_cmd, oracle_source);
  oracle_cmd->add_option("--what", what)->required()->check(CLI::IsMember({"family", "msg", "sat"}));
  oracle_cmd->add_option("--f", oracle_f);
  oracle_cmd->add_option("--filter", filter)
      ->check(CLI::IsMember({"all", "A", "arf", "sat", "meda"}))
      ->capture_default_str();
  oracle_cmd->add_option("--bound", bound, "coefficient bound for --what sat")->capture_default_str();
  oracle_cmd->add_flag("--force", force, "lift the size guards");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const auto s = check_source.load(check_session);
      json j;
      if (predicate == "A") j = verdict_json(predicate, is_A(s));
      if (predicate == "A-upsilon") j = verdict_json(predicate, is_A_upsilon(s));
      if (predicate == "MED") j = verdict_json(predicate, is_MED(s));
      if (predicate == "Arf") j = verdict_json(predicate, is_arf(s));
      if (predicate == "Sat") j = verdict_json(predicate, is_saturated(s));
      if (predicate == "residue") {
        const Coord b = residue_b ? residue_b : s.multiplicity()[0];
        const auto report = residue_A_check(s, b);
        j = {{"predicate", predicate}, {"value", report.value}, {"b", b}, {"x_set", report.x_set}};
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (*invariants) {
      const auto s = inv_source.load(inv_session);
      auto base = [&] {
        return apery_base.empty() ? s.multiplicity() : io::parse_point(apery_base);
      };
      if (show == "genus") out << s.genus() << "\n";
      if (show == "frobenius") out << s.frobenius_element().to_string() << "\n";
      if (show == "multiplicity") out << s.multiplicity().to_string() << "\n";
      if (show == "ratio") out << s.ratio().to_string() << "\n";
      if (show == "msg") out << join(s.msg()) << "\n";
      if (show == "embedding") out << s.embedding_dimension() << "\n";
      if (show == "small") out << join(s.small_elements()) << "\n";
      if (show == "pf") out << join(pseudo_frobenius(s)) << "\n";
      if (show == "sg") out << join(special_gaps(s)) << "\n";
      if (show == "apery") out << join(apery(s, base()).elements) << "\n";
      if (show == "all") {
        json j{{"genus", s.genus()},
               {"frobenius", s.frobenius() ? point_json(*s.frobenius()) : json(nullptr)},
               {"multiplicity", point_json(s.multiplicity())},
               {"msg", points_json(s.msg())},
               {"small", points_json(s.small_elements())}};
        if (s.frobenius()) {
          j["pf"] = points_json(pseudo_frobenius(s));
          j["sg"] = points_json(special_gaps(s));
          j["apery"] = {{"base", point_json(base())}, {"elements", points_json(apery(s, base()).elements)}};
        }
        out << j.dump() << "\n";
      }
      return 0;
    }

    if (*enumerate) {
      const Family family = *parse_family(family_name);
      const EnumerateOptions options{workers, force_tree};
      auto need_m = [&] {
        if (m_text.empty()) throw_input("--m is required for --family " + family_name);
      };
      SemigroupTree tree;
      if (family == Family::AMED_fm) {
        need_m();
        const Coord f = numerical_arg(f_text, "--f");
        if (f < 1) throw_input("f must be a positive integer");
        tree = enumerate_AMED_fm(f, numerical_arg(m_text, "--m"), options);
      } else if (family == Family::Arf_f || family == Family::Sat_f) {
        const Coord f = numerical_arg(f_text, "--f");
        if (f < 1) throw_input("f must be a positive integer");
        tree = enumerate_covariety(f, family == Family::Arf_f ? Covariety::Arf : Covariety::Sat,
                                   options);
      } else {
        const auto ambient = enum_session.ambient();
        const Point f = parse_f(f_text, ambient->dim());
        if (family == Family::A_f) {
          tree = enumerate_A_f(ambient, f, options);
        } else {
          need_m();
          const Point m = io::parse_point(m_text);
          if (family == Family::A_fm) {
            tree = enumerate_A_fm(ambient, f, m, options);
          } else {
            tree = enumerate_A_fmb(ambient, f, m, io::parse_point_list(b_text, ambient->dim()),
                                   options);
          }
        }
      }
      tree.family = family;
      emit_tree(tree, format, out);
      return 0;
    }

    if (*closure_cmd) {
      const auto ambient = closure_session.ambient();
      const Point f = parse_f(closure_f, ambient->dim());
      const auto result = closure(ambient, f, io::parse_point_list(closure_set, ambient->dim()));
      const auto generators = a_msg(result.semigroup);
      json j{{"gaps", points_json(result.semigroup.gaps())},
             {"genus", result.semigroup.genus()},
             {"a_msg", points_json(generators)},
             {"rank", generators.size()},
             {"branch", result.branch}};
      out << j.dump() << "\n";
      return 0;
    }

    if (*rank) {
      if (!pair.empty()) {
        if (pair_f <= 0) throw_input("--pair needs a positive --f");
        const auto report = rank2_feasible_numerical(pair[0], pair[1], pair_f);
        json j{{"m", pair[0]}, {"r", pair[1]}, {"f", pair_f}, {"feasible", report.feasible},
               {"coprime", report.coprime}, {"x_set", report.x_set}};
        if (!report.witness.empty()) j["witness"] = report.witness;
        if (report.feasible) {
          j["apery"] = points_json(rank2_apery(pair[0], pair[1], pair_f).elements);
        }
        out << j.dump() << "\n";
        return report.feasible ? 0 : 1;
      }
      const auto s = rank_source.load(rank_session);
      const auto generators = a_msg(s);
      json j{{"a_msg", points_json(generators)},
             {"rank", generators.size()},
             {"embedding_dimension", s.embedding_dimension()}};
      if (s.frobenius()) {
        j["branch"] = closure(s.ambient_ptr(), *s.frobenius(), generators).branch;
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (*tree_cmd) {
      emit_tree(io::tree_from_json(read_text(tree_file)), tree_format, out);
      return 0;
    }

    if (*oracle_cmd) {
      const auto ambient = oracle_session.ambient();
      if (what == "family") {
        if (oracle_f.empty()) throw_input("--what family needs --f");
        const Point f = parse_f(oracle_f, ambient->dim());
        const oracle::Filter flt = filter == "all"    ? oracle::Filter::All
                                   : filter == "arf"  ? oracle::Filter::Arf
                                   : filter == "sat"  ? oracle::Filter::Sat
                                   : filter == "meda" ? oracle::Filter::MedA
                                                      : oracle::Filter::A;
        std::vector<GapSemigroup> family;
        if (ambient->dim() == 1) {
          family = oracle::brute_family(f[0], flt, force ? std::numeric_limits<Coord>::max() : 20);
        } else {
          family = oracle::brute_family_2d(ambient, f, flt, force ? 62 : 16);
        }
        out << family.size() << "\n";
        for (const auto& s : family) out << s.to_string() << "\n";
        return 0;
      }
      const auto s = oracle_source.load(oracle_session);
      if (what == "msg") {
        out << join(oracle::brute_msg(s)) << "\n";
      } else {
        if (!force && bound > 20) throw_capability("--bound above 20 needs --force");
        out << (oracle::brute_saturated(s, bound) ? "true" : "false") << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace csg::cli
