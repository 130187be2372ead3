#include "csg/serialize.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "csg/errors.hpp"

namespace csg::io {
namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw_input(std::string("malformed JSON: ") + e.what());
  }
}

json point_json(const Point& x) {
  if (x.dim() == 1) return x[0];
  json arr = json::array();
  for (Coord c : x.coords()) arr.push_back(c);
  return arr;
}

Point point_from(const json& j) {
  try {
    if (j.is_number_integer()) return num(j.get<Coord>());
    if (!j.is_array()) throw_input("point must be an integer or an array, got " + j.dump());
    const auto coords = j.get<std::vector<Coord>>();
    return Point(std::span<const Coord>(coords));
  } catch (const json::exception& e) {
    throw_input(std::string("bad point: ") + e.what());
  }
}

json points_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& x : pts) arr.push_back(point_json(x));
  return arr;
}

std::vector<Point> points_from(const json& j) {
  if (!j.is_array()) throw_input("expected an array of points");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(point_from(e));
  return out;
}

json cone_json(const Cone& cone) {
  json rays = json::array();
  for (const auto& r : cone.rays()) {
    json arr = json::array();
    for (Coord c : r.coords()) arr.push_back(c);
    rays.push_back(arr);
  }
  return {{"dim", cone.dim()}, {"rays", rays}};
}

Cone cone_from(const json& j) {
  if (!j.is_object() || !j.contains("rays")) throw_input("cone JSON needs a \"rays\" array");
  std::vector<Point> rays;
  for (const auto& r : j.at("rays")) {
    if (!r.is_array()) throw_input("each ray must be an array");
    const auto coords = r.get<std::vector<Coord>>();
    rays.emplace_back(std::span<const Coord>(coords));
  }
  if (j.contains("dim") && !rays.empty() && j.at("dim").get<std::size_t>() != rays.front().dim()) {
    throw_input("cone \"dim\" disagrees with its rays");
  }
  return Cone(std::move(rays));
}

json order_json(const MonomialOrder& order) {
  switch (order.kind()) {
    case OrderKind::Lex:
    case OrderKind::GradedLex: {
      json j{{"kind", order.kind() == OrderKind::Lex ? "lex" : "grlex"}};
      std::vector<std::size_t> identity(order.dim());
      for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
      if (order.var_order() != identity) j["var_order"] = order.var_order();
      return j;
    }
    case OrderKind::Matrix: break;
  }
  return {{"kind", "matrix"}, {"functionals", order.functionals()}};
}

MonomialOrder order_from(const json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("kind")) throw_input("order JSON needs a \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  std::vector<std::size_t> priority;
  if (j.contains("var_order")) priority = j.at("var_order").get<std::vector<std::size_t>>();
  if (kind == "lex") return MonomialOrder::lex(dim, priority);
  if (kind == "grlex") return MonomialOrder::graded_lex(dim, priority);
  if (kind == "matrix") {
    auto rows = j.at("functionals").get<std::vector<std::vector<Coord>>>();
    auto order = MonomialOrder::matrix(std::move(rows));
    if (order.dim() != dim) throw_input("order dimension disagrees with the cone");
    return order;
  }
  throw_input("unknown order kind \"" + kind + "\"");
}

json semigroup_json(const GapSemigroup& s) {
  if (s.dim() == 1) return {{"gaps", points_json(s.gaps())}};
  return {{"cone", cone_json(s.cone())}, {"order", order_json(s.order())},
          {"gaps", points_json(s.gaps())}};
}

AmbientPtr ambient_from(const json& j) {
  if (!j.contains("cone")) return numerical_ambient();
  Cone cone = cone_from(j.at("cone"));
  const std::size_t dim = cone.dim();
  const json order = j.contains("order") ? j.at("order") : json{{"kind", "grlex"}};
  return make_ambient(std::move(cone), order_from(order, dim));
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

Coord parse_int(const std::string& text) {
  const std::string t = trim(text);
  std::size_t used = 0;
  Coord v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    throw_input("expected an integer, got \"" + t + "\"");
  }
  if (used != t.size()) throw_input("expected an integer, got \"" + t + "\"");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

void add_items(const std::string& text, std::vector<Coord>& out) {
  for (const auto& raw : split(text, ',')) {
    const std::string item = trim(raw);
    if (item.empty()) continue;
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const Coord lo = parse_int(item.substr(0, dots));
      const Coord hi = parse_int(item.substr(dots + 2));
      if (lo > hi) throw_input("empty range " + item);
      for (Coord v = lo; v <= hi; ++v) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
  }
}

}  // namespace

std::string cone_to_json(const Cone& cone) { return cone_json(cone).dump(); }
Cone cone_from_json(const std::string& text) { return cone_from(parse_json(text)); }

std::string order_to_json(const MonomialOrder& order) { return order_json(order).dump(); }
MonomialOrder order_from_json(const std::string& text, std::size_t dim) {
  return order_from(parse_json(text), dim);
}

std::string semigroup_to_json(const GapSemigroup& s) { return semigroup_json(s).dump(); }

GapSemigroup semigroup_from_json(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("gaps")) throw_input("semigroup JSON needs a \"gaps\" array");
  return GapSemigroup::from_gaps(ambient_from(j), points_from(j.at("gaps")));
}

std::string tree_to_json(const SemigroupTree& tree) {
  json nodes = json::array();
  for (const auto& n : tree.nodes) {
    nodes.push_back({{"gaps", points_json(n.semigroup.gaps())},
                     {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                     {"adjoined", n.adjoined ? point_json(*n.adjoined) : json(nullptr)},
                     {"depth", n.depth}});
  }
  json j{{"family", to_string(tree.family)}, {"nodes", nodes}};
  if (!tree.empty() && tree.root().dim() != 1) {
    j["cone"] = cone_json(tree.root().cone());
    j["order"] = order_json(tree.root().order());
  }
  return j.dump();
}

SemigroupTree tree_from_json(const std::string& text) {
  const json j = parse_json(text);
  const auto family = parse_family(j.value("family", std::string{}));
  if (!family) throw_input("unknown tree family");
  const auto ambient = ambient_from(j);
  SemigroupTree tree{*family, {}};
  for (const auto& n : j.at("nodes")) {
    TreeNode node{GapSemigroup::from_gaps(ambient, points_from(n.at("gaps"))), std::nullopt,
                  std::nullopt, n.at("depth").get<std::size_t>()};
    if (!n.at("parent").is_null()) node.parent = n.at("parent").get<std::size_t>();
    if (!n.at("adjoined").is_null()) node.adjoined = point_from(n.at("adjoined"));
    tree.nodes.push_back(std::move(node));
  }
  return tree;
}

std::string to_dot(const SemigroupTree& tree) {
  std::ostringstream out;
  out << "digraph " << to_string(tree.family) << " {\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    out << "  n" << i << " [label=\"" << (n.adjoined ? n.adjoined->to_string() : "Δ") << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    if (!n.parent) continue;
    out << "  n" << *n.parent << " -> n" << i << " [label=\"" << n.adjoined->to_string()
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Coord> parse_gap_syntax(const std::string& text) {
  std::string include = text;
  std::string exclude;
  if (auto slash = text.find('\\'); slash != std::string::npos) {
    include = text.substr(0, slash);
    exclude = trim(text.substr(slash + 1));
    if (exclude.size() < 2 || exclude.front() != '{' || exclude.back() != '}') {
      throw_input("expected \\{...} after the gap range in \"" + text + "\"");
    }
    exclude = exclude.substr(1, exclude.size() - 2);
  }
  include = trim(include);
  if (!include.empty() && include.front() == '{' && include.back() == '}') {
    include = include.substr(1, include.size() - 2);
  }
  std::vector<Coord> keep;
  std::vector<Coord> drop;
  add_items(include, keep);
  add_items(exclude, drop);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::erase_if(keep, [&](Coord v) { return std::find(drop.begin(), drop.end(), v) != drop.end(); });
  return keep;
}

Point parse_point(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && (t.front() == '(' || t.front() == '[')) t = t.substr(1, t.size() - 2);
  std::vector<Coord> coords;
  for (const auto& part : split(t, ',')) coords.push_back(parse_int(part));
  return Point(std::span<const Coord>(coords));
}

std::vector<Point> parse_point_list(const std::string& text, std::size_t dim) {
  std::string t = trim(text);
  if (!t.empty() && (t.front() == '{' || t.front() == '[') &&
      (t.back() == '}' || t.back() == ']')) {
    t = t.substr(1, t.size() - 2);
  }
  std::vector<Point> out;
  if (trim(t).empty()) return out;
  if (dim == 1) {
    for (Coord v : parse_gap_syntax(t)) out.push_back(num(v));
    return out;
  }
  static const std::regex tuple(R"([\(\[]([^\)\]]*)[\)\]])");
  for (auto it = std::sregex_iterator(t.begin(), t.end(), tuple); it != std::sregex_iterator();
       ++it) {
    out.push_back(parse_point((*it)[1].str()));
  }
  for (const auto& p : out) {
    if (p.dim() != dim) throw_input("point " + p.to_string() + " has the wrong dimension");
  }
  if (out.empty()) throw_input("no points found in \"" + text + "\"");
  return out;
}

}  // namespace csg::io
