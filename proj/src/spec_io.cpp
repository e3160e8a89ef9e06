#include "gencov/spec_io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

#include "gencov/error.hpp"

namespace gencov
{

namespace
{

using nlohmann::json;

[[noreturn]] void fail_at(std::string const &path, std::string const &what)
{
  throw Error(ErrorCode::ParseError, path + ": " + what);
}

json const &member(json const &object, char const *key, std::string const &path)
{
  if (!object.is_object())
    fail_at(path, "expected an object");
  auto it = object.find(key);
  if (it == object.end())
    fail_at(path, std::string("missing key '") + key + "'");
  return *it;
}

json const &array_at(json const &object, char const *key, std::string const &path)
{
  json const &value = member(object, key, path);
  if (!value.is_array())
    fail_at(path + "." + key, "expected an array");
  return value;
}

Perm perm_at(json const &value, std::size_t degree, std::string const &path)
{
  if (!value.is_string())
    fail_at(path, "expected a cycle string");
  try {
    return Perm::parse(value.get<std::string>(), degree);
  } catch (Error const &e) {
    fail_at(path, e.message());
  }
}

Group group_at(json const &value, std::size_t degree, std::string const &path)
{
  if (!value.is_array())
    fail_at(path, "expected an array of generators");
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < value.size(); ++i)
    gens.push_back(perm_at(value[i], degree, path + "[" + std::to_string(i) + "]"));
  return Group::generate(degree, std::move(gens));
}

std::vector<Group> groups_at(json const &value, std::size_t expected, std::size_t degree,
                             std::string const &path)
{
  if (value.size() != expected)
    fail_at(path, "expected " + std::to_string(expected) + " entries, found " +
                    std::to_string(value.size()));
  std::vector<Group> groups;
  for (std::size_t i = 0; i < value.size(); ++i)
    groups.push_back(group_at(value[i], degree, path + "[" + std::to_string(i) + "]"));
  return groups;
}

json generators_json(Group const &group)
{
  json list = json::array();
  for (Perm const &g : group.generators())
    list.push_back(g.to_string());
  return list;
}

} // namespace

GenVoltageGraph parse_spec(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const &e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }

  json const &schema = member(doc, "schema", "$");
  if (!schema.is_number_integer() || schema.get<long long>() != 1)
    fail_at("$.schema", "unsupported schema version");

  json const &group_block = member(doc, "group", "$");
  json const &degree_value = member(group_block, "degree", "$.group");
  if (!degree_value.is_number_unsigned())
    fail_at("$.group.degree", "expected a non-negative integer");
  auto degree = degree_value.get<std::size_t>();
  Group group = group_at(array_at(group_block, "generators", "$.group"), degree,
                         "$.group.generators");

  json const &base_text = member(doc, "base", "$");
  if (!base_text.is_string())
    fail_at("$.base", "expected a graph in dart format");
  Graph base;
  try {
    base = parse_graph(base_text.get<std::string>());
  } catch (Error const &e) {
    fail_at("$.base", e.message());
  }

  json const &weights = member(doc, "weights", "$");
  std::vector<Group> vertex_weights =
    groups_at(array_at(weights, "vertices", "$.weights"), base.vertex_count(), degree,
              "$.weights.vertices");
  std::vector<Group> dart_weights = groups_at(array_at(weights, "darts", "$.weights"),
                                              base.dart_count(), degree, "$.weights.darts");

  json const &volt = array_at(doc, "voltages", "$");
  if (volt.size() != base.dart_count())
    fail_at("$.voltages", "expected " + std::to_string(base.dart_count()) +
                            " entries, found " + std::to_string(volt.size()));
  std::vector<Perm> voltages;
  for (std::size_t i = 0; i < volt.size(); ++i)
    voltages.push_back(perm_at(volt[i], degree, "$.voltages[" + std::to_string(i) + "]"));

  return GenVoltageGraph(std::move(base), std::move(group), std::move(vertex_weights),
                         std::move(dart_weights), std::move(voltages));
}

std::string format_spec(GenVoltageGraph const &gvg)
{
  json doc;
  doc["schema"] = 1;
  doc["group"]["degree"] = gvg.group().degree();
  doc["group"]["generators"] = generators_json(gvg.group());
  doc["base"] = format_graph(gvg.base());
  json vertices = json::array();
  for (Group const &w : gvg.vertex_weights())
    vertices.push_back(generators_json(w));
  json darts = json::array();
  for (Group const &w : gvg.dart_weights())
    darts.push_back(generators_json(w));
  doc["weights"]["vertices"] = std::move(vertices);
  doc["weights"]["darts"] = std::move(darts);
  json voltages = json::array();
  for (Perm const &z : gvg.voltages())
    voltages.push_back(z.to_string());
  doc["voltages"] = std::move(voltages);
  return doc.dump(2) + "\n";
}

Group parse_action(std::string_view text, Graph const &graph)
{
  std::size_t n = graph.vertex_count();
  std::size_t degree = n + graph.dart_count();
  std::vector<Perm> gens;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto where = [&](std::size_t col) {
      return "line " + std::to_string(line_no) + ", column " + std::to_string(col + 1);
    };
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;

    std::vector<std::vector<Point>> cycles;
    std::vector<bool> used(degree, false);
    bool open = false;
    for (std::size_t i = 0; i < line.size();) {
      char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r' || c == ',') {
        ++i;
      } else if (c == '(') {
        if (open)
          throw Error(ErrorCode::ParseError, where(i) + ": nested '('");
        open = true;
        cycles.emplace_back();
        ++i;
      } else if (c == ')') {
        if (!open)
          throw Error(ErrorCode::ParseError, where(i) + ": unmatched ')'");
        open = false;
        ++i;
      } else if (c == 'v' || c == 'd') {
        if (!open)
          throw Error(ErrorCode::ParseError, where(i) + ": point outside a cycle");
        std::size_t j = i + 1;
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
          ++j;
        if (j == i + 1)
          throw Error(ErrorCode::ParseError, where(i) + ": expected an id after '" +
                                               std::string(1, c) + "'");
        std::size_t id = std::stoul(line.substr(i + 1, j - i - 1));
        std::size_t limit = c == 'v' ? n : graph.dart_count();
        if (id >= limit)
          throw Error(ErrorCode::ParseError, where(i) + ": no " +
                                               (c == 'v' ? "vertex " : "dart ") +
                                               std::to_string(id));
        Point p = static_cast<Point>(c == 'v' ? id : n + id);
        if (used[p])
          throw Error(ErrorCode::ParseError, where(i) + ": point repeated");
        used[p] = true;
        cycles.back().push_back(p);
        i = j;
      } else {
        throw Error(ErrorCode::ParseError,
                    where(i) + ": unexpected character '" + std::string(1, c) + "'");
      }
    }
    if (open)
      throw Error(ErrorCode::ParseError, where(line.size()) + ": unclosed '('");
    gens.push_back(Perm::from_cycles(degree, cycles));
  }
  return Group::generate(degree, std::move(gens));
}

std::string format_action(Group const &group, Graph const &graph)
{
  std::size_t n = graph.vertex_count();
  std::string out;
  for (Perm const &g : group.generators()) {
    std::vector<bool> done(g.degree(), false);
    std::string line;
    for (Point start = 0; start < g.degree(); ++start) {
      if (done[start] || g[start] == start)
        continue;
      line += '(';
      for (Point p = start; !done[p]; p = g[p]) {
        done[p] = true;
        if (p != start)
          line += ' ';
        line += p < n ? "v" + std::to_string(p) : "d" + std::to_string(p - n);
      }
      line += ')';
    }
    out += (line.empty() ? std::string("()") : line) + "\n";
  }
  return out;
}

std::string format_fibre_table(Cover const &cover)
{
  std::string out;
  for (VertexId v = 0; v < cover.graph().vertex_count(); ++v) {
    CoverLabel label = cover.vertex_label(v);
    out += "vertex " + std::to_string(v) + " over " + std::to_string(label.base.index) +
           " coset " + label.representative.to_string() + "\n";
  }
  for (DartId x = 0; x < cover.graph().dart_count(); ++x) {
    CoverLabel label = cover.dart_label(x);
    out += "dart " + std::to_string(x) + " over " + std::to_string(label.base.index) +
           " coset " + label.representative.to_string() + "\n";
  }
  return out;
}

std::string cover_to_dot(Cover const &cover)
{
  DotLabels labels;
  labels.vertex = [&cover](VertexId v) {
    CoverLabel label = cover.vertex_label(v);
    return std::to_string(label.base.index) + " " + label.representative.to_string();
  };
  labels.dart = [&cover](DartId x) { return std::to_string(cover.dart_label(x).base.index); };
  return to_dot(cover.graph(), labels);
}

} // namespace gencov
