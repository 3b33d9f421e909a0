#include "multifix/instance_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <unordered_map>

namespace multifix {

using nlohmann::json;

std::string metric_kind_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Matrix: return "matrix";
    case MetricKind::Parity: return "parity";
    case MetricKind::Line: return "line";
  }
  return "?";
}

std::string canonical_dump(const json& j) {
  return j.dump(2) + "\n";
}

namespace {

void require_keys(const json& obj, const char* where, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    if (!obj.contains(k)) {
      throw SchemaError(fmt::format("{} is missing required field '{}'", where, k));
    }
  }
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find_if(keys.begin(), keys.end(),
                     [&](const char* k) { return it.key() == k; }) == keys.end()) {
      throw SchemaError(fmt::format("{} has unexpected field '{}'", where, it.key()));
    }
  }
}

Rational rational_from(const json& v, const char* where) {
  if (v.is_number_integer()) {
    return Rational(v.get<long long>());
  }
  if (v.is_string()) {
    return Rational::parse(v.get<std::string>());
  }
  if (v.is_number()) {
    throw SyntaxError(fmt::format(
        "{}: non-integer JSON numbers are not exact; write the value as a string", where));
  }
  throw SchemaError(fmt::format("{}: expected an integer or a rational string", where));
}

json rational_to_json(const Rational& r) {
  return json(r.str());
}

}  // namespace

InstanceDocument parse_instance_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.what());
  }
  if (!j.is_object()) throw SchemaError("instance document must be a JSON object");
  require_keys(j, "instance document", {"points", "metric", "map"});

  InstanceDocument doc;

  const json& points = j["points"];
  if (!points.is_array() || points.empty()) {
    throw SchemaError("'points' must be a nonempty array of labels");
  }
  std::set<std::string> seen;
  for (const json& p : points) {
    if (!p.is_string()) throw SchemaError("'points' entries must be strings");
    auto label = p.get<std::string>();
    if (!seen.insert(label).second) {
      throw SchemaError(fmt::format("duplicate point label '{}'", label));
    }
    doc.points.push_back(std::move(label));
  }

  const json& metric = j["metric"];
  if (!metric.is_object() || !metric.contains("type") || !metric["type"].is_string()) {
    throw SchemaError("'metric' must be an object with a string 'type'");
  }
  const auto type = metric["type"].get<std::string>();
  if (type == "matrix") {
    doc.metric = MetricKind::Matrix;
    require_keys(metric, "matrix metric", {"type", "rows"});
    const json& rows = metric["rows"];
    if (!rows.is_array()) throw SchemaError("'rows' must be an array of arrays");
    for (const json& row : rows) {
      if (!row.is_array()) throw SchemaError("'rows' must be an array of arrays");
      std::vector<Rational> out;
      for (const json& cell : row) out.push_back(rational_from(cell, "matrix entry"));
      doc.matrix.push_back(std::move(out));
    }
  } else if (type == "parity") {
    doc.metric = MetricKind::Parity;
    require_keys(metric, "parity metric", {"type"});
  } else if (type == "line") {
    doc.metric = MetricKind::Line;
    require_keys(metric, "line metric", {"type", "coords"});
    const json& coords = metric["coords"];
    if (!coords.is_array() || coords.size() != doc.points.size()) {
      throw SchemaError("'coords' must list one coordinate per point");
    }
    for (const json& c : coords) doc.coords.push_back(rational_from(c, "coordinate"));
  } else {
    throw SchemaError(fmt::format("unknown metric type '{}'", type));
  }

  const json& map = j["map"];
  if (!map.is_object()) throw SchemaError("'map' must be an object keyed by point label");
  for (auto it = map.begin(); it != map.end(); ++it) {
    if (!seen.count(it.key())) {
      throw SchemaError(fmt::format("map refers to unknown point label '{}'", it.key()));
    }
  }
  for (const std::string& label : doc.points) {
    if (!map.contains(label)) {
      throw SchemaError(fmt::format("map is missing an image for point '{}'", label));
    }
    const json& image = map[label];
    if (!image.is_array()) {
      throw SchemaError(fmt::format("image of '{}' must be an array of labels", label));
    }
    if (image.empty()) {
      throw SchemaError(fmt::format("empty image for point '{}'", label));
    }
    std::set<std::string> image_seen;
    std::vector<std::string> members;
    for (const json& m : image) {
      if (!m.is_string()) {
        throw SchemaError(fmt::format("image of '{}' must contain labels", label));
      }
      auto member = m.get<std::string>();
      if (!seen.count(member)) {
        throw SchemaError(
            fmt::format("image of '{}' refers to unknown point label '{}'", label, member));
      }
      if (!image_seen.insert(member).second) {
        throw SchemaError(
            fmt::format("image of '{}' repeats point label '{}'", label, member));
      }
      members.push_back(std::move(member));
    }
    doc.images.push_back(std::move(members));
  }
  return doc;
}

Instance realize(const InstanceDocument& doc) {
  const std::size_t n = doc.points.size();

  RationalMatrix dist;
  switch (doc.metric) {
    case MetricKind::Matrix:
      dist = doc.matrix;
      break;
    case MetricKind::Parity: {
      std::vector<BigInt> values;
      for (const std::string& label : doc.points) {
        try {
          Rational r = Rational::parse(label);
          if (!r.is_integer()) throw SyntaxError("not an integer");
          values.push_back(r.numerator());
        } catch (const SyntaxError&) {
          throw SchemaError(fmt::format(
              "parity metric requires integer labels, but '{}' is not one", label));
        }
      }
      dist = parity_matrix(values);
      break;
    }
    case MetricKind::Line:
      dist = line_matrix(doc.coords);
      break;
  }

  FiniteMetricSpace space = make_space(doc.points, std::move(dist));

  std::unordered_map<std::string, PointId> index;
  for (PointId i = 0; i < n; ++i) index.emplace(doc.points[i], i);
  std::vector<PointSet> images;
  for (const auto& image : doc.images) {
    std::vector<PointId> members;
    for (const std::string& label : image) members.push_back(index.at(label));
    images.emplace_back(std::move(members));
  }
  return {std::move(space), MultiMap(n, std::move(images))};
}

Instance parse_instance(const std::string& text) {
  return realize(parse_instance_document(text));
}

std::string emit_instance(const InstanceDocument& doc) {
  json j;
  j["points"] = doc.points;

  json metric;
  metric["type"] = metric_kind_name(doc.metric);
  if (doc.metric == MetricKind::Matrix) {
    json rows = json::array();
    for (const auto& row : doc.matrix) {
      json out = json::array();
      for (const auto& cell : row) out.push_back(rational_to_json(cell));
      rows.push_back(std::move(out));
    }
    metric["rows"] = std::move(rows);
  } else if (doc.metric == MetricKind::Line) {
    json coords = json::array();
    for (const auto& c : doc.coords) coords.push_back(rational_to_json(c));
    metric["coords"] = std::move(coords);
  }
  j["metric"] = std::move(metric);

  json map = json::object();
  for (std::size_t i = 0; i < doc.points.size(); ++i) {
    map[doc.points[i]] = doc.images[i];
  }
  j["map"] = std::move(map);

  return canonical_dump(j);
}

InstanceDocument document_for(const FiniteMetricSpace& space, const MultiMap& map) {
  InstanceDocument doc;
  doc.points = space.labels();
  doc.metric = MetricKind::Matrix;
  doc.matrix = space.matrix();
  for (PointId x = 0; x < space.size(); ++x) {
    std::vector<std::string> members;
    for (PointId m : map.image(x).members()) members.push_back(space.label(m));
    doc.images.push_back(std::move(members));
  }
  return doc;
}

InstanceDocument builtin_document(const std::string& name) {
  InstanceDocument doc;
  if (name == "ex1") {
    doc.metric = MetricKind::Parity;
    for (int i = 0; i < 6; ++i) doc.points.push_back(std::to_string(i));
    doc.images = {{"2", "3"}, {"2", "3"}, {"4", "5"}, {"4", "5"}, {"0", "1"}, {"0", "1"}};
  } else if (name == "cyclic7") {
    doc.metric = MetricKind::Parity;
    for (int i = 0; i < 7; ++i) doc.points.push_back(std::to_string(i));
    for (int x = 0; x < 7; ++x) {
      std::vector<int> window = {(x + 1) % 7, (x + 2) % 7, (x + 3) % 7, (x + 4) % 7};
      std::sort(window.begin(), window.end());
      std::vector<std::string> members;
      for (int m : window) members.push_back(std::to_string(m));
      doc.images.push_back(std::move(members));
    }
  } else if (name == "nadler-gap") {
    doc.metric = MetricKind::Line;
    doc.points = {"0", "1", "4", "5", "6"};
    for (const auto& p : doc.points) doc.coords.push_back(Rational::parse(p));
    doc.images = {{"0"}, {"1"}, {"0", "1"}, {"0", "1"}, {"0", "1"}};
  } else {
    throw PreconditionError(
        fmt::format("unknown builtin instance '{}' (have: ex1, cyclic7, nadler-gap)", name));
  }
  return doc;
}

}  // namespace multifix
