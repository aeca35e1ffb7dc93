// Copyright 2026 The VGPN Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgpn/io/json_io.hpp"

#include "vgpn/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace vgpn::io
{
namespace
{

// A JSON node together with its path, for error messages.
class Node
{
public:
  Node(const Json & value, std::string path, ErrorCode code)
  : value_(value), path_(std::move(path)), code_(code)
  {
  }

  [[noreturn]] void fail(const std::string & what) const
  {
    throw Error(code_, (path_.empty() ? std::string("document") : path_) + ": " + what);
  }

  const Json & value() const { return value_; }
  const std::string & path() const { return path_; }

  bool has(const char * key) const { return value_.is_object() && value_.contains(key); }

  Node at(const char * key) const
  {
    if (!value_.is_object()) {
      fail("expected an object");
    }
    if (!value_.contains(key)) {
      Node(value_, join(key), code_).fail("missing");
    }
    return Node(value_.at(key), join(key), code_);
  }

  Node at(std::size_t i) const
  {
    return Node(value_.at(i), path_ + "[" + std::to_string(i) + "]", code_);
  }

  std::size_t array_size() const
  {
    if (!value_.is_array()) {
      fail("expected an array");
    }
    return value_.size();
  }

  double number() const
  {
    if (!value_.is_number()) {
      fail("expected a number");
    }
    const double v = value_.get<double>();
    if (!std::isfinite(v)) {
      fail("must be finite");
    }
    return v;
  }

  int integer() const
  {
    if (!value_.is_number_integer()) {
      fail("expected an integer");
    }
    return value_.get<int>();
  }

  std::string string() const
  {
    if (!value_.is_string()) {
      fail("expected a string");
    }
    return value_.get<std::string>();
  }

  bool boolean() const
  {
    if (!value_.is_boolean()) {
      fail("expected true or false");
    }
    return value_.get<bool>();
  }

  template<int N>
  Eigen::Matrix<double, N, 1> vec() const
  {
    if (array_size() != static_cast<std::size_t>(N)) {
      fail("expected " + std::to_string(N) + " numbers");
    }
    Eigen::Matrix<double, N, 1> out;
    for (int i = 0; i < N; ++i) {
      out[i] = at(static_cast<std::size_t>(i)).number();
    }
    return out;
  }

  double number_or(const char * key, double fallback) const { return has(key) ? at(key).number() : fallback; }

private:
  std::string join(const char * key) const { return path_.empty() ? std::string(key) : path_ + "." + key; }

  const Json & value_;
  std::string path_;
  ErrorCode code_;
};

nav::OccupancyGrid read_grid(const Node & g)
{
  const double resolution = g.at("resolution").number();
  const int width = g.at("width").integer();
  const int height = g.at("height").integer();
  if (!(resolution > 0.0)) {
    g.at("resolution").fail("must be > 0");
  }
  if (width <= 0 || height <= 0) {
    g.fail("width and height must be > 0");
  }
  const Eigen::Vector2d origin = g.has("origin") ? g.at("origin").vec<2>() : Eigen::Vector2d::Zero();
  auto grid = nav::OccupancyGrid::empty(resolution, width, height, origin);

  if (g.has("rows")) {
    const Node rows = g.at("rows");
    if (rows.array_size() != static_cast<std::size_t>(height)) {
      rows.fail("expected " + std::to_string(height) + " rows");
    }
    for (int y = 0; y < height; ++y) {
      const Node row = rows.at(static_cast<std::size_t>(y));
      const std::string text = row.string();
      if (text.size() != static_cast<std::size_t>(width)) {
        row.fail("expected " + std::to_string(width) + " characters");
      }
      for (int x = 0; x < width; ++x) {
        const char c = text[static_cast<std::size_t>(x)];
        if (c == '#') {
          grid.set_occupied({x, y}, true);
        } else if (c != '.') {
          row.fail(std::string("unexpected character '") + c + "', use '.' or '#'");
        }
      }
    }
  }
  if (g.has("cells")) {
    const Node cells = g.at("cells");
    const std::string bits = cells.string();
    if (bits.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
      cells.fail("expected width * height = " + std::to_string(width * height) + " characters");
    }
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') {
        cells.fail("unexpected character at offset " + std::to_string(i) + ", use '0' or '1'");
      }
      if (bits[i] == '1') {
        grid.set_occupied({static_cast<int>(i % static_cast<std::size_t>(width)), static_cast<int>(i / static_cast<std::size_t>(width))}, true);
      }
    }
  }
  if (g.has("rle")) {
    // Alternating run lengths, row-major, starting with a free run.
    const Node rle = g.at("rle");
    const std::size_t total = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::size_t pos = 0;
    for (std::size_t i = 0; i < rle.array_size(); ++i) {
      const int run = rle.at(i).integer();
      if (run < 0 || pos + static_cast<std::size_t>(run) > total) {
        rle.at(i).fail("run overflows the grid or is negative");
      }
      if (i % 2 == 1) {
        for (std::size_t k = pos; k < pos + static_cast<std::size_t>(run); ++k) {
          grid.set_occupied({static_cast<int>(k % static_cast<std::size_t>(width)), static_cast<int>(k / static_cast<std::size_t>(width))}, true);
        }
      }
      pos += static_cast<std::size_t>(run);
    }
    if (pos != total) {
      rle.fail("runs cover " + std::to_string(pos) + " of " + std::to_string(total) + " cells");
    }
  }
  if (g.has("obstacles")) {
    const Node obstacles = g.at("obstacles");
    for (std::size_t i = 0; i < obstacles.array_size(); ++i) {
      const Node box = obstacles.at(i);
      const Eigen::Vector2d lo = box.at("min").vec<2>();
      const Eigen::Vector2d hi = box.at("max").vec<2>();
      if (!(lo.x() <= hi.x() && lo.y() <= hi.y())) {
        box.fail("min must not exceed max");
      }
      for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
          const Eigen::Vector2d c = grid.center_of({x, y});
          if (c.x() >= lo.x() && c.x() <= hi.x() && c.y() >= lo.y() && c.y() <= hi.y()) {
            grid.set_occupied({x, y}, true);
          }
        }
      }
    }
  }
  if (g.has("border") && g.at("border").boolean()) {
    for (int x = 0; x < width; ++x) {
      grid.set_occupied({x, 0}, true);
      grid.set_occupied({x, height - 1}, true);
    }
    for (int y = 0; y < height; ++y) {
      grid.set_occupied({0, y}, true);
      grid.set_occupied({width - 1, y}, true);
    }
  }
  return grid;
}

geometry::RigidTransform read_camera(const Node & c)
{
  const Eigen::Vector3d t = c.has("translation") ? c.at("translation").vec<3>() : Eigen::Vector3d::Zero();
  try {
    if (c.has("quaternion")) {
      const Eigen::Vector4d q = c.at("quaternion").vec<4>();
      if (std::abs(q.norm() - 1.0) > 1e-6) {
        c.at("quaternion").fail("must be a unit quaternion [w, x, y, z]");
      }
      return geometry::RigidTransform::from_quaternion(Eigen::Quaterniond(q[0], q[1], q[2], q[3]), t);
    }
    if (c.has("rotation")) {
      const Node rows = c.at("rotation");
      if (rows.array_size() != 3) {
        rows.fail("expected 3 rows");
      }
      Eigen::Matrix3d r;
      for (std::size_t i = 0; i < 3; ++i) {
        r.row(static_cast<Eigen::Index>(i)) = rows.at(i).vec<3>().transpose();
      }
      return geometry::RigidTransform(r, t);
    }
  } catch (const Error & e) {
    if (e.code() == ErrorCode::SceneInvalid) {
      throw;
    }
    c.fail(e.message());
  }
  return geometry::RigidTransform(Eigen::Matrix3d::Identity(), t);
}

world::SceneObject read_object(const Node & o)
{
  world::SceneObject out;
  out.id = o.at("id").string();
  out.category = o.at("category").string();
  if (o.has("properties")) {
    const Node props = o.at("properties");
    for (std::size_t i = 0; i < props.array_size(); ++i) {
      out.properties.insert(props.at(i).string());
    }
  }
  out.position = o.at("position").vec<2>();
  out.footprint_radius = o.number_or("footprint_radius", 0.0);
  return out;
}

std::string grid_row(const nav::OccupancyGrid & grid, int y)
{
  std::string row(static_cast<std::size_t>(grid.width()), '.');
  for (int x = 0; x < grid.width(); ++x) {
    if (grid.occupied({x, y})) {
      row[static_cast<std::size_t>(x)] = '#';
    }
  }
  return row;
}

}  // namespace

Json vector_json(const Eigen::Vector2d & v)
{
  return Json::array({v.x(), v.y()});
}

Json vector_json(const Eigen::Vector3d & v)
{
  return Json::array({v.x(), v.y(), v.z()});
}

world::Scene scene_from_json(const Json & doc)
{
  const Node root(doc, "", ErrorCode::SceneInvalid);
  if (!doc.is_object()) {
    root.fail("expected an object");
  }
  if (root.has("schema_version") && root.at("schema_version").integer() != kSchemaVersion) {
    root.at("schema_version").fail("unsupported version, expected " + std::to_string(kSchemaVersion));
  }
  world::Scene scene;
  scene.grid = read_grid(root.at("grid"));
  scene.ground_height = root.number_or("ground_height", 0.0);
  if (root.has("camera")) {
    scene.camera = read_camera(root.at("camera"));
  }
  if (root.has("user")) {
    const Node u = root.at("user");
    scene.user.position = u.at("position").vec<2>();
    scene.user.height = u.number_or("height", scene.user.height);
  }
  const Node r = root.at("robot_start");
  scene.robot_start.position = r.at("position").vec<2>();
  scene.robot_start.heading = nav::wrap_angle(r.number_or("heading", 0.0));
  scene.robot_start.radius = r.number_or("radius", scene.robot_start.radius);
  scene.robot_start.speed = r.number_or("speed", scene.robot_start.speed);
  scene.robot_start.turn_rate = r.number_or("turn_rate", scene.robot_start.turn_rate);
  if (root.has("objects")) {
    const Node objects = root.at("objects");
    for (std::size_t i = 0; i < objects.array_size(); ++i) {
      scene.objects.push_back(read_object(objects.at(i)));
    }
  }
  scene.forward_step = root.number_or("forward_step", scene.forward_step);
  scene.goal_tolerance = root.number_or("goal_tolerance", scene.goal_tolerance);
  scene.validate();
  return scene;
}

Json scene_to_json(const world::Scene & scene)
{
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["ground_height"] = scene.ground_height;
  Json rotation = Json::array();
  for (int i = 0; i < 3; ++i) {
    rotation.push_back(vector_json(Eigen::Vector3d(scene.camera.rotation().row(i).transpose())));
  }
  doc["camera"] = {{"rotation", rotation}, {"translation", vector_json(scene.camera.translation())}};
  doc["user"] = {{"position", vector_json(scene.user.position)}, {"height", scene.user.height}};
  const auto & r = scene.robot_start;
  doc["robot_start"] = {
    {"position", vector_json(r.position)}, {"heading", r.heading}, {"radius", r.radius},
    {"speed", r.speed}, {"turn_rate", r.turn_rate}};
  Json objects = Json::array();
  for (const auto & o : scene.objects) {
    objects.push_back(
      {{"id", o.id},
       {"category", o.category},
       {"properties", Json(std::vector<std::string>(o.properties.begin(), o.properties.end()))},
       {"position", vector_json(o.position)},
       {"footprint_radius", o.footprint_radius}});
  }
  doc["objects"] = objects;
  const auto & g = scene.grid;
  Json rows = Json::array();
  for (int y = 0; y < g.height(); ++y) {
    rows.push_back(grid_row(g, y));
  }
  doc["grid"] = {
    {"resolution", g.resolution()}, {"width", g.width()}, {"height", g.height()},
    {"origin", vector_json(g.origin())}, {"rows", rows}};
  doc["forward_step"] = scene.forward_step;
  doc["goal_tolerance"] = scene.goal_tolerance;
  return doc;
}

world::Scene load_scene(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::SceneInvalid, path + ": cannot open");
  }
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::exception & e) {
    throw Error(ErrorCode::SceneInvalid, path + ": " + e.what());
  }
  try {
    return scene_from_json(doc);
  } catch (const Error & e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

namespace
{

constexpr std::pair<geometry::Keypoint, const char *> kKeypointNames[] = {
  {geometry::Keypoint::RightEye, "right_eye"},   {geometry::Keypoint::LeftEye, "left_eye"},
  {geometry::Keypoint::RightWrist, "right_wrist"}, {geometry::Keypoint::LeftWrist, "left_wrist"},
  {geometry::Keypoint::Neck, "neck"},            {geometry::Keypoint::MidHip, "mid_hip"},
};

}  // namespace

geometry::KeypointFrame frame_from_json(const Json & doc)
{
  const Node root(doc, "frame", ErrorCode::InvalidFrame);
  if (!doc.is_object()) {
    root.fail("expected an object");
  }
  for (const auto & [key, _] : doc.items()) {
    bool known = false;
    for (const auto & [k, name] : kKeypointNames) {
      known = known || key == name;
    }
    if (!known) {
      root.fail("unknown keypoint '" + key + "'");
    }
  }
  geometry::KeypointFrame frame;
  for (const auto & [k, name] : kKeypointNames) {
    if (root.has(name) && !doc.at(name).is_null()) {
      frame.set(k, root.at(name).vec<3>());
    }
  }
  return frame;
}

Json frame_to_json(const geometry::KeypointFrame & frame)
{
  Json doc = Json::object();
  for (const auto & [k, name] : kKeypointNames) {
    if (const auto & p = frame.get(k)) {
      doc[name] = vector_json(*p);
    }
  }
  return doc;
}

Json to_json(const lang::Instruction & instruction)
{
  return {{"verb", instruction.verb}, {"args", instruction.args}, {"text", instruction.to_string()}};
}

Json to_json(const world::NavigationGoal & goal)
{
  Json doc = {{"position", vector_json(goal.position)}, {"source", std::string(world::to_string(goal.source))}};
  doc["object_id"] = goal.matched_object_id ? Json(*goal.matched_object_id) : Json(nullptr);
  return doc;
}

Json to_json(const pipeline::TimingRecord & timing)
{
  return {
    {"t1_us", timing.t1}, {"t2_us", timing.t2}, {"t3_us", timing.t3}, {"total_us", timing.total},
    {"phase2_invoked", timing.phase2_invoked}};
}

Json to_json(const pipeline::TimingSummary & summary)
{
  auto stats = [](const pipeline::FieldStats & s) { return Json{{"mean_us", s.mean}, {"sd_us", s.sd}}; };
  return {
    {"count", summary.count}, {"phase2_count", summary.phase2_count}, {"t1", stats(summary.t1)},
    {"t2", stats(summary.t2)}, {"t3", stats(summary.t3)}, {"total", stats(summary.total)}};
}

Json to_json(const nav::Trajectory & trajectory)
{
  Json samples = Json::array();
  for (const auto & s : trajectory.samples) {
    samples.push_back({{"time", s.time}, {"position", vector_json(s.position)}, {"heading", s.heading}});
  }
  Json path = Json::array();
  for (const auto & p : trajectory.path) {
    path.push_back(vector_json(p));
  }
  return {
    {"samples", samples}, {"path", path}, {"arrived", trajectory.arrived},
    {"collision_stop", trajectory.collision_stop}, {"duration", trajectory.duration()}};
}

Json to_json(const lang::Understanding & u)
{
  Json tokens = Json::array();
  for (const auto & t : u.tokens) {
    tokens.push_back(
      {{"index", t.index}, {"surface", t.surface}, {"lemma", t.lemma}, {"pos", std::string(1, lang::tag_of(t.pos))}});
  }
  Json tree = Json::array();
  for (const auto & n : u.model.nodes) {
    tree.push_back(
      {{"token", n.token_index},
       {"relation", std::string(lang::to_string(n.relation))},
       {"parent", n.parent ? Json(*n.parent) : Json(nullptr)}});
  }
  return {
    {"schema_version", kSchemaVersion}, {"tokens", tokens}, {"tree", tree},
    {"canonical", u.canonical.value}, {"instruction", to_json(u.instruction)}};
}

Json to_json(const pipeline::PipelineOutcome & outcome, bool include_timing)
{
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["mode"] = std::string(pipeline::to_string(outcome.mode));
  doc["command"] = outcome.command;
  doc["instruction"] = outcome.instruction ? to_json(*outcome.instruction) : Json(nullptr);
  if (outcome.gesture) {
    doc["gesture"] = {
      {"required", outcome.gesture->required},
      {"reason", std::string(lang::to_string(outcome.gesture->reason))},
      {"detail", outcome.gesture->detail}};
  } else {
    doc["gesture"] = nullptr;
  }
  doc["arm"] = outcome.arm ? Json(std::string(geometry::to_string(*outcome.arm))) : Json(nullptr);
  if (outcome.ray) {
    doc["ray"] = {{"origin", vector_json(outcome.ray->origin())}, {"direction", vector_json(outcome.ray->direction())}};
  } else {
    doc["ray"] = nullptr;
  }
  doc["intersection"] = outcome.intersection ? vector_json(*outcome.intersection) : Json(nullptr);
  doc["candidates"] = outcome.candidates;
  doc["goal"] = outcome.goal ? to_json(*outcome.goal) : Json(nullptr);
  Json events = Json::array();
  for (const auto & e : outcome.events) {
    events.push_back({{"text", e.text}, {"cause", std::string(pipeline::to_string(e.cause))}, {"detail", e.detail}});
  }
  doc["events"] = events;
  if (include_timing) {
    doc["timing"] = to_json(outcome.timing);
  } else {
    doc["timing"] = {{"phase2_invoked", outcome.timing.phase2_invoked}};
  }
  return doc;
}

}  // namespace vgpn::io
