#include "hitch/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hitch {

using nlohmann::json;

namespace {

double require_number(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key) || !obj[key].is_number())
    throw ParseError(std::string(where) + ": missing numeric field '" + key +
                     "'");
  return obj[key].get<double>();
}

UavConfig config_from_json(const json& obj) {
  UavConfig cfg;
  cfg.a = require_number(obj, "a", "config");
  cfg.v0 = require_number(obj, "v0", "config");
  cfg.alpha = require_number(obj, "alpha", "config");
  cfg.beta = require_number(obj, "beta", "config");
  cfg.p0 = require_number(obj, "p0", "config");
  return cfg;
}

json config_to_json(const UavConfig& cfg) {
  return json{{"a", cfg.a},
              {"v0", cfg.v0},
              {"alpha", cfg.alpha},
              {"beta", cfg.beta},
              {"p0", cfg.p0}};
}

json parse_text(const std::string& text, const char* what) {
  json obj = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (obj.is_discarded())
    throw ParseError(std::string(what) + ": malformed JSON");
  return obj;
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json obj = parse_text(text, "instance");
  if (!obj.is_object() || !obj.contains("config"))
    throw ParseError("instance: missing 'config' object");
  Instance inst;
  inst.config = config_from_json(obj["config"]);
  if (obj.contains("rides")) {
    if (!obj["rides"].is_array())
      throw ParseError("instance: 'rides' must be an array");
    int id = 0;
    for (const json& r : obj["rides"]) {
      const std::string where = "rides[" + std::to_string(id) + "]";
      RideTrip ride;
      ride.r = require_number(r, "r", where.c_str());
      ride.t = require_number(r, "t", where.c_str());
      ride.o = require_number(r, "o", where.c_str());
      ride.d = require_number(r, "d", where.c_str());
      ride.v = require_number(r, "v", where.c_str());
      ride.id = id++;
      inst.rides.push_back(ride);
    }
  }
  if (obj.contains("metadata") && obj["metadata"].is_object()) {
    for (const auto& [key, value] : obj["metadata"].items())
      inst.metadata[key] =
          value.is_string() ? value.get<std::string>() : value.dump();
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  json rides = json::array();
  for (const RideTrip& r : inst.rides)
    rides.push_back(json{
        {"r", r.r}, {"t", r.t}, {"o", r.o}, {"d", r.d}, {"v", r.v}});
  json meta = json::object();
  for (const auto& [key, value] : inst.metadata) meta[key] = value;
  const json obj{{"config", config_to_json(inst.config)},
                 {"rides", rides},
                 {"metadata", meta}};
  return obj.dump(2) + "\n";
}

UavConfig parse_config(const std::string& text) {
  const json obj = parse_text(text, "config");
  if (obj.is_object() && obj.contains("config"))
    return config_from_json(obj["config"]);
  return config_from_json(obj);
}

namespace {

json plan_to_json(const HitchPlan& plan) {
  json taken = json::array();
  for (const RideTrip& r : plan.taken) taken.push_back(r.id);
  json waits = json::array();
  for (const WaitInterval& w : plan.wait_schedule)
    waits.push_back(json{{"location", w.location},
                         {"start", w.start},
                         {"duration", w.duration}});
  return json{{"taken", taken},
              {"arrival_time", plan.arrival_time},
              {"ledger", plan.power_at_start},
              {"total_fly_distance", plan.total_fly_distance},
              {"waits", waits},
              {"skipped", plan.skipped_rides}};
}

}  // namespace

std::string serialize_plan(const HitchPlan& plan) {
  return plan_to_json(plan).dump(2) + "\n";
}

std::string serialize_sim_result(const SimResult& res,
                                 const std::string& policy) {
  json decisions = json::array();
  for (const Decision& d : res.decisions) {
    json entry{{"ride_id", d.ride_id},
               {"time", d.time},
               {"accepted", d.accepted}};
    if (d.rc >= 0) entry["rc"] = d.rc;
    if (d.aa >= 0) entry["aa"] = d.aa;
    if (d.cs >= 0) entry["cs"] = d.cs;
    if (!d.note.empty()) entry["note"] = d.note;
    decisions.push_back(entry);
  }
  const json obj{{"policy", policy},
                 {"plan", plan_to_json(res.plan)},
                 {"decisions", decisions},
                 {"realized_arrival", res.realized_arrival}};
  return obj.dump(2) + "\n";
}

std::string serialize_trace(const SimulationTrace& trace) {
  std::string out;
  for (const TraceEvent& e : trace.events) {
    json line{{"t", e.t},
              {"x", e.x},
              {"p", e.p},
              {"mode", to_string(e.mode)},
              {"event", e.event}};
    if (e.ride_id >= 0) line["ride"] = e.ride_id;
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace hitch
