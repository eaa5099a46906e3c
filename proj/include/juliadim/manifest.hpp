#pragma once

// Run manifests: configuration echo, tolerances, and content digests of every
// produced file, serialized as JSON with stable key order. Numeric text uses
// 12 significant digits and the C locale throughout.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "juliadim/core.hpp"
#include "juliadim/image.hpp"

namespace juliadim {

using ojson = nlohmann::ordered_json;

inline std::string fmt_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

inline ojson tolerances_json() {
  ojson t;
  t["potential_tol"] = tol::potential;
  t["potential_max_depth"] = tol::potential_max_depth;
  t["boettcher_tol"] = tol::boettcher;
  t["slice_residual"] = tol::slice_residual;
  t["slice_newton_steps"] = tol::slice_newton_steps;
  t["cycle_near_return"] = tol::cycle_near_return;
  t["cycle_max_period"] = tol::cycle_max_period;
  t["cycle_polish"] = tol::cycle_polish;
  t["parabolic_tol"] = tol::parabolic;
  t["tune_stall"] = tol::tune_stall;
  t["omega_reconstruct"] = tol::omega_reconstruct;
  t["pressure_power_tol"] = tol::pressure_power;
  t["branch_margin_rel"] = tol::branch_margin_rel;
  return t;
}

class RunManifest {
 public:
  RunManifest(std::string command, std::string version)
      : start_(std::chrono::steady_clock::now()) {
    doc_["command"] = std::move(command);
    doc_["version"] = std::move(version);
    doc_["branch_rule"] = "radial-homotopy";
    doc_["tolerances"] = tolerances_json();
    doc_["config"] = ojson::object();
    doc_["outputs"] = ojson::array();
  }

  void set_config(const ojson& cfg) { doc_["config"] = cfg; }
  void set(const std::string& key, const ojson& v) { doc_[key] = v; }

  // record bytes written to a file
  void add_output(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    ojson o;
    o["path"] = path;
    o["bytes"] = bytes.size();
    o["fnv1a64"] = hex64(fnv1a64(bytes.data(), bytes.size()));
    doc_["outputs"].push_back(o);
  }

  void write(const std::string& path) {
    doc_["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string text = doc_.dump(2) + "\n";
    write_file_atomic(path, std::vector<std::uint8_t>(text.begin(), text.end()));
  }

  ojson& doc() { return doc_; }

 private:
  ojson doc_;
  std::chrono::steady_clock::time_point start_;
};

// CSV with a fixed header row; numbers formatted by fmt_g12.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header) : cols_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (i) text_ += ",";
      text_ += header[i];
    }
    text_ += "\n";
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ",";
      text_ += cells[i];
    }
    text_ += "\n";
  }
  std::vector<std::uint8_t> bytes() const {
    return std::vector<std::uint8_t>(text_.begin(), text_.end());
  }
  std::size_t columns() const { return cols_; }

 private:
  std::size_t cols_;
  std::string text_;
};

}  // namespace juliadim
