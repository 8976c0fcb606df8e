#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lenscoupled::cli {

namespace {

const std::set<std::string> kTopLevel = {"schema",       "quadrature", "species",  "psf",
                                         "gamma_sweep",  "coupling_map", "spectrum", "trap"};

}  // namespace

std::string format_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10e", v);
  return buf;
}

Csv::Csv(std::string header) : buf_(std::move(header)) { buf_ += '\n'; }

void Csv::row(std::initializer_list<double> values, const std::function<std::string()>& context) {
  bool first = true;
  for (double v : values) {
    if (!std::isfinite(v)) throw NonFiniteError("non-finite value from " + context());
    if (!first) buf_ += ',';
    buf_ += format_value(v);
    first = false;
  }
  buf_ += '\n';
  ++rows_;
}

void emit(const std::string& path, const std::string& content, std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << content;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

json load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot read config '" + path + "'");
  json cfg;
  try {
    cfg = json::parse(f);
  } catch (const json::parse_error& e) {
    throw UsageError("config '" + path + "' is not valid JSON: " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config '" + path + "' must be a JSON object");
  if (!cfg.contains("schema") || cfg["schema"] != 1)
    throw UsageError("config '" + path + "' must declare \"schema\": 1");
  for (const auto& [key, value] : cfg.items())
    if (!kTopLevel.count(key)) throw UsageError("config: unknown key '" + key + "'");
  return cfg;
}

Section::Section(const json& root, std::string name) : name_(std::move(name)) {
  if (root.is_object() && root.contains(name_)) {
    obj_ = &root.at(name_);
    if (!obj_->is_object()) throw UsageError("config: '" + name_ + "' must be an object");
  }
}

void Section::finish() const {
  if (!obj_) return;
  for (const auto& [key, value] : obj_->items())
    if (!used_.count(key)) throw UsageError("config: unknown key '" + name_ + "." + key + "'");
}

numerics::QuadratureSpec quadrature_from(const json& config) {
  numerics::QuadratureSpec spec;
  if (const char* env = std::getenv("LENSCOUPLED_QUAD_TOL"); env && *env) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
      throw UsageError(std::string("LENSCOUPLED_QUAD_TOL must be a positive number, got '") + env + "'");
    spec.rel_tol = v;
  }
  Section q(config, "quadrature");
  q.read("rel_tol", spec.rel_tol);
  q.read("abs_tol", spec.abs_tol);
  q.read("max_refinements", spec.max_refinements);
  q.finish();
  try {
    spec.validate();
  } catch (const std::exception& e) {
    throw UsageError(std::string("quadrature settings: ") + e.what());
  }
  return spec;
}

}  // namespace lenscoupled::cli
