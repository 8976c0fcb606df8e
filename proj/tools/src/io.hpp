#pragma once

#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "lenscoupled/numerics.hpp"

namespace lenscoupled::cli {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NaN or infinity reached an output.
class NonFiniteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// printf "%.10e".
std::string format_value(double v);

class Csv {
 public:
  explicit Csv(std::string header);
  /// context names the module and parameters when a value is not finite.
  void row(std::initializer_list<double> values, const std::function<std::string()>& context);
  const std::string& str() const { return buf_; }
  std::size_t rows() const { return rows_; }

 private:
  std::string buf_;
  std::size_t rows_ = 0;
};

/// Writes to path, or to fallback when path is empty or "-".
void emit(const std::string& path, const std::string& content, std::ostream& fallback);

/// Parses and validates the top level of a config file (schema 1).
json load_config(const std::string& path);

/// One object of a config file; keys not consumed by read() are rejected.
class Section {
 public:
  Section(const json& root, std::string name);

  template <class T>
  bool read(const char* key, T& target) {
    if (!obj_ || !obj_->contains(key)) return false;
    used_.insert(key);
    try {
      target = obj_->at(key).get<T>();
    } catch (const json::exception& e) {
      throw UsageError("config: " + name_ + "." + key + ": " + e.what());
    }
    return true;
  }

  bool has(const char* key) const { return obj_ && obj_->contains(key); }
  const json* get(const char* key) {
    if (!has(key)) return nullptr;
    used_.insert(key);
    return &obj_->at(key);
  }
  void finish() const;

 private:
  const json* obj_ = nullptr;
  std::string name_;
  std::set<std::string> used_;
};

/// Default rel_tol, overridable through LENSCOUPLED_QUAD_TOL and the
/// "quadrature" config section (in that order of precedence, lowest first).
numerics::QuadratureSpec quadrature_from(const json& config);

}  // namespace lenscoupled::cli
