// Minimal deterministic JSON value + writer: object keys sorted, doubles
// formatted with 17 significant digits, LF only. Re-running a command with
// the same inputs must produce byte-identical output.

#pragma once

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace itw::jsonw {

class Value;
using Array = std::vector<Value>;
using Object = std::map<std::string, Value>;  // std::map keeps keys sorted

class Value {
 public:
  Value() : v_(nullptr) {}
  Value(std::nullptr_t) : v_(nullptr) {}
  Value(bool b) : v_(b) {}
  Value(int i) : v_(static_cast<long long>(i)) {}
  Value(long long i) : v_(i) {}
  Value(double d) : v_(d) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(Array a) : v_(std::move(a)) {}
  Value(Object o) : v_(std::move(o)) {}

  std::string dump() const {
    std::string out;
    write(out);
    return out;
  }

 private:
  std::variant<std::nullptr_t, bool, long long, double, std::string, Array, Object> v_;

  static std::string fmt_double(double d) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", d);
    return buf;
  }

  static void write_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out += buf;
          } else {
            out += c;
          }
      }
    }
    out += '"';
  }

  void write(std::string& out) const {
    if (std::holds_alternative<std::nullptr_t>(v_)) {
      out += "null";
    } else if (std::holds_alternative<bool>(v_)) {
      out += std::get<bool>(v_) ? "true" : "false";
    } else if (std::holds_alternative<long long>(v_)) {
      out += std::to_string(std::get<long long>(v_));
    } else if (std::holds_alternative<double>(v_)) {
      out += fmt_double(std::get<double>(v_));
    } else if (std::holds_alternative<std::string>(v_)) {
      write_string(out, std::get<std::string>(v_));
    } else if (std::holds_alternative<Array>(v_)) {
      out += '[';
      const auto& a = std::get<Array>(v_);
      for (size_t i = 0; i < a.size(); ++i) {
        if (i) out += ',';
        a[i].write(out);
      }
      out += ']';
    } else {
      out += '{';
      const auto& o = std::get<Object>(v_);
      bool first = true;
      for (const auto& [k, val] : o) {
        if (!first) out += ',';
        first = false;
        write_string(out, k);
        out += ':';
        val.write(out);
      }
      out += '}';
    }
  }
};

}  // namespace itw::jsonw
