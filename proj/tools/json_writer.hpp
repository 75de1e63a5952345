#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace heckepairs {

// Insertion-ordered JSON emitter. Doubles print as %.15g, exact integers
// and rationals as decimal strings, so an identical call sequence yields
// identical bytes. No pretty-printing beyond a trailing newline per line
// the caller adds itself.
class JsonWriter {
 public:
  JsonWriter& begin_object() {
    begin_value();
    out_ += '{';
    first_.push_back(true);
    return *this;
  }

  JsonWriter& end_object() {
    out_ += '}';
    first_.pop_back();
    return *this;
  }

  JsonWriter& begin_array() {
    begin_value();
    out_ += '[';
    first_.push_back(true);
    return *this;
  }

  JsonWriter& end_array() {
    out_ += ']';
    first_.pop_back();
    return *this;
  }

  JsonWriter& key(std::string_view k) {
    separate();
    quote(k);
    out_ += ':';
    pending_value_ = true;
    return *this;
  }

  JsonWriter& value(std::string_view s) {
    begin_value();
    quote(s);
    return *this;
  }

  JsonWriter& value(const char* s) { return value(std::string_view(s)); }

  JsonWriter& value(bool b) {
    begin_value();
    out_ += b ? "true" : "false";
    return *this;
  }

  JsonWriter& value(long v) {
    begin_value();
    out_ += std::to_string(v);
    return *this;
  }

  JsonWriter& value(int v) { return value(static_cast<long>(v)); }

  JsonWriter& value(double v) {
    begin_value();
    if (!std::isfinite(v)) {
      out_ += "null";
      return *this;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    out_ += buf;
    return *this;
  }

  // Exact values go out as strings: JSON numbers would silently round.
  JsonWriter& value(const mpz_class& v) { return value(std::string_view(v.get_str())); }

  JsonWriter& value(const mpq_class& v) {
    if (v.get_den() == 1) return value(std::string_view(v.get_num().get_str()));
    return value(std::string_view(v.get_num().get_str() + "/" + v.get_den().get_str()));
  }

  JsonWriter& null_value() {
    begin_value();
    out_ += "null";
    return *this;
  }

  const std::string& str() const { return out_; }

 private:
  void begin_value() {
    if (pending_value_)
      pending_value_ = false;
    else
      separate();
  }

  void separate() {
    if (first_.empty()) return;
    if (first_.back())
      first_.back() = false;
    else
      out_ += ',';
  }

  void quote(std::string_view s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<bool> first_;
  bool pending_value_ = false;
};

}  // namespace heckepairs
