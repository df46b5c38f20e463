// Fixed-dialect CSV emitter: comma separator, header row, LF line endings,
// "." decimal point, doubles at 17 significant digits.

#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace itw::csv {

class Writer {
 public:
  explicit Writer(std::ostream& os, const std::vector<std::string>& header) : os_(os) {
    write_row_strings(header);
  }

  class Row {
   public:
    explicit Row(Writer& w) : w_(w) {}
    ~Row() { w_.os_ << '\n'; }
    Row(const Row&) = delete;

    Row& field(const std::string& s) {
      sep();
      w_.os_ << s;
      return *this;
    }
    Row& field(double d) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", d);
      return field(std::string(buf));
    }
    Row& field(long long i) { sep(); w_.os_ << i; return *this; }
    Row& field(int i) { return field(static_cast<long long>(i)); }

   private:
    void sep() {
      if (!first_) w_.os_ << ',';
      first_ = false;
    }
    Writer& w_;
    bool first_ = true;
  };

  Row row() { return Row(*this); }

 private:
  void write_row_strings(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      os_ << cells[i];
    }
    os_ << '\n';
  }
  std::ostream& os_;
};

}  // namespace itw::csv
