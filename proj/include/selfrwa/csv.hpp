#pragma once

#include <charconv>
#include <cmath>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

namespace selfrwa::csv {

/// Shortest decimal string that parses back to exactly x.
inline std::string format(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

inline std::string format(int x) { return std::to_string(x); }
inline std::string format(long x) { return std::to_string(x); }
inline std::string format(unsigned long x) { return std::to_string(x); }
inline std::string format(const std::string& s) { return s; }
inline std::string format(const char* s) { return s; }

/// Quotes a text field when it holds a separator, quote or newline.
inline std::string quote(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

using Field = std::variant<double, int, std::string>;

inline std::string to_field(const Field& f) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>)
          return quote(v);
        else
          return format(v);
      },
      f);
}

class Writer {
 public:
  explicit Writer(std::ostream& os) : os_(os) {}

  void comment(std::string_view text) { os_ << "# " << text << '\n'; }

  template <class T>
  void parameter(std::string_view name, const T& value) {
    os_ << "# " << name << '=' << format(value) << '\n';
  }

  void columns(std::initializer_list<std::string_view> names) {
    bool first = true;
    for (auto n : names) {
      os_ << (first ? "" : ",") << n;
      first = false;
    }
    os_ << '\n';
  }

  void row(std::initializer_list<Field> fields) {
    bool first = true;
    for (const auto& f : fields) {
      os_ << (first ? "" : ",") << to_field(f);
      first = false;
    }
    os_ << '\n';
    ++rows_;
  }

  std::size_t rows() const noexcept { return rows_; }

 private:
  std::ostream& os_;
  std::size_t rows_ = 0;
};

}  // namespace selfrwa::csv
