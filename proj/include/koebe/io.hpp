#ifndef KOEBE_IO_HPP
#define KOEBE_IO_HPP

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace koebe {

/// Fixed-width decimal used by all machine-readable output: 17 significant
/// digits round-trips a double exactly and keeps golden files diffable.
inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Minimal ordered JSON value with deterministic serialization
// ---------------------------------------------------------------------------

class Json {
 public:
  Json() : type_(Type::Null) {}
  Json(bool b) : type_(Type::Bool), bool_(b) {}
  Json(int v) : type_(Type::Int), int_(v) {}
  Json(long long v) : type_(Type::Int), int_(v) {}
  Json(double v) : type_(Type::Double), dbl_(v) {}
  Json(const char* s) : type_(Type::String), str_(s) {}
  Json(std::string s) : type_(Type::String), str_(std::move(s)) {}

  static Json array() {
    Json j;
    j.type_ = Type::Array;
    return j;
  }
  static Json object() {
    Json j;
    j.type_ = Type::Object;
    return j;
  }

  Json& push_back(Json v) {
    arr_.push_back(std::move(v));
    return arr_.back();
  }
  Json& set(const std::string& key, Json v) {
    obj_.emplace_back(key, std::move(v));
    return obj_.back().second;
  }

  void dump(std::string& out, int indent = 0) const {
    switch (type_) {
      case Type::Null: out += "null"; break;
      case Type::Bool: out += bool_ ? "true" : "false"; break;
      case Type::Int: out += std::to_string(int_); break;
      case Type::Double: out += fmt17(dbl_); break;
      case Type::String: dump_string(out); break;
      case Type::Array: {
        if (arr_.empty()) {
          out += "[]";
          break;
        }
        out += "[\n";
        for (std::size_t i = 0; i < arr_.size(); ++i) {
          out.append(indent + 2, ' ');
          arr_[i].dump(out, indent + 2);
          if (i + 1 < arr_.size()) out += ',';
          out += '\n';
        }
        out.append(indent, ' ');
        out += ']';
        break;
      }
      case Type::Object: {
        if (obj_.empty()) {
          out += "{}";
          break;
        }
        out += "{\n";
        for (std::size_t i = 0; i < obj_.size(); ++i) {
          out.append(indent + 2, ' ');
          out += '"';
          out += obj_[i].first;
          out += "\": ";
          obj_[i].second.dump(out, indent + 2);
          if (i + 1 < obj_.size()) out += ',';
          out += '\n';
        }
        out.append(indent, ' ');
        out += '}';
        break;
      }
    }
  }

  std::string dump() const {
    std::string s;
    dump(s);
    s += '\n';
    return s;
  }

 private:
  void dump_string(std::string& out) const {
    out += '"';
    for (char c : str_) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default: out += c;
      }
    }
    out += '"';
  }

  enum class Type { Null, Bool, Int, Double, String, Array, Object };
  Type type_;
  bool bool_ = false;
  long long int_ = 0;
  double dbl_ = 0.0;
  std::string str_;
  std::vector<Json> arr_;
  std::vector<std::pair<std::string, Json>> obj_;
};

// ---------------------------------------------------------------------------
// RFC-4180 CSV (header row, CRLF line endings)
// ---------------------------------------------------------------------------

inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      os << cells[i];
    }
    os << "\r\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---------------------------------------------------------------------------
// Self-contained SVG for boundary curves
// ---------------------------------------------------------------------------

struct SvgCurve {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> points;  // (Re, Im)
};

/// Axis-equal closed curves with the unit circle drawn for reference.
/// The viewBox is the joint bounding box plus a 5% margin; SVG y runs
/// downward, so imaginary parts are negated on output.
inline void write_svg(std::ostream& os, const std::vector<SvgCurve>& curves) {
  double x0 = -1.0, x1 = 1.0, y0 = -1.0, y1 = 1.0;  // include the unit circle
  for (const auto& c : curves)
    for (const auto& [x, y] : c.points) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, -y);
      y1 = std::max(y1, -y);
    }
  const double mx = 0.05 * (x1 - x0), my = 0.05 * (y1 - y0);
  x0 -= mx;
  x1 += mx;
  y0 -= my;
  y1 += my;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                "viewBox=\"%.6f %.6f %.6f %.6f\" "
                "width=\"640\" height=\"640\" preserveAspectRatio=\"xMidYMid meet\">\n",
                x0, y0, x1 - x0, y1 - y0);
  os << buf;
  const double sw = 0.004 * std::max(x1 - x0, y1 - y0);
  std::snprintf(buf, sizeof buf,
                "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbbbbb\" "
                "stroke-width=\"%.6f\" stroke-dasharray=\"%.6f %.6f\"/>\n",
                sw * 0.5, sw * 3, sw * 3);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "  <line x1=\"%.6f\" y1=\"0\" x2=\"%.6f\" y2=\"0\" stroke=\"#dddddd\" "
                "stroke-width=\"%.6f\"/>\n",
                x0, x1, sw * 0.5);
  os << buf;
  std::snprintf(buf, sizeof buf,
                "  <line x1=\"0\" y1=\"%.6f\" x2=\"0\" y2=\"%.6f\" stroke=\"#dddddd\" "
                "stroke-width=\"%.6f\"/>\n",
                y0, y1, sw * 0.5);
  os << buf;
  for (const auto& c : curves) {
    os << "  <polygon fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"";
    std::snprintf(buf, sizeof buf, "%.6f", sw);
    os << buf << "\" data-family=\"" << c.label << "\" points=\"";
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.8f,%.8f", c.points[i].first, -c.points[i].second);
      if (i) os << ' ';
      os << buf;
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
}

// ---------------------------------------------------------------------------
// Diagnostics on stderr, gated by KOEBE_LOG in {error, info, debug}
// ---------------------------------------------------------------------------

enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

inline LogLevel log_level() {
  static const LogLevel lvl = [] {
    const char* e = std::getenv("KOEBE_LOG");
    if (e == nullptr) return LogLevel::Error;
    if (std::strcmp(e, "debug") == 0) return LogLevel::Debug;
    if (std::strcmp(e, "info") == 0) return LogLevel::Info;
    return LogLevel::Error;
  }();
  return lvl;
}

inline void log_msg(LogLevel lvl, const std::string& msg) {
  if (static_cast<int>(lvl) <= static_cast<int>(log_level()))
    std::fprintf(stderr, "[koebe] %s\n", msg.c_str());
}

inline void log_info(const std::string& msg) { log_msg(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log_msg(LogLevel::Debug, msg); }

}  // namespace koebe

#endif  // KOEBE_IO_HPP
