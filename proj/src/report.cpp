#include "orbigeo/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

namespace orbigeo {

namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json optional_number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

json complex_json(Complex z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

json signature_json(const TriangleSignature& sig) {
  return {{"text", sig.to_string()},
          {"orders", json::array({order_json(sig.p()), order_json(sig.q()), order_json(sig.r())})},
          {"punctures", sig.puncture_count()},
          {"exceptional", sig.is_exceptional()}};
}

json descriptor_json(const ProjectionDescriptor& d) {
  json out = std::visit(
      Overloaded{
          [](const EllipticPoint& e) {
            return json{{"kind", e.order.is_infinite() ? "puncture" : "cone_point"},
                        {"order", order_json(e.order)}};
          },
          [](const Figure8& f) {
            return json{{"kind", "figure_eight"},
                        {"bounds", json::array({order_json(f.first), order_json(f.second)})}};
          },
          [](const ThroughConePoint3&) { return json{{"kind", "through_order_three_point"}}; },
          [](const BackAndForthPath&) { return json{{"kind", "back_and_forth_path"}}; }},
      d);
  out["text"] = describe(d);
  return out;
}

json isometry_json(const IsometryClass& cls) {
  json out{{"kind", to_string(kind_of(cls))}};
  if (const auto* e = std::get_if<Elliptic>(&cls)) {
    out["order"] = e->order ? json(*e->order) : json(nullptr);
  }
  return out;
}

json geodesic_json(const Geodesic& g) {
  if (g.is_vertical()) return {{"type", "vertical"}, {"x", number(g.as_vertical().x)}};
  const HalfCircle& h = g.as_half_circle();
  return {{"type", "half_circle"}, {"center", number(h.center)}, {"radius", number(h.radius)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Screen mapping for the render window.
constexpr double kXMin = -2.5;
constexpr double kXMax = 2.5;
constexpr double kYMax = 2.5;
constexpr double kOnSideSlack = 1e-9;
constexpr double kSamePointTolerance = 1e-9;

struct Screen {
  double scale_x;
  double scale_y;
  double x(double u) const { return (u - kXMin) * scale_x; }
  double y(double v) const { return (kYMax - v) * scale_y; }
};

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Path along `carrier` from z to w, both on the carrier.
std::string arc_path(const Screen& s, const Geodesic& carrier, Complex z, Complex w) {
  std::ostringstream out;
  out << "M " << px(s.x(z.real())) << ' ' << px(s.y(z.imag())) << ' ';
  if (carrier.is_vertical()) {
    out << "L " << px(s.x(w.real())) << ' ' << px(s.y(w.imag()));
  } else {
    const double rho = carrier.as_half_circle().radius;
    const int sweep = z.real() < w.real() ? 1 : 0;
    out << "A " << px(rho * s.scale_x) << ' ' << px(rho * s.scale_y) << " 0 0 " << sweep << ' '
        << px(s.x(w.real())) << ' ' << px(s.y(w.imag()));
  }
  return out.str();
}

// Whether z, known to be on the carrier of side k, lies between its corners.
bool on_side(const FundamentalDomain& fd, int k, Complex z) {
  const Complex a = fd.vertices[k];
  const Complex b = fd.vertices[(k + 1) % 4];
  if (fd.sides[k].is_vertical()) {
    return z.imag() >= std::min(a.imag(), b.imag()) - kOnSideSlack &&
           z.imag() <= std::max(a.imag(), b.imag()) + kOnSideSlack;
  }
  return z.real() >= std::min(a.real(), b.real()) - kOnSideSlack &&
         z.real() <= std::max(a.real(), b.real()) + kOnSideSlack;
}

std::string provenance_text(const Provenance& p) { return to_json(p).dump(); }

}  // namespace

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json order_json(Order o) { return o.is_infinite() ? json("inf") : json(o.value()); }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json to_json(const Provenance& p) {
  json out{{"tool", p.tool}, {"version", p.version}, {"tolerance", number(p.tolerance)}};
  if (p.cutoff) out["cutoff"] = *p.cutoff;
  if (p.word_budget) out["word_budget"] = *p.word_budget;
  if (!p.generated_at.empty()) out["generated_at"] = p.generated_at;
  return out;
}

json to_json(const ClassificationRecord& rec) {
  return {{"signature", signature_json(rec.signature)},
          {"word", to_string(rec.word)},
          {"isometry", isometry_json(rec.isometry)},
          {"projection", descriptor_json(rec.descriptor)},
          {"figure_eight", is_figure8(rec.descriptor)},
          {"trace_abs", number(rec.trace_abs)},
          {"matrix_trace_abs", optional_number(rec.matrix_trace_abs)},
          {"length", optional_number(rec.length)},
          {"geodesic_class", rec.geodesic_class},
          {"reversed_orientation", rec.reversed_orientation}};
}

json to_json(const ExtremalResult& result) {
  json out{{"minimizer", to_json(result.minimizer)},
           {"trace_abs", number(result.trace_abs())},
           {"length", number(result.length())},
           {"punctures", result.puncture_count()},
           {"minimizing_geodesics", result.minimizing_geodesics},
           {"unique", result.unique},
           {"runner_up", result.runner_up ? to_json(*result.runner_up) : json(nullptr)},
           {"cutoff", result.cutoff},
           {"signatures_examined", result.signatures_examined}};
  if (result.certificate) {
    out["certificate"] = {{"frontier_lower_bound", number(result.certificate->frontier_lower_bound)},
                          {"certified", result.certificate->certified}};
  } else {
    out["certificate"] = nullptr;
  }
  return out;
}

json to_json(const SelfIntersectionResult& result) {
  json crossings = json::array();
  for (const auto& c : result.crossings) {
    crossings.push_back({{"axis", geodesic_json(c.axis)},
                         {"point", complex_json(c.point)},
                         {"position", number(c.position)},
                         {"conjugator", c.conjugator.to_string()}});
  }
  json stability = json::array();
  for (int k = 0; k < 3; ++k) {
    stability.push_back({{"budget", result.stability.budgets[k]},
                         {"count", result.stability.counts[k]}});
  }
  return {{"count", result.count},
          {"crossing_axes", result.crossing_axes},
          {"budget", result.budget},
          {"stable", result.stability.stable},
          {"stability", stability},
          {"segment",
           {{"axis", geodesic_json(result.segment.carrier)},
            {"start", complex_json(result.segment.start)},
            {"end", complex_json(result.segment.end)}}},
          {"crossings", crossings}};
}

json to_json(const GammaStarCandidate& candidate) {
  return {{"word", candidate.word.to_string()},
          {"trace_abs", number(candidate.trace_abs)},
          {"length", number(candidate.length)},
          {"order_two_point", complex_json(candidate.order_two_point)},
          {"conjugator", candidate.conjugator.to_string()}};
}

json to_json(const Table1Row& row) {
  return {{"classification", row.classification},
          {"closed_geodesics", row.closed_geodesics},
          {"trace_abs", number(row.trace_abs)},
          {"length", number(row.length)},
          {"orbifold", row.orbifold},
          {"area", number(row.area)}};
}

std::string table1_csv(const std::array<Table1Row, 3>& rows, const Provenance& p) {
  std::string out = "# provenance " + provenance_text(p) + "\r\n";
  out += "classification,closed_geodesics,trace_abs,length,orbifold,area\r\n";
  for (const auto& row : rows) {
    out += csv_field(row.classification) + ',' + csv_field(row.closed_geodesics) + ',' +
           format_number(row.trace_abs) + ',' + format_number(row.length) + ',' +
           csv_field(row.orbifold) + ',' + format_number(row.area) + "\r\n";
  }
  return out;
}

std::optional<DomainChord> clip_to_domain(const FundamentalDomain& fd, const Geodesic& line) {
  struct Hit {
    Complex z;
    int side;
  };
  std::vector<Hit> hits;
  for (int k = 0; k < 4; ++k) {
    const auto crossing = intersect_geodesics(line, fd.sides[k]);
    if (!crossing || !crossing->transverse || !on_side(fd, k, crossing->point)) continue;
    const bool seen = std::any_of(hits.begin(), hits.end(), [&](const Hit& h) {
      return std::abs(h.z - crossing->point) < kSamePointTolerance;
    });
    if (!seen) hits.push_back({crossing->point, k});
  }
  if (hits.size() != 2) return std::nullopt;
  if (hits[0].z.real() > hits[1].z.real()) std::swap(hits[0], hits[1]);
  return DomainChord{hits[0].z, hits[1].z, hits[0].side, hits[1].side};
}

std::string render_svg(const TriangleGroup& group, const RenderOptions& options,
                       const Provenance& p) {
  const FundamentalDomain fd = fundamental_domain(group);
  const Screen s{options.width / (kXMax - kXMin), options.height / kYMax};
  std::ostringstream out;
  const std::string prov = provenance_text(p);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- provenance " << prov << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width
      << "\" height=\"" << options.height << "\" viewBox=\"0 0 " << options.width << ' '
      << options.height << "\">\n";
  out << "  <metadata>" << prov << "</metadata>\n";
  out << "  <title>T* for O(" << group.signature.to_string() << ")</title>\n";
  out << "  <line class=\"boundary\" x1=\"0\" y1=\"" << px(s.y(0)) << "\" x2=\"" << options.width
      << "\" y2=\"" << px(s.y(0)) << "\" stroke=\"#888\"/>\n";
  for (int k = 0; k < 4; ++k) {
    out << "  <path class=\"side\" data-side=\"" << k << "\" d=\""
        << arc_path(s, fd.sides[k], fd.vertices[k], fd.vertices[(k + 1) % 4])
        << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  const auto marker = [&](Complex z, const char* label) {
    out << "  <circle class=\"vertex\" data-label=\"" << label << "\" cx=\"" << px(s.x(z.real()))
        << "\" cy=\"" << px(s.y(z.imag())) << "\" r=\"4\" fill=\"black\"/>\n";
  };
  marker(fd.top(), "i");
  marker(fd.bottom(), "lambda^-1 i");

  if (options.axis) {
    const MoebiusMap g = group.pair_element(*options.axis);
    if (kind_of(classify_isometry(g, p.tolerance)) == IsometryKind::hyperbolic) {
      const Geodesic axis = axis_of(g);
      const auto [u, v] = axis.endpoints();
      const Complex from{u.x, 0.0};
      const Complex to = v.infinite ? Complex{u.x, kYMax} : Complex{v.x, 0.0};
      out << "  <path class=\"axis\" data-word=\"" << to_string(*options.axis) << "\" d=\""
          << arc_path(s, axis, from, to)
          << "\" fill=\"none\" stroke=\"#36c\" stroke-dasharray=\"6 4\"/>\n";
      if (const auto chord = clip_to_domain(fd, axis)) {
        out << "  <path class=\"axis-chord\" data-from-side=\"" << chord->from_side
            << "\" data-to-side=\"" << chord->to_side << "\" d=\""
            << arc_path(s, axis, chord->from, chord->to)
            << "\" fill=\"none\" stroke=\"#c33\" stroke-width=\"3\"/>\n";
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace orbigeo
