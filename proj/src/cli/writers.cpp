#include "wavepack/cli/writers.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace wavepack::cli {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string series_csv(const analysis::AutocorrSeries& series) {
  std::string out = "t,re_A,im_A,abs2_A,hilbert_dist";
  if (series.has_anticorrelation) out += ",re_Abar,im_Abar";
  out += '\n';
  for (const auto& s : series.samples) {
    out += format_number(s.t) + ',' + format_number(s.A.real()) + ',' + format_number(s.A.imag()) + ',' +
           format_number(s.modulus_sq) + ',' + format_number(s.hilbert_distance);
    if (series.has_anticorrelation)
      out += ',' + format_number(s.A_bar->real()) + ',' + format_number(s.A_bar->imag());
    out += '\n';
  }
  return out;
}

namespace {

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string argand_svg(const std::vector<std::pair<std::string, const analysis::AutocorrSeries*>>& curves) {
  // Plot square [-1.1, 1.1]^2 mapped to 440 x 440 user units, y pointing up.
  const double scale = 200.0, centre = 220.0;
  auto px = [&](double re) { return coord(centre + scale * re); };
  auto py = [&](double im) { return coord(centre - scale * im); };

  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"440\" height=\"440\" "
      "viewBox=\"0 0 440 440\">\n"
      "  <rect width=\"440\" height=\"440\" fill=\"white\"/>\n"
      "  <line x1=\"0\" y1=\"220\" x2=\"440\" y2=\"220\" stroke=\"#999\" stroke-width=\"0.5\"/>\n"
      "  <line x1=\"220\" y1=\"0\" x2=\"220\" y2=\"440\" stroke=\"#999\" stroke-width=\"0.5\"/>\n"
      "  <circle cx=\"220\" cy=\"220\" r=\"200\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n"
      "  <text x=\"428\" y=\"214\" font-size=\"10\" text-anchor=\"end\">Re A</text>\n"
      "  <text x=\"226\" y=\"12\" font-size=\"10\">Im A</text>\n";
  std::size_t index = 0;
  for (const auto& [label, series] : curves) {
    const char* color = kColors[index % std::size(kColors)];
    out += "  <polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1\" points=\"";
    bool first = true;
    for (const auto& s : series->samples) {
      if (!first) out += ' ';
      out += px(s.A.real()) + ',' + py(s.A.imag());
      first = false;
    }
    out += "\"/>\n";
    out += "  <text x=\"8\" y=\"" + std::to_string(16 + 14 * index) + "\" font-size=\"10\" fill=\"" + color + "\">" +
           label + "</text>\n";
    ++index;
  }
  out += "</svg>\n";
  return out;
}

nlohmann::json report_json(const Scenario& scenario, const ScenarioResult& result) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : result.report.checks)
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"tolerance", c.tolerance},
                      {"relation", c.upper_bound ? "<=" : ">="},
                      {"pass", c.pass}});
  nlohmann::json runtimes = nlohmann::json::object();
  for (const auto& [method, seconds] : result.report.runtimes) runtimes[method] = seconds;
  return {{"scenario", scenario.name},
          {"resolved_config", scenario.resolved},
          {"checks", checks},
          {"runtimes", runtimes},
          {"pass", result.report.pass()}};
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  file.close();
  if (!file) throw IoError("failed writing " + path.string());
}

std::vector<std::filesystem::path> write_artifacts(const Scenario& scenario, const ScenarioResult& result,
                                                   const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;
  // Listed order, not execution order, so file names and legends stay stable.
  std::vector<const MethodResult*> ordered;
  for (auto m : scenario.methods)
    for (const auto& r : result.methods)
      if (r.method == m) ordered.push_back(&r);

  if (scenario.wants(Output::SeriesCsv)) {
    for (const auto* r : ordered) {
      written.push_back(dir / (scenario.name + "." + to_string(r->method) + ".csv"));
      write_file(written.back(), series_csv(r->series));
    }
  }
  if (scenario.wants(Output::ArgandSvg)) {
    std::vector<std::pair<std::string, const analysis::AutocorrSeries*>> curves;
    for (const auto* r : ordered) curves.emplace_back(to_string(r->method), &r->series);
    written.push_back(dir / (scenario.name + ".argand.svg"));
    write_file(written.back(), argand_svg(curves));
  }
  if (scenario.wants(Output::ReportJson)) {
    written.push_back(dir / (scenario.name + ".report.json"));
    write_file(written.back(), report_json(scenario, result).dump(2) + "\n");
  }
  return written;
}

}  // namespace wavepack::cli
