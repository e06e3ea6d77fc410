#include "bilevel/series_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bilevel {

using nlohmann::json;

std::string series_to_json(std::string_view form, const QRSeries& s) {
  json coeffs = json::array();
  for (const auto& [q, slice] : s.levels()) {
    for (const auto& [r, c] : slice) coeffs.push_back({q.str(), r.str(), c.str()});
  }
  json j = {{"version", 1},
            {"form", std::string(form)},
            {"weight", s.weight().str()},
            {"index", s.index().str()},
            {"qprec", s.qprec().str()},
            {"coeffs", std::move(coeffs)}};
  return j.dump() + "\n";
}

NamedSeries series_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("series file: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) {
      throw Error(ErrorKind::ParseError, "unsupported series file version");
    }
    auto rat = [](const json& v) { return Rational::parse(v.get<std::string>()); };
    NamedSeries out{j.at("form").get<std::string>(),
                    QRSeries(rat(j.at("qprec")), rat(j.at("weight")), rat(j.at("index")))};
    for (const auto& t : j.at("coeffs")) {
      if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::ParseError, "bad coefficient entry");
      out.series.add_term(rat(t[0]), rat(t[1]), rat(t[2]));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("series file: ") + e.what());
  }
}

void write_series_file(const std::filesystem::path& path, std::string_view form,
                       const QRSeries& s) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << series_to_json(form, s);
}

NamedSeries read_series_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return series_from_json(ss.str());
}

}  // namespace bilevel
