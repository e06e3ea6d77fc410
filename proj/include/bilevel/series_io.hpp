#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bilevel/qrseries.hpp"

namespace bilevel {

struct NamedSeries {
  std::string form;
  QRSeries series;
};

/// Versioned JSON; every number is a decimal string, coefficients sorted by
/// (qexp, rexp).
std::string series_to_json(std::string_view form, const QRSeries& s);
/// Throws ParseError on malformed or unsupported input.
NamedSeries series_from_json(std::string_view text);

void write_series_file(const std::filesystem::path& path, std::string_view form,
                       const QRSeries& s);
NamedSeries read_series_file(const std::filesystem::path& path);

}  // namespace bilevel
