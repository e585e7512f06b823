#pragma once

#include "qslchan/scan.hpp"

#include <string>

namespace qslchan {

/// 12 significant digits, locale-independent.
std::string format_number(double v);

std::string to_csv(const FigureDataset& d);

/// Minimal standalone polyline plot, one path per curve.
std::string to_svg(const FigureDataset& d, const std::string& title);

}  // namespace qslchan
