#include "compas/similarity.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <limits>
#include <sstream>

#include "compas/errors.h"
#include "compas/geometry.h"
#include "text_util.h"

namespace compas {

namespace {

void require_same_cycle(const RhythmPattern& a, const RhythmPattern& b) {
  if (a.beats() != b.beats()) {
    throw LengthMismatch("cycle lengths differ: " + std::to_string(a.beats()) + " vs " +
                         std::to_string(b.beats()));
  }
}

}  // namespace

double chronotonic_distance(const RhythmPattern& a, const RhythmPattern& b) {
  require_same_cycle(a, b);
  const ChronotonicCurve fa = chronotonic(a);
  const ChronotonicCurve fb = chronotonic(b);
  std::vector<int> cuts = fa.breakpoints();
  const std::vector<int> other = fb.breakpoints();
  cuts.insert(cuts.end(), other.begin(), other.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  long area = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const int width = cuts[i + 1] - cuts[i];
    area += static_cast<long>(width) * std::abs(fa.value_at(cuts[i]) - fb.value_at(cuts[i]));
  }
  return static_cast<double>(area);
}

int hamming_distance(const RhythmPattern& a, const RhythmPattern& b) {
  require_same_cycle(a, b);
  int count = 0;
  for (int pos = 0; pos < a.beats(); ++pos) {
    if (a.accented(pos) != b.accented(pos)) ++count;
  }
  return count;
}

int permutation_distance_equal(const RhythmPattern& a, const RhythmPattern& b) {
  require_same_cycle(a, b);
  if (a.size() != b.size()) {
    throw InvalidArgument("onset counts differ (" + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()) + "); use the unequal variant");
  }
  int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a.onsets()[i] - b.onsets()[i]);
  return sum;
}

UnequalPermutation permutation_distance_unequal(const RhythmPattern& a, const RhythmPattern& b) {
  require_same_cycle(a, b);
  if (a.size() == b.size()) {
    throw InvalidArgument("onset counts are equal; use the equal variant");
  }
  UnequalPermutation out;
  out.first_is_source = a.size() > b.size();
  const auto& src = out.first_is_source ? a.onsets() : b.onsets();
  const auto& dst = out.first_is_source ? b.onsets() : a.onsets();
  const std::size_t ns = src.size();
  const std::size_t nd = dst.size();

  // cost[i][j]: best cost for sources 0..i with source i sent to target j and
  // targets 0..j all covered.
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> cost(ns * nd, kInf);
  auto at = [&](std::size_t i, std::size_t j) -> int& { return cost[i * nd + j]; };
  at(0, 0) = std::abs(src[0] - dst[0]);
  for (std::size_t i = 1; i < ns; ++i) {
    for (std::size_t j = 0; j < nd && j <= i; ++j) {
      int prev = at(i - 1, j);
      if (j > 0) prev = std::min(prev, at(i - 1, j - 1));
      if (prev < kInf) at(i, j) = prev + std::abs(src[i] - dst[j]);
    }
  }
  out.distance = at(ns - 1, nd - 1);

  out.moves.resize(ns);
  std::size_t j = nd - 1;
  for (std::size_t i = ns; i-- > 0;) {
    out.moves[i] = {src[i], dst[j]};
    if (i == 0) break;
    const int here = at(i, j) - std::abs(src[i] - dst[j]);
    if (j > 0 && at(i - 1, j - 1) == here) --j;
  }
  return out;
}

int permutation_distance(const RhythmPattern& a, const RhythmPattern& b) {
  if (a.size() == b.size()) return permutation_distance_equal(a, b);
  return permutation_distance_unequal(a, b).distance;
}

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::chronotonic: return "chronotonic";
    case Metric::permutation: return "permutation";
    case Metric::hamming: return "hamming";
  }
  return "chronotonic";
}

Metric parse_metric_name(std::string_view text) {
  std::string key = detail::lower(detail::trim(text));
  for (auto m : {Metric::chronotonic, Metric::permutation, Metric::hamming}) {
    if (key == metric_name(m)) return m;
  }
  throw ParseError("unknown metric '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// DistanceMatrix
// ---------------------------------------------------------------------------

DistanceMatrix::DistanceMatrix(std::vector<std::string> labels, std::vector<double> values)
    : labels_(std::move(labels)), values_(std::move(values)) {
  const std::size_t n = labels_.size();
  if (values_.size() != n * n) throw InvalidArgument("distance matrix must be square");
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0.0) throw InvalidArgument("non-zero diagonal at '" + labels_[i] + "'");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = at(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("distances must be finite and non-negative");
      }
      if (std::abs(v - at(j, i)) > 1e-12 * std::max(1.0, std::abs(v))) {
        throw InvalidArgument("asymmetric entry between '" + labels_[i] + "' and '" +
                              labels_[j] + "'");
      }
    }
  }
}

std::vector<double> DistanceMatrix::column_sums() const {
  std::vector<double> out(size(), 0.0);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[j] += at(i, j);
  }
  return out;
}

std::vector<double> DistanceMatrix::column_max() const {
  std::vector<double> out(size(), 0.0);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) out[j] = std::max(out[j], at(i, j));
  }
  return out;
}

std::vector<DistanceMatrix::TriangleViolation> DistanceMatrix::triangle_violations(
    double tolerance) const {
  std::vector<TriangleViolation> out;
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const double excess = at(i, k) - at(i, j) - at(j, k);
        if (excess > tolerance) out.push_back({i, j, k, excess});
      }
    }
  }
  return out;
}

DistanceMatrix distance_matrix(const std::vector<RhythmPattern>& patterns, Metric metric) {
  const std::size_t n = patterns.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(patterns[i].name().empty() ? "p" + std::to_string(i + 1)
                                                : patterns[i].name());
  }
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = 0.0;
      const std::string pair = "'" + labels[i] + "' vs '" + labels[j] + "': ";
      try {
        switch (metric) {
          case Metric::chronotonic: d = chronotonic_distance(patterns[i], patterns[j]); break;
          case Metric::permutation: d = permutation_distance(patterns[i], patterns[j]); break;
          case Metric::hamming: d = hamming_distance(patterns[i], patterns[j]); break;
        }
      } catch (const LengthMismatch& e) {
        throw LengthMismatch(pair + e.what());
      } catch (const InvalidArgument& e) {
        throw InvalidArgument(pair + e.what());
      }
      values[i * n + j] = d;
      values[j * n + i] = d;
    }
  }
  return DistanceMatrix(std::move(labels), std::move(values));
}

// ---------------------------------------------------------------------------
// Matrix I/O
// ---------------------------------------------------------------------------

std::string format_distance(double value) {
  const double rounded = std::round(value);
  if (std::abs(value - rounded) < 1e-9 && std::abs(rounded) < 1e15) {
    return std::to_string(static_cast<long long>(rounded));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

namespace {

std::vector<std::vector<std::string>> table_rows(const DistanceMatrix& m) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  header.insert(header.end(), m.labels().begin(), m.labels().end());
  rows.push_back(std::move(header));
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row{m.labels()[i]};
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(format_distance(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> sums{"sum"};
  for (double v : m.column_sums()) sums.push_back(format_distance(v));
  rows.push_back(std::move(sums));
  std::vector<std::string> maxima{"max"};
  for (double v : m.column_max()) maxima.push_back(format_distance(v));
  rows.push_back(std::move(maxima));
  return rows;
}

}  // namespace

std::string matrix_to_csv(const DistanceMatrix& matrix) {
  std::string out;
  for (const auto& row : table_rows(matrix)) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += row[c];
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_text(const DistanceMatrix& matrix) {
  const auto rows = table_rows(matrix);
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r == rows.size() - 2) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w + 2;
      out << std::string(total - 2, '-') << '\n';
    }
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c == 0) {
        out << std::left << std::setw(static_cast<int>(width[c])) << rows[r][c];
      } else {
        out << "  " << std::right << std::setw(static_cast<int>(width[c])) << rows[r][c];
      }
    }
    out << '\n';
  }
  return out.str();
}

DistanceMatrix parse_matrix_csv(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<std::string> labels;
  std::vector<double> values;
  bool have_header = false;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto fields = detail::split(body, ',');
    if (!have_header) {
      if (!detail::trim(fields.front()).empty()) {
        throw ParseError("header row must start with an empty cell", line_no);
      }
      for (std::size_t c = 1; c < fields.size(); ++c) {
        labels.emplace_back(detail::trim(fields[c]));
      }
      if (labels.empty()) throw ParseError("header has no labels", line_no);
      have_header = true;
      continue;
    }
    std::string name(detail::trim(fields.front()));
    if (rows == labels.size()) {
      if (name == "sum" || name == "max") continue;
      throw ParseError("more rows than labels", line_no);
    }
    if (name != labels[rows]) {
      throw ParseError("row label '" + name + "' does not match column '" + labels[rows] + "'",
                       line_no);
    }
    if (fields.size() != labels.size() + 1) throw ParseError("wrong number of cells", line_no);
    for (std::size_t c = 1; c < fields.size(); ++c) {
      auto v = detail::parse_double(detail::trim(fields[c]));
      if (!v) throw ParseError("bad number '" + std::string(fields[c]) + "'", line_no);
      values.push_back(*v);
    }
    ++rows;
  }
  if (!have_header) throw ParseError("empty matrix file");
  if (rows != labels.size()) throw ParseError("matrix has fewer rows than labels");
  try {
    return DistanceMatrix(std::move(labels), std::move(values));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

DistanceMatrix parse_matrix_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix_csv(in);
}

}  // namespace compas
