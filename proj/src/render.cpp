#include "gwbinom/render.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace gwbinom::render {

Json to_json(const GWElem& x) {
  Json out;
  if (x.rank() >= std::numeric_limits<std::int64_t>::min() && x.rank() <= std::numeric_limits<std::int64_t>::max()) {
    out["rank"] = static_cast<std::int64_t>(x.rank());
  } else {
    out["rank"] = x.rank().str();
  }
  out["disc"] = to_string(x.disc());
  try {
    out["display"] = x.display();
  } catch (const Unrepresentable&) {
    out["display"] = nullptr;
  }
  return out;
}

GWElem gw_from_json(const Json& j) {
  BigInt rank = j.at("rank").is_string() ? BigInt(j.at("rank").get<std::string>()) : BigInt(j.at("rank").get<std::int64_t>());
  const auto disc = j.at("disc").get<std::string>();
  if (disc != "square" && disc != "nonsquare") throw std::invalid_argument("bad disc '" + disc + "'");
  return {std::move(rank), disc == "square" ? Disc::square : Disc::nonsquare};
}

Json to_json(const coefficients::EnrichedCoefficient& c) {
  Json out;
  out["n"] = c.n;
  out["j"] = c.j;
  out["twisted"] = c.twisted;
  out["method"] = coefficients::to_string(c.method);
  out["value"] = to_json(c.value);
  return out;
}

Json orbit_catalog(int n, int j, const std::vector<necklace::OrbitRecord>& orbits) {
  Json out;
  out["n"] = n;
  out["j"] = j;
  out["orbits"] = Json::array();
  for (const auto& rec : orbits) {
    Json o;
    o["canonical"] = rec.canonical.to_bitstring();
    o["period"] = rec.period;
    o["flip_fixed"] = rec.flip_fixed;
    o["axes"] = Json::array();
    for (const auto& a : rec.axes) o["axes"].push_back({{"m", a.m}, {"type", static_cast<int>(a.type)}});
    out["orbits"].push_back(std::move(o));
  }
  return out;
}

Json to_json(const partitions::MarkedCyclicPartition& p) {
  Json out;
  out["runs"] = p.runs();
  std::vector<bool> marked;
  for (std::size_t i = 0; i < p.runs().size(); ++i) marked.push_back(i % 2 == 0);
  out["marked"] = marked;
  return out;
}

std::string triangle_text(const std::vector<std::vector<coefficients::EnrichedCoefficient>>& rows) {
  // Entries sit on a grid of 2*rows - 1 equal-width columns; row n starts
  // in column rows - 1 - n and uses every other column.
  std::size_t width = 1;
  for (const auto& row : rows) {
    for (const auto& c : row) width = std::max(width, c.value.display().size());
  }
  const std::size_t rows_count = rows.size();
  std::ostringstream out;
  for (std::size_t n = 0; n < rows_count; ++n) {
    std::string line((rows_count - 1 - n) * (width + 1), ' ');
    for (std::size_t k = 0; k < rows[n].size(); ++k) {
      const std::string s = rows[n][k].value.display();
      const std::size_t left = (width - s.size()) / 2;
      std::string cell(left, ' ');
      cell += s;
      cell.append(width - s.size() - left, ' ');
      if (k != 0) line.append(width + 2, ' ');
      line += cell;
    }
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  return out.str();
}

Json triangle_json(const std::vector<std::vector<coefficients::EnrichedCoefficient>>& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(to_json(c.value));
    out.push_back(std::move(r));
  }
  return out;
}

std::string triangle_csv(const std::vector<std::vector<coefficients::EnrichedCoefficient>>& rows) {
  std::ostringstream out;
  out << "row,j,rank,disc,display\n";
  for (const auto& row : rows) {
    for (const auto& c : row) {
      out << c.n << ',' << c.j << ',' << c.value.rank().str() << ',' << to_string(c.value.disc()) << ','
          << c.value.display() << '\n';
    }
  }
  return out.str();
}

}  // namespace gwbinom::render
