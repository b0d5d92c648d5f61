#pragma once

// Text formats: CSV point samples (shape export and eta tables), SVG
// polylines, Wavefront OBJ meshes and JSON reports. Writers build strings so
// callers can decide when (and whether) anything touches the filesystem.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/polygon/voronoi.hpp>
#include <json.hpp>

#include "wulffnt/counting.hpp"
#include "wulffnt/entropy.hpp"
#include "wulffnt/shapes.hpp"
#include "wulffnt/wulff.hpp"

namespace wulffnt {

/// 12 significant digits, the fixed output precision.
inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// A point of a shape with its normal and the tension value at that normal.
template <int D>
struct ShapeSample {
  Vec<D> x;
  Vec<D> n;
  double value;
};

/// One sample per facet: centroid, facet normal, weight(normal).
template <int D>
std::vector<ShapeSample<D>> facet_samples(const ConvexShape<D>& shape, const Tension<D>& weight) {
  std::vector<ShapeSample<D>> out;
  for (const auto& f : shape.facets) {
    Vec<D> c{};
    for (const auto& p : f.polygon) c = c + p;
    c = (1.0 / static_cast<double>(f.polygon.size())) * c;
    out.push_back({c, f.normal, weight(Direction<D>::from_vector(f.normal))});
  }
  return out;
}

/// Samples of the Vershik curve at t = i/(samples+1), with normal (t, 1-t)
/// normalized and value eta_Y(n).
inline std::vector<ShapeSample<1>> vershik_samples(int samples, bool scaled) {
  std::vector<ShapeSample<1>> out;
  for (int i = 1; i <= samples; ++i) {
    const double t = static_cast<double>(i) / (samples + 1);
    const auto n = Direction<1>::from_vector({t, 1.0 - t});
    out.push_back({vershik_point(t, scaled), n.vec(), eta_young(n)});
  }
  return out;
}

/// Vertices of sample_cerf_kenyon(m) with normals from facet_densities.
inline std::vector<ShapeSample<2>> cerf_kenyon_samples(int m, bool scaled) {
  std::vector<ShapeSample<2>> out;
  const detail::SimplexGrid grid(m);
  for (const auto& c : grid.nodes) {
    if (c[0] == m || c[1] == m || c[2] == m) continue;
    const std::array<double, 3> s{static_cast<double>(c[0]) / m, static_cast<double>(c[1]) / m,
                                  static_cast<double>(c[2]) / m};
    const auto p = facet_densities(liquid_point(s));
    const auto n = Direction<2>::from_vector({p[0], p[1], p[2]});
    const Vec3 x = liquid_surface_point(s, scaled);
    out.push_back({x, n.vec(), eta_skyscraper(n)});
  }
  return out;
}

/// Header x1..,n1..,value and one row per sample.
template <int D>
std::string write_samples_csv(const std::vector<ShapeSample<D>>& samples) {
  std::string out;
  for (int i = 1; i <= D + 1; ++i) out += "x" + std::to_string(i) + ",";
  for (int i = 1; i <= D + 1; ++i) out += "n" + std::to_string(i) + ",";
  out += "value\n";
  for (const auto& s : samples) {
    for (double v : s.x) out += fmt(v) + ",";
    for (double v : s.n) out += fmt(v) + ",";
    out += fmt(s.value) + "\n";
  }
  return out;
}

/// Polyline in a 1000 x 1000 viewBox, y pointing up, 4 decimals.
inline std::string write_svg(const std::vector<Vec2>& pts) {
  if (pts.empty()) throw std::domain_error("write_svg: no points");
  double extent = 0.0;
  for (const auto& p : pts) extent = std::max({extent, p[0], p[1]});
  const double k = extent > 0.0 ? 1000.0 / extent : 1.0;
  std::string path;
  char buf[64];
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.4f %.4f", i == 0 ? "M" : " L", k * pts[i][0], 1000.0 - k * pts[i][1]);
    path += buf;
  }
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 1000 1000\">\n"
         "<path d=\"" + path + "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n"
         "</svg>\n";
}

/// Chain of vertices along a d = 1 shape, facet by facet.
inline std::vector<Vec2> polyline_points(const ConvexShape<1>& shape) {
  std::vector<Vec2> pts;
  for (const auto& f : shape.facets) {
    for (const auto& p : f.polygon) {
      if (pts.empty() || distance<1>(pts.back(), p) > 1e-12 * (1.0 + shape.window)) pts.push_back(p);
    }
  }
  return pts;
}

/// v and f records; vertices shared bit-for-bit between facets are merged.
inline std::string write_obj(const ConvexShape<2>& shape) {
  std::map<Vec3, std::size_t> index;
  std::vector<Vec3> verts;
  std::string faces;
  for (const auto& f : shape.facets) {
    std::string rec = "f";
    for (const auto& p : f.polygon) {
      auto [it, fresh] = index.try_emplace(p, verts.size() + 1);
      if (fresh) verts.push_back(p);
      rec += " " + std::to_string(it->second);
    }
    faces += rec + "\n";
  }
  std::string out;
  for (const auto& v : verts) out += "v " + fmt(v[0]) + " " + fmt(v[1]) + " " + fmt(v[2]) + "\n";
  return out + faces;
}

namespace detail {

inline double round12(double x) { return std::stod(fmt(x)); }

// Comma-separated fields with RFC 4180 double-quote escaping.
inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  for (auto& f : fields) {
    const auto b = f.find_first_not_of(" \t");
    const auto e = f.find_last_not_of(" \t");
    f = b == std::string::npos ? "" : f.substr(b, e - b + 1);
  }
  return fields;
}

}  // namespace detail

inline std::string report_csv(const AsymptoticsReport& r) {
  std::string out = "N,log_count,predicted,ratio\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.n) + "," + fmt(row.log_count) + "," + fmt(row.predicted) + "," + fmt(row.ratio) + "\n";
  }
  return out;
}

inline std::string report_json(const AsymptoticsReport& r) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(r.kind);
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json o;
    o["N"] = row.n;
    o["log_count"] = detail::round12(row.log_count);
    o["predicted"] = detail::round12(row.predicted);
    o["ratio"] = detail::round12(row.ratio);
    j["rows"].push_back(o);
  }
  return j.dump(2) + "\n";
}

/// Direction/value samples read from CSV text with header n1,n2[,n3],value
/// (other columns are ignored). Directions are normalized on load.
template <int D>
struct EtaTable {
  std::vector<Vec<D>> directions;
  std::vector<double> values;
};

template <int D>
EtaTable<D> parse_eta_table(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("eta table: empty input");
  const auto header = detail::split_csv_line(line);
  std::array<int, D + 2> col;
  col.fill(-1);
  for (std::size_t i = 0; i < header.size(); ++i) {
    for (int k = 0; k <= D; ++k) {
      if (header[i] == "n" + std::to_string(k + 1)) col[k] = static_cast<int>(i);
    }
    if (header[i] == "value") col[D + 1] = static_cast<int>(i);
  }
  for (int c : col) {
    if (c < 0) throw std::runtime_error("eta table: header must name n1..n" + std::to_string(D + 1) + " and value");
  }
  EtaTable<D> t;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = detail::split_csv_line(line);
    try {
      Vec<D> v;
      for (int k = 0; k <= D; ++k) v[k] = std::stod(fields.at(static_cast<std::size_t>(col[k])));
      const double value = std::stod(fields.at(static_cast<std::size_t>(col[D + 1])));
      t.directions.push_back(Direction<D>::from_vector(v).vec());
      t.values.push_back(value);
    } catch (const std::exception& e) {
      throw std::runtime_error("eta table: bad row " + std::to_string(row) + ": " + e.what());
    }
  }
  if (t.directions.size() < 2) throw std::runtime_error("eta table: need at least two rows");
  return t;
}

namespace detail {

// Piecewise-linear h(q) on [0, 1]; repeated abscissae keep their mean and
// missing end points default to 0.
class LineTable {
 public:
  explicit LineTable(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    std::vector<int> counts;
    for (const auto& p : pts) {
      if (!v_.empty() && p.first == v_.back().first) {
        v_.back().second += p.second;
        ++counts.back();
      } else {
        v_.push_back(p);
        counts.push_back(1);
      }
    }
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i].second /= counts[i];
    if (v_.empty() || v_.front().first > 0.0) v_.insert(v_.begin(), {0.0, 0.0});
    if (v_.back().first < 1.0) v_.push_back({1.0, 0.0});
  }

  double operator()(double q) const {
    auto it = std::lower_bound(v_.begin(), v_.end(), std::pair{q, -HUGE_VAL});
    if (it == v_.begin()) return v_.front().second;
    if (it == v_.end()) return v_.back().second;
    if (it->first == q) return it->second;
    const auto& lo = *(it - 1);
    const double s = (q - lo.first) / (it->first - lo.first);
    return lo.second + s * (it->second - lo.second);
  }

 private:
  std::vector<std::pair<double, double>> v_;
};

// Piecewise-linear h(p1, p2) over a Delaunay triangulation of scattered
// nodes covering the flat simplex {p1, p2 >= 0, p1 + p2 <= 1}.
class TriangleTable {
 public:
  struct Node {
    double p1, p2, h;
  };

  explicit TriangleTable(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
    namespace bp = boost::polygon;
    constexpr double kScale = double(1 << 28);
    std::vector<bp::point_data<int>> sites;
    for (const auto& n : nodes_) {
      sites.emplace_back(static_cast<int>(std::lround(n.p1 * kScale)), static_cast<int>(std::lround(n.p2 * kScale)));
    }
    bp::voronoi_diagram<double> vd;
    bp::construct_voronoi(sites.begin(), sites.end(), &vd);
    for (const auto& v : vd.vertices()) {
      std::vector<std::size_t> ids;
      const auto* e = v.incident_edge();
      do {
        ids.push_back(e->cell()->source_index());
        e = e->rot_next();
      } while (e != v.incident_edge());
      for (std::size_t i = 1; i + 1 < ids.size(); ++i) tris_.push_back({ids[0], ids[i], ids[i + 1]});
    }
    buckets_.assign(kCells * kCells, {});
    for (std::size_t t = 0; t < tris_.size(); ++t) {
      double lo1 = 1.0, hi1 = 0.0, lo2 = 1.0, hi2 = 0.0;
      for (std::size_t id : tris_[t]) {
        lo1 = std::min(lo1, nodes_[id].p1);
        hi1 = std::max(hi1, nodes_[id].p1);
        lo2 = std::min(lo2, nodes_[id].p2);
        hi2 = std::max(hi2, nodes_[id].p2);
      }
      for (int i = cell(lo1); i <= cell(hi1); ++i) {
        for (int j = cell(lo2); j <= cell(hi2); ++j) buckets_[static_cast<std::size_t>(i * kCells + j)].push_back(t);
      }
    }
  }

  double operator()(double p1, double p2) const {
    const auto& bucket = buckets_[static_cast<std::size_t>(cell(p1) * kCells + cell(p2))];
    double best_h = 0.0, best_min = -HUGE_VAL;
    for (std::size_t t : bucket) {
      const auto& a = nodes_[tris_[t][0]];
      const auto& b = nodes_[tris_[t][1]];
      const auto& c = nodes_[tris_[t][2]];
      const double det = (b.p1 - a.p1) * (c.p2 - a.p2) - (c.p1 - a.p1) * (b.p2 - a.p2);
      if (det == 0.0) continue;
      const double wb = ((p1 - a.p1) * (c.p2 - a.p2) - (c.p1 - a.p1) * (p2 - a.p2)) / det;
      const double wc = ((b.p1 - a.p1) * (p2 - a.p2) - (p1 - a.p1) * (b.p2 - a.p2)) / det;
      const double wa = 1.0 - wb - wc;
      const double worst = std::min({wa, wb, wc});
      // Keep the triangle that contains p, or comes closest to it.
      if (worst > best_min) {
        best_min = worst;
        best_h = wa * a.h + wb * b.h + wc * c.h;
        if (worst >= 0.0) break;
      }
    }
    if (best_min == -HUGE_VAL) throw std::logic_error("TriangleTable: point outside the triangulation");
    return best_h;
  }

 private:
  static constexpr int kCells = 64;
  static int cell(double x) { return std::clamp(static_cast<int>(x * kCells), 0, kCells - 1); }

  std::vector<Node> nodes_;
  std::vector<std::array<std::size_t, 3>> tris_;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace detail

/// Tension interpolating a table. Interpolation is linear in the flat chart:
/// h = eta / |n|_1 over p = n / |n|_1, i.e. the homogeneous extension of eta
/// is interpolated linearly between samples, so an interpolated constraint
/// (x, n) >= eta(n) is implied by the tabulated ones.
///
/// d = 1: piecewise linear, boundary directions default to 0 when absent.
/// d = 2: piecewise linear on a Delaunay triangulation of the samples. Each
/// edge of Delta^2 is interpolated from the rows lying on it (vertices
/// default to 0) and seeds the triangulation. Exact at tabulated directions.
template <int D>
Tension<D> table_tension(const EtaTable<D>& table) {
  if constexpr (D == 1) {
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < table.directions.size(); ++i) {
      const auto& d = table.directions[i];
      const double l1 = d[0] + d[1];
      pts.push_back({d[1] / l1, table.values[i] / l1});
    }
    auto data = std::make_shared<const detail::LineTable>(std::move(pts));
    return {"table", [data](const Direction<1>& n) {
              const double l1 = n.l1();
              return l1 * (*data)(n[1] / l1);
            }};
  } else {
    // Edge k is {n_k = 0} with chart coordinate q = n_{k+2} / |n|_1.
    std::vector<detail::LineTable> edges;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::pair<double, double>> pts;
      for (std::size_t r = 0; r < table.directions.size(); ++r) {
        const auto& d = table.directions[r];
        const double l1 = d[0] + d[1] + d[2];
        if (d[k] == 0.0) pts.push_back({d[(k + 2) % 3] / l1, table.values[r] / l1});
      }
      edges.emplace_back(std::move(pts));
    }
    // Repeated directions are merged into one node holding their mean.
    std::map<std::pair<double, double>, std::pair<double, int>> merged;
    for (std::size_t r = 0; r < table.directions.size(); ++r) {
      const auto& d = table.directions[r];
      const double l1 = d[0] + d[1] + d[2];
      auto& slot = merged[{d[0] / l1, d[1] / l1}];
      slot.first += table.values[r] / l1;
      ++slot.second;
    }
    constexpr int kEdgeNodes = 64;
    for (int k = 0; k < 3; ++k) {
      for (int s = 0; s <= kEdgeNodes; ++s) {
        const double q = static_cast<double>(s) / kEdgeNodes;
        std::array<double, 3> p{};
        p[(k + 1) % 3] = 1.0 - q;
        p[(k + 2) % 3] = q;
        if (merged.count({p[0], p[1]}) == 0) merged[{p[0], p[1]}] = {edges[static_cast<std::size_t>(k)](q), 1};
      }
    }
    std::vector<detail::TriangleTable::Node> nodes;
    for (const auto& [p, acc] : merged) nodes.push_back({p.first, p.second, acc.first / acc.second});
    auto tri = std::make_shared<const detail::TriangleTable>(std::move(nodes));
    auto edge_data = std::make_shared<const std::vector<detail::LineTable>>(std::move(edges));
    auto eval = [tri, edge_data](const Direction<2>& n) {
      const double l1 = n.l1();
      for (int k = 0; k < 3; ++k) {
        if (n[k] == 0.0) return l1 * (*edge_data)[static_cast<std::size_t>(k)](n[(k + 2) % 3] / l1);
      }
      return l1 * (*tri)(n[0] / l1, n[1] / l1);
    };
    return {"table", eval};
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace wulffnt
