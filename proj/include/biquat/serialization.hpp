#pragma once

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "biquat/connection.hpp"
#include "biquat/matrix.hpp"
#include "biquat/mechanics.hpp"
#include "biquat/quaternion.hpp"
#include "biquat/transform.hpp"
#include "biquat/triad.hpp"

namespace biquat {

using json = nlohmann::ordered_json;

// Quaternions serialize as plain 4-element arrays in (scalar, x1, x2, x3)
// order; biquaternions as 8 numbers with re/im interleaved per component.
inline json to_json(const Quaternion& q) { return json::array({q.a, q.b, q.c, q.d}); }

inline Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("quaternion_from_json: 4-element array required");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

inline json to_json(const Biquaternion& u) {
  return json::array({u.s.real(), u.s.imag(), u.v[0].real(), u.v[0].imag(), u.v[1].real(),
                      u.v[1].imag(), u.v[2].real(), u.v[2].imag()});
}

inline Biquaternion biquaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8)
    throw std::invalid_argument("biquaternion_from_json: 8-element array required");
  Biquaternion u;
  u.s = {j[0].get<double>(), j[1].get<double>()};
  for (int k = 0; k < 3; ++k)
    u.v[k] = {j[2 + 2 * k].get<double>(), j[3 + 2 * k].get<double>()};
  return u;
}

// Matrices are row-major nested arrays of [re, im] pairs.
inline json to_json(const Mat& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

inline Mat mat_from_json(const json& j) {
  const int n = static_cast<int>(j.size());
  Mat m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(j[i].size()) != n)
      throw std::invalid_argument("mat_from_json: square matrix required");
    for (int k = 0; k < n; ++k)
      m(i, k) = {j[i][k][0].get<double>(), j[i][k][1].get<double>()};
  }
  return m;
}

inline json to_json(const UnitTriad& t) {
  return json{{"q1", to_json(t.q[0])}, {"q2", to_json(t.q[1])}, {"q3", to_json(t.q[2])}};
}

inline json to_json(const Rotor& r) {
  return json{{"kind", to_string(r.kind)}, {"matrix", to_json(r.o)}};
}

inline json to_json(const SpinorMap& u) { return json{{"matrix", to_json(u.u)}}; }

namespace detail {

inline std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// Trajectory CSV: t, positions, velocities, then the four named
/// acceleration terms, one record per sample.
inline void write_trajectory_csv(const Trajectory& tr, std::ostream& os) {
  os << "t,x1,x2,x3,v1,v2,v3,a_lin1,a_lin2,a_lin3,a_cor1,a_cor2,a_cor3,"
        "a_ang1,a_ang2,a_ang3,a_cen1,a_cen2,a_cen3\n";
  for (size_t i = 0; i < tr.t.size(); ++i) {
    os << detail::fmt_double(tr.t[i]);
    for (const auto* block : {&tr.x, &tr.v, &tr.a_linear, &tr.a_coriolis, &tr.a_angular,
                              &tr.a_centripetal})
      for (int k = 0; k < 3; ++k) os << "," << detail::fmt_double((*block)[i][k]);
    os << "\n";
  }
}

/// Connection field CSV: one row per grid point, coordinates first, then
/// components in lexicographic (xi, k, j) order split into re and im.
inline void write_connection_csv(const ConnectionField& field, std::ostream& os) {
  const int g = field.grid.num_params();
  for (int xi = 0; xi < g; ++xi) os << field.grid.axes[xi].name << (xi + 1 < g ? "," : "");
  for (int xi = 0; xi < g; ++xi)
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < 3; ++j)
        os << ",om" << xi + 1 << "_" << k + 1 << j + 1 << "_re"
           << ",om" << xi + 1 << "_" << k + 1 << j + 1 << "_im";
  os << "\n";
  for (size_t p = 0; p < field.grid.num_points(); ++p) {
    const auto coords = field.grid.coords(p);
    for (int xi = 0; xi < g; ++xi)
      os << (xi ? "," : "") << detail::fmt_double(coords[xi]);
    for (int xi = 0; xi < g; ++xi) {
      const Omega3& o = field.at(p, xi);
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
          os << "," << detail::fmt_double(o[k][j].real()) << ","
             << detail::fmt_double(o[k][j].imag());
    }
    os << "\n";
  }
}

/// Reads back a connection CSV written by write_connection_csv onto the
/// given grid (the grid itself is not stored in the file).
inline ConnectionField read_connection_csv(const ParameterGrid& grid, std::istream& is) {
  const int g = grid.num_params();
  ConnectionField out{grid, {}, 0.0};
  out.data.resize(grid.num_points() * static_cast<size_t>(g));
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("read_connection_csv: empty input");
  for (size_t p = 0; p < grid.num_points(); ++p) {
    if (!std::getline(is, line))
      throw std::invalid_argument("read_connection_csv: not enough rows for the grid");
    std::istringstream row(line);
    std::string cell;
    for (int xi = 0; xi < g; ++xi) std::getline(row, cell, ',');  // skip coordinates
    for (int xi = 0; xi < g; ++xi) {
      Omega3 o{};
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
          std::getline(row, cell, ',');
          const double re = std::stod(cell);
          std::getline(row, cell, ',');
          const double im = std::stod(cell);
          o[k][j] = {re, im};
        }
      out.at(p, xi) = o;
    }
  }
  return out;
}

inline ConnectionField connection_from_json(const ParameterGrid& grid, const json& j) {
  const int g = grid.num_params();
  ConnectionField out{grid, {}, 0.0};
  out.data.resize(grid.num_points() * static_cast<size_t>(g));
  const auto& points = j.at("points");
  if (points.size() != grid.num_points())
    throw std::invalid_argument("connection_from_json: point count does not match the grid");
  for (size_t p = 0; p < grid.num_points(); ++p) {
    const auto& omegas = points[p].at("omega");
    for (int xi = 0; xi < g; ++xi) {
      Omega3 o{};
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n)
          o[k][n] = {omegas[xi][k][n][0].get<double>(), omegas[xi][k][n][1].get<double>()};
      out.at(p, xi) = o;
    }
  }
  return out;
}

inline json to_json(const ConnectionField& field) {
  json points = json::array();
  const int g = field.grid.num_params();
  for (size_t p = 0; p < field.grid.num_points(); ++p) {
    json entry;
    entry["coords"] = field.grid.coords(p);
    json omegas = json::array();
    for (int xi = 0; xi < g; ++xi) {
      json om = json::array();
      const Omega3& o = field.at(p, xi);
      for (int k = 0; k < 3; ++k) {
        json row = json::array();
        for (int j = 0; j < 3; ++j) row.push_back(json::array({o[k][j].real(), o[k][j].imag()}));
        om.push_back(row);
      }
      omegas.push_back(om);
    }
    entry["omega"] = omegas;
    points.push_back(entry);
  }
  return json{{"points", points}};
}

}  // namespace biquat
