#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace bezplan {

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// Binary occupancy grid. Cell (r, c) covers the world square
// [origin + res*(c, r), origin + res*(c+1, r+1)]; its center is
// origin + res*(c+0.5, r+0.5). Row 0 is at the origin (world y grows with r).
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution,
                Eigen::Vector2d origin = Eigen::Vector2d::Zero());

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Eigen::Vector2d& origin() const { return origin_; }

  bool in_bounds(Cell c) const {
    return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
  }
  bool occupied(Cell c) const { return occ_[index(c)]; }
  void set_occupied(Cell c, bool value = true) { occ_[index(c)] = value; }
  int occupied_count() const;

  Eigen::Vector2d cell_center(Cell c) const {
    return origin_ + resolution_ * Eigen::Vector2d(c.col + 0.5, c.row + 0.5);
  }
  // Cell containing a world point (boundary points go to the higher cell).
  Cell world_to_cell(const Eigen::Vector2d& p) const;

 private:
  int index(Cell c) const;

  int width_;
  int height_;
  double resolution_;
  Eigen::Vector2d origin_;
  std::vector<std::uint8_t> occ_;
};

// Euclidean distance (meters, between cell centers) to the nearest occupied
// cell. Zero on occupied cells; +inf everywhere when the grid is free.
// Exact: two-pass squared-distance transform (lower-envelope method).
class DistanceField {
 public:
  explicit DistanceField(const OccupancyGrid& grid);

  double distance(Cell c) const { return dist_[c.row * width_ + c.col]; }
  int width() const { return width_; }
  int height() const { return height_; }

 private:
  int width_;
  int height_;
  std::vector<double> dist_;
};

// Visiting cost 1/dist2coll; 0 on free cells of an obstacle-free map
// (the 1/inf limit), +inf (impassable) on occupied cells.
double visiting_cost(const OccupancyGrid& grid, const DistanceField& field, Cell c);

struct GridPath {
  std::vector<Cell> cells;
  std::vector<Eigen::Vector2d> world;  // cell centers
  double cost = 0.0;                   // accumulated primary cost
  double length = 0.0;                 // polyline length, meters
};

// Maximal-clearance reference path: Dijkstra over the 8-connected free grid.
// Edge cost is max(cost(i), cost(j)), multiplied by the Euclidean step length
// when length_weighted is set (the default; the bare max-of-costs rule is
// length-blind). Ties are resolved by accumulated length, then by smaller
// (row, col). Diagonal steps require both orthogonal neighbors free.
// Throws on an occupied or out-of-bounds endpoint; returns nullopt when the
// goal is unreachable.
std::optional<GridPath> reference_path(const OccupancyGrid& grid, const DistanceField& field,
                                       Cell start, Cell goal, bool length_weighted = true);

}  // namespace bezplan
