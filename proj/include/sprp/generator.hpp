#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sprp/instance.hpp"

namespace sprp {

// Number of distinct SKUs stored in the warehouse.
inline std::int64_t distinct_sku_count(std::int64_t a, std::int64_t m, std::int64_t n,
                                       std::int64_t alpha) {
  if (a < 1 || m < 1 || n < 1 || alpha < 1)
    throw ValidationError("generator", "a, m, n and alpha must all be >= 1");
  const std::int64_t spread = (m * n + alpha - 1) / alpha;
  return std::max(a, spread);
}

struct TurnoverClass {
  std::string name;
  double share = 0;   // fraction of SKUs
  double weight = 0;  // total pick-list selection weight of the class
};

inline std::vector<TurnoverClass> default_class_profile() {
  return {{"A", 0.1, 0.6}, {"B", 0.3, 0.3}, {"C", 0.6, 0.1}};
}

struct GeneratorConfig {
  int alpha = 1;
  int num_aisles = 5;
  int num_articles = 5;
  int positions_per_aisle = 90;
  int num_crosses = 2;
  std::uint64_t seed = 1;
  int replicate = 0;
  Length aisle_pitch = 5;
  Length cell_pitch = 1;
  Length cross_offset = 1;
  std::vector<TurnoverClass> class_profile = default_class_profile();

  void validate() const {
    if (alpha < 1) throw ValidationError("alpha", "must be >= 1");
    if (num_aisles < 1) throw ValidationError("num_aisles", "must be >= 1");
    if (num_articles < 0) throw ValidationError("num_articles", "must be >= 0");
    if (num_crosses != 2 && num_crosses != 3)
      throw ValidationError("num_crosses", "must be 2 or 3");
    if (positions_per_aisle < 1 || positions_per_aisle % (num_crosses - 1) != 0)
      throw ValidationError("positions_per_aisle", "must split evenly over the blocks");
    if (class_profile.empty()) throw ValidationError("class_profile", "must not be empty");
    double s = 0;
    for (const auto& c : class_profile) {
      if (c.share < 0 || c.weight < 0)
        throw ValidationError("class_profile", "shares and weights must be non-negative");
      s += c.share;
    }
    if (s <= 0) throw ValidationError("class_profile", "shares must sum to a positive value");
  }

  Layout layout() const {
    Layout l;
    l.num_aisles = num_aisles;
    l.num_crosses = num_crosses;
    l.cells_per_subaisle = positions_per_aisle / (num_crosses - 1);
    l.aisle_pitch = aisle_pitch;
    l.cell_pitch = cell_pitch;
    l.cross_offset = cross_offset;
    return l;
  }
};

inline nlohmann::json to_json(const GeneratorConfig& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& t : c.class_profile)
    classes.push_back({{"name", t.name}, {"share", t.share}, {"weight", t.weight}});
  return {{"alpha", c.alpha},
          {"num_aisles", c.num_aisles},
          {"num_articles", c.num_articles},
          {"positions_per_aisle", c.positions_per_aisle},
          {"num_crosses", c.num_crosses},
          {"seed", c.seed},
          {"replicate", c.replicate},
          {"class_profile", classes}};
}

namespace detail {

enum class StreamKind : std::uint32_t { sprp = 1, scattered = 2 };

inline std::mt19937_64 instance_stream(const GeneratorConfig& c, StreamKind kind) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed & 0xffffffffu),
                    static_cast<std::uint32_t>(c.seed >> 32),
                    static_cast<std::uint32_t>(kind),
                    static_cast<std::uint32_t>(c.alpha),
                    static_cast<std::uint32_t>(c.num_aisles),
                    static_cast<std::uint32_t>(c.num_articles),
                    static_cast<std::uint32_t>(c.replicate),
                    static_cast<std::uint32_t>(c.num_crosses)};
  return std::mt19937_64(seq);
}

inline void place_depot(Layout& l, std::mt19937_64& rng) {
  l.depot_aisle = std::uniform_int_distribution<int>(0, l.num_aisles - 1)(rng);
  l.depot_cross = std::bernoulli_distribution(0.5)(rng) ? l.num_crosses - 1 : 0;
}

inline std::string instance_id(const GeneratorConfig& c, const char* kind) {
  return std::string(kind) + "-k" + std::to_string(c.num_crosses) + "-a" +
         std::to_string(c.alpha) + "-m" + std::to_string(c.num_aisles) + "-p" +
         std::to_string(c.num_articles) + "-r" + std::to_string(c.replicate) + "-s" +
         std::to_string(c.seed);
}

// Class sizes from shares; the last class absorbs rounding.
inline std::vector<std::int64_t> class_sizes(const std::vector<TurnoverClass>& prof,
                                             std::int64_t total) {
  double share_sum = 0;
  for (const auto& c : prof) share_sum += c.share;
  std::vector<std::int64_t> sizes(prof.size(), 0);
  std::int64_t used = 0;
  for (std::size_t k = 0; k + 1 < prof.size(); ++k) {
    sizes[k] = static_cast<std::int64_t>(static_cast<double>(total) * prof[k].share / share_sum);
    used += sizes[k];
  }
  sizes.back() = total - used;
  return sizes;
}

}  // namespace detail

inline Instance generate_sprp(const GeneratorConfig& cfg) {
  cfg.validate();
  Instance inst;
  inst.layout = cfg.layout();
  const int n_cells = inst.layout.cells_per_aisle();
  const std::int64_t total = static_cast<std::int64_t>(cfg.num_aisles) * n_cells;
  if (cfg.num_articles > total)
    throw ValidationError("num_articles", "more pick positions than cells in the warehouse");

  auto rng = detail::instance_stream(cfg, detail::StreamKind::sprp);
  detail::place_depot(inst.layout, rng);

  // partial Fisher-Yates over all cells
  std::vector<std::int64_t> cells(static_cast<std::size_t>(total));
  std::iota(cells.begin(), cells.end(), 0);
  inst.required.assign(static_cast<std::size_t>(cfg.num_aisles), {});
  for (int s = 0; s < cfg.num_articles; ++s) {
    std::uniform_int_distribution<std::int64_t> pick(s, total - 1);
    std::swap(cells[static_cast<std::size_t>(s)], cells[static_cast<std::size_t>(pick(rng))]);
    const std::int64_t v = cells[static_cast<std::size_t>(s)];
    inst.required[static_cast<std::size_t>(v / n_cells)].push_back(static_cast<int>(v % n_cells));
  }
  inst.provenance = {{"id", detail::instance_id(cfg, "sprp")},
                     {"config", to_json(cfg)},
                     {"seed", cfg.seed}};
  inst.validate();
  return inst;
}

inline ScatteredInstance generate_sprp_ss(const GeneratorConfig& cfg) {
  cfg.validate();
  ScatteredInstance inst;
  inst.layout = cfg.layout();
  const int n_cells = inst.layout.cells_per_aisle();
  const std::int64_t positions = static_cast<std::int64_t>(cfg.num_aisles) * n_cells;
  if (cfg.num_articles < 1) throw ValidationError("num_articles", "must be >= 1");
  if (cfg.num_articles > positions)
    throw ValidationError("num_articles", "pick list longer than the number of stored SKUs");
  const std::int64_t xi = distinct_sku_count(cfg.num_articles, cfg.num_aisles, n_cells, cfg.alpha);

  auto rng = detail::instance_stream(cfg, detail::StreamKind::scattered);
  detail::place_depot(inst.layout, rng);

  // SKU ids are ordered by class: first class first.
  const auto sizes = detail::class_sizes(cfg.class_profile, xi);
  std::vector<int> class_of(static_cast<std::size_t>(xi));
  {
    std::size_t h = 0;
    for (std::size_t k = 0; k < sizes.size(); ++k)
      for (std::int64_t t = 0; t < sizes[k]; ++t) class_of[h++] = static_cast<int>(k);
  }

  // Slots: every SKU floor(P/xi) positions, remainder to the earliest SKUs.
  const std::int64_t base = positions / xi;
  const std::int64_t extra = positions % xi;
  std::vector<std::int64_t> slots;
  slots.reserve(static_cast<std::size_t>(positions));
  for (std::int64_t h = 0; h < xi; ++h)
    for (std::int64_t t = 0; t < base + (h < extra ? 1 : 0); ++t) slots.push_back(h);
  std::shuffle(slots.begin(), slots.end(), rng);

  // Pick list: choose a class by weight among non-exhausted classes, then a
  // uniform SKU of that class.
  std::vector<std::vector<std::int64_t>> pool(sizes.size());
  for (std::int64_t h = 0; h < xi; ++h) pool[static_cast<std::size_t>(class_of[h])].push_back(h);
  std::vector<std::int64_t> picks;
  for (int s = 0; s < cfg.num_articles; ++s) {
    std::vector<double> w(pool.size(), 0.0);
    bool any_weight = false;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!pool[k].empty()) {
        w[k] = cfg.class_profile[k].weight;
        any_weight = any_weight || w[k] > 0;
      }
    }
    if (!any_weight)
      for (std::size_t k = 0; k < pool.size(); ++k) w[k] = pool[k].empty() ? 0.0 : 1.0;
    const auto k = std::discrete_distribution<std::size_t>(w.begin(), w.end())(rng);
    auto& cls = pool[k];
    const auto idx = std::uniform_int_distribution<std::size_t>(0, cls.size() - 1)(rng);
    picks.push_back(cls[idx]);
    cls.erase(cls.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  std::sort(picks.begin(), picks.end());

  auto name = [](std::int64_t h) { return "h" + std::to_string(h); };
  std::vector<char> requested(static_cast<std::size_t>(xi), 0);
  for (auto h : picks) {
    requested[static_cast<std::size_t>(h)] = 1;
    inst.skus.push_back(name(h));
    inst.demand[name(h)] = 1;
  }
  for (std::int64_t p = 0; p < positions; ++p) {
    const auto h = slots[static_cast<std::size_t>(p)];
    if (!requested[static_cast<std::size_t>(h)]) continue;
    inst.supply.push_back({static_cast<int>(p / n_cells), static_cast<int>(p % n_cells), name(h), 1});
  }
  inst.provenance = {{"id", detail::instance_id(cfg, "ss")},
                     {"config", to_json(cfg)},
                     {"seed", cfg.seed},
                     {"distinct_skus", xi}};
  inst.validate();
  return inst;
}

}  // namespace sprp
