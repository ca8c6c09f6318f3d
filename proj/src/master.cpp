#include "mwsp/master.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mwsp/errors.hpp"

namespace mwsp {

bool ColumnPool::contains(const std::vector<ObservationId>& members) const {
  return std::binary_search(index_.begin(), index_.end(), members);
}

int ColumnPool::add(const Instance& instance, std::span<const Column> columns) {
  int added = 0;
  for (const Column& incoming : columns) {
    Column column = incoming;
    std::sort(column.members.begin(), column.members.end());
    column.members.erase(
        std::unique(column.members.begin(), column.members.end()),
        column.members.end());
    if (column.members.empty()) {
      throw InfeasibleColumnError("empty column");
    }
    auto pos = std::lower_bound(index_.begin(), index_.end(), column.members);
    if (pos != index_.end() && *pos == column.members) continue;
    auto cost = hypothesis_cost(instance, column.members);
    if (!cost) {
      throw InfeasibleColumnError("column contains a blocked pair");
    }
    column.cost = *cost;
    column.xi = compute_xi_dg(instance, column.members, epsilon_);
    index_.insert(pos, column.members);
    columns_.push_back(std::move(column));
    ++added;
  }
  return added;
}

std::vector<double> compute_xi_dg(const Instance& instance,
                                  std::span<const ObservationId> members,
                                  double epsilon) {
  std::vector<double> xi(members.size(), 0.0);
  for (std::size_t i = 0; i < members.size(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      auto theta = instance.pair_cost(members[i], members[j]);
      if (!theta) continue;  // callers only pass feasible member sets
      s += *theta * (*theta < 0.0 ? 2.0 : 1.0);
    }
    xi[i] = epsilon + std::max(0.0, -s);
  }
  return xi;
}

std::vector<double> compute_varying_xi(const ColumnPool& pool,
                                       ObservationId n_observations,
                                       double epsilon) {
  std::vector<double> result(static_cast<std::size_t>(n_observations),
                             epsilon);
  for (const Column& column : pool.columns()) {
    for (std::size_t i = 0; i < column.members.size(); ++i) {
      auto d = static_cast<std::size_t>(column.members[i]);
      result[d] = std::max(result[d], column.xi[i]);
    }
  }
  return result;
}

std::vector<ThresholdLadder> build_ladders(const ColumnPool& pool,
                                           const DoiConfig& config,
                                           ObservationId n_observations) {
  if (config.thresholds < 1) {
    throw std::invalid_argument("flexible mode needs at least one threshold");
  }
  std::vector<ThresholdLadder> ladders(
      static_cast<std::size_t>(n_observations));
  for (const Column& column : pool.columns()) {
    for (std::size_t i = 0; i < column.members.size(); ++i) {
      ladders[static_cast<std::size_t>(column.members[i])].omega.push_back(
          column.xi[i]);
    }
  }
  int keep = config.thresholds + 1;
  for (ThresholdLadder& ladder : ladders) {
    auto& omega = ladder.omega;
    std::sort(omega.begin(), omega.end());
    omega.erase(std::unique(omega.begin(), omega.end()), omega.end());
    ladder.increments.resize(omega.size());
    for (std::size_t z = 0; z < omega.size(); ++z) {
      ladder.increments[z] = z == 0 ? omega[z] : omega[z] - omega[z - 1];
    }
    long length = static_cast<long>(omega.size());
    for (int k = 1; k <= keep; ++k) {
      long rung = (static_cast<long>(k) * length + keep - 1) / keep;  // ceil
      if (rung < 1) continue;
      int idx = static_cast<int>(rung - 1);
      if (ladder.selected.empty() || ladder.selected.back() != idx) {
        ladder.selected.push_back(idx);
      }
    }
  }
  return ladders;
}

double rounded_bound(const ThresholdLadder& ladder, double xi) {
  for (int idx : ladder.selected) {
    if (ladder.omega[static_cast<std::size_t>(idx)] >= xi) {
      return ladder.omega[static_cast<std::size_t>(idx)];
    }
  }
  throw std::logic_error("removal bound above every ladder rung");
}

namespace {

// Positions (0-based, within selected) of the kept rung covering xi.
int rounded_position(const ThresholdLadder& ladder, double xi) {
  for (std::size_t p = 0; p < ladder.selected.size(); ++p) {
    if (ladder.omega[static_cast<std::size_t>(ladder.selected[p])] >= xi) {
      return static_cast<int>(p);
    }
  }
  throw std::logic_error("removal bound above every ladder rung");
}

}  // namespace

RmpModel build_rmp(const Instance& instance, const ColumnPool& pool,
                   const DoiConfig& config,
                   const std::vector<ThresholdLadder>* ladders) {
  RmpModel model;
  model.pool_size = static_cast<int>(pool.size());
  ObservationId n = instance.n_observations();

  if (config.mode == DoiMode::kFlexible) {
    std::vector<ThresholdLadder> local;
    if (ladders == nullptr) {
      local = build_ladders(pool, config, n);
      ladders = &local;
    }
    // One row per (observation, kept rung); the matching xi variable shares
    // the row index and is priced at the telescoped increment between kept
    // rungs, so covering a column's rounded bound costs exactly that bound.
    std::vector<int> first_row(static_cast<std::size_t>(n), -1);
    for (ObservationId d = 0; d < n; ++d) {
      const ThresholdLadder& ladder = (*ladders)[static_cast<std::size_t>(d)];
      if (ladder.selected.empty()) continue;
      first_row[static_cast<std::size_t>(d)] =
          static_cast<int>(model.rung_rows.size());
      double prev = 0.0;
      for (int idx : ladder.selected) {
        double omega = ladder.omega[static_cast<std::size_t>(idx)];
        model.rung_rows.push_back(RmpModel::RungRow{d, idx, omega - prev});
        prev = omega;
      }
    }
    model.gamma_offset = static_cast<int>(model.rung_rows.size());
    for (const RmpModel::RungRow& row : model.rung_rows) {
      model.lp.add_variable(row.increment);
    }
    for (const Column& column : pool.columns()) {
      model.lp.add_variable(column.cost);
    }
    std::vector<std::vector<std::pair<int, double>>> coeffs(
        model.rung_rows.size());
    for (std::size_t r = 0; r < model.rung_rows.size(); ++r) {
      coeffs[r].push_back({static_cast<int>(r), -1.0});
    }
    for (std::size_t g = 0; g < pool.size(); ++g) {
      const Column& column = pool[g];
      int var = model.gamma_offset + static_cast<int>(g);
      for (std::size_t i = 0; i < column.members.size(); ++i) {
        auto d = static_cast<std::size_t>(column.members[i]);
        const ThresholdLadder& ladder = (*ladders)[d];
        int p = rounded_position(ladder, column.xi[i]);
        for (int q = 0; q <= p; ++q) {
          coeffs[static_cast<std::size_t>(first_row[d] + q)].push_back(
              {var, 1.0});
        }
      }
    }
    for (auto& row : coeffs) model.lp.add_row(std::move(row), 1.0);
    return model;
  }

  std::vector<std::vector<std::pair<int, double>>> coeffs(
      static_cast<std::size_t>(n));
  if (config.mode == DoiMode::kVarying) {
    std::vector<double> xi =
        compute_varying_xi(pool, n, config.epsilon);
    model.gamma_offset = n;
    for (ObservationId d = 0; d < n; ++d) {
      model.lp.add_variable(xi[static_cast<std::size_t>(d)]);
      coeffs[static_cast<std::size_t>(d)].push_back({d, -1.0});
    }
  }
  for (const Column& column : pool.columns()) {
    int var = model.lp.add_variable(column.cost);
    for (ObservationId d : column.members) {
      coeffs[static_cast<std::size_t>(d)].push_back({var, 1.0});
    }
  }
  for (auto& row : coeffs) model.lp.add_row(std::move(row), 1.0);
  return model;
}

namespace {

RmpSolution translate(const Instance& instance, const DoiConfig& config,
                      const RmpModel& model,
                      const std::vector<ThresholdLadder>* ladders,
                      const lp::LpSolution& sol) {
  auto n = static_cast<std::size_t>(instance.n_observations());
  RmpSolution out;
  out.objective = sol.objective;
  out.gamma.resize(static_cast<std::size_t>(model.pool_size));
  for (int g = 0; g < model.pool_size; ++g) {
    out.gamma[static_cast<std::size_t>(g)] =
        sol.primal[static_cast<std::size_t>(model.gamma_offset + g)];
  }
  out.duals.lambda.assign(n, 0.0);
  if (config.mode == DoiMode::kFlexible) {
    out.xi_dz.resize(n);
    out.duals.lambda_dz.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
      std::size_t rungs = (*ladders)[d].selected.size();
      out.xi_dz[d].assign(rungs, 0.0);
      out.duals.lambda_dz[d].assign(rungs, 0.0);
    }
    std::vector<int> seen(n, 0);
    for (std::size_t r = 0; r < model.rung_rows.size(); ++r) {
      auto d = static_cast<std::size_t>(model.rung_rows[r].obs);
      auto pos = static_cast<std::size_t>(seen[d]++);
      out.xi_dz[d][pos] = sol.primal[r];
      out.duals.lambda_dz[d][pos] = sol.row_duals[r];
      out.duals.lambda[d] += sol.row_duals[r];
    }
    for (std::size_t d = 0; d < n; ++d) {
      out.duals.lambda[d] = std::min(0.0, out.duals.lambda[d]);
    }
    return out;
  }
  if (config.mode == DoiMode::kVarying) {
    out.xi_d.resize(n);
    for (std::size_t d = 0; d < n; ++d) out.xi_d[d] = sol.primal[d];
  }
  for (std::size_t d = 0; d < n; ++d) {
    out.duals.lambda[d] = std::min(0.0, sol.row_duals[d]);
  }
  return out;
}

}  // namespace

RmpSolution solve_rmp(const Instance& instance, const ColumnPool& pool,
                      const DoiConfig& config) {
  std::vector<ThresholdLadder> ladders;
  const std::vector<ThresholdLadder>* lp_ladders = nullptr;
  if (config.mode == DoiMode::kFlexible) {
    ladders = build_ladders(pool, config, instance.n_observations());
    lp_ladders = &ladders;
  }
  RmpModel model = build_rmp(instance, pool, config, lp_ladders);
  lp::LpSolution sol = lp::solve(model.lp);
  if (sol.status != lp::LpStatus::kOptimal) {
    throw Error("restricted master solve failed");
  }
  return translate(instance, config, model, lp_ladders, sol);
}

Master::Master(const Instance& instance, const DoiConfig& config)
    : instance_(&instance), config_(config), pool_(config.epsilon) {}

int Master::add_columns(std::span<const Column> columns) {
  int added = pool_.add(*instance_, columns);
  if (added > 0) ladders_valid_ = false;
  return added;
}

const std::vector<ThresholdLadder>& Master::ladders() {
  if (!ladders_valid_) {
    ladders_ = build_ladders(pool_, config_, instance_->n_observations());
    ladders_valid_ = true;
  }
  return ladders_;
}

void Master::rebuild() {
  const std::vector<ThresholdLadder>* lad =
      config_.mode == DoiMode::kFlexible ? &ladders() : nullptr;
  model_ = build_rmp(*instance_, pool_, config_, lad);
  model_valid_ = true;
  cols_in_model_ = static_cast<int>(pool_.size());
  basis_ = {};
}

void Master::append_new_columns() {
  if (config_.mode == DoiMode::kVarying) {
    std::vector<double> xi = compute_varying_xi(
        pool_, instance_->n_observations(), config_.epsilon);
    for (ObservationId d = 0; d < instance_->n_observations(); ++d) {
      model_.lp.objective[static_cast<std::size_t>(d)] =
          xi[static_cast<std::size_t>(d)];
    }
  }
  std::vector<int> first_row;
  if (config_.mode == DoiMode::kFlexible) {
    first_row.assign(static_cast<std::size_t>(instance_->n_observations()), -1);
    for (std::size_t r = 0; r < model_.rung_rows.size(); ++r) {
      auto d = static_cast<std::size_t>(model_.rung_rows[r].obs);
      if (first_row[d] < 0) first_row[d] = static_cast<int>(r);
    }
  }
  for (std::size_t g = static_cast<std::size_t>(cols_in_model_);
       g < pool_.size(); ++g) {
    const Column& column = pool_[g];
    int var = model_.lp.add_variable(column.cost);
    if (config_.mode == DoiMode::kFlexible) {
      for (std::size_t i = 0; i < column.members.size(); ++i) {
        auto d = static_cast<std::size_t>(column.members[i]);
        int p = rounded_position(ladders_[d], column.xi[i]);
        for (int q = 0; q <= p; ++q) {
          model_.lp.rows[static_cast<std::size_t>(first_row[d] + q)]
              .coeffs.push_back({var, 1.0});
        }
      }
    } else {
      for (ObservationId d : column.members) {
        model_.lp.rows[static_cast<std::size_t>(d)].coeffs.push_back(
            {var, 1.0});
      }
    }
  }
  model_.pool_size = static_cast<int>(pool_.size());
  cols_in_model_ = model_.pool_size;
}

RmpSolution Master::solve() {
  if (config_.mode == DoiMode::kFlexible) {
    bool stale = !ladders_valid_;
    const std::vector<ThresholdLadder>& current = ladders();
    if (!model_valid_) {
      rebuild();
    } else if (stale) {
      // The row structure survives only if the kept rungs did not move.
      bool same = true;
      std::size_t r = 0;
      for (ObservationId d = 0; same && d < instance_->n_observations(); ++d) {
        const ThresholdLadder& ladder = current[static_cast<std::size_t>(d)];
        double prev = 0.0;
        for (int idx : ladder.selected) {
          double omega = ladder.omega[static_cast<std::size_t>(idx)];
          if (r >= model_.rung_rows.size() ||
              model_.rung_rows[r].obs != d ||
              model_.rung_rows[r].increment != omega - prev) {
            same = false;
            break;
          }
          prev = omega;
          ++r;
        }
      }
      if (same) same = r == model_.rung_rows.size();
      if (same) {
        append_new_columns();
      } else {
        rebuild();
      }
    } else if (cols_in_model_ < static_cast<int>(pool_.size())) {
      append_new_columns();
    }
  } else {
    if (!model_valid_) {
      rebuild();
    } else if (cols_in_model_ < static_cast<int>(pool_.size())) {
      append_new_columns();
    }
  }
  lp::LpSolution sol = lp::solve(model_.lp, {}, &basis_);
  if (sol.status != lp::LpStatus::kOptimal) {
    throw Error("restricted master solve failed");
  }
  const std::vector<ThresholdLadder>* lad =
      config_.mode == DoiMode::kFlexible ? &ladders_ : nullptr;
  return translate(*instance_, config_, model_, lad, sol);
}

}  // namespace mwsp
