#ifndef PMTN_EXACT_HPP
#define PMTN_EXACT_HPP

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pmtn/deadline.hpp"
#include "pmtn/schedule.hpp"

namespace pmtn {

	struct Search_limits {
		int max_jobs = 12;
		long long max_horizon = 64;
		long long node_budget = 1000000;
		double time_budget_seconds = 60.0;
	};

	struct Exact_result {
		std::optional<Time_point> optimum;  // empty: nothing feasible within the grid
		Schedule schedule;                  // realizes the optimum when present
		bool proven_optimal = false;        // false once a budget was hit
		bool budget_exhausted = false;
		long long nodes_explored = 0;
		long long horizon = 0;
	};

	namespace detail {

		inline void require_integral(const Scheduling_instance& instance) {
			for (const Job& job : instance.jobs())
				if (!job.processing().is_integer() || !job.due().is_integer()
				    || !job.release().is_integer())
					throw std::invalid_argument(
						"exact search needs integer processing, due and release data");
		}

		inline long long default_horizon(const Scheduling_instance& instance) {
			// everything fits sequentially after the last release
			long long max_release = 0;
			long long work = 0;
			for (const Job& job : instance.jobs()) {
				max_release = std::max(max_release, job.release().floor());
				work += job.processing().floor();
			}
			return max_release + work;
		}

		inline long long integer_tardiness(const Job& job, long long completion) {
			return std::max(0LL, completion - job.due().floor());
		}

		inline std::optional<Flow_assignment>
		completion_vector_feasible(const Scheduling_instance& instance,
		                           const std::vector<long long>& completion,
		                           long long relaxed_deadline) {
			Deadline_problem problem{instance.machines(), {}};
			const auto& jobs = instance.jobs();
			for (std::size_t j = 0; j < jobs.size(); ++j) {
				long long deadline = j < completion.size() ? completion[j] : relaxed_deadline;
				problem.jobs.push_back({jobs[j].id(), jobs[j].processing(),
				                        jobs[j].release(), Time_point(deadline)});
			}
			return feasible_with_deadlines(problem);
		}

	}

	/**
	 * Exact minimizer of total tardiness on identical machines with
	 * preemption, by branch and bound over per-job completion deadlines on
	 * the integer grid [1, max release + total processing] (capped by the
	 * limits). A partial assignment is pruned when its committed tardiness
	 * already reaches the incumbent or when it is deadline infeasible even
	 * with all unassigned jobs relaxed to the horizon. Exponential by
	 * design; reject anything beyond the limits.
	 */
	inline Exact_result exact_min_total_tardiness(const Scheduling_instance& instance,
	                                              const Search_limits& limits = {}) {
		if (limits.max_jobs < 1 || limits.max_horizon < 1 || limits.node_budget < 1
		    || limits.time_budget_seconds <= 0)
			throw std::invalid_argument("search limits must be positive");
		if (static_cast<long long>(instance.jobs().size()) > limits.max_jobs)
			throw std::invalid_argument("instance exceeds the job limit of the exact search");
		detail::require_integral(instance);

		const auto& jobs = instance.jobs();
		const std::size_t n = jobs.size();
		const long long horizon =
			std::min(limits.max_horizon, detail::default_horizon(instance));
		const auto started = std::chrono::steady_clock::now();

		Exact_result result;
		result.horizon = horizon;
		if (n == 0) {
			result.optimum = Time_point();
			result.proven_optimal = true;
			return result;
		}

		std::vector<long long> assigned;
		std::vector<long long> best_vector;
		std::optional<long long> best_value;
		bool out_of_budget = false;
		assigned.reserve(n);

		auto budget_left = [&]() {
			if (result.nodes_explored >= limits.node_budget)
				return false;
			if ((result.nodes_explored & 255) == 0) {
				const std::chrono::duration<double> elapsed =
					std::chrono::steady_clock::now() - started;
				if (elapsed.count() > limits.time_budget_seconds)
					return false;
			}
			return true;
		};

		auto search = [&](auto&& self, long long committed) -> void {
			if (assigned.size() == n) {
				if (!best_value || committed < *best_value) {
					if (detail::completion_vector_feasible(instance, assigned, horizon)) {
						best_value = committed;
						best_vector = assigned;
					}
				}
				return;
			}
			const Job& job = jobs[assigned.size()];
			const long long earliest = job.release().floor() + job.processing().floor();
			for (long long c = earliest; c <= horizon; ++c) {
				if (!budget_left()) {
					out_of_budget = true;
					return;
				}
				++result.nodes_explored;
				const long long next = committed + detail::integer_tardiness(job, c);
				if (best_value && next >= *best_value) {
					if (c >= job.due().floor())
						break;  // larger completions only cost more
					continue;
				}
				assigned.push_back(c);
				if (detail::completion_vector_feasible(instance, assigned, horizon))
					self(self, next);
				assigned.pop_back();
				if (out_of_budget)
					return;
			}
		};
		search(search, 0);

		result.budget_exhausted = out_of_budget;
		result.proven_optimal = !out_of_budget;
		if (best_value) {
			result.optimum = Time_point(*best_value);
			auto assignment =
				detail::completion_vector_feasible(instance, best_vector, horizon);
			Deadline_problem problem{instance.machines(), {}};
			for (std::size_t j = 0; j < n; ++j)
				problem.jobs.push_back({jobs[j].id(), jobs[j].processing(),
				                        jobs[j].release(), Time_point(best_vector[j])});
			result.schedule = build_schedule_from_flow(problem, *assignment);
		}
		return result;
	}

	/**
	 * Independent reference: enumerates every integer completion-time vector
	 * in [release + processing, horizon]^n, keeps the deadline-feasible ones
	 * and returns the minimal total tardiness. Only for tiny inputs.
	 */
	inline std::optional<long long> exhaustive_oracle(const Scheduling_instance& instance,
	                                                  long long horizon) {
		if (instance.jobs().size() > 5)
			throw std::invalid_argument("exhaustive oracle accepts at most 5 jobs");
		if (horizon < 1 || horizon > 12)
			throw std::invalid_argument("exhaustive oracle accepts horizons in [1, 12]");
		detail::require_integral(instance);

		const auto& jobs = instance.jobs();
		const std::size_t n = jobs.size();
		std::vector<long long> completion(n);
		std::optional<long long> best;

		auto enumerate = [&](auto&& self, std::size_t j) -> void {
			if (j == n) {
				long long total = 0;
				for (std::size_t i = 0; i < n; ++i)
					total += detail::integer_tardiness(jobs[i], completion[i]);
				if (best && total >= *best)
					return;
				if (detail::completion_vector_feasible(instance, completion, horizon))
					best = total;
				return;
			}
			const long long earliest = jobs[j].release().floor() + jobs[j].processing().floor();
			for (long long c = earliest; c <= horizon; ++c) {
				completion[j] = c;
				self(self, j + 1);
			}
		};
		enumerate(enumerate, 0);
		return best;
	}

}

#endif
