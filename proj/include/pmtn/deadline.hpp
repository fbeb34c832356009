#ifndef PMTN_DEADLINE_HPP
#define PMTN_DEADLINE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtn/max_flow.hpp"
#include "pmtn/schedule.hpp"
#include "pmtn/time.hpp"

namespace pmtn {

	struct Deadline_job {
		std::string id;
		Time_point processing;
		Time_point release;
		Time_point deadline;
	};

	// Feasibility question: can every job run for its full processing time
	// within [release, deadline] on m identical machines, with preemption
	// and migration?
	struct Deadline_problem {
		int machines;
		std::vector<Deadline_job> jobs;
	};

	// Sorted distinct releases and deadlines; consecutive points bound the
	// intervals the flow formulation assigns work to.
	class Event_grid {
	public:
		explicit Event_grid(const Deadline_problem& problem) {
			points_.reserve(problem.jobs.size() * 2);
			for (const Deadline_job& job : problem.jobs) {
				points_.push_back(job.release);
				points_.push_back(job.deadline);
			}
			std::sort(points_.begin(), points_.end());
			points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
		}

		std::size_t interval_count() const {
			return points_.empty() ? 0 : points_.size() - 1;
		}

		const Time_point& interval_start(std::size_t i) const { return points_[i]; }
		const Time_point& interval_end(std::size_t i) const { return points_[i + 1]; }
		Time_point interval_length(std::size_t i) const {
			return points_[i + 1] - points_[i];
		}

		const std::vector<Time_point>& points() const { return points_; }

		friend bool operator==(const Event_grid&, const Event_grid&) = default;

	private:
		std::vector<Time_point> points_;
	};

	// amount[j][i] = processing of job j assigned to grid interval i
	struct Flow_assignment {
		Event_grid grid;
		std::vector<std::vector<Time_point>> amount;
	};

	namespace detail {

		inline bool job_fits_interval(const Deadline_job& job, const Event_grid& grid,
		                              std::size_t interval) {
			return job.release <= grid.interval_start(interval)
			    && grid.interval_end(interval) <= job.deadline;
		}

	}

	/**
	 * Decides deadline feasibility by max-flow on the job/interval network:
	 * source->job with capacity p_j, job->interval with capacity equal to the
	 * interval length whenever the interval lies within [r_j, D_j], and
	 * interval->sink with capacity m times the interval length. The problem
	 * is feasible exactly when the max flow saturates all processing, and the
	 * flow then says how much of each job runs in each interval.
	 */
	inline std::optional<Flow_assignment> feasible_with_deadlines(const Deadline_problem& problem) {
		if (problem.machines < 1)
			throw std::invalid_argument("machine count must be at least 1");

		Event_grid grid(problem);
		const std::size_t n = problem.jobs.size();
		const std::size_t intervals = grid.interval_count();

		Time_point demand;
		for (const Deadline_job& job : problem.jobs) {
			if (!(job.processing > Time_point()))
				throw std::invalid_argument("job " + job.id + ": processing time must be positive");
			if (!(job.release < job.deadline)
			    || job.deadline - job.release < job.processing)
				return std::nullopt;  // the job alone cannot fit its window
			demand += job.processing;
		}

		Flow_network network;
		const int source = network.add_node();
		const int sink = network.add_node();
		std::vector<int> job_node(n);
		for (std::size_t j = 0; j < n; ++j)
			job_node[j] = network.add_node();
		std::vector<int> interval_node(intervals);
		for (std::size_t i = 0; i < intervals; ++i) {
			interval_node[i] = network.add_node();
			network.add_arc(interval_node[i], sink,
			                Time_point(problem.machines) * grid.interval_length(i));
		}

		std::vector<std::vector<std::pair<std::size_t, int>>> window_arcs(n);
		for (std::size_t j = 0; j < n; ++j) {
			network.add_arc(source, job_node[j], problem.jobs[j].processing);
			for (std::size_t i = 0; i < intervals; ++i)
				if (detail::job_fits_interval(problem.jobs[j], grid, i))
					window_arcs[j].emplace_back(
						i, network.add_arc(job_node[j], interval_node[i],
						                   grid.interval_length(i)));
		}

		if (network.run(source, sink) != demand)
			return std::nullopt;

		Flow_assignment assignment{grid, std::vector<std::vector<Time_point>>(
			n, std::vector<Time_point>(intervals))};
		for (std::size_t j = 0; j < n; ++j)
			for (const auto& [i, arc] : window_arcs[j])
				assignment.amount[j][i] = network.flow_on(arc);
		return assignment;
	}

	namespace detail {

		inline void validate_assignment(const Deadline_problem& problem,
		                                const Flow_assignment& assignment) {
			const std::size_t n = problem.jobs.size();
			const std::size_t intervals = assignment.grid.interval_count();
			if (assignment.amount.size() != n)
				throw std::invalid_argument("assignment does not cover every job");
			for (std::size_t j = 0; j < n; ++j) {
				if (assignment.amount[j].size() != intervals)
					throw std::invalid_argument("assignment does not cover every interval");
				Time_point sum;
				for (std::size_t i = 0; i < intervals; ++i) {
					const Time_point& amount = assignment.amount[j][i];
					if (amount == Time_point())
						continue;
					if (amount > assignment.grid.interval_length(i))
						throw std::invalid_argument("job " + problem.jobs[j].id
							+ " exceeds the length of interval " + std::to_string(i));
					if (!job_fits_interval(problem.jobs[j], assignment.grid, i))
						throw std::invalid_argument("job " + problem.jobs[j].id
							+ " assigned outside its [release, deadline] window");
					sum += amount;
				}
				if (sum != problem.jobs[j].processing)
					throw std::invalid_argument("job " + problem.jobs[j].id
						+ " assigned " + sum.to_string() + ", processing time is "
						+ problem.jobs[j].processing.to_string());
			}
			for (std::size_t i = 0; i < intervals; ++i) {
				Time_point load;
				for (std::size_t j = 0; j < n; ++j)
					load += assignment.amount[j][i];
				if (load > Time_point(problem.machines) * assignment.grid.interval_length(i))
					throw std::invalid_argument("interval " + std::to_string(i)
						+ " is loaded beyond machine capacity");
			}
		}

	}

	/**
	 * Turns a feasible flow assignment into an explicit schedule with
	 * McNaughton's wrap-around rule applied per interval: job amounts are
	 * laid end to end across the m machine timelines of the interval and
	 * split at machine boundaries. No amount exceeds the interval length,
	 * so a wrapped job never overlaps itself.
	 */
	inline Schedule build_schedule_from_flow(const Deadline_problem& problem,
	                                         const Flow_assignment& assignment) {
		detail::validate_assignment(problem, assignment);

		std::vector<Piece> pieces;
		for (std::size_t i = 0; i < assignment.grid.interval_count(); ++i) {
			const Time_point start = assignment.grid.interval_start(i);
			const Time_point length = assignment.grid.interval_length(i);
			int machine = 0;
			Time_point offset;
			for (std::size_t j = 0; j < problem.jobs.size(); ++j) {
				Time_point amount = assignment.amount[j][i];
				if (amount == Time_point())
					continue;
				Time_point room = length - offset;
				if (amount > room) {
					// split at the machine boundary and wrap
					pieces.push_back({problem.jobs[j].id, machine,
					                  start + offset, start + length});
					++machine;
					pieces.push_back({problem.jobs[j].id, machine,
					                  start, start + (amount - room)});
					offset = amount - room;
				} else {
					pieces.push_back({problem.jobs[j].id, machine,
					                  start + offset, start + offset + amount});
					offset += amount;
				}
				if (offset == length) {
					++machine;
					offset = Time_point();
				}
			}
		}
		return merge_touching_pieces(Schedule(std::move(pieces)));
	}

	// One call from feasibility to an explicit deadline-respecting schedule.
	inline std::optional<Schedule> schedule_with_deadlines(const Deadline_problem& problem) {
		auto assignment = feasible_with_deadlines(problem);
		if (!assignment)
			return std::nullopt;
		return build_schedule_from_flow(problem, *assignment);
	}

}

#endif
