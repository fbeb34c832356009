#ifndef PMTN_WITNESS_HPP
#define PMTN_WITNESS_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtn/deadline.hpp"
#include "pmtn/reduction.hpp"

namespace pmtn {

	// Raised when the on-time part of a witness construction is deadline
	// infeasible. That would contradict the easy direction of the reduction
	// (a Partition solution always yields a threshold-meeting schedule), so
	// it must never be absorbed silently.
	class Necessity_gap_error : public std::runtime_error {
	public:
		using std::runtime_error::runtime_error;
	};

	/**
	 * Recipe for the threshold-meeting schedule induced by a Partition
	 * solution I: copy #1 of ba_i runs [L, L + b^2 a_i] on its own machine
	 * for each i in I, and every other job is squeezed into [0, L] meeting
	 * its due date. The late copies then cost (b^2+1) a_i each, summing to
	 * exactly b^3 + b.
	 */
	struct Witness_plan {
		std::vector<int> subset;                // I, sorted ascending
		std::vector<std::string> late_job_ids;  // ba_i copy #1, one per i in I
		Deadline_problem on_time;               // everything else, due dates as deadlines
	};

	inline Witness_plan make_witness_plan(const Partition_instance& p,
	                                      const std::vector<int>& subset) {
		std::vector<int> sorted = subset;
		std::sort(sorted.begin(), sorted.end());
		if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
			throw std::invalid_argument("subset indices must be distinct");
		long long sum = 0;
		for (int i : sorted) {
			if (i < 1 || i > p.k())
				throw std::invalid_argument("subset index out of range: " + std::to_string(i));
			sum += p.element(i);
		}
		if (sum != p.b())
			throw std::invalid_argument("subset does not solve Partition: sum is "
				+ std::to_string(sum) + ", b is " + std::to_string(p.b()));

		auto [instance, meta] = build_kw10_instance(p);

		Witness_plan plan;
		plan.subset = std::move(sorted);
		for (int i : plan.subset)
			plan.late_job_ids.push_back(reduction_ids::ba_job(i, 1));

		plan.on_time.machines = meta.k;
		for (const Job& job : instance.jobs()) {
			if (std::find(plan.late_job_ids.begin(), plan.late_job_ids.end(), job.id())
			    != plan.late_job_ids.end())
				continue;
			plan.on_time.jobs.push_back({job.id(), job.processing(),
			                             job.release(), job.due()});
		}
		return plan;
	}

	inline Schedule build_witness_schedule(const Partition_instance& p,
	                                       const std::vector<int>& subset) {
		const Witness_plan plan = make_witness_plan(p, subset);
		auto [instance, meta] = build_kw10_instance(p);

		auto on_time = schedule_with_deadlines(plan.on_time);
		if (!on_time)
			throw Necessity_gap_error(
				"witness on-time sub-problem is deadline infeasible for I with sum b; "
				"this contradicts the necessity direction of the reduction");

		std::vector<Piece> pieces = on_time->pieces();
		const Time_point b2(p.b() * p.b());
		for (std::size_t slot = 0; slot < plan.subset.size(); ++slot) {
			const int i = plan.subset[slot];
			pieces.push_back({plan.late_job_ids[slot], static_cast<int>(slot),
			                  meta.L, meta.L + b2 * Time_point(p.element(i))});
		}
		return merge_touching_pieces(Schedule(std::move(pieces)));
	}

}

#endif
