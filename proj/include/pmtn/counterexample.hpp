#ifndef PMTN_COUNTEREXAMPLE_HPP
#define PMTN_COUNTEREXAMPLE_HPP

#include <stdexcept>
#include <unordered_map>

#include "pmtn/deadline.hpp"
#include "pmtn/reduction.hpp"

namespace pmtn {

	struct Counterexample {
		Scheduling_instance instance;
		Reduction_meta meta;
		Schedule schedule;
	};

	/**
	 * The 22-job, 3-machine instance built from a = (1, 2, 3), b = 3,
	 * together with a schedule that meets the tardiness threshold 30 while
	 * the extraction rule reads off I = {1}, which does not solve Partition.
	 *
	 * The schedule is forced through the deadline vector
	 *   long -> 27, ba3 -> 107, ba2 -> 108, ba1 copies 1-3 -> 109,
	 *   a-jobs -> 110, ba1 copies 4-6 -> 119.
	 * Total work is 357 = 3 * 119, so machines never idle in [0, 119]; only
	 * the deadline-119 copies may run after 110, so each of the three
	 * finishes exactly at 119, ten units late.
	 */
	inline Counterexample build_counterexample_schedule() {
		Partition_instance p({1, 2, 3}, 3);
		auto [instance, meta] = build_kw10_instance(p);

		std::unordered_map<std::string, Time_point> deadline;
		deadline[reduction_ids::long_job()] = Time_point(27);
		for (int copy = 1; copy <= 6; ++copy) {
			deadline[reduction_ids::ba_job(3, copy)] = Time_point(107);
			deadline[reduction_ids::ba_job(2, copy)] = Time_point(108);
			deadline[reduction_ids::ba_job(1, copy)] = Time_point(copy <= 3 ? 109 : 119);
		}
		for (int i = 1; i <= 3; ++i)
			deadline[reduction_ids::a_job(i)] = Time_point(110);

		Deadline_problem problem{meta.k, {}};
		for (const Job& job : instance.jobs())
			problem.jobs.push_back({job.id(), job.processing(), job.release(),
			                        deadline.at(job.id())});

		auto schedule = schedule_with_deadlines(problem);
		if (!schedule)
			throw std::logic_error(
				"counter-example deadline vector is infeasible; the derived layout "
				"guarantees feasibility, so this indicates an internal defect");

		return {std::move(instance), meta, std::move(*schedule)};
	}

}

#endif
