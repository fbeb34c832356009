#ifndef PMTN_EDF_HPP
#define PMTN_EDF_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "pmtn/schedule.hpp"

namespace pmtn {

	/**
	 * Earliest-due-date-first dispatching: at every event point (release or
	 * completion) the at most m released unfinished jobs with the earliest
	 * due dates run until the next event. Ties break on instance order, a
	 * running job keeps its machine, so the output is deterministic. The
	 * total tardiness of the result is an upper bound on the optimum,
	 * nothing more.
	 */
	inline Schedule edf_heuristic(const Scheduling_instance& instance) {
		const int m = instance.machines();
		const auto& jobs = instance.jobs();
		const std::size_t n = jobs.size();

		std::vector<Time_point> remaining(n);
		for (std::size_t j = 0; j < n; ++j)
			remaining[j] = jobs[j].processing();
		std::vector<int> last_machine(n, -1);

		std::vector<Piece> pieces;
		Time_point now;
		if (n > 0) {
			now = jobs[0].release();
			for (const Job& job : jobs)
				now = std::min(now, job.release());
		}

		std::size_t unfinished = n;
		while (unfinished > 0) {
			std::vector<std::size_t> ready;
			std::optional<Time_point> next_release;
			for (std::size_t j = 0; j < n; ++j) {
				if (remaining[j] == Time_point())
					continue;
				if (jobs[j].release() <= now)
					ready.push_back(j);
				else if (!next_release || jobs[j].release() < *next_release)
					next_release = jobs[j].release();
			}
			if (ready.empty()) {
				now = *next_release;  // someone must still be coming
				continue;
			}

			std::stable_sort(ready.begin(), ready.end(),
			                 [&](std::size_t a, std::size_t b) {
				return jobs[a].due() < jobs[b].due();
			});
			if (ready.size() > static_cast<std::size_t>(m))
				ready.resize(static_cast<std::size_t>(m));

			// running jobs keep their machine, newcomers fill the gaps
			std::vector<bool> machine_taken(static_cast<std::size_t>(m), false);
			std::vector<int> machine_of(ready.size(), -1);
			for (std::size_t r = 0; r < ready.size(); ++r) {
				int prev = last_machine[ready[r]];
				if (prev >= 0 && !machine_taken[static_cast<std::size_t>(prev)]) {
					machine_of[r] = prev;
					machine_taken[static_cast<std::size_t>(prev)] = true;
				}
			}
			int free_machine = 0;
			for (std::size_t r = 0; r < ready.size(); ++r) {
				if (machine_of[r] >= 0)
					continue;
				while (machine_taken[static_cast<std::size_t>(free_machine)])
					++free_machine;
				machine_of[r] = free_machine;
				machine_taken[static_cast<std::size_t>(free_machine)] = true;
			}

			Time_point next = now + remaining[ready[0]];
			for (std::size_t r = 1; r < ready.size(); ++r)
				next = std::min(next, now + remaining[ready[r]]);
			if (next_release)
				next = std::min(next, *next_release);

			for (std::size_t r = 0; r < ready.size(); ++r) {
				const std::size_t j = ready[r];
				pieces.push_back({jobs[j].id(), machine_of[r], now, next});
				remaining[j] -= next - now;
				last_machine[j] = machine_of[r];
				if (remaining[j] == Time_point())
					--unfinished;
			}
			now = next;
		}
		return merge_touching_pieces(Schedule(std::move(pieces)));
	}

}

#endif
