#ifndef PMTN_AUDIT_HPP
#define PMTN_AUDIT_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pmtn/edf.hpp"
#include "pmtn/exact.hpp"
#include "pmtn/partition.hpp"
#include "pmtn/witness.hpp"

namespace pmtn {

	struct Audit_entry {
		std::string label;
		Claim_verdict verdict;
	};

	// Best-effort evidence about the reduction on one Partition instance.
	// The underlying optimization problem has unknown complexity, so the
	// report never claims the threshold search was exhaustive.
	struct Audit_report {
		bool partition_solvable = false;
		std::optional<std::vector<int>> partition_witness;
		std::vector<Audit_entry> evidence;       // verdict per evaluated schedule
		long long candidates_evaluated = 0;
		long long infeasible_candidates = 0;
		bool budget_exhausted = false;

		long long refutations() const {
			long long count = 0;
			for (const Audit_entry& entry : evidence)
				if (entry.verdict.kind == Claim_kind::claim_refuted)
					++count;
			return count;
		}
	};

	/**
	 * Gathers candidate schedules for the reduction instance and runs the
	 * claim check on each: the witness construction when Partition is
	 * solvable, the family of counter-example patterns (several copies of a
	 * single index late, all sharing one late deadline), seeded random
	 * perturbations of those patterns, and the EDF heuristic. Every verdict
	 * is recorded; ClaimRefuted entries carry the extraction evidence.
	 * Each deadline-vector evaluation consumes one unit of node budget.
	 */
	inline Audit_report audit_reduction(const Partition_instance& p,
	                                    const Search_limits& limits,
	                                    unsigned long long seed = 0) {
		auto [instance, meta] = build_kw10_instance(p);
		const auto started = std::chrono::steady_clock::now();

		Audit_report report;
		auto witness_subset = solve_partition(p);
		report.partition_solvable = witness_subset.has_value();
		report.partition_witness = witness_subset;

		auto budget_left = [&]() {
			if (report.candidates_evaluated >= limits.node_budget)
				return false;
			const std::chrono::duration<double> elapsed =
				std::chrono::steady_clock::now() - started;
			return elapsed.count() <= limits.time_budget_seconds;
		};

		auto evaluate = [&](const std::string& label, const Schedule& schedule) {
			report.evidence.push_back(
				{label, check_reduction_claim(instance, meta, schedule)});
		};

		if (!budget_left()) {
			report.budget_exhausted = true;
			return report;
		}

		if (witness_subset) {
			++report.candidates_evaluated;
			std::string label = "witness I={";
			for (std::size_t i = 0; i < witness_subset->size(); ++i)
				label += (i ? "," : "") + std::to_string((*witness_subset)[i]);
			label += "}";
			evaluate(label, build_witness_schedule(p, *witness_subset));
		}

		// deadline-vector family around the counter-example pattern: the last
		// c copies of ba_i late, sharing the deadline L + c b^2 a_i / k
		auto try_pattern = [&](int i, int c, const Time_point& slack) -> bool {
			if (!budget_left()) {
				report.budget_exhausted = true;
				return false;
			}
			++report.candidates_evaluated;

			const Time_point late_work =
				Time_point(c) * Time_point(p.b()) * p.b() * p.element(i);
			const Time_point late_deadline =
				meta.L + late_work / Time_point(p.k()) + slack;
			Deadline_problem problem{meta.k, {}};
			for (const Job& job : instance.jobs()) {
				bool late = job.kind().cls() == Job_class::ba_job
				         && job.kind().index() == i
				         && job.kind().copy() > 2 * p.k() - c;
				problem.jobs.push_back({job.id(), job.processing(), job.release(),
				                        late ? late_deadline : job.due()});
			}
			auto schedule = schedule_with_deadlines(problem);
			if (!schedule) {
				++report.infeasible_candidates;
				return true;
			}
			evaluate("pattern i=" + std::to_string(i) + " late_copies="
			         + std::to_string(c) + (slack == Time_point() ? ""
			         : " slack=" + slack.to_string()), *schedule);
			return true;
		};

		for (int i = 1; i <= p.k() && !report.budget_exhausted; ++i)
			for (int c = 1; c <= 2 * p.k(); ++c)
				if (!try_pattern(i, c, Time_point()))
					break;

		if (!report.budget_exhausted) {
			if (budget_left()) {
				++report.candidates_evaluated;
				evaluate("edf", edf_heuristic(instance));
			} else {
				report.budget_exhausted = true;
			}
		}

		std::mt19937_64 rng(seed);
		std::uniform_int_distribution<int> pick_index(1, p.k());
		std::uniform_int_distribution<int> pick_count(1, 2 * p.k());
		std::uniform_int_distribution<long long> pick_slack(0, 2 * p.k());
		for (int extra = 0; extra < 8 && !report.budget_exhausted; ++extra)
			if (!try_pattern(pick_index(rng), pick_count(rng),
			                 Time_point(pick_slack(rng), p.k())))
				break;

		return report;
	}

}

#endif
