#ifndef PMTN_REDUCTION_HPP
#define PMTN_REDUCTION_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtn/jobs.hpp"
#include "pmtn/schedule.hpp"
#include "pmtn/time.hpp"

namespace pmtn {

	// Partition input: positive integers a_1..a_k summing to 2b.
	class Partition_instance {
	public:
		Partition_instance(std::vector<long long> a, long long b)
			: a_(std::move(a)), b_(b) {
			if (a_.empty())
				throw std::invalid_argument("partition instance needs at least one element");
			if (b_ < 1)
				throw std::invalid_argument("partition target b must be positive");
			long long sum = 0;
			for (long long v : a_) {
				if (v < 1)
					throw std::invalid_argument("partition elements must be positive");
				sum += v;
			}
			if (sum != 2 * b_)
				throw std::invalid_argument("partition elements must sum to 2b ("
					+ std::to_string(sum) + " != " + std::to_string(2 * b_) + ")");
		}

		int k() const { return static_cast<int>(a_.size()); }
		long long b() const { return b_; }
		const std::vector<long long>& elements() const { return a_; }

		// 1-based, matching the job naming a1..ak
		long long element(int index) const { return a_.at(index - 1); }

	private:
		std::vector<long long> a_;
		long long b_;
	};

	struct Reduction_meta {
		int k;
		long long b;
		Time_point L;          // (4kb^3 + 2b) / k, not an integer unless k | 2b
		Time_point threshold;  // b^3 + b

		friend bool operator==(const Reduction_meta&, const Reduction_meta&) = default;
	};

	namespace reduction_ids {

		inline std::string a_job(int index) { return "a" + std::to_string(index); }
		inline std::string ba_job(int index, int copy) {
			return "ba" + std::to_string(index) + "#" + std::to_string(copy);
		}
		inline const char* long_job() { return "long"; }

	}

	/**
	 * Builds the Partition-based scheduling instance on k machines:
	 * k a-jobs (p = a_i, d = L), 2k copies of each ba-job
	 * (p = b^2 a_i, d = L - a_i), and one long job (p = d = b^3).
	 * 2k^2 + k + 1 jobs in total, all released at time 0.
	 */
	inline std::pair<Scheduling_instance, Reduction_meta>
	build_kw10_instance(const Partition_instance& p) {
		const int k = p.k();
		const long long b = p.b();
		const Time_point b3 = Time_point(b) * Time_point(b) * Time_point(b);
		const Time_point L = (Time_point(4) * k * b3 + Time_point(2 * b)) / Time_point(k);
		const Time_point threshold = b3 + Time_point(b);

		std::vector<Job> jobs;
		jobs.reserve(static_cast<std::size_t>(2 * k) * k + k + 1);
		for (int i = 1; i <= k; ++i)
			jobs.emplace_back(reduction_ids::a_job(i), Job_kind::a(i),
			                  Time_point(p.element(i)), L);
		for (int i = 1; i <= k; ++i) {
			const Time_point processing = Time_point(b) * b * p.element(i);
			const Time_point due = L - Time_point(p.element(i));
			for (int copy = 1; copy <= 2 * k; ++copy)
				jobs.emplace_back(reduction_ids::ba_job(i, copy),
				                  Job_kind::ba(i, copy), processing, due);
		}
		jobs.emplace_back(reduction_ids::long_job(), Job_kind::long_job(), b3, b3);

		return {Scheduling_instance(k, std::move(jobs)),
		        Reduction_meta{k, b, L, threshold}};
	}

	struct Late_copy {
		int index;
		int copy;

		friend auto operator<=>(const Late_copy&, const Late_copy&) = default;
	};

	// The candidate Partition solution read off a schedule: ba-copies
	// completing strictly after L, their distinct indices, and the selected
	// sum. The multiset of late copies is kept because several late copies
	// of one index is exactly the failure mode worth diagnosing.
	struct Extraction_result {
		std::vector<Late_copy> late_copies;  // sorted by (index, copy)
		std::vector<int> index_set;          // sorted distinct indices
		long long sum_selected;
		bool solves_partition;
	};

	namespace detail {

		// a_i values recovered from the instance's a-jobs; throws when the
		// instance does not carry the reduction structure
		inline std::vector<long long> a_values(const Scheduling_instance& instance,
		                                       const Reduction_meta& meta) {
			std::vector<long long> a(static_cast<std::size_t>(meta.k), -1);
			for (const Job& job : instance.jobs()) {
				if (job.kind().cls() != Job_class::a_job)
					continue;
				int index = job.kind().index();
				if (index < 1 || index > meta.k || !job.processing().is_integer())
					throw std::invalid_argument("instance is not a valid reduction instance: bad a-job "
						+ job.id());
				a[static_cast<std::size_t>(index - 1)] = job.processing().floor();
			}
			for (long long v : a)
				if (v < 0)
					throw std::invalid_argument(
						"instance lacks reduction metadata: missing a-jobs");
			return a;
		}

	}

	/**
	 * Applies the claimed schedule-to-Partition extraction rule: the ba-jobs
	 * completed strictly after time point L form the candidate index set.
	 * A job finishing exactly at L is on time for a due date of L, so the
	 * strict reading matches the a-job semantics. Requires a Valid schedule.
	 */
	inline Extraction_result extract_partition_candidate(const Scheduling_instance& instance,
	                                                     const Reduction_meta& meta,
	                                                     const Schedule& schedule) {
		const std::vector<long long> a = detail::a_values(instance, meta);
		const Schedule_report rep = report(instance, schedule);

		Extraction_result result;
		for (const Job& job : instance.jobs()) {
			if (job.kind().cls() != Job_class::ba_job)
				continue;
			if (rep.completion_of(job.id()) > meta.L)
				result.late_copies.push_back({job.kind().index(), job.kind().copy()});
		}
		std::sort(result.late_copies.begin(), result.late_copies.end());

		std::set<int> indices;
		for (const Late_copy& c : result.late_copies)
			indices.insert(c.index);
		result.index_set.assign(indices.begin(), indices.end());

		result.sum_selected = 0;
		for (int i : result.index_set)
			result.sum_selected += a.at(static_cast<std::size_t>(i - 1));
		result.solves_partition = result.sum_selected == meta.b;
		return result;
	}

	enum class Claim_kind {
		threshold_not_met,  // total tardiness above b^3 + b, claim says nothing
		claim_holds,        // threshold met and the extraction solves Partition
		claim_refuted       // threshold met but the extraction fails
	};

	inline const char* to_string(Claim_kind kind) {
		switch (kind) {
		case Claim_kind::threshold_not_met: return "ThresholdNotMet";
		case Claim_kind::claim_holds:       return "ClaimHolds";
		case Claim_kind::claim_refuted:     return "ClaimRefuted";
		}
		return "?";
	}

	struct Claim_verdict {
		Claim_kind kind;
		Time_point total_tardiness;
		Time_point threshold;
		long long b;
		Extraction_result extraction;  // evidence, meaningful for all kinds
	};

	// Tests the reduction's sufficiency claim on one concrete schedule:
	// if the schedule meets the tardiness threshold, the extracted index set
	// must solve Partition.
	inline Claim_verdict check_reduction_claim(const Scheduling_instance& instance,
	                                           const Reduction_meta& meta,
	                                           const Schedule& schedule) {
		Extraction_result extraction = extract_partition_candidate(instance, meta, schedule);
		const Time_point total = report(instance, schedule).total_tardiness();

		Claim_kind kind;
		if (total > meta.threshold)
			kind = Claim_kind::threshold_not_met;
		else if (extraction.solves_partition)
			kind = Claim_kind::claim_holds;
		else
			kind = Claim_kind::claim_refuted;
		return {kind, total, meta.threshold, meta.b, std::move(extraction)};
	}

}

#endif
