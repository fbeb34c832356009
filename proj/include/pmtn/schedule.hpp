#ifndef PMTN_SCHEDULE_HPP
#define PMTN_SCHEDULE_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmtn/jobs.hpp"
#include "pmtn/time.hpp"

namespace pmtn {

	// One preemption-free fragment of a job on one machine.
	struct Piece {
		std::string job_id;
		int machine;
		Time_point start;
		Time_point end;

		friend bool operator==(const Piece&, const Piece&) = default;
	};

	// A preemptive schedule is just a bag of pieces. Anything is
	// representable; verify_schedule decides validity, so invalid
	// user-supplied schedules can be loaded and diagnosed.
	class Schedule {
	public:
		Schedule() = default;
		explicit Schedule(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}

		const std::vector<Piece>& pieces() const { return pieces_; }
		std::size_t size() const { return pieces_.size(); }
		bool empty() const { return pieces_.empty(); }

		friend bool operator==(const Schedule&, const Schedule&) = default;

	private:
		std::vector<Piece> pieces_;
	};

	// Coalesces pieces of the same job that touch on the same machine.
	// Output is sorted by (machine, start); purely cosmetic, never required
	// for validity.
	inline Schedule merge_touching_pieces(const Schedule& schedule) {
		std::vector<Piece> pieces = schedule.pieces();
		std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
			if (a.machine != b.machine)
				return a.machine < b.machine;
			if (a.start != b.start)
				return a.start < b.start;
			return a.job_id < b.job_id;
		});
		std::vector<Piece> merged;
		for (const Piece& p : pieces) {
			if (!merged.empty() && merged.back().machine == p.machine
			    && merged.back().job_id == p.job_id && merged.back().end == p.start) {
				merged.back().end = p.end;
			} else {
				merged.push_back(p);
			}
		}
		return Schedule(std::move(merged));
	}

	enum class Violation_kind {
		machine_overlap,
		same_job_parallelism,
		wrong_total_processing,
		release_violation,
		unknown_job,
		negative_length_piece,
		machine_out_of_range
	};

	inline const char* to_string(Violation_kind kind) {
		switch (kind) {
		case Violation_kind::machine_overlap:        return "MachineOverlap";
		case Violation_kind::same_job_parallelism:   return "SameJobParallelism";
		case Violation_kind::wrong_total_processing: return "WrongTotalProcessing";
		case Violation_kind::release_violation:      return "ReleaseViolation";
		case Violation_kind::unknown_job:            return "UnknownJob";
		case Violation_kind::negative_length_piece:  return "NegativeLengthPiece";
		case Violation_kind::machine_out_of_range:   return "MachineOutOfRange";
		}
		return "?";
	}

	struct Violation {
		Violation_kind kind;
		std::string job_id;   // primary offending job, empty if not applicable
		std::string message;  // human-readable detail
	};

	struct Verification_verdict {
		bool valid;
		std::vector<Violation> violations;
	};

	namespace detail {

		inline std::string piece_text(const Piece& p) {
			return p.job_id + " [" + p.start.to_string() + "," + p.end.to_string()
			     + "] on machine " + std::to_string(p.machine);
		}

	}

	/**
	 * Checks every schedule invariant against the instance:
	 * known job ids, positive-length pieces, machine indices in range,
	 * no release-date violation, no two pieces overlapping on a machine,
	 * no job running on two machines at once, and per-job piece lengths
	 * summing exactly to the processing time. Touching pieces
	 * (end == next start) are legal; zero-length pieces are not.
	 *
	 * Violations are data, not failures: the verdict lists all of them.
	 */
	inline Verification_verdict verify_schedule(const Scheduling_instance& instance,
	                                            const Schedule& schedule) {
		std::vector<Violation> out;
		const auto& pieces = schedule.pieces();

		std::vector<bool> usable(pieces.size(), true);
		for (std::size_t i = 0; i < pieces.size(); ++i) {
			const Piece& p = pieces[i];
			const Job* job = instance.find(p.job_id);
			if (job == nullptr) {
				out.push_back({Violation_kind::unknown_job, p.job_id,
					"piece " + detail::piece_text(p) + " names a job not in the instance"});
				usable[i] = false;
			}
			if (!(p.start < p.end)) {
				out.push_back({Violation_kind::negative_length_piece, p.job_id,
					"piece " + detail::piece_text(p) + " has no positive length"});
				usable[i] = false;
			}
			if (p.machine < 0 || p.machine >= instance.machines()) {
				out.push_back({Violation_kind::machine_out_of_range, p.job_id,
					"piece " + detail::piece_text(p) + " uses a machine outside [0,"
					+ std::to_string(instance.machines()) + ")"});
				usable[i] = false;
			}
			if (job != nullptr && p.start < job->release()) {
				out.push_back({Violation_kind::release_violation, p.job_id,
					"piece " + detail::piece_text(p) + " starts before release "
					+ job->release().to_string()});
			}
		}

		auto report_overlaps = [&](std::vector<std::size_t>& group, Violation_kind kind) {
			std::sort(group.begin(), group.end(), [&](std::size_t a, std::size_t b) {
				if (pieces[a].start != pieces[b].start)
					return pieces[a].start < pieces[b].start;
				return a < b;
			});
			for (std::size_t j = 1; j < group.size(); ++j) {
				const Piece& prev = pieces[group[j - 1]];
				const Piece& cur = pieces[group[j]];
				if (cur.start < prev.end) {
					out.push_back({kind, prev.job_id,
						"pieces " + detail::piece_text(prev) + " and "
						+ detail::piece_text(cur) + " overlap"});
				}
			}
		};

		std::map<int, std::vector<std::size_t>> by_machine;
		for (std::size_t i = 0; i < pieces.size(); ++i)
			if (usable[i])
				by_machine[pieces[i].machine].push_back(i);
		for (auto& [machine, group] : by_machine)
			report_overlaps(group, Violation_kind::machine_overlap);

		std::map<std::string, std::vector<std::size_t>> by_job;
		for (std::size_t i = 0; i < pieces.size(); ++i)
			if (usable[i] && instance.find(pieces[i].job_id) != nullptr)
				by_job[pieces[i].job_id].push_back(i);
		for (auto& [job_id, group] : by_job)
			report_overlaps(group, Violation_kind::same_job_parallelism);

		for (const Job& job : instance.jobs()) {
			Time_point total;
			for (std::size_t i = 0; i < pieces.size(); ++i)
				if (usable[i] && pieces[i].job_id == job.id())
					total += pieces[i].end - pieces[i].start;
			if (total != job.processing()) {
				out.push_back({Violation_kind::wrong_total_processing, job.id(),
					"job " + job.id() + " has " + total.to_string()
					+ " scheduled, processing time is " + job.processing().to_string()});
			}
		}

		return {out.empty(), std::move(out)};
	}

	struct Job_outcome {
		std::string job_id;
		Time_point completion;
		Time_point tardiness;
	};

	// Per-job completion and tardiness figures for a verified schedule.
	// Outcomes follow instance job order, so reports are deterministic and
	// independent of the piece list order.
	class Schedule_report {
	public:
		Schedule_report(std::vector<Job_outcome> outcomes, Time_point total)
			: outcomes_(std::move(outcomes)), total_(total) {
			for (std::size_t i = 0; i < outcomes_.size(); ++i) {
				index_.emplace(outcomes_[i].job_id, i);
				if (outcomes_[i].tardiness > Time_point())
					late_.push_back(outcomes_[i]);
			}
		}

		const std::vector<Job_outcome>& outcomes() const { return outcomes_; }
		const std::vector<Job_outcome>& late_jobs() const { return late_; }
		const Time_point& total_tardiness() const { return total_; }

		const Time_point& completion_of(const std::string& job_id) const {
			return at(job_id).completion;
		}
		const Time_point& tardiness_of(const std::string& job_id) const {
			return at(job_id).tardiness;
		}

	private:
		const Job_outcome& at(const std::string& job_id) const {
			auto it = index_.find(job_id);
			if (it == index_.end())
				throw std::out_of_range("no such job in report: " + job_id);
			return outcomes_[it->second];
		}

		std::vector<Job_outcome> outcomes_;
		std::vector<Job_outcome> late_;
		Time_point total_;
		std::unordered_map<std::string, std::size_t> index_;
	};

	// C_j = latest piece end, T_j = max(0, C_j - d_j). Rejects schedules that
	// fail verification.
	inline Schedule_report report(const Scheduling_instance& instance,
	                              const Schedule& schedule) {
		Verification_verdict verdict = verify_schedule(instance, schedule);
		if (!verdict.valid) {
			std::string why = "cannot report on an invalid schedule:";
			for (const Violation& v : verdict.violations)
				why += "\n  " + std::string(to_string(v.kind)) + ": " + v.message;
			throw std::invalid_argument(why);
		}

		std::unordered_map<std::string, Time_point> completion;
		for (const Piece& p : schedule.pieces()) {
			auto [it, inserted] = completion.emplace(p.job_id, p.end);
			if (!inserted && it->second < p.end)
				it->second = p.end;
		}

		std::vector<Job_outcome> outcomes;
		Time_point total;
		outcomes.reserve(instance.jobs().size());
		for (const Job& job : instance.jobs()) {
			// valid schedules cover every job (processing > 0)
			Time_point c = completion.at(job.id());
			Time_point t = c > job.due() ? c - job.due() : Time_point();
			total += t;
			outcomes.push_back({job.id(), c, t});
		}
		return Schedule_report(std::move(outcomes), total);
	}

}

#endif
