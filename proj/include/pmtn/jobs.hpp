#ifndef PMTN_JOBS_HPP
#define PMTN_JOBS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pmtn/time.hpp"

namespace pmtn {

	enum class Job_class { a_job, ba_job, long_job, generic };

	// Job classification used by the Partition reduction. a-jobs and ba-jobs
	// carry the 1-based Partition index; ba-jobs additionally carry a copy
	// number so equivalent copies stay distinguishable in reports.
	class Job_kind {
	public:
		static Job_kind a(int index) { return Job_kind(Job_class::a_job, index, 0); }
		static Job_kind ba(int index, int copy) { return Job_kind(Job_class::ba_job, index, copy); }
		static Job_kind long_job() { return Job_kind(Job_class::long_job, 0, 0); }
		static Job_kind generic() { return Job_kind(Job_class::generic, 0, 0); }

		Job_class cls() const { return cls_; }
		int index() const { return index_; }
		int copy() const { return copy_; }

		friend bool operator==(const Job_kind&, const Job_kind&) = default;

	private:
		Job_kind(Job_class cls, int index, int copy)
			: cls_(cls), index_(index), copy_(copy) {}

		Job_class cls_;
		int index_;
		int copy_;
	};

	// Immutable job: processing time, due date, release date (all exact).
	class Job {
	public:
		Job(std::string id, Job_kind kind, Time_point processing,
		    Time_point due, Time_point release = Time_point())
			: id_(std::move(id)), kind_(kind), processing_(processing),
			  due_(due), release_(release) {
			if (id_.empty())
				throw std::invalid_argument("job id must not be empty");
			if (!(processing_ > Time_point()))
				throw std::invalid_argument("job " + id_ + ": processing time must be positive");
		}

		const std::string& id() const { return id_; }
		const Job_kind& kind() const { return kind_; }
		const Time_point& processing() const { return processing_; }
		const Time_point& due() const { return due_; }
		const Time_point& release() const { return release_; }

		friend bool operator==(const Job& a, const Job& b) {
			return a.id_ == b.id_ && a.kind_ == b.kind_
			    && a.processing_ == b.processing_ && a.due_ == b.due_
			    && a.release_ == b.release_;
		}

	private:
		std::string id_;
		Job_kind kind_;
		Time_point processing_;
		Time_point due_;
		Time_point release_;
	};

	class Scheduling_instance {
	public:
		Scheduling_instance(int machines, std::vector<Job> jobs)
			: machines_(machines), jobs_(std::move(jobs)) {
			if (machines_ < 1)
				throw std::invalid_argument("machine count must be at least 1");
			for (std::size_t i = 0; i < jobs_.size(); ++i) {
				auto [it, inserted] = index_.emplace(jobs_[i].id(), i);
				if (!inserted)
					throw std::invalid_argument("duplicate job id: " + jobs_[i].id());
			}
		}

		int machines() const { return machines_; }
		const std::vector<Job>& jobs() const { return jobs_; }

		const Job* find(const std::string& id) const {
			auto it = index_.find(id);
			return it == index_.end() ? nullptr : &jobs_[it->second];
		}

		std::optional<std::size_t> index_of(const std::string& id) const {
			auto it = index_.find(id);
			if (it == index_.end())
				return std::nullopt;
			return it->second;
		}

		Time_point total_processing() const {
			Time_point sum;
			for (const Job& j : jobs_)
				sum += j.processing();
			return sum;
		}

		friend bool operator==(const Scheduling_instance& a, const Scheduling_instance& b) {
			return a.machines_ == b.machines_ && a.jobs_ == b.jobs_;
		}

	private:
		int machines_;
		std::vector<Job> jobs_;
		std::unordered_map<std::string, std::size_t> index_;
	};

}

#endif
