#ifndef PMTN_IO_HPP
#define PMTN_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pmtn/audit.hpp"
#include "pmtn/jobs.hpp"
#include "pmtn/reduction.hpp"
#include "pmtn/schedule.hpp"

namespace pmtn {

	using ordered_json = nlohmann::ordered_json;

	// Instance and schedule files are JSON with every time quantity written
	// as an exact rational string ("110", "331/3"); no floating point ever
	// touches a file, so verification stays exact end to end.

	class Parse_error : public std::runtime_error {
	public:
		Parse_error(const std::string& message, int line = 0, int column = 0)
			: std::runtime_error(message), line_(line), column_(column) {}

		int line() const { return line_; }      // 1-based, 0 when unknown
		int column() const { return column_; }

	private:
		int line_;
		int column_;
	};

	struct Instance_document {
		Scheduling_instance instance;
		std::optional<Reduction_meta> reduction;

		friend bool operator==(const Instance_document&, const Instance_document&) = default;
	};

	struct Schedule_document {
		std::optional<Instance_document> instance;  // optional inline instance
		Schedule schedule;

		friend bool operator==(const Schedule_document&, const Schedule_document&) = default;
	};

	namespace io_detail {

		inline std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
			int line = 1, column = 1;
			for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
				if (text[i] == '\n') {
					++line;
					column = 1;
				} else {
					++column;
				}
			}
			return {line, column};
		}

		inline ordered_json parse_json(const std::string& text) {
			try {
				return ordered_json::parse(text);
			} catch (const nlohmann::json::parse_error& e) {
				auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
				throw Parse_error(std::string("JSON syntax error: ") + e.what(),
				                  line, column);
			}
		}

		inline const ordered_json& require(const ordered_json& object,
		                                   const std::string& key,
		                                   const std::string& where) {
			if (!object.is_object() || !object.contains(key))
				throw Parse_error(where + ": missing required field \"" + key + "\"");
			return object.at(key);
		}

		inline Time_point time_from_json(const ordered_json& value, const std::string& where) {
			try {
				if (value.is_string())
					return Time_point::parse(value.get<std::string>());
				if (value.is_number_integer())
					return Time_point(value.get<long long>());
			} catch (const std::exception& e) {
				throw Parse_error(where + ": " + e.what());
			}
			throw Parse_error(where + ": expected an integer or a \"num/den\" string");
		}

		inline long long int_from_json(const ordered_json& value, const std::string& where) {
			if (!value.is_number_integer())
				throw Parse_error(where + ": expected an integer");
			return value.get<long long>();
		}

		inline Job_kind kind_from_json(const ordered_json& job, const std::string& where) {
			if (!job.contains("kind"))
				return Job_kind::generic();
			const std::string tag = require(job, "kind", where).get<std::string>();
			if (tag == "a")
				return Job_kind::a(static_cast<int>(int_from_json(
					require(job, "index", where), where + ".index")));
			if (tag == "ba")
				return Job_kind::ba(
					static_cast<int>(int_from_json(require(job, "index", where),
					                               where + ".index")),
					static_cast<int>(int_from_json(require(job, "copy", where),
					                               where + ".copy")));
			if (tag == "long")
				return Job_kind::long_job();
			if (tag == "generic")
				return Job_kind::generic();
			throw Parse_error(where + ": unknown job kind \"" + tag + "\"");
		}

		inline ordered_json job_to_json(const Job& job) {
			ordered_json out;
			out["id"] = job.id();
			switch (job.kind().cls()) {
			case Job_class::a_job:
				out["kind"] = "a";
				out["index"] = job.kind().index();
				break;
			case Job_class::ba_job:
				out["kind"] = "ba";
				out["index"] = job.kind().index();
				out["copy"] = job.kind().copy();
				break;
			case Job_class::long_job:
				out["kind"] = "long";
				break;
			case Job_class::generic:
				out["kind"] = "generic";
				break;
			}
			out["processing"] = job.processing().to_string();
			out["due"] = job.due().to_string();
			out["release"] = job.release().to_string();
			return out;
		}

		inline ordered_json instance_to_json(const Instance_document& document) {
			ordered_json out;
			out["machines"] = document.instance.machines();
			out["jobs"] = ordered_json::array();
			for (const Job& job : document.instance.jobs())
				out["jobs"].push_back(job_to_json(job));
			if (document.reduction) {
				ordered_json meta;
				meta["k"] = document.reduction->k;
				meta["b"] = document.reduction->b;
				meta["L"] = document.reduction->L.to_string();
				meta["threshold"] = document.reduction->threshold.to_string();
				out["reduction"] = std::move(meta);
			}
			return out;
		}

		inline Instance_document instance_from_json(const ordered_json& in,
		                                            const std::string& where) {
			const long long machines =
				int_from_json(require(in, "machines", where), where + ".machines");
			const ordered_json& jobs_json = require(in, "jobs", where);
			if (!jobs_json.is_array())
				throw Parse_error(where + ".jobs: expected an array");

			std::vector<Job> jobs;
			jobs.reserve(jobs_json.size());
			for (std::size_t i = 0; i < jobs_json.size(); ++i) {
				const std::string job_where = where + ".jobs[" + std::to_string(i) + "]";
				const ordered_json& job = jobs_json.at(i);
				const std::string id =
					require(job, "id", job_where).get<std::string>();
				Time_point release;
				if (job.contains("release"))
					release = time_from_json(job.at("release"), job_where + ".release");
				try {
					jobs.emplace_back(id, kind_from_json(job, job_where),
						time_from_json(require(job, "processing", job_where),
						               job_where + ".processing"),
						time_from_json(require(job, "due", job_where),
						               job_where + ".due"),
						release);
				} catch (const std::invalid_argument& e) {
					throw Parse_error(job_where + ": " + e.what());
				}
			}

			std::optional<Reduction_meta> reduction;
			if (in.contains("reduction")) {
				const ordered_json& meta = in.at("reduction");
				const std::string meta_where = where + ".reduction";
				reduction = Reduction_meta{
					static_cast<int>(int_from_json(require(meta, "k", meta_where),
					                               meta_where + ".k")),
					int_from_json(require(meta, "b", meta_where), meta_where + ".b"),
					time_from_json(require(meta, "L", meta_where), meta_where + ".L"),
					time_from_json(require(meta, "threshold", meta_where),
					               meta_where + ".threshold")};
			}

			try {
				return {Scheduling_instance(static_cast<int>(machines), std::move(jobs)),
				        std::move(reduction)};
			} catch (const std::invalid_argument& e) {
				throw Parse_error(where + ": " + e.what());
			}
		}

	}

	inline std::string serialize_instance(const Instance_document& document) {
		return io_detail::instance_to_json(document).dump(2) + "\n";
	}

	inline Instance_document parse_instance(const std::string& text) {
		return io_detail::instance_from_json(io_detail::parse_json(text), "instance");
	}

	inline std::string serialize_schedule(const Schedule_document& document) {
		ordered_json out;
		if (document.instance)
			out["instance"] = io_detail::instance_to_json(*document.instance);
		out["pieces"] = ordered_json::array();
		for (const Piece& piece : document.schedule.pieces()) {
			ordered_json p;
			p["job"] = piece.job_id;
			p["machine"] = piece.machine;
			p["start"] = piece.start.to_string();
			p["end"] = piece.end.to_string();
			out["pieces"].push_back(std::move(p));
		}
		return out.dump(2) + "\n";
	}

	inline Schedule_document parse_schedule(const std::string& text) {
		const ordered_json in = io_detail::parse_json(text);
		Schedule_document document;
		if (in.contains("instance"))
			document.instance =
				io_detail::instance_from_json(in.at("instance"), "schedule.instance");

		const ordered_json& pieces_json =
			io_detail::require(in, "pieces", "schedule");
		if (!pieces_json.is_array())
			throw Parse_error("schedule.pieces: expected an array");
		std::vector<Piece> pieces;
		pieces.reserve(pieces_json.size());
		for (std::size_t i = 0; i < pieces_json.size(); ++i) {
			const std::string where = "schedule.pieces[" + std::to_string(i) + "]";
			const ordered_json& p = pieces_json.at(i);
			pieces.push_back({
				io_detail::require(p, "job", where).get<std::string>(),
				static_cast<int>(io_detail::int_from_json(
					io_detail::require(p, "machine", where), where + ".machine")),
				io_detail::time_from_json(io_detail::require(p, "start", where),
				                          where + ".start"),
				io_detail::time_from_json(io_detail::require(p, "end", where),
				                          where + ".end")});
		}
		document.schedule = Schedule(std::move(pieces));
		return document;
	}

	// structured (machine-readable) report forms used by the CLI

	inline ordered_json to_json(const Verification_verdict& verdict) {
		ordered_json out;
		out["valid"] = verdict.valid;
		out["violations"] = ordered_json::array();
		for (const Violation& v : verdict.violations) {
			ordered_json entry;
			entry["kind"] = to_string(v.kind);
			entry["job"] = v.job_id;
			entry["message"] = v.message;
			out["violations"].push_back(std::move(entry));
		}
		return out;
	}

	inline ordered_json to_json(const Schedule_report& report) {
		ordered_json out;
		out["total_tardiness"] = report.total_tardiness().to_string();
		out["jobs"] = ordered_json::array();
		for (const Job_outcome& outcome : report.outcomes()) {
			ordered_json entry;
			entry["job"] = outcome.job_id;
			entry["completion"] = outcome.completion.to_string();
			entry["tardiness"] = outcome.tardiness.to_string();
			out["jobs"].push_back(std::move(entry));
		}
		out["late"] = ordered_json::array();
		for (const Job_outcome& outcome : report.late_jobs()) {
			ordered_json entry;
			entry["job"] = outcome.job_id;
			entry["tardiness"] = outcome.tardiness.to_string();
			out["late"].push_back(std::move(entry));
		}
		return out;
	}

	inline ordered_json to_json(const Extraction_result& extraction) {
		ordered_json out;
		out["late_copies"] = ordered_json::array();
		for (const Late_copy& copy : extraction.late_copies) {
			ordered_json entry;
			entry["index"] = copy.index;
			entry["copy"] = copy.copy;
			out["late_copies"].push_back(std::move(entry));
		}
		out["index_set"] = extraction.index_set;
		out["sum_selected"] = extraction.sum_selected;
		out["solves_partition"] = extraction.solves_partition;
		return out;
	}

	inline ordered_json to_json(const Claim_verdict& verdict) {
		ordered_json out;
		out["verdict"] = to_string(verdict.kind);
		out["total_tardiness"] = verdict.total_tardiness.to_string();
		out["threshold"] = verdict.threshold.to_string();
		out["b"] = verdict.b;
		out["extraction"] = to_json(verdict.extraction);
		return out;
	}

	inline ordered_json to_json(const Audit_report& report) {
		ordered_json out;
		out["partition_solvable"] = report.partition_solvable;
		if (report.partition_witness)
			out["partition_witness"] = *report.partition_witness;
		out["candidates_evaluated"] = report.candidates_evaluated;
		out["infeasible_candidates"] = report.infeasible_candidates;
		out["budget_exhausted"] = report.budget_exhausted;
		out["refutations"] = report.refutations();
		out["evidence"] = ordered_json::array();
		for (const Audit_entry& entry : report.evidence) {
			ordered_json item;
			item["label"] = entry.label;
			item["claim"] = to_json(entry.verdict);
			out["evidence"].push_back(std::move(item));
		}
		return out;
	}

}

#endif
