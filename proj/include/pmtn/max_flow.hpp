#ifndef PMTN_MAX_FLOW_HPP
#define PMTN_MAX_FLOW_HPP

#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "pmtn/time.hpp"

namespace pmtn {

	// Dinic's algorithm over 64-bit integral capacities. Node and arc order
	// is insertion order, so results are deterministic.
	class Integer_max_flow {
	public:
		explicit Integer_max_flow(int nodes = 0) : head_(nodes) {}

		int add_node() {
			head_.emplace_back();
			return static_cast<int>(head_.size()) - 1;
		}

		int node_count() const { return static_cast<int>(head_.size()); }

		// returns an arc id usable with flow_on() after run()
		int add_arc(int from, int to, long long capacity) {
			if (capacity < 0)
				throw std::invalid_argument("arc capacity must be non-negative");
			int id = static_cast<int>(arcs_.size());
			head_[static_cast<std::size_t>(from)].push_back(id);
			arcs_.push_back({to, capacity});
			head_[static_cast<std::size_t>(to)].push_back(id + 1);
			arcs_.push_back({from, 0});
			return id;
		}

		long long run(int source, int sink) {
			long long total = 0;
			while (build_levels(source, sink)) {
				iter_.assign(head_.size(), 0);
				long long pushed;
				while ((pushed = augment(source, sink,
				                         std::numeric_limits<long long>::max())) > 0)
					total += pushed;
			}
			return total;
		}

		long long flow_on(int arc_id) const {
			// flow equals the residual capacity accumulated on the reverse arc
			return arcs_[static_cast<std::size_t>(arc_id) + 1].residual;
		}

	private:
		struct Arc {
			int to;
			long long residual;
		};

		std::vector<std::vector<int>> head_;
		std::vector<Arc> arcs_;
		std::vector<int> level_;
		std::vector<std::size_t> iter_;

		bool build_levels(int source, int sink) {
			level_.assign(head_.size(), -1);
			std::queue<int> queue;
			level_[static_cast<std::size_t>(source)] = 0;
			queue.push(source);
			while (!queue.empty()) {
				int v = queue.front();
				queue.pop();
				for (int id : head_[static_cast<std::size_t>(v)]) {
					const Arc& arc = arcs_[static_cast<std::size_t>(id)];
					if (arc.residual > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
						level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
						queue.push(arc.to);
					}
				}
			}
			return level_[static_cast<std::size_t>(sink)] >= 0;
		}

		long long augment(int v, int sink, long long limit) {
			if (v == sink)
				return limit;
			for (std::size_t& i = iter_[static_cast<std::size_t>(v)];
			     i < head_[static_cast<std::size_t>(v)].size(); ++i) {
				int id = head_[static_cast<std::size_t>(v)][i];
				Arc& arc = arcs_[static_cast<std::size_t>(id)];
				if (arc.residual <= 0
				    || level_[static_cast<std::size_t>(arc.to)]
				       != level_[static_cast<std::size_t>(v)] + 1)
					continue;
				long long pushed = augment(arc.to, sink, std::min(limit, arc.residual));
				if (pushed > 0) {
					arc.residual -= pushed;
					arcs_[static_cast<std::size_t>(id ^ 1)].residual += pushed;
					return pushed;
				}
			}
			return 0;
		}
	};

	/**
	 * Max-flow over exact rational capacities. Capacities are scaled by the
	 * least common multiple of their denominators, solved integrally, and
	 * scaled back, so the result is exact and the computation terminates.
	 */
	class Flow_network {
	public:
		int add_node() {
			++nodes_;
			return nodes_ - 1;
		}

		int add_arc(int from, int to, const Time_point& capacity) {
			arcs_.push_back({from, to, capacity});
			return static_cast<int>(arcs_.size()) - 1;
		}

		// exact max-flow value; per-arc flows retrievable via flow_on()
		Time_point run(int source, int sink) {
			long long scale = 1;
			for (const Arc_spec& arc : arcs_) {
				long long den = arc.capacity.denominator();
				long long g = std::gcd(scale, den);
				detail::wide_int lcm = detail::wide_int(scale) / g * den;
				scale = detail::narrow(lcm);
			}

			Integer_max_flow network(nodes_);
			std::vector<int> arc_ids;
			arc_ids.reserve(arcs_.size());
			for (const Arc_spec& arc : arcs_) {
				detail::wide_int scaled = detail::wide_int(arc.capacity.numerator())
				                        * (scale / arc.capacity.denominator());
				arc_ids.push_back(network.add_arc(arc.from, arc.to, detail::narrow(scaled)));
			}

			long long value = network.run(source, sink);
			flows_.clear();
			flows_.reserve(arcs_.size());
			for (int id : arc_ids)
				flows_.emplace_back(network.flow_on(id), scale);
			return Time_point(value, scale);
		}

		const Time_point& flow_on(int arc_id) const {
			return flows_.at(static_cast<std::size_t>(arc_id));
		}

	private:
		struct Arc_spec {
			int from;
			int to;
			Time_point capacity;
		};

		int nodes_ = 0;
		std::vector<Arc_spec> arcs_;
		std::vector<Time_point> flows_;
	};

}

#endif
