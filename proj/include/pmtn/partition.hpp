#ifndef PMTN_PARTITION_HPP
#define PMTN_PARTITION_HPP

#include <optional>
#include <vector>

#include "pmtn/reduction.hpp"

namespace pmtn {

	/**
	 * Subset-sum dynamic program over sums 0..b. Returns the
	 * lexicographically smallest witness index set (1-based, sorted), or
	 * nullopt when no subset of the a_i sums to b.
	 */
	inline std::optional<std::vector<int>> solve_partition(const Partition_instance& p) {
		const int k = p.k();
		const long long b = p.b();

		// reachable[i][t]: some subset of a_{i+1}..a_k sums to t
		std::vector<std::vector<bool>> reachable(
			static_cast<std::size_t>(k) + 1,
			std::vector<bool>(static_cast<std::size_t>(b) + 1, false));
		reachable[static_cast<std::size_t>(k)][0] = true;
		for (int i = k - 1; i >= 0; --i) {
			const long long a = p.element(i + 1);
			for (long long t = 0; t <= b; ++t) {
				bool ok = reachable[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(t)];
				if (!ok && a <= t)
					ok = reachable[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(t - a)];
				reachable[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] = ok;
			}
		}
		if (!reachable[0][static_cast<std::size_t>(b)])
			return std::nullopt;

		// greedy inclusion from the lowest index gives the lexicographic
		// minimum over sorted index sequences
		std::vector<int> subset;
		long long remaining = b;
		for (int i = 0; i < k && remaining > 0; ++i) {
			const long long a = p.element(i + 1);
			if (a <= remaining
			    && reachable[static_cast<std::size_t>(i) + 1]
			                [static_cast<std::size_t>(remaining - a)]) {
				subset.push_back(i + 1);
				remaining -= a;
			}
		}
		return subset;
	}

}

#endif
