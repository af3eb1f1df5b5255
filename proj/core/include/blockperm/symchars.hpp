#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockperm/permgrp.hpp"

namespace blockperm {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

/// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
std::string partition_string(const Partition& p);  // "5,1,1"
Partition parse_partition(std::string_view s);
Partition conjugate_partition(const Partition& p);
/// (n - i, 1^i)
Partition hook_partition(int n, int i);
int partition_size(const Partition& p);

/// Character value chi_lambda at the class of cycle type mu.
std::int64_t mn_value(const Partition& lambda, const Partition& mu);
/// Degree by the hook length formula.
std::int64_t hook_degree(const Partition& lambda);
/// |C_{S_n}(x)| for x of cycle type mu.
std::int64_t centralizer_order(const Partition& mu);
std::int64_t class_size(const Partition& mu);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> characters;  // rows
  std::vector<Partition> classes;     // columns
  std::vector<std::vector<std::int64_t>> values;
};
CharacterTable character_table(int n);

Partition p_core(const Partition& lambda, int p);
bool same_block(const Partition& a, const Partition& b, int p);

/// <Res_{C_p} chi_{(p-i,1^i)}, 1>, by the averaging formula.
std::int64_t sylow_multiplicity(int p, int i);
/// The same multiplicity by summing chi over an explicit C_p.
std::int64_t sylow_multiplicity_brute(int p, int i);
/// (binom(p-1, i) + (-1)^i) / p when integral; this variant omits the
/// factor p - 1 on the p-cycle term and is kept only for reporting.
std::optional<std::int64_t> sylow_multiplicity_unweighted(int p, int i);

/// <Ind_H^{S_n} 1, chi_lambda> for every lambda, H a subgroup of S_n
/// acting on n points.
std::map<Partition, std::int64_t> perm_character_multiplicities(
    int n, const PermGroup& h);

std::int64_t binomial(int n, int k);

}  // namespace blockperm
