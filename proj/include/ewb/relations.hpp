#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ewb/braid.hpp"

namespace ewb {

/// One instantiated relation lhs = rhs of the extended welded braid presentation.
struct RelationInstance {
  std::string family;
  BraidWord lhs;
  BraidWord rhs;
};

/// Names of the relation families, in presentation order.
const std::vector<std::string>& relation_families();

/// Every admissible index instantiation of every family on `strands` strands.
std::vector<RelationInstance> relation_instances(int strands);

struct RelationReport {
  std::size_t checked = 0;
  std::vector<RelationInstance> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks each instance on 1..max_strands strands in the automorphism representation.
RelationReport verify_relations(int max_strands);

/// Uniformly random letter valid on `strands` strands.
Letter random_letter(int strands, std::mt19937_64& rng);
BraidWord random_word(int strands, std::size_t length, std::mt19937_64& rng);

/// Inserts a random relator lhs * rhs^-1 (or its inverse) at a random position,
/// producing a word equal to b in the group.
BraidWord random_relator_insertion(const BraidWord& b, std::mt19937_64& rng);

}  // namespace ewb
