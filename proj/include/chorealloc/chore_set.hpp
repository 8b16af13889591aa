// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHOREALLOC_CHORE_SET_HPP_
#define CHOREALLOC_CHORE_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace chorealloc {

// Chores are dense indices 0..m-1; a set of chores is a bitset of size m.
using ChoreSet = boost::dynamic_bitset<std::uint64_t>;

ChoreSet MakeChoreSet(std::size_t num_chores,
                      std::initializer_list<std::size_t> members);
ChoreSet MakeChoreSet(std::size_t num_chores,
                      const std::vector<std::size_t>& members);

// Members in ascending index order.
std::vector<std::size_t> Members(const ChoreSet& set);

inline ChoreSet With(ChoreSet set, std::size_t chore) {
  set.set(chore);
  return set;
}

inline ChoreSet Without(ChoreSet set, std::size_t chore) {
  set.reset(chore);
  return set;
}

}  // namespace chorealloc

#endif  // CHOREALLOC_CHORE_SET_HPP_
