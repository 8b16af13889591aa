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

#include "chorealloc/chore_set.hpp"

#include <string>

#include "chorealloc/errors.hpp"

namespace chorealloc {

ChoreSet MakeChoreSet(std::size_t num_chores,
                      std::initializer_list<std::size_t> members) {
  return MakeChoreSet(num_chores, std::vector<std::size_t>(members));
}

ChoreSet MakeChoreSet(std::size_t num_chores,
                      const std::vector<std::size_t>& members) {
  ChoreSet set(num_chores);
  for (std::size_t chore : members) {
    if (chore >= num_chores) {
      Fail(ErrorKind::kDomain, "chore index " + std::to_string(chore) +
                                   " outside a ground set of " +
                                   std::to_string(num_chores));
    }
    set.set(chore);
  }
  return set;
}

std::vector<std::size_t> Members(const ChoreSet& set) {
  std::vector<std::size_t> out;
  out.reserve(set.count());
  for (std::size_t k = set.find_first(); k != ChoreSet::npos;
       k = set.find_next(k)) {
    out.push_back(k);
  }
  return out;
}

}  // namespace chorealloc
