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

#ifndef SUBMOD_INSTANCE_IO_H_
#define SUBMOD_INSTANCE_IO_H_

#include <iosfwd>
#include <string>

#include "submod/matroid.h"
#include "submod/objectives.h"

namespace submod {

// Edge list: first line "n m", then m lines "u v w" with 0-based ids.
MaxCutInstance ReadEdgeList(std::istream& in);
MaxCutInstance ReadEdgeListFile(const std::string& path);
void WriteEdgeList(std::ostream& out, const MaxCutInstance& graph);
void WriteEdgeListFile(const std::string& path, const MaxCutInstance& graph);

// Gram matrix: CSV with n rows of n decimals.
GramInstance ReadGramCsv(std::istream& in);
GramInstance ReadGramCsvFile(const std::string& path);
// Feature matrix: CSV with n rows of p decimals; the Gram matrix is formed
// from pairwise inner products.
GramInstance ReadFeatureCsv(std::istream& in);
GramInstance ReadFeatureCsvFile(const std::string& path);

// Partition matroid over n elements:
//   line 1:          number of blocks B
//   next B lines:    "block_id capacity"
//   remaining lines: "element_id block_id", one per element 0..n-1
// Blank lines and lines starting with '#' are ignored.
PartitionMatroid ReadPartitionMatroid(std::istream& in, std::size_t n);
PartitionMatroid ReadPartitionMatroidFile(const std::string& path,
                                          std::size_t n);
void WritePartitionMatroid(std::ostream& out, const PartitionMatroid& m);

}  // namespace submod

#endif  // SUBMOD_INSTANCE_IO_H_
