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

#include "submod/instance_io.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "submod/errors.h"

namespace submod {
namespace {

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

// Next line that is neither blank nor a '#' comment.
bool NextLine(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

std::string Where(std::size_t line_no) {
  return "line " + std::to_string(line_no) + ": ";
}

std::vector<double> ParseCsvRow(const std::string& line, std::size_t line_no) {
  std::vector<double> row;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      row.push_back(std::stod(cell, &used));
      if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
        throw std::invalid_argument(cell);
      }
    } catch (const std::logic_error&) {
      throw InputError(Where(line_no) + "bad number '" + cell + "'");
    }
  }
  return row;
}

// Rows of equal width; returns the width.
std::size_t ReadCsv(std::istream& in, std::vector<double>& values,
                    std::size_t& rows) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  rows = 0;
  while (NextLine(in, line, line_no)) {
    std::vector<double> row = ParseCsvRow(line, line_no);
    if (rows == 0) width = row.size();
    if (row.size() != width) {
      throw InputError(Where(line_no) + "expected " + std::to_string(width) +
                       " columns, got " + std::to_string(row.size()));
    }
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows == 0) throw InputError("empty matrix file");
  return width;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

MaxCutInstance ReadEdgeList(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!NextLine(in, line, line_no)) throw InputError("empty edge list");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n >> m) || (header >> rest) || n < 0 || m < 0) {
      throw InputError(Where(line_no) + "expected header 'n m'");
    }
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!NextLine(in, line, line_no)) {
      throw InputError("edge list ends after " + std::to_string(i) + " of " +
                       std::to_string(m) + " edges");
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    double w = 0.0;
    std::string rest;
    if (!(row >> u >> v >> w) || (row >> rest) || u < 0 || v < 0) {
      throw InputError(Where(line_no) + "expected 'u v w'");
    }
    edges.push_back({static_cast<ElementId>(u), static_cast<ElementId>(v), w});
  }
  if (NextLine(in, line, line_no)) {
    throw InputError(Where(line_no) + "more edges than the header declares");
  }
  return MaxCutInstance(static_cast<std::size_t>(n), std::move(edges));
}

MaxCutInstance ReadEdgeListFile(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ReadEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const MaxCutInstance& graph) {
  out << graph.size() << ' ' << graph.edges().size() << '\n';
  for (const WeightedEdge& e : graph.edges()) {
    out << e.u << ' ' << e.v << ' ' << FormatDouble(e.w) << '\n';
  }
}

void WriteEdgeListFile(const std::string& path, const MaxCutInstance& graph) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  WriteEdgeList(out, graph);
  if (!out) throw InputError("write to " + path + " failed");
}

GramInstance ReadGramCsv(std::istream& in) {
  std::vector<double> values;
  std::size_t rows = 0;
  const std::size_t width = ReadCsv(in, values, rows);
  if (width != rows) {
    throw InputError("gram matrix is " + std::to_string(rows) + "x" +
                     std::to_string(width) + ", not square");
  }
  return GramInstance(rows, std::move(values));
}

GramInstance ReadGramCsvFile(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ReadGramCsv(in);
}

GramInstance ReadFeatureCsv(std::istream& in) {
  std::vector<double> values;
  std::size_t rows = 0;
  const std::size_t width = ReadCsv(in, values, rows);
  return GramInstance::FromFeatures(rows, width, values);
}

GramInstance ReadFeatureCsvFile(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ReadFeatureCsv(in);
}

PartitionMatroid ReadPartitionMatroid(std::istream& in, std::size_t n) {
  std::string line;
  std::size_t line_no = 0;
  auto read_pair = [&](long long& a, long long& b, const char* what) {
    if (!NextLine(in, line, line_no)) {
      throw InputError(std::string("partition file ends before ") + what);
    }
    std::istringstream row(line);
    std::string rest;
    if (!(row >> a >> b) || (row >> rest) || a < 0 || b < 0) {
      throw InputError(Where(line_no) + "expected two nonnegative integers");
    }
  };

  if (!NextLine(in, line, line_no)) throw InputError("empty partition file");
  long long blocks = -1;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> blocks) || (header >> rest) || blocks <= 0) {
      throw InputError(Where(line_no) + "expected the block count");
    }
  }
  std::vector<std::size_t> capacity(static_cast<std::size_t>(blocks), 0);
  std::vector<bool> seen_block(capacity.size(), false);
  for (long long i = 0; i < blocks; ++i) {
    long long id = 0;
    long long cap = 0;
    read_pair(id, cap, "all block capacities");
    if (id >= blocks || seen_block[static_cast<std::size_t>(id)]) {
      throw InputError(Where(line_no) + "bad or repeated block id");
    }
    seen_block[static_cast<std::size_t>(id)] = true;
    capacity[static_cast<std::size_t>(id)] = static_cast<std::size_t>(cap);
  }
  std::vector<std::size_t> block_of(n, 0);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    long long e = 0;
    long long b = 0;
    read_pair(e, b, "every element has a block");
    if (static_cast<std::size_t>(e) >= n || seen[static_cast<std::size_t>(e)]) {
      throw InputError(Where(line_no) + "bad or repeated element id");
    }
    if (b >= blocks) throw InputError(Where(line_no) + "unknown block id");
    seen[static_cast<std::size_t>(e)] = true;
    block_of[static_cast<std::size_t>(e)] = static_cast<std::size_t>(b);
  }
  if (NextLine(in, line, line_no)) {
    throw InputError(Where(line_no) + "trailing content in partition file");
  }
  return PartitionMatroid(std::move(block_of), std::move(capacity));
}

PartitionMatroid ReadPartitionMatroidFile(const std::string& path,
                                          std::size_t n) {
  std::ifstream in = OpenIn(path);
  return ReadPartitionMatroid(in, n);
}

void WritePartitionMatroid(std::ostream& out, const PartitionMatroid& m) {
  out << m.num_blocks() << '\n';
  for (std::size_t b = 0; b < m.num_blocks(); ++b) {
    out << b << ' ' << m.capacity(b) << '\n';
  }
  for (std::size_t e = 0; e < m.ground_size(); ++e) {
    out << e << ' ' << m.block_of(static_cast<ElementId>(e)) << '\n';
  }
}

}  // namespace submod
