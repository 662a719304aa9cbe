// Copyright 2026 The fouropt Authors
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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "fouropt/instance.hpp"
#include "fouropt/report.hpp"
#include "gtest/gtest.h"

namespace fouropt {
namespace {

using Matrix = CostMatrix<Cost>;

void expect_same(const Matrix& a, const Matrix& b) {
  ASSERT_EQ(a.size(), b.size());
  for (int u = 0; u < a.size(); ++u)
    for (int v = 0; v < a.size(); ++v) EXPECT_EQ(a(u, v), b(u, v)) << u << "," << v;
}

TEST(TsplibTest, EuclideanTriangle) {
  const auto inst = parse_tsplib_instance(
      "NAME : tri\nCOMMENT : 3-4-5\nTYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EUC_2D\n"
      "NODE_COORD_SECTION\n1 0 0\n2 3 0\n3 0 4\nEOF\n");
  EXPECT_EQ(inst.name, "tri");
  EXPECT_EQ(inst.comment, "3-4-5");
  EXPECT_EQ(inst.costs(0, 1), 3);
  EXPECT_EQ(inst.costs(0, 2), 4);
  EXPECT_EQ(inst.costs(1, 2), 5);
}

TEST(TsplibTest, EuclideanRoundsToNearest) {
  const auto m = parse_tsplib(
      "TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n"
      "1 0 0\n2 1 1\n3 1.5 2.5\nEOF\n");
  EXPECT_EQ(m(0, 1), 1);  // sqrt(2)
  EXPECT_EQ(m(1, 2), 2);  // sqrt(2.5)
  EXPECT_EQ(m(0, 2), 3);  // sqrt(8.5)
}

TEST(TsplibTest, FullMatrixRoundTrip) {
  const Matrix m = generate_random(RandomMatrixSpec{9, 500, 4});
  expect_same(parse_tsplib(emit_tsplib_full_matrix(m, "r9")), m);
  EXPECT_EQ(parse_tsplib_instance(emit_tsplib_full_matrix(m, "r9")).name, "r9");
}

TEST(TsplibTest, TriangularFormats) {
  const auto upper = parse_tsplib(
      "TYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: UPPER_ROW\n"
      "EDGE_WEIGHT_SECTION\n1 2 3\n4 5\n6\nEOF\n");
  const auto lower = parse_tsplib(
      "TYPE: TSP\nDIMENSION: 4\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: LOWER_DIAG_ROW\n"
      "EDGE_WEIGHT_SECTION\n0\n1 0\n2 4 0\n3 5 6 0\nEOF\n");
  expect_same(upper, lower);
  EXPECT_EQ(upper(2, 3), 6);
  EXPECT_EQ(upper(3, 1), 5);
}

TEST(TsplibTest, SkipsDisplayData) {
  const auto m = parse_tsplib(
      "TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: UPPER_ROW\n"
      "DISPLAY_DATA_TYPE: TWOD_DISPLAY\nEDGE_WEIGHT_SECTION\n7 8 9\n"
      "DISPLAY_DATA_SECTION\n1 0 0\n2 1 0\n3 0 1\nEOF\n");
  EXPECT_EQ(m(1, 2), 9);
}

void expect_error(const std::string& text, const std::string& fragment) {
  try {
    parse_tsplib(text);
    ADD_FAILURE() << "no error for: " << fragment;
  } catch (const TsplibError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(TsplibTest, Errors) {
  expect_error("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nFIXED_EDGES_SECTION\n",
               "unsupported keyword: FIXED_EDGES_SECTION");
  expect_error("TYPE: ATSP\n", "unsupported TYPE");
  expect_error("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: GEO\n", "unsupported EDGE_WEIGHT_TYPE");
  expect_error("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\n"
               "EDGE_WEIGHT_SECTION\n0 1 2\n1 0 3\n2 4 0\nEOF\n",
               "invalid weights");
  expect_error("TYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 1\n",
               "truncated");
  expect_error("DIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 1 1\n3 2 2\n",
               "missing TYPE");
  EXPECT_THROW(read_tsplib_file("/nonexistent/file.tsp"), TsplibError);
}

TEST(TsplibTest, ReadsSampleFile) {
  const auto inst = read_tsplib_file(FOUROPT_SAMPLES_DIR "/square10.tsp");
  EXPECT_EQ(inst.costs.size(), 10);
}

TEST(GeneratorTest, MatrixIsDeterministicAndInRange) {
  const Matrix a = generate_random(RandomMatrixSpec{20, 50, 11});
  expect_same(a, generate_random(RandomMatrixSpec{20, 50, 11}));
  bool differs = false;
  const Matrix b = generate_random(RandomMatrixSpec{20, 50, 12});
  for (int u = 0; u < 20; ++u) {
    EXPECT_EQ(a(u, u), 0);
    for (int v = u + 1; v < 20; ++v) {
      EXPECT_GE(a(u, v), 1);
      EXPECT_LE(a(u, v), 50);
      EXPECT_EQ(a(u, v), a(v, u));
      differs |= a(u, v) != b(u, v);
    }
  }
  EXPECT_TRUE(differs);
}

TEST(GeneratorTest, SeedZeroFixture) {
  const Matrix m = generate_random(RandomMatrixSpec{12, 1000, 0});
  Cost sum = 0;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) sum += m(u, v);
  EXPECT_EQ(sum, 36583);
  EXPECT_EQ(m(0, 1), 695);
}

TEST(GeneratorTest, EuclideanIsMetric) {
  const Matrix m = generate_random(RandomEuclideanSpec{40, 1000, 5});
  for (int u = 0; u < 40; ++u)
    for (int v = 0; v < 40; ++v)
      for (int w = 0; w < 40; ++w) ASSERT_LE(m(u, w), m(u, v) + m(v, w));
  expect_same(m, generate_random(RandomEuclideanSpec{40, 1000, 5}));
}

TEST(GeneratorTest, RejectsBadParameters) {
  EXPECT_THROW(generate_random(RandomMatrixSpec{10, 0, 0}), std::invalid_argument);
  EXPECT_THROW(generate_random(RandomEuclideanSpec{10, 0, 0}), std::invalid_argument);
}

TEST(ReportTest, RoundTrip) {
  const Matrix m = generate_random(RandomMatrixSpec{12, 1000, 0});
  const auto run = local_search(Tour::canonical(12), m, Engine::kDeberg);
  const RunReport r = make_report("random-matrix:12", Engine::kDeberg, 0, run);
  EXPECT_EQ(r.schema, "fouropt.run_report/1");
  EXPECT_EQ(r.n, 12);
  EXPECT_EQ(r.engine, "deberg");
  EXPECT_EQ(r.tour.size(), 12u);
  const std::string line = emit_report(r);
  EXPECT_EQ(line.find('\n'), line.size() - 1);
  EXPECT_EQ(parse_report(line), r);
}

TEST(ReportTest, RejectsForeignSchema) {
  auto j = nlohmann::json(RunReport{});
  j["schema"] = "other/2";
  EXPECT_THROW(parse_report(j.dump()), std::runtime_error);
}

TEST(ReportTest, CatalogJson) {
  const auto rows = scheme_catalog_json();
  ASSERT_EQ(rows.size(), 25u);
  EXPECT_EQ(rows[0]["scheme"], "<-2,-3,-4>");
  EXPECT_EQ(rows[24]["orbit"], 7);
  EXPECT_TRUE(rows[24]["representative"].get<bool>());
  EXPECT_EQ(rows[24]["inserted"].size(), 4u);
  int reps = 0;
  for (const auto& row : rows) reps += row["representative"].get<bool>();
  EXPECT_EQ(reps, 7);
  EXPECT_EQ(orbit_table_json().size(), 7u);
}

}  // namespace
}  // namespace fouropt
