#include <doctest.h>

#include "fixtures.hpp"
#include "mass/layout.hpp"

using namespace mass;

TEST_CASE("grid selection matches the pinned shapes") {
  SUBCASE("two facilities, wide floor") {
    const FloorPlan p = build_floor_plan(42, 10, 2, 2);
    CHECK(p.rows == 1);
    CHECK(p.cols == 2);
    CHECK(p.cell_w_m == doctest::Approx(20));
    CHECK(p.cell_h_m == doctest::Approx(10));
  }
  SUBCASE("four facilities in a strip") {
    const FloorPlan p = build_floor_plan(46, 10, 2, 4);
    CHECK(p.rows == 1);
    CHECK(p.cols == 4);
    CHECK(p.cell_w_m == doctest::Approx(10));
  }
  SUBCASE("single facility") {
    const FloorPlan p = build_floor_plan(10, 10, 2, 1);
    CHECK(p.rows == 1);
    CHECK(p.cols == 1);
    CHECK(p.capacity() == 1);
  }
  SUBCASE("the six-facility example floor") {
    const FloorPlan p = fixtures::example_plan();
    CHECK(p.rows == 2);
    CHECK(p.cols == 3);
    CHECK(p.cell_w_m == doctest::Approx(20));
    CHECK(p.cell_h_m == doctest::Approx(10));
  }
}

TEST_CASE("floor plan validation") {
  CHECK_THROWS_AS(build_floor_plan(5, 5, 10, 4), ValidationError);   // aisles eat the floor
  CHECK_THROWS_AS(build_floor_plan(10, 10, 12, 1, 2), ValidationError);
  CHECK_THROWS_AS(build_floor_plan(-1, 10, 2, 2), ValidationError);
  CHECK_THROWS_AS(build_floor_plan(10, 10, -1, 2), ValidationError);
  CHECK_THROWS_AS(build_floor_plan(10, 10, 2, 0), ValidationError);
  CHECK_THROWS_AS(build_floor_plan(10, 10, 2, 0, 3), ValidationError);

  const FloorPlan fixed = build_floor_plan(64, 22, 2, 3, 2);
  CHECK(fixed.rows == 3);
  CHECK(fixed.cols == 2);
  CHECK(fixed.cell_w_m == doctest::Approx(31));
  CHECK(fixed.cell_h_m == doctest::Approx(6));
}

TEST_CASE("block layout validation and lookup") {
  const FloorPlan plan = fixtures::example_plan();
  CHECK_THROWS_AS(BlockLayout(plan, {{0, 0}, {0, 0}}), ValidationError);   // shared slot
  CHECK_THROWS_AS(BlockLayout(plan, {{2, 0}}), ValidationError);           // row out of range
  CHECK_THROWS_AS(BlockLayout(plan, {{0, 3}}), ValidationError);           // col out of range
  const FloorPlan single = build_floor_plan(10, 10, 2, 1);
  CHECK_THROWS_AS(BlockLayout(single, {{0, 0}, {0, 0}}), ValidationError); // over capacity

  const BlockLayout layout = fixtures::example_initial_layout();
  CHECK(layout.facility_count() == 6);
  CHECK(layout.slot_of(3) == Slot{1, 1});
  CHECK(layout.facility_at(Slot{0, 2}) == std::optional<int>{4});

  const BlockLayout sparse(plan, {{0, 0}});
  CHECK_FALSE(sparse.facility_at(Slot{1, 2}).has_value());
}

TEST_CASE("distances under both models") {
  const BlockLayout layout = fixtures::example_initial_layout();

  SUBCASE("column-based model") {
    CHECK(distance(layout, 0, 1, DistanceModel::Paper) == doctest::Approx(2));   // same column
    CHECK(distance(layout, 0, 2, DistanceModel::Paper) == doctest::Approx(22));  // adjacent
    CHECK(distance(layout, 0, 4, DistanceModel::Paper) == doctest::Approx(44));  // two apart
    CHECK(distance(layout, 1, 4, DistanceModel::Paper) == doctest::Approx(44));  // rows ignored
  }
  SUBCASE("rectilinear centroid model") {
    CHECK(distance(layout, 0, 2, DistanceModel::RectilinearCentroid) == doctest::Approx(22));
    CHECK(distance(layout, 0, 1, DistanceModel::RectilinearCentroid) == doctest::Approx(12));
    CHECK(distance(layout, 0, 3, DistanceModel::RectilinearCentroid) == doctest::Approx(34));
  }
  SUBCASE("symmetry and identity") {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        for (DistanceModel model : {DistanceModel::Paper, DistanceModel::RectilinearCentroid}) {
          CHECK(distance(layout, i, j, model) == distance(layout, j, i, model));
          if (i == j)
            CHECK(distance(layout, i, j, model) == 0);
          else
            CHECK(distance(layout, i, j, model) > 0);
        }
  }
}

TEST_CASE("load function of the example layouts") {
  const LoadMatrix m = fixtures::example_matrix();

  SUBCASE("starting layout costs 2580") {
    const CostReport r = total_cost(fixtures::example_initial_layout(), m, DistanceModel::Paper);
    CHECK(r.total == 2580);
    CHECK(r.terms.size() == 9);

    // Intra-pair traffic crosses one aisle: 2 * (30 + 80 + 25).
    double intra = 0;
    for (const CostTerm& t : r.terms)
      if (t.distance == 2) intra += t.contribution;
    CHECK(intra == 270);
  }
  SUBCASE("improved layout costs 2360") {
    const CostReport r = total_cost(fixtures::example_final_layout(), m, DistanceModel::Paper);
    CHECK(r.total == 2360);
  }
  SUBCASE("two-facility strip under the rectilinear model") {
    const LoadMatrix tiny = parse_load_matrix("name,A,B\nA,-,3\nB,4,-\n");
    const BlockLayout strip(build_floor_plan(42, 10, 2, 2), {{0, 0}, {0, 1}});
    CHECK(total_cost(strip, tiny, DistanceModel::RectilinearCentroid).total ==
          doctest::Approx(7 * 22));
  }
  SUBCASE("facility count mismatch is rejected") {
    CHECK_THROWS_AS(total_cost(fixtures::example_initial_layout(),
                               parse_load_matrix("name,A\nA,-\n"), DistanceModel::Paper),
                    ValidationError);
  }
}

TEST_CASE("initial layout construction from an assignment") {
  const LoadMatrix m = fixtures::example_matrix();
  const FloorPlan plan = fixtures::example_plan();
  Assignment a;
  a.n = 6;
  a.sigma = {1, 0, 3, 2, 5, 4};
  a.objective = 135;
  a.certificate_k = 6;

  SUBCASE("index-ascending order reproduces the published picture") {
    const BlockLayout layout = initial_layout(a, m, plan, UnitOrder::IndexAscending);
    CHECK(layout == fixtures::example_initial_layout());
  }
  SUBCASE("composite-descending puts the heaviest pair leftmost") {
    const BlockLayout layout = initial_layout(a, m, plan);
    CHECK(layout.slot_of(2) == Slot{0, 0});  // (III,IV): composite 80
    CHECK(layout.slot_of(3) == Slot{1, 0});
    CHECK(layout.slot_of(0) == Slot{0, 1});  // (I,II): 30
    CHECK(layout.slot_of(1) == Slot{1, 1});
    CHECK(layout.slot_of(4) == Slot{0, 2});  // (V,VI): 25
    CHECK(layout.slot_of(5) == Slot{1, 2});
  }
  SUBCASE("a 3-cycle becomes a chain of adjacent slots") {
    Assignment cyc;
    cyc.n = 3;
    cyc.sigma = {1, 2, 0};
    const LoadMatrix m3 = parse_load_matrix("name,A,B,C\nA,-,5,-\nB,-,-,5\nC,5,-,-\n");
    const FloorPlan p = build_floor_plan(42, 22, 2, 2, 2);
    const BlockLayout layout = initial_layout(cyc, m3, p);
    CHECK(layout.slot_of(0) == Slot{0, 0});
    CHECK(layout.slot_of(1) == Slot{1, 0});
    CHECK(layout.slot_of(2) == Slot{1, 1});  // serpentine keeps the chain adjacent
  }
  SUBCASE("single-row plans stream units left to right") {
    Assignment pairs;
    pairs.n = 4;
    pairs.sigma = {1, 0, 3, 2};
    const LoadMatrix m4 = parse_load_matrix(
        "name,A,B,C,D\nA,-,1,-,-\nB,1,-,-,-\nC,-,-,-,9\nD,-,-,9,-\n");
    const FloorPlan strip = build_floor_plan(46, 10, 2, 4);
    const BlockLayout layout = initial_layout(pairs, m4, strip);
    // (C,D) outranks (A,B), so it takes the leftmost columns.
    CHECK(layout.slot_of(2) == Slot{0, 0});
    CHECK(layout.slot_of(3) == Slot{0, 1});
    CHECK(layout.slot_of(0) == Slot{0, 2});
    CHECK(layout.slot_of(1) == Slot{0, 3});
  }
  SUBCASE("fixed points occupy single slots") {
    Assignment fixed;
    fixed.n = 1;
    fixed.sigma = {0};
    const LoadMatrix m1 = parse_load_matrix("name,X\nX,-\n");
    const BlockLayout layout = initial_layout(fixed, m1, build_floor_plan(10, 10, 2, 1));
    CHECK(layout.slot_of(0) == Slot{0, 0});
  }
  SUBCASE("plans smaller than the facility count are rejected") {
    CHECK_THROWS_AS(initial_layout(a, m, build_floor_plan(42, 10, 2, 2)), ValidationError);
  }
}
