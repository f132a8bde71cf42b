#pragma once

#include <array>
#include <string>
#include <vector>

#include "resdiff/calculus.hpp"
#include "resdiff/rational.hpp"

namespace resdiff::acceptance {

enum class Shape { kCubicDouble, kQuarticDouble, kQuarticTriple };

struct Monomial {
  long coefficient;
  std::array<int, 4> exponents;
};

struct LabelPair {
  std::vector<int> numerator;
  std::vector<int> denominator;
};

struct RatioFixture {
  Shape shape;
  std::string name;
  std::vector<Monomial> numerator;
  std::vector<Monomial> denominator;
  Side side;
  std::vector<LabelPair> labels;
  bool expected_to_hold;
};

// monic coefficients a1..a4; generated by expanding each fraction
inline const std::vector<RatioFixture>& ratio_fixtures() {
  static const std::vector<RatioFixture> fixtures{
      {Shape::kCubicDouble,
       "a0:a1",
       {{-4, {3, 0, 1, 0}}, {1, {2, 2, 0, 0}}, {9, {1, 1, 1, 0}}, {-2, {0, 3, 0, 0}}},
       {{6, {2, 0, 1, 0}}, {-1, {1, 2, 0, 0}}, {-9, {0, 1, 1, 0}}},
       Side::A,
       {{{0}, {1}}},
       true},
      {Shape::kCubicDouble,
       "a1:a2",
       {{-6, {2, 0, 1, 0}}, {1, {1, 2, 0, 0}}, {9, {0, 1, 1, 0}}},
       {{1, {2, 1, 0, 0}}, {9, {1, 0, 1, 0}}, {-6, {0, 2, 0, 0}}},
       Side::A,
       {{{1}, {2}}},
       true},
      {Shape::kCubicDouble,
       "a2:a3",
       {{-1, {2, 1, 0, 0}}, {-9, {1, 0, 1, 0}}, {6, {0, 2, 0, 0}}},
       {{2, {3, 0, 0, 0}}, {-9, {1, 1, 0, 0}}, {27, {0, 0, 1, 0}}},
       Side::A,
       {{{2}, {3}}},
       true},
      {Shape::kCubicDouble,
       "b00:b01",
       {{-8, {1, 1, 1, 0}}, {2, {0, 3, 0, 0}}, {18, {0, 0, 2, 0}}},
       {{4, {2, 0, 1, 0}}, {-1, {1, 2, 0, 0}}, {-3, {0, 1, 1, 0}}},
       Side::B,
       {{{0, 0}, {0, 1}}},
       true},
      {Shape::kCubicDouble,
       "b01:b02",
       {{4, {2, 0, 1, 0}}, {-1, {1, 2, 0, 0}}, {-3, {0, 1, 1, 0}}},
       {{-6, {1, 0, 1, 0}}, {2, {0, 2, 0, 0}}},
       Side::B,
       {{{0, 1}, {0, 2}}, {{0, 1}, {1, 1}}},
       true},
      {Shape::kCubicDouble,
       "b11:b12",
       {{-6, {1, 0, 1, 0}}, {2, {0, 2, 0, 0}}},
       {{-1, {1, 1, 0, 0}}, {9, {0, 0, 1, 0}}},
       Side::B,
       {{{1, 1}, {1, 2}}, {{0, 2}, {1, 2}}},
       true},
      {Shape::kCubicDouble,
       "b12:b22",
       {{-1, {1, 1, 0, 0}}, {9, {0, 0, 1, 0}}},
       {{2, {2, 0, 0, 0}}, {-6, {0, 1, 0, 0}}},
       Side::B,
       {{{1, 2}, {2, 2}}},
       true},
      {Shape::kQuarticDouble,
       "a0:a1",
       {{-81, {4, 0, 0, 2}}, {54, {3, 1, 1, 1}}, {-12, {3, 0, 3, 0}}, {-12, {2, 3, 0, 1}}, {3, {2, 2, 2, 0}}, {288, {2, 1, 0, 2}}, {-12, {2, 0, 2, 1}}, {-160, {1, 2, 1, 1}}, {36, {1, 1, 3, 0}}, {-192, {1, 0, 1, 2}}, {32, {0, 4, 0, 1}}, {-8, {0, 3, 2, 0}}, {-128, {0, 2, 0, 2}}, {144, {0, 1, 2, 1}}, {-27, {0, 0, 4, 0}}},
       {{108, {3, 0, 0, 2}}, {-54, {2, 1, 1, 1}}, {12, {2, 0, 3, 0}}, {8, {1, 3, 0, 1}}, {-2, {1, 2, 2, 0}}, {-288, {1, 1, 0, 2}}, {12, {1, 0, 2, 1}}, {80, {0, 2, 1, 1}}, {-18, {0, 1, 3, 0}}, {192, {0, 0, 1, 2}}},
       Side::A,
       {{{0}, {1}}},
       true},
      {Shape::kQuarticDouble,
       "a1:a2",
       {{-54, {3, 0, 0, 2}}, {27, {2, 1, 1, 1}}, {-6, {2, 0, 3, 0}}, {-4, {1, 3, 0, 1}}, {1, {1, 2, 2, 0}}, {144, {1, 1, 0, 2}}, {-6, {1, 0, 2, 1}}, {-40, {0, 2, 1, 1}}, {9, {0, 1, 3, 0}}, {-96, {0, 0, 1, 2}}},
       {{9, {3, 0, 1, 1}}, {-6, {2, 2, 0, 1}}, {1, {2, 1, 2, 0}}, {72, {2, 0, 0, 2}}, {-80, {1, 1, 1, 1}}, {9, {1, 0, 3, 0}}, {32, {0, 3, 0, 1}}, {-6, {0, 2, 2, 0}}, {-128, {0, 1, 0, 2}}, {72, {0, 0, 2, 1}}},
       Side::A,
       {{{1}, {2}}},
       true},
      {Shape::kQuarticDouble,
       "a2:a3",
       {{9, {3, 0, 1, 1}}, {-6, {2, 2, 0, 1}}, {1, {2, 1, 2, 0}}, {72, {2, 0, 0, 2}}, {-80, {1, 1, 1, 1}}, {9, {1, 0, 3, 0}}, {32, {0, 3, 0, 1}}, {-6, {0, 2, 2, 0}}, {-128, {0, 1, 0, 2}}, {72, {0, 0, 2, 1}}},
       {{9, {3, 1, 0, 1}}, {-6, {3, 0, 2, 0}}, {1, {2, 2, 1, 0}}, {-6, {2, 0, 1, 1}}, {-40, {1, 2, 0, 1}}, {27, {1, 1, 2, 0}}, {-96, {1, 0, 0, 2}}, {-4, {0, 3, 1, 0}}, {144, {0, 1, 1, 1}}, {-54, {0, 0, 3, 0}}},
       Side::A,
       {{{2}, {3}}},
       true},
      {Shape::kQuarticDouble,
       "a3:a4",
       {{-9, {3, 1, 0, 1}}, {6, {3, 0, 2, 0}}, {-1, {2, 2, 1, 0}}, {6, {2, 0, 1, 1}}, {40, {1, 2, 0, 1}}, {-27, {1, 1, 2, 0}}, {96, {1, 0, 0, 2}}, {4, {0, 3, 1, 0}}, {-144, {0, 1, 1, 1}}, {54, {0, 0, 3, 0}}},
       {{27, {4, 0, 0, 1}}, {-9, {3, 1, 1, 0}}, {2, {2, 3, 0, 0}}, {-144, {2, 1, 0, 1}}, {3, {2, 0, 2, 0}}, {40, {1, 2, 1, 0}}, {192, {1, 0, 1, 1}}, {-8, {0, 4, 0, 0}}, {128, {0, 2, 0, 1}}, {-72, {0, 1, 2, 0}}, {-384, {0, 0, 0, 2}}},
       Side::A,
       {{{3}, {4}}},
       true},
      {Shape::kQuarticDouble,
       "b00:b01",
       {{54, {2, 1, 0, 2}}, {-36, {1, 2, 1, 1}}, {8, {1, 1, 3, 0}}, {-120, {1, 0, 1, 2}}, {8, {0, 4, 0, 1}}, {-2, {0, 3, 2, 0}}, {-80, {0, 2, 0, 2}}, {94, {0, 1, 2, 1}}, {-18, {0, 0, 4, 0}}, {192, {0, 0, 0, 3}}},
       {{-27, {3, 0, 0, 2}}, {18, {2, 1, 1, 1}}, {-4, {2, 0, 3, 0}}, {-4, {1, 3, 0, 1}}, {1, {1, 2, 2, 0}}, {48, {1, 1, 0, 2}}, {-7, {1, 0, 2, 1}}, {-12, {0, 2, 1, 1}}, {3, {0, 1, 3, 0}}, {-16, {0, 0, 1, 2}}},
       Side::B,
       {{{0, 0}, {0, 1}}},
       true},
      {Shape::kQuarticDouble,
       "b00:b01 variant",
       {{54, {2, 1, 0, 2}}, {-36, {1, 2, 1, 1}}, {8, {1, 1, 3, 0}}, {-120, {1, 0, 1, 2}}, {8, {0, 4, 0, 1}}, {-2, {0, 3, 2, 0}}, {-80, {0, 2, 0, 2}}, {94, {0, 1, 2, 1}}, {-18, {0, 0, 4, 0}}, {192, {0, 0, 0, 3}}},
       {{-27, {3, 0, 0, 2}}, {18, {2, 1, 1, 1}}, {-4, {2, 0, 3, 0}}, {-4, {1, 3, 0, 1}}, {1, {1, 2, 2, 0}}, {48, {1, 1, 0, 2}}, {-7, {1, 0, 3, 1}}, {-12, {0, 2, 1, 1}}, {3, {0, 1, 3, 0}}, {-16, {0, 0, 1, 2}}},
       Side::B,
       {},
       false},
      {Shape::kQuarticDouble,
       "b11:b12",
       {{36, {2, 0, 0, 2}}, {-28, {1, 1, 1, 1}}, {6, {1, 0, 3, 0}}, {8, {0, 3, 0, 1}}, {-2, {0, 2, 2, 0}}, {-32, {0, 1, 0, 2}}, {12, {0, 0, 2, 1}}},
       {{3, {2, 0, 1, 1}}, {-4, {1, 2, 0, 1}}, {1, {1, 1, 2, 0}}, {-48, {1, 0, 0, 2}}, {32, {0, 1, 1, 1}}, {-9, {0, 0, 3, 0}}},
       Side::B,
       {{{1, 1}, {1, 2}}},
       true},
      {Shape::kQuarticDouble,
       "b12:b22",
       {{3, {2, 0, 1, 1}}, {-4, {1, 2, 0, 1}}, {1, {1, 1, 2, 0}}, {-48, {1, 0, 0, 2}}, {32, {0, 1, 1, 1}}, {-9, {0, 0, 3, 0}}},
       {{6, {2, 1, 0, 1}}, {-2, {2, 0, 2, 0}}, {-8, {1, 0, 1, 1}}, {-16, {0, 2, 0, 1}}, {6, {0, 1, 2, 0}}, {64, {0, 0, 0, 2}}},
       Side::B,
       {{{1, 2}, {2, 2}}},
       true},
      {Shape::kQuarticDouble,
       "b13:b23",
       {{6, {2, 1, 0, 1}}, {-2, {2, 0, 2, 0}}, {-8, {1, 0, 1, 1}}, {-16, {0, 2, 0, 1}}, {6, {0, 1, 2, 0}}, {64, {0, 0, 0, 2}}},
       {{-9, {3, 0, 0, 1}}, {1, {2, 1, 1, 0}}, {32, {1, 1, 0, 1}}, {3, {1, 0, 2, 0}}, {-4, {0, 2, 1, 0}}, {-48, {0, 0, 1, 1}}},
       Side::B,
       {{{1, 3}, {2, 3}}},
       true},
      {Shape::kQuarticDouble,
       "b23:b33",
       {{-9, {3, 0, 0, 1}}, {1, {2, 1, 1, 0}}, {32, {1, 1, 0, 1}}, {3, {1, 0, 2, 0}}, {-4, {0, 2, 1, 0}}, {-48, {0, 0, 1, 1}}},
       {{6, {3, 0, 1, 0}}, {-2, {2, 2, 0, 0}}, {12, {2, 0, 0, 1}}, {-28, {1, 1, 1, 0}}, {8, {0, 3, 0, 0}}, {-32, {0, 1, 0, 1}}, {36, {0, 0, 2, 0}}},
       Side::B,
       {{{2, 3}, {3, 3}}},
       true},
      {Shape::kQuarticTriple,
       "b000:b001",
       {{-18, {1, 0, 1, 2}}, {-12, {0, 2, 0, 2}}, {15, {0, 1, 2, 1}}, {-3, {0, 0, 4, 0}}, {48, {0, 0, 0, 3}}},
       {{12, {1, 1, 0, 2}}, {-1, {1, 0, 2, 1}}, {-4, {0, 2, 1, 1}}, {1, {0, 1, 3, 0}}, {-8, {0, 0, 1, 2}}},
       Side::B,
       {{{0, 0, 0}, {0, 0, 1}}},
       true},
      {Shape::kQuarticTriple,
       "b001:b002",
       {{12, {1, 1, 0, 2}}, {-1, {1, 0, 2, 1}}, {-4, {0, 2, 1, 1}}, {1, {0, 1, 3, 0}}, {-8, {0, 0, 1, 2}}},
       {{9, {2, 0, 0, 2}}, {-10, {1, 1, 1, 1}}, {2, {1, 0, 3, 0}}, {4, {0, 3, 0, 1}}, {-1, {0, 2, 2, 0}}, {-16, {0, 1, 0, 2}}, {7, {0, 0, 2, 1}}},
       Side::B,
       {{{0, 0, 1}, {0, 0, 2}}},
       true},
      {Shape::kQuarticTriple,
       "b001:b002 variant",
       {{12, {1, 1, 0, 2}}, {-1, {1, 0, 2, 1}}, {-4, {0, 2, 1, 1}}, {1, {0, 1, 3, 0}}, {-8, {0, 0, 1, 2}}},
       {{9, {2, 0, 0, 2}}, {-10, {1, 1, 1, 1}}, {2, {1, 0, 3, 0}}, {-1, {0, 2, 2, 0}}, {4, {0, 2, 0, 1}}, {-16, {0, 1, 0, 2}}, {7, {0, 0, 2, 1}}},
       Side::B,
       {},
       false},
      {Shape::kQuarticTriple,
       "b002:b003",
       {{9, {2, 0, 0, 2}}, {-10, {1, 1, 1, 1}}, {2, {1, 0, 3, 0}}, {4, {0, 3, 0, 1}}, {-1, {0, 2, 2, 0}}, {-16, {0, 1, 0, 2}}, {7, {0, 0, 2, 1}}},
       {{3, {2, 0, 1, 1}}, {-4, {1, 2, 0, 1}}, {1, {1, 1, 2, 0}}, {-24, {1, 0, 0, 2}}, {20, {0, 1, 1, 1}}, {-6, {0, 0, 3, 0}}},
       Side::B,
       {{{0, 0, 2}, {0, 0, 3}}},
       true},
      {Shape::kQuarticTriple,
       "b002:b003 variant",
       {{9, {2, 0, 0, 2}}, {-10, {1, 1, 1, 1}}, {2, {1, 0, 3, 0}}, {-1, {0, 2, 2, 0}}, {4, {0, 2, 0, 1}}, {-16, {0, 1, 0, 2}}, {7, {0, 0, 2, 1}}},
       {{3, {2, 0, 1, 1}}, {-4, {1, 2, 0, 1}}, {1, {1, 1, 2, 0}}, {-24, {1, 0, 0, 2}}, {20, {0, 1, 1, 1}}, {-6, {0, 0, 3, 0}}},
       Side::B,
       {},
       false},
      {Shape::kQuarticTriple,
       "b001:b003 form",
       {{12, {1, 1, 0, 2}}, {-1, {1, 0, 2, 1}}, {-4, {0, 2, 1, 1}}, {1, {0, 1, 3, 0}}, {-8, {0, 0, 1, 2}}},
       {{-9, {2, 0, 0, 2}}, {4, {1, 1, 1, 1}}, {-1, {1, 0, 3, 0}}, {1, {0, 0, 2, 1}}},
       Side::B,
       {},
       true},
      {Shape::kQuarticTriple,
       "b012:b013",
       {{3, {2, 0, 1, 1}}, {-4, {1, 2, 0, 1}}, {1, {1, 1, 2, 0}}, {8, {0, 1, 1, 1}}, {-3, {0, 0, 3, 0}}},
       {{6, {2, 1, 0, 1}}, {-2, {2, 0, 2, 0}}, {-12, {1, 0, 1, 1}}, {-8, {0, 2, 0, 1}}, {4, {0, 1, 2, 0}}, {32, {0, 0, 0, 2}}},
       Side::B,
       {{{0, 1, 2}, {0, 1, 3}}, {{0, 1, 2}, {0, 2, 2}}},
       true},
      {Shape::kQuarticTriple,
       "b233:b333",
       {{1, {2, 1, 0, 0}}, {2, {1, 0, 1, 0}}, {-4, {0, 2, 0, 0}}, {16, {0, 0, 0, 1}}},
       {{-3, {3, 0, 0, 0}}, {12, {1, 1, 0, 0}}, {-24, {0, 0, 1, 0}}},
       Side::B,
       {{{2, 3, 3}, {3, 3, 3}}},
       true},
      {Shape::kQuarticTriple,
       "b112:b113",
       {{-2, {1, 0, 1, 1}}, {4, {0, 2, 0, 1}}, {-1, {0, 1, 2, 0}}, {-16, {0, 0, 0, 2}}},
       {{-4, {1, 1, 0, 1}}, {1, {1, 0, 2, 0}}, {8, {0, 0, 1, 1}}},
       Side::B,
       {{{1, 1, 2}, {1, 1, 3}}, {{1, 1, 2}, {1, 2, 2}}},
       true},
      {Shape::kQuarticTriple,
       "b122:b123",
       {{-4, {1, 1, 0, 1}}, {1, {1, 0, 2, 0}}, {8, {0, 0, 1, 1}}},
       {{3, {2, 0, 0, 1}}, {-3, {0, 0, 2, 0}}},
       Side::B,
       {{{1, 2, 2}, {1, 2, 3}}, {{1, 1, 3}, {1, 2, 3}}, {{1, 2, 2}, {2, 2, 2}}},
       true},
      {Shape::kQuarticTriple,
       "b123:b133",
       {{3, {2, 0, 0, 1}}, {-3, {0, 0, 2, 0}}},
       {{-1, {2, 0, 1, 0}}, {-8, {1, 0, 0, 1}}, {4, {0, 1, 1, 0}}},
       Side::B,
       {{{1, 2, 3}, {1, 3, 3}}, {{1, 2, 3}, {2, 2, 3}}},
       true},
      {Shape::kQuarticTriple,
       "b011:b111",
       {{-9, {2, 0, 0, 2}}, {4, {1, 1, 1, 1}}, {-1, {1, 0, 3, 0}}, {1, {0, 0, 2, 1}}},
       {{24, {1, 0, 0, 2}}, {-12, {0, 1, 1, 1}}, {3, {0, 0, 3, 0}}},
       Side::B,
       {{{0, 1, 1}, {1, 1, 1}}},
       true},
  };
  return fixtures;
}

}  // namespace resdiff::acceptance
