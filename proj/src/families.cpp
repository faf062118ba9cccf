#include "arfrf/families.hpp"

#include "formula.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace arfrf {

namespace {

// ---------------------------------------------------------------------------
// Closed-form RF tables for multiplicity <= 5, transcribed entry by entry.
// Rows are separated by '|', entries by whitespace. Variables: s (conductor),
// k (the 4k+2 generator), a and b (sub-family parameters). Upper bounds of
// parameters are floor-divided; entries must divide exactly.
// ---------------------------------------------------------------------------

struct Param {
  char name;
  const char *lower;
  const char *upper;
};

struct Template {
  const char *rows;
  std::vector<Param> params;
};

struct PfEntry {
  const char *pf;
  std::vector<Template> matrices;
};

struct Table {
  const char *claim;
  std::vector<PfEntry> entries;
};

const Param kA3{'a', "1", "(s+2*k)/(2*(2*k+1))"};
const Param kA1{'a', "1", "(s+2*k+2)/(2*(2*k+1))"};
const Param kB{'b', "0", "s/(2*(2*k+1))"};

const Table kProp31{"Prop3.1", {{"s-1", {{"-1 1 | s -1", {}}}}}};

const Table kProp32{"Prop3.2",
                    {
                        {"s-2", {{"-1 1 0 | (s-3)/3 -1 1 | 2*s/3 0 -1", {}}}},
                        {"s-1", {{"-1 0 1 | 2*s/3 -1 0 | s/3 1 -1", {}}}},
                    }};

const Table kProp33{
    "Prop3.3",
    {
        {"s-3", {{"-1 1 0 | (s-5)/3 -1 1 | (2*s-1)/3 0 -1", {}}}},
        {"s-1", {{"-1 0 1 | (2*s-1)/3 -1 0 | (s+1)/3 1 -1", {}}}},
    }};

// m = 4, s = 0 mod 4, <4, 4k+2, s+1, s+3> with k < s/4
const Table kProp34{
    "Prop3.4",
    {
        {"4*k-2", {{"-1 1 0 0 | 2*k -1 0 0 | k-1 0 -1 1 | k 0 1 -1", {}}}},
        {"s-3",
         {{"-1 0 1 0 | k-1 -1 0 1 | s/2-a-(2*a-1)*k 2*a-1 -1 0 | "
           "s/2-b-2*b*k 2*b 0 -1",
           {kA3, kB}}}},
        {"s-1",
         {{"-1 0 0 1 | k -1 1 0 | s/2-b-2*b*k 2*b -1 0 | "
           "s/2-a+1-(2*a-1)*k 2*a-1 0 -1",
           {kA1, kB}},
          {"-1 0 0 1 | k -1 1 0 | s/2-b-2*b*k 2*b -1 0 | 0 0 2 -1", {kB}}}},
    }};

// m = 4, s = 0 mod 4, <4, s+1, s+2, s+3>
const Table kProp35{
    "Prop3.5",
    {
        {"s-3",
         {{"-1 1 0 0 | (s-4)/4 -1 1 0 | (s-4)/4 0 -1 1 | s/2 0 0 -1", {}}}},
        {"s-2",
         {{"-1 0 1 0 | (s-4)/4 -1 0 1 | s/2 0 -1 0 | s/4 1 0 -1", {}}}},
        {"s-1",
         {{"-1 0 0 1 | s/2 -1 0 0 | s/4 1 -1 0 | s/4 0 1 -1", {}},
          {"-1 0 0 1 | s/2 -1 0 0 | s/4 1 -1 0 | 0 2 0 -1", {}}}},
    }};

// m = 4, s = 2 mod 4. The first RF(s-1) matrix is transcribed as printed,
// with "s/2-b-b*k" in row 3; the second uses "s/2-b-2*b*k".
const Table kProp36{
    "Prop3.6",
    {
        {"4*k-2", {{"-1 1 0 0 | 2*k -1 0 0 | k-1 0 -1 1 | k 0 1 -1", {}}}},
        {"s-3",
         {{"-1 0 1 0 | k-1 -1 0 1 | s/2-a-(2*a-1)*k 2*a-1 -1 0 | "
           "s/2-b-2*b*k 2*b 0 -1",
           {kA3, kB}}}},
        {"s-1",
         {{"-1 0 0 1 | k -1 1 0 | s/2-b-b*k 2*b -1 0 | "
           "s/2-a+1-(2*a-1)*k 2*a-1 0 -1",
           {kA1, kB}},
          {"-1 0 0 1 | k -1 1 0 | s/2-b-2*b*k 2*b -1 0 | 0 0 2 -1", {kB}}}},
    }};

// m = 4, s = 3 mod 4, <4, s, s+2, s+3>
const Table kProp37{
    "Prop3.7",
    {
        {"s-4",
         {{"-1 1 0 0 | (s-7)/4 -1 0 1 | (s-1)/2 0 -1 0 | (s-3)/4 0 1 -1",
           {}}}},
        {"s-2",
         {{"-1 0 1 0 | (s-1)/2 -1 0 0 | (s-3)/4 0 -1 1 | (s+1)/4 1 0 -1", {}},
          {"-1 0 1 0 | (s-1)/2 -1 0 0 | 0 2 -1 0 | (s+1)/4 1 0 -1", {}}}},
        {"s-1",
         {{"-1 0 0 1 | (s-3)/4 -1 1 0 | (s+1)/4 1 -1 0 | 0 1 1 -1", {}},
          {"-1 0 0 1 | (s-3)/4 -1 1 0 | (s+1)/4 1 -1 0 | (s+1)/2 0 0 -1",
           {}}}},
    }};

// m = 5, s = 0 mod 5, <5, s-2, s+1, s+2, s+4>
const Table kProp38{
    "Prop3.8",
    {
        {"s-7",
         {{"-1 1 0 0 0 | (s-10)/5 -1 1 0 0 | (s-10)/5 0 -1 0 1 | "
           "(2*s-5)/5 0 0 -1 0 | (s-5)/5 0 0 1 -1",
           {}}}},
        {"s-4",
         {{"-1 0 1 0 0 | (s-10)/5 -1 0 0 1 | (s-5)/5 0 -1 1 0 | "
           "s/5 1 0 -1 0 | 2*s/5 0 0 0 -1",
           {}},
          {"-1 0 1 0 0 | (s-10)/5 -1 0 0 1 | (s-5)/5 0 -1 1 0 | "
           "s/5 1 0 -1 0 | 0 1 0 1 -1",
           {}}}},
        {"s-3",
         {{"-1 0 0 1 0 | (2*s-5)/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "(s-5)/5 0 0 -1 1 | s/5 0 1 0 -1",
           {}},
          {"-1 0 0 1 0 | (2*s-5)/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "0 1 1 -1 0 | s/5 0 1 0 -1",
           {}},
          {"-1 0 0 1 0 | (2*s-5)/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "(s-5)/5 0 0 -1 1 | 1 2 0 0 -1",
           {}},
          {"-1 0 0 1 0 | (2*s-5)/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "0 1 1 -1 0 | 1 2 0 0 -1",
           {}}}},
        {"s-1",
         {{"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 2*s/5 0 -1 0 0 | "
           "s/5 0 1 -1 0 | (s+5)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 0 1 -1 1 0 | "
           "s/5 0 1 -1 0 | (s+5)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 2*s/5 0 -1 0 0 | "
           "s/5 0 1 -1 0 | 0 0 1 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 0 1 -1 1 0 | "
           "s/5 0 1 -1 0 | 0 0 1 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 2*s/5 0 -1 0 0 | "
           "1 2 0 -1 0 | (s+5)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 0 1 -1 1 0 | "
           "1 2 0 -1 0 | (s+5)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 2*s/5 0 -1 0 0 | "
           "1 2 0 -1 0 | 0 0 1 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-5)/5 -1 0 1 0 | 0 1 -1 1 0 | "
           "1 2 0 -1 0 | 0 0 1 1 -1",
           {}}}},
    }};

// m = 5, s = 0 mod 5, <5, s+1, s+2, s+3, s+4>
const Table kProp39{
    "Prop3.9",
    {
        {"s-4",
         {{"-1 1 0 0 0 | (s-5)/5 -1 1 0 0 | (s-5)/5 0 -1 1 0 | "
           "(s-5)/5 0 0 -1 1 | 2*s/5 0 0 0 -1",
           {}}}},
        {"s-3",
         {{"-1 0 1 0 0 | (s-5)/5 -1 0 1 0 | (s-5)/5 0 -1 0 1 | "
           "2*s/5 0 0 -1 0 | s/5 1 0 0 -1",
           {}}}},
        {"s-2",
         {{"-1 0 0 1 0 | (s-5)/5 -1 0 0 1 | 2*s/5 0 -1 0 0 | "
           "s/5 1 0 -1 0 | s/5 0 1 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-5)/5 -1 0 0 1 | 2*s/5 0 -1 0 0 | "
           "s/5 1 0 -1 0 | 0 2 0 0 -1",
           {}}}},
        {"s-1",
         {{"-1 0 0 0 1 | 2*s/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "s/5 0 1 -1 0 | s/5 0 0 1 -1",
           {}},
          {"-1 0 0 0 1 | 2*s/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "0 2 0 -1 0 | s/5 0 0 1 -1",
           {}},
          {"-1 0 0 0 1 | 2*s/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "s/5 0 1 -1 0 | 0 1 1 0 -1",
           {}},
          {"-1 0 0 0 1 | 2*s/5 -1 0 0 0 | s/5 1 -1 0 0 | "
           "0 2 0 -1 0 | 0 1 1 0 -1",
           {}}}},
    }};

// m = 5, s = 2 mod 5, <5, s, s+1, s+2, s+4>
const Table kProp310{
    "Prop3.10",
    {
        {"s-5",
         {{"-1 1 0 0 0 | (s-7)/5 -1 0 1 0 | (2*s-4)/5 0 -1 0 0 | "
           "(s-7)/5 0 0 -1 1 | (s-2)/5 0 1 0 -1",
           {}}}},
        {"s-4",
         {{"-1 0 1 0 0 | (2*s-4)/5 -1 0 0 0 | (s-7)/5 0 -1 0 1 | "
           "(s-2)/5 1 0 -1 0 | (s-2)/5 0 0 1 -1",
           {}},
          {"-1 0 1 0 0 | (2*s-4)/5 -1 0 0 0 | (s-7)/5 0 -1 0 1 | "
           "(s-2)/5 1 0 -1 0 | 0 2 0 0 -1",
           {}}}},
        {"s-3",
         {{"-1 0 0 1 0 | (s-7)/5 -1 0 0 1 | (s-2)/5 1 -1 0 0 | "
           "(s-2)/5 0 1 -1 0 | (2*s+1)/5 0 0 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-7)/5 -1 0 0 1 | (s-2)/5 1 -1 0 0 | "
           "(s-2)/5 0 1 -1 0 | 0 1 1 0 -1",
           {}}}},
        {"s-1",
         {{"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | (s-2)/5 0 -1 1 0 | "
           "(2*s+1)/5 0 0 -1 0 | (s+3)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | 0 2 -1 0 0 | "
           "(2*s+1)/5 0 0 -1 0 | (s+3)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | (s-2)/5 0 -1 1 0 | "
           "0 1 1 -1 0 | (s+3)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | (s-2)/5 0 -1 1 0 | "
           "(2*s+1)/5 0 0 -1 0 | 0 0 1 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | 0 2 -1 0 0 | "
           "0 1 1 -1 0 | (s+3)/5 1 0 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | 0 2 -1 0 0 | "
           "(2*s+1)/5 0 0 -1 0 | 0 0 1 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | (s-2)/5 0 -1 1 0 | "
           "0 1 1 -1 0 | 0 0 1 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-2)/5 -1 1 0 0 | 0 2 -1 0 0 | "
           "0 1 1 -1 0 | 0 0 1 1 -1",
           {}}}},
    }};

// m = 5, s = 3 mod 5, <5, s, s+1, s+3, s+4>
const Table kProp311{
    "Prop3.11",
    {
        {"s-5",
         {{"-1 1 0 0 0 | (s-8)/5 -1 0 1 0 | (s-8)/5 0 -1 0 1 | "
           "(s-3)/5 0 1 -1 0 | (2*s-1)/5 0 0 0 -1",
           {}}}},
        {"s-4",
         {{"-1 0 1 0 0 | (s-8)/5 -1 0 0 1 | (s-3)/5 1 -1 0 0 | "
           "(2*s-1)/5 0 0 -1 0 | (s-3)/5 0 0 1 -1",
           {}},
          {"-1 0 1 0 0 | (s-8)/5 -1 0 0 1 | (s-3)/5 1 -1 0 0 | "
           "(2*s-1)/5 0 0 -1 0 | 0 2 0 0 -1",
           {}}}},
        {"s-2",
         {{"-1 0 0 1 0 | (s-3)/5 -1 1 0 0 | (2*s-1)/5 0 -1 0 0 | "
           "(s-3)/5 0 0 -1 1 | (s+2)/5 1 0 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-3)/5 -1 1 0 0 | (2*s-1)/5 0 -1 0 0 | "
           "0 1 1 -1 0 | (s+2)/5 1 0 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-3)/5 -1 1 0 0 | (2*s-1)/5 0 -1 0 0 | "
           "(s-3)/5 0 0 -1 1 | 0 0 2 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-3)/5 -1 1 0 0 | (2*s-1)/5 0 -1 0 0 | "
           "0 1 1 -1 0 | 0 0 2 0 -1",
           {}}}},
        {"s-1",
         {{"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | (s-3)/5 0 -1 1 0 | "
           "(s+2)/5 1 0 -1 0 | (s+2)/5 0 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | (s-3)/5 0 -1 1 0 | "
           "(s+2)/5 1 0 -1 0 | 0 1 0 1 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | (s-3)/5 0 -1 1 0 | "
           "0 0 2 -1 0 | (s+2)/5 0 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | 0 2 -1 0 0 | "
           "(s+2)/5 1 0 -1 0 | (s+2)/5 0 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | 0 2 -1 0 0 | "
           "0 0 2 -1 0 | (s+2)/5 0 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | 0 2 -1 0 0 | "
           "(s+2)/5 1 0 -1 0 | 0 1 0 1 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | (s-3)/5 0 -1 1 0 | "
           "0 0 2 -1 0 | 0 1 0 1 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-1)/5 -1 0 0 0 | 0 2 -1 0 0 | "
           "0 0 2 -1 0 | 0 1 0 1 -1",
           {}}}},
    }};

// m = 5, s = 4 mod 5, <5, s-2, s, s+2, s+4>
const Table kProp312a{
    "Prop3.12",
    {
        {"s-7",
         {{"-1 1 0 0 0 | (s-9)/5 -1 1 0 0 | (s-9)/5 0 -1 1 0 | "
           "(s-9)/5 0 0 -1 1 | (2*s-3)/5 0 0 0 -1",
           {}}}},
        {"s-5",
         {{"-1 0 1 0 0 | (s-9)/5 -1 0 1 0 | (s-9)/5 0 -1 0 1 | "
           "(2*s-3)/5 0 0 -1 0 | (s+1)/5 1 0 0 -1",
           {}}}},
        {"s-3",
         {{"-1 0 0 1 0 | (s-9)/5 -1 0 0 1 | (2*s-3)/5 0 -1 0 0 | "
           "(s+1)/5 1 0 -1 0 | (s+1)/5 0 1 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-9)/5 -1 0 0 1 | (2*s-3)/5 0 -1 0 0 | "
           "(s+1)/5 1 0 -1 0 | 1 2 0 0 -1",
           {}}}},
        {"s-1",
         {{"-1 0 0 0 1 | (2*s-3)/5 -1 0 0 0 | (s+1)/5 1 -1 0 0 | "
           "(s+1)/5 0 1 -1 0 | (s+1)/5 0 0 1 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-3)/5 -1 0 0 0 | (s+1)/5 1 -1 0 0 | "
           "(s+1)/5 0 1 -1 0 | 1 1 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-3)/5 -1 0 0 0 | (s+1)/5 1 -1 0 0 | "
           "1 2 0 -1 0 | (s+1)/5 0 0 1 -1",
           {}},
          {"-1 0 0 0 1 | (2*s-3)/5 -1 0 0 0 | (s+1)/5 1 -1 0 0 | "
           "1 2 0 -1 0 | 1 1 1 0 -1",
           {}}}},
    }};

// m = 5, s = 4 mod 5, <5, s, s+2, s+3, s+4>. RF(s-2) is transcribed as
// printed, including the trailing-column entries in rows 2 and 3.
const Table kProp312b{
    "Prop3.12",
    {
        {"s-5",
         {{"-1 1 0 0 0 | (s-9)/5 -1 0 0 1 | (2*s-3)/5 0 -1 0 0 | "
           "(s-4)/5 0 1 -1 0 | (s-4)/5 0 0 1 -1",
           {}}}},
        {"s-3",
         {{"-1 0 1 0 0 | (2*s-3)/5 -1 0 0 0 | (s-4)/5 0 -1 1 0 | "
           "(s-4)/5 0 0 -1 1 | (s+1)/5 1 0 0 -1",
           {}},
          {"-1 0 1 0 0 | (2*s-3)/5 -1 0 0 0 | (s-4)/5 0 -1 1 0 | "
           "0 2 0 -1 0 | (s+1)/5 1 0 0 -1",
           {}}}},
        {"s-2",
         {{"-1 0 0 1 0 | (s-4)/5 -1 1 0 0 | (s-4)/5 0 -1 0 0 | "
           "(s+1)/5 1 0 -1 0 | (2*s+2)/5 0 0 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-4)/5 -1 1 0 0 | (s-4)/5 0 -1 0 0 | "
           "(s+1)/5 1 0 -1 0 | 0 1 1 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-4)/5 -1 1 0 1 | 0 2 -1 0 1 | "
           "(s+1)/5 1 0 -1 0 | (2*s+2)/5 0 0 0 -1",
           {}},
          {"-1 0 0 1 0 | (s-4)/5 -1 1 0 1 | 0 2 -1 0 1 | "
           "(s+1)/5 1 0 -1 0 | 0 1 1 0 -1",
           {}}}},
        {"s-1",
         {{"-1 0 0 0 1 | (s-4)/5 -1 0 1 0 | (s+1)/5 1 -1 0 0 | "
           "(2*s+2)/5 0 0 -1 0 | (s+1)/5 0 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-4)/5 -1 0 1 0 | (s+1)/5 1 -1 0 0 | "
           "(2*s+2)/5 0 0 -1 0 | 0 1 0 1 -1",
           {}},
          {"-1 0 0 0 1 | (s-4)/5 -1 0 1 0 | (s+1)/5 1 -1 0 0 | "
           "0 1 1 -1 0 | (s+1)/5 0 1 0 -1",
           {}},
          {"-1 0 0 0 1 | (s-4)/5 -1 0 1 0 | (s+1)/5 1 -1 0 0 | "
           "0 1 1 -1 0 | 0 1 0 1 -1",
           {}}}},
    }};

const Table *table_for(const FamilySpec &spec) {
  const Int r = mod_pos(spec.s, spec.m);
  switch (spec.m) {
  case 2:
    return &kProp31;
  case 3:
    return r == 0 ? &kProp32 : &kProp33;
  case 4:
    if (spec.variant == FamilyVariant::Standard)
      return &kProp37;
    if (r == 2)
      return &kProp36;
    return 4 * spec.k == spec.s ? &kProp35 : &kProp34;
  case 5:
    if (r == 0)
      return spec.variant == FamilyVariant::MinusTwo ? &kProp38 : &kProp39;
    if (r == 2)
      return &kProp310;
    if (r == 3)
      return &kProp311;
    return spec.variant == FamilyVariant::MinusTwo ? &kProp312a : &kProp312b;
  default:
    return nullptr;
  }
}

formula::Bindings bindings(const FamilySpec &spec) {
  return {{'s', spec.s}, {'k', spec.k}};
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens(const std::string &text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  for (std::string t; is >> t;)
    out.push_back(t);
  return out;
}

IntMatrix instantiate(const char *rows_text, const formula::Bindings &vars) {
  std::vector<IntVector> rows;
  for (const auto &row : split(rows_text, '|')) {
    IntVector r;
    for (const auto &tok : tokens(row))
      r.push_back(formula::evaluate(tok, vars));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

// Lemma 4.1 shape, f = s - k: one RF matrix (1-based indices i, j):
//   a_ii = -1; a_{1, m-k+1} = 1; a_{k+1, 1} = 2s/m;
//   1 < i < k+1: a_i1 = (s-m)/m, a_{i, i+m-k} = 1;
//   i > k+1:     a_i1 = s/m,     a_{i, i-k} = 1.
IntMatrix lemma41_matrix(int m, Int s, Int k) {
  const auto e = static_cast<std::size_t>(m);
  IntMatrix a(e, e, 0);
  for (Int i = 1; i <= m; ++i) {
    const auto r = static_cast<std::size_t>(i - 1);
    a(r, r) = -1;
    if (i == 1) {
      a(r, static_cast<std::size_t>(m - k)) = 1;
    } else if (i == k + 1) {
      a(r, 0) = 2 * s / m;
    } else if (i < k + 1) {
      a(r, 0) = (s - m) / m;
      a(r, static_cast<std::size_t>(i + m - k - 1)) = 1;
    } else {
      a(r, 0) = s / m;
      a(r, static_cast<std::size_t>(i - k - 1)) = 1;
    }
  }
  return a;
}

bool has_negative_off_diagonal(const IntMatrix &m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) < 0)
        return true;
  return false;
}

std::string param_suffix(const formula::Bindings &vars,
                         const std::vector<Param> &params) {
  std::string out;
  for (const auto &p : params)
    out += " " + std::string(1, p.name) + "=" + std::to_string(vars.at(p.name));
  return out;
}

} // namespace

std::string to_string(FamilyVariant v) {
  switch (v) {
  case FamilyVariant::Standard:
    return "standard";
  case FamilyVariant::WithK:
    return "k";
  case FamilyVariant::MinusTwo:
    return "minus2";
  case FamilyVariant::Consecutive:
    return "consecutive";
  case FamilyVariant::Lemma41:
    return "lemma41";
  }
  return "unknown";
}

FamilyVariant parse_variant(const std::string &name) {
  for (auto v : {FamilyVariant::Standard, FamilyVariant::WithK,
                 FamilyVariant::MinusTwo, FamilyVariant::Consecutive,
                 FamilyVariant::Lemma41})
    if (to_string(v) == name)
      return v;
  throw InvalidFamily("unknown family variant '" + name + "'");
}

std::string FamilySpec::to_string() const {
  std::string out = "m=" + std::to_string(m) + " s=" + std::to_string(s) +
                    " variant=" + arfrf::to_string(variant);
  if (variant == FamilyVariant::WithK)
    out += " k=" + std::to_string(k);
  return out;
}

void validate(const FamilySpec &spec) {
  const int m = spec.m;
  const Int s = spec.s;
  auto bad = [&](const std::string &why) {
    throw InvalidFamily(spec.to_string() + ": " + why);
  };
  if (m < 2)
    bad("multiplicity must be at least 2");
  if (s < m)
    bad("conductor must be at least the multiplicity");
  const Int r = mod_pos(s, m);
  if (spec.variant == FamilyVariant::Lemma41) {
    if (r != 0)
      bad("the m | s shape needs s = 0 mod m");
    return;
  }
  if (spec.variant != FamilyVariant::WithK && spec.k != 0)
    bad("k is only meaningful for the 4k+2 shape");
  switch (m) {
  case 2:
    if (spec.variant != FamilyVariant::Standard || r != 0)
      bad("m=2 needs an even conductor and the standard shape");
    return;
  case 3:
    if (spec.variant != FamilyVariant::Standard)
      bad("m=3 only has the standard shape");
    if (r == 1)
      bad("no Arf semigroup with m=3 and s = 1 mod 3");
    if (r == 2 && s <= 3)
      bad("m=3, s = 2 mod 3 needs s > 3");
    return;
  case 4:
    if (r == 1)
      bad("no Arf semigroup with m=4 and s = 1 mod 4");
    if (r == 3) {
      if (spec.variant != FamilyVariant::Standard)
        bad("m=4, s = 3 mod 4 only has the standard shape");
      return;
    }
    if (spec.variant != FamilyVariant::WithK)
      bad("m=4 with s even needs the 4k+2 shape");
    if (r == 0 && (spec.k < 1 || 4 * spec.k > s))
      bad("k must lie in [1, s/4]");
    if (r == 2 && (s <= 4 || spec.k < 1 || 4 * spec.k > s - 2))
      bad("k must lie in [1, (s-2)/4] with s > 4");
    return;
  case 5:
    if (r == 1)
      bad("no Arf semigroup with m=5 and s = 1 mod 5");
    if (r == 0) {
      if (spec.variant == FamilyVariant::Consecutive)
        return;
      if (spec.variant == FamilyVariant::MinusTwo) {
        if (s <= 5)
          bad("the s-2 shape needs s > 5");
        return;
      }
      bad("m=5, s = 0 mod 5 needs the minus2 or consecutive shape");
    }
    if (s <= 5)
      bad("m=5 needs s > 5 unless s = 0 mod 5");
    if (r == 4 && (spec.variant == FamilyVariant::MinusTwo ||
                   spec.variant == FamilyVariant::Standard))
      return;
    if ((r == 2 || r == 3) && spec.variant == FamilyVariant::Standard)
      return;
    bad("shape not available for this residue");
    return;
  default:
    bad("multiplicity above 5 only has the m | s shape");
  }
}

std::vector<Int> family_generators(const FamilySpec &spec) {
  validate(spec);
  const Int s = spec.s;
  const Int r = mod_pos(s, spec.m);
  std::vector<Int> gens;
  if (spec.variant == FamilyVariant::Lemma41) {
    gens.push_back(spec.m);
    for (Int i = 1; i < spec.m; ++i)
      gens.push_back(s + i);
    return gens;
  }
  switch (spec.m) {
  case 2:
    gens = {2, s + 1};
    break;
  case 3:
    gens = r == 0 ? std::vector<Int>{3, s + 1, s + 2}
                  : std::vector<Int>{3, s, s + 2};
    break;
  case 4:
    gens = spec.variant == FamilyVariant::WithK
               ? std::vector<Int>{4, 4 * spec.k + 2, s + 1, s + 3}
               : std::vector<Int>{4, s, s + 2, s + 3};
    break;
  case 5:
    if (r == 0)
      gens = spec.variant == FamilyVariant::MinusTwo
                 ? std::vector<Int>{5, s - 2, s + 1, s + 2, s + 4}
                 : std::vector<Int>{5, s + 1, s + 2, s + 3, s + 4};
    else if (r == 2)
      gens = {5, s, s + 1, s + 2, s + 4};
    else if (r == 3)
      gens = {5, s, s + 1, s + 3, s + 4};
    else
      gens = spec.variant == FamilyVariant::MinusTwo
                 ? std::vector<Int>{5, s - 2, s, s + 2, s + 4}
                 : std::vector<Int>{5, s, s + 2, s + 3, s + 4};
    break;
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

NumericalSemigroup build_family(const FamilySpec &spec) {
  const auto gens = family_generators(spec);
  auto s = NumericalSemigroup::from_generators(gens);
  if (s.generators() != gens || s.multiplicity() != spec.m ||
      s.conductor() != spec.s || !is_arf(s))
    throw std::logic_error("family " + spec.to_string() + " built " +
                           s.to_string() + " with conductor " +
                           std::to_string(s.conductor()) +
                           ", which is not the stated Arf semigroup");
  return s;
}

std::string family_claim(const FamilySpec &spec) {
  validate(spec);
  if (spec.variant == FamilyVariant::Lemma41)
    return "Prop4.2";
  return table_for(spec)->claim;
}

std::vector<Int> closed_form_pf(const FamilySpec &spec) {
  validate(spec);
  std::vector<Int> out;
  if (spec.variant == FamilyVariant::Lemma41) {
    for (Int k = spec.m - 1; k >= 1; --k)
      out.push_back(spec.s - k);
    return out;
  }
  const auto vars = bindings(spec);
  for (const auto &entry : table_for(spec)->entries)
    out.push_back(formula::evaluate(entry.pf, vars));
  std::sort(out.begin(), out.end());
  return out;
}

ClosedFormResult closed_form_rf(const FamilySpec &spec, Int f) {
  validate(spec);
  ClosedFormResult result;
  if (spec.variant == FamilyVariant::Lemma41) {
    const Int k = spec.s - f;
    if (k < 1 || k >= spec.m)
      throw NotPseudoFrobenius(std::to_string(f) +
                               " is not of the form s-k, 1 <= k < m");
    result.claim_id = "Prop4.2";
    result.pf_label = "s-" + std::to_string(k);
    result.full_list = false;
    result.matrices.push_back(
        {lemma41_matrix(spec.m, spec.s, k), "rf(s-" + std::to_string(k) + ")"});
    return result;
  }

  const Table *table = table_for(spec);
  formula::Bindings vars = bindings(spec);
  const PfEntry *entry = nullptr;
  for (const auto &e : table->entries)
    if (formula::evaluate(e.pf, vars) == f)
      entry = &e;
  if (!entry)
    throw NotPseudoFrobenius(std::to_string(f) +
                             " is not listed as pseudo-Frobenius by " +
                             table->claim);
  result.claim_id = table->claim;
  result.pf_label = entry->pf;

  std::size_t index = 0;
  for (const auto &tpl : entry->matrices) {
    ++index;
    const std::string base =
        "rf(" + std::string(entry->pf) + ")#" + std::to_string(index);
    // Expand the parameter box, first parameter outermost.
    std::vector<Int> lo, hi;
    for (const auto &p : tpl.params) {
      lo.push_back(formula::evaluate(p.lower, vars));
      hi.push_back(formula::evaluate(p.upper, vars, formula::Division::Floor));
    }
    std::vector<Int> cur = lo;
    const std::size_t np = tpl.params.size();
    bool empty = false;
    for (std::size_t q = 0; q < np; ++q)
      if (lo[q] > hi[q])
        empty = true;
    while (!empty) {
      for (std::size_t q = 0; q < np; ++q)
        vars[tpl.params[q].name] = cur[q];
      const std::string label = base + param_suffix(vars, tpl.params);
      try {
        IntMatrix m = instantiate(tpl.rows, vars);
        if (has_negative_off_diagonal(m))
          result.rejected.push_back(label + ": negative off-diagonal entry");
        else
          result.matrices.push_back({std::move(m), label});
      } catch (const formula::FormulaError &err) {
        result.rejected.push_back(label + ": " + err.what());
      }
      std::size_t q = np;
      while (q > 0) {
        --q;
        if (++cur[q] <= hi[q])
          break;
        cur[q] = lo[q];
        if (q == 0) {
          empty = true;
          break;
        }
      }
      if (np == 0)
        empty = true;
    }
  }
  return result;
}

std::vector<FamilySpec> arf_family_specs(int m, Int s_max) {
  std::vector<FamilySpec> out;
  auto try_add = [&](FamilySpec spec) {
    try {
      validate(spec);
      out.push_back(spec);
    } catch (const InvalidFamily &) {
    }
  };
  for (Int s = m; s <= s_max; ++s) {
    if (m == 4 && mod_pos(s, 4) != 3) {
      for (Int k = 1; 4 * k <= s; ++k)
        try_add({m, s, FamilyVariant::WithK, k});
      continue;
    }
    for (auto v : {FamilyVariant::Standard, FamilyVariant::MinusTwo,
                   FamilyVariant::Consecutive})
      try_add({m, s, v, 0});
  }
  return out;
}

std::vector<FamilySpec> arf_family_specs_up_to_5(Int s_max) {
  std::vector<FamilySpec> out;
  for (int m = 2; m <= 5; ++m) {
    auto part = arf_family_specs(m, s_max);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<FamilySpec> lemma41_specs(int m_min, int m_max, Int mult_max) {
  std::vector<FamilySpec> out;
  for (int m = m_min; m <= m_max; ++m)
    for (Int q = 1; q <= mult_max; ++q)
      out.push_back({m, q * m, FamilyVariant::Lemma41, 0});
  return out;
}

} // namespace arfrf
