#include "clifford/reference_tables.hpp"

namespace clifford {

const ReferenceTable& ptc_reference_table() {
  static const ReferenceTable t{
      "canonical",
      {"I", "0", "13", "013", "20", "2", "2013", "213"},
      {{
          {"I", "0", "13", "013", "2", "2", "2013", "213"},
          {"0", "I", "013", "13", "-2", "-20", "-213", "-2013"},
          {"13", "013", "-I", "-0", "2013", "213", "-20", "-2"},
          {"013", "13", "-0", "-I", "-213", "-2013", "2", "20"},
          {"20", "2", "2013", "213", "I", "0", "13", "013"},
          {"2", "20", "213", "2013", "-0", "-I", "-013", "-13"},
          {"2013", "213", "-20", "2", "13", "013", "-I", "-0"},
          {"213", "2013", "-2", "-20", "-013", "-13", "0", "I"},
      }},
      {{0, 4}, {6, 3}},
  };
  return t;
}

const ReferenceTable& ext13_reference_table() {
  static const ReferenceTable t{
      "canonical",
      {"I", "w", "13", "02", "013", "2", "0", "123"},
      {{
          {"I", "w", "13", "02", "013", "2", "0", "123"},
          {"w", "-I", "02", "-012", "-2", "013", "-123", "0"},
          {"13", "02", "-I", "-w", "-0", "-123", "013", "2"},
          {"02", "-13", "-w", "I", "123", "-0", "-2", "013"},
          {"013", "2", "-0", "-123", "-I", "-w", "13", "02"},
          {"2", "-013", "-123", "0", "w", "-I", "-02", "13"},
          {"0", "123", "013", "2", "13", "02", "I", "w"},
          {"123", "-0", "2", "-013", "-02", "13", "-w", "I"},
      }},
      {{1, 3}},
  };
  return t;
}

const ReferenceTable& ext41_reference_table() {
  static const ReferenceTable t{
      "sitter",
      {"I", "w", "34", "125", "123", "45", "124", "35"},
      {{
          {"I", "w", "34", "125", "123", "45", "124", "35"},
          {"w", "-I", "-125", "34", "-45", "123", "35", "-124"},
          {"34", "-125", "-I", "w", "-124", "35", "123", "-45"},
          {"125", "34", "w", "I", "35", "124", "45", "-123"},
          {"123", "-45", "124", "-35", "-I", "w", "-34", "125"},
          {"45", "123", "-35", "-124", "w", "I", "-125", "34"},
          {"124", "35", "-123", "45", "-34", "125", "-I", "-w"},
          {"35", "-124", "45", "-123", "-125", "34", "-w", "I"},
      }},
      {{3, 7}, {5, 7}, {6, 3}, {6, 4}},
  };
  return t;
}

const std::array<std::array<std::string, 8>, 8>& cpt_abstract_reference() {
  static const std::array<std::array<std::string, 8>, 8> t{{
      {"1", "P", "T", "PT", "C", "CP", "CT", "CPT"},
      {"P", "1", "PT", "T", "CP", "C", "CPT", "CT"},
      {"T", "PT", "1", "P", "CT", "CPT", "C", "CP"},
      {"PT", "T", "P", "1", "CPT", "CT", "CP", "C"},
      {"C", "CP", "CT", "CPT", "1", "P", "T", "PT"},
      {"CP", "C", "CPT", "CT", "P", "1", "PT", "T"},
      {"CT", "CPT", "C", "CP", "T", "PT", "1", "P"},
      {"CPT", "CT", "CP", "C", "PT", "T", "P", "1"},
  }};
  return t;
}

const std::array<std::array<std::string, 8>, 8>& map_reference() {
  static const std::array<std::array<std::string, 8>, 8> t{{
      {"id", "star", "rev", "rev*star", "bar", "bar*star", "bar*rev", "bar*rev*star"},
      {"star", "id", "rev*star", "rev", "bar*star", "bar", "bar*rev*star", "bar*rev"},
      {"rev", "bar*star", "id", "star", "bar*rev", "bar*rev*star", "bar", "bar*star"},
      {"rev*star", "rev", "star", "id", "bar*rev*star", "bar*rev", "bar*star", "bar"},
      {"bar", "bar*star", "bar*rev", "bar*rev*star", "id", "star", "rev", "rev*star"},
      {"bar*star", "bar", "bar*rev*star", "bar*rev", "star", "id", "rev*star", "rev"},
      {"bar*rev", "bar*rev*star", "bar", "bar*star", "rev", "rev*star", "id", "star"},
      {"bar*rev*star", "bar*rev", "bar*star", "bar", "rev*star", "rev", "star", "id"},
  }};
  return t;
}

const std::vector<std::pair<int, int>>& map_reference_pinned() {
  static const std::vector<std::pair<int, int>> pinned{{2, 1}};
  return pinned;
}

}  // namespace clifford
