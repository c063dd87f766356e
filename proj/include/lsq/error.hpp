#pragma once

#include <stdexcept>
#include <string>

namespace lsq {

// Every failure the library can signal, one code per condition.
enum class errc {
  ragged_grid,
  symbol_out_of_range,
  row_repeat,
  column_repeat,
  point_not_in_array,
  two_component_agreement,
  not_well_defined,
  order_too_small,
  not_right_bol,
  not_moufang,
  not_a_loop,
  no_rip,
  size_mismatch,
  not_closed,
  unknown_corpus_name,
  bad_permutation,
  bad_conjugacy_word,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  errc kind() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace lsq
