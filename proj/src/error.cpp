#include "lsq/error.hpp"

namespace lsq {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ragged_grid: return "RaggedGrid";
    case errc::symbol_out_of_range: return "SymbolOutOfRange";
    case errc::row_repeat: return "RowRepeat";
    case errc::column_repeat: return "ColumnRepeat";
    case errc::point_not_in_array: return "PointNotInArray";
    case errc::two_component_agreement: return "TwoComponentAgreement";
    case errc::not_well_defined: return "NotWellDefined";
    case errc::order_too_small: return "OrderTooSmall";
    case errc::not_right_bol: return "NotRightBol";
    case errc::not_moufang: return "NotMoufang";
    case errc::not_a_loop: return "NotALoop";
    case errc::no_rip: return "NoRIP";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_closed: return "NotClosed";
    case errc::unknown_corpus_name: return "UnknownCorpusName";
    case errc::bad_permutation: return "BadPermutation";
    case errc::bad_conjugacy_word: return "BadConjugacyWord";
  }
  return "UnknownError";
}

}  // namespace lsq
