#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cglink {

// Failure codes for knowledge-base construction and link resolution.
enum class errc {
  // type hierarchy
  duplicate_type,
  unknown_parent,
  second_root,
  unknown_type,
  incomparable,
  // models
  head_type_mismatch,
  duplicate_model,
  missing_head,
  // conceptual graphs / chains
  invalid_index,
  self_loop,
  duplicate_referent,
  not_a_subtype,
  incomparable_junction,
  // lexicon
  duplicate_word,
  unknown_word,
  duplicate_gramrel,
  unknown_gramrel,
  unknown_relation_type,
  empty_preferences,
  duplicate_preference,
  // resolution
  no_chain_found,
  // sentence input
  invalid_triple_file,
  not_a_tree,
};

inline std::string_view errc_name(errc c) {
  switch (c) {
    case errc::duplicate_type: return "duplicate type";
    case errc::unknown_parent: return "unknown parent";
    case errc::second_root: return "second root";
    case errc::unknown_type: return "unknown type";
    case errc::incomparable: return "incomparable types";
    case errc::head_type_mismatch: return "head type mismatch";
    case errc::duplicate_model: return "duplicate model";
    case errc::missing_head: return "missing head";
    case errc::invalid_index: return "invalid index";
    case errc::self_loop: return "self loop";
    case errc::duplicate_referent: return "duplicate referent";
    case errc::not_a_subtype: return "not a subtype";
    case errc::incomparable_junction: return "incomparable junction";
    case errc::duplicate_word: return "duplicate word";
    case errc::unknown_word: return "unknown word";
    case errc::duplicate_gramrel: return "duplicate grammatical relation";
    case errc::unknown_gramrel: return "unknown grammatical relation";
    case errc::unknown_relation_type: return "unknown relation type";
    case errc::empty_preferences: return "empty preferences";
    case errc::duplicate_preference: return "duplicate preference";
    case errc::no_chain_found: return "no chain found";
    case errc::invalid_triple_file: return "invalid triple file";
    case errc::not_a_tree: return "not a tree";
  }
  return "error";
}

class kb_error : public std::runtime_error {
public:
  kb_error(errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) {
  throw kb_error(code, msg);
}

}  // namespace cglink
