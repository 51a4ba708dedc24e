#pragma once

#include <stdexcept>
#include <string>

namespace coheyt {

enum class errc {
    duplicate_name,
    unknown_name,
    cycle_detected,
    index_out_of_range,
    parent_mismatch,
    unbound_variable,
    parse_error,
    not_a_lattice,
    not_distributive,
    not_bounded,
    not_increasing,
    not_surjective,
    lifting_fails,
    not_in_carrier,
    invalid_signature,
    not_proper,
    hypothesis_violated,
    variety_mismatch,
    factor_mismatch,
    cap_exceeded,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), m_code(code) {}
    errc code() const { return m_code; }

  private:
    errc m_code;
};

[[noreturn]] inline void raise(errc code, const std::string& msg) { throw error(code, msg); }

}
