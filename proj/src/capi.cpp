#include "etcs.h"

#include <cstring>
#include <new>
#include <string>

#include "etcs/interpreter.hpp"
#include "etcs/report_io.hpp"
#include "etcs/script.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

struct etcs_session {
  etcs::ExecConfig config;
};

struct etcs_result {
  etcs::ExecResult result;
  std::string source_name;
};

extern "C" {

const char* etcs_version(void) { return "1.0.0"; }

const char* etcs_last_error(void) { return g_last_error.c_str(); }

etcs_session* etcs_session_new(void) {
  g_last_error.clear();
  return new (std::nothrow) etcs_session{};
}

void etcs_session_free(etcs_session* session) { delete session; }

int etcs_session_set_nat_bound(etcs_session* session, uint64_t bound) {
  if (!session || bound < 1) {
    set_error("nat bound must be >= 1");
    return ETCS_E_INVALID_ARGUMENT;
  }
  session->config.nat_bound = bound;
  return ETCS_OK;
}

int etcs_session_set_size_limit(etcs_session* session, int size_limit) {
  if (!session || size_limit < 0) {
    set_error("size limit must be >= 0");
    return ETCS_E_INVALID_ARGUMENT;
  }
  session->config.verifier.size_limit = size_limit;
  return ETCS_OK;
}

int etcs_session_set_seed(etcs_session* session, uint64_t seed) {
  if (!session) {
    set_error("null session");
    return ETCS_E_INVALID_ARGUMENT;
  }
  session->config.verifier.seed = seed;
  return ETCS_OK;
}

int etcs_session_set_timing(etcs_session* session, int enabled) {
  if (!session) {
    set_error("null session");
    return ETCS_E_INVALID_ARGUMENT;
  }
  session->config.verifier.timing = enabled != 0;
  return ETCS_OK;
}

etcs_result* etcs_run_script(etcs_session* session, const char* source,
                             const char* source_name) {
  if (!session || !source) {
    set_error("null session or source");
    return nullptr;
  }
  try {
    auto* out = new etcs_result{};
    out->source_name = source_name ? source_name : "<script>";
    etcs::ParseResult parsed = etcs::parse(source);
    out->result.diagnostics = parsed.diagnostics;
    if (parsed.ok()) {
      etcs::ExecResult ran = etcs::execute(parsed.script, session->config);
      out->result.reports = std::move(ran.reports);
      for (auto& d : ran.diagnostics)
        out->result.diagnostics.push_back(std::move(d));
    }
    return out;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

etcs_result* etcs_check_axioms(etcs_session* session, int size_limit) {
  if (!session) {
    set_error("null session");
    return nullptr;
  }
  try {
    etcs::VerifierConfig cfg = session->config.verifier;
    if (size_limit > 0) cfg.size_limit = size_limit;
    auto* out = new etcs_result{};
    out->source_name = "<axioms>";
    out->result.reports = etcs::check_all(cfg);
    return out;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

etcs_result* etcs_result_merge(const etcs_result* a, const etcs_result* b) {
  if (!a || !b) {
    set_error("null result");
    return nullptr;
  }
  try {
    auto* out = new etcs_result{};
    out->source_name = a->source_name;
    out->result.reports = a->result.reports;
    out->result.reports.insert(out->result.reports.end(),
                               b->result.reports.begin(),
                               b->result.reports.end());
    out->result.diagnostics = a->result.diagnostics;
    out->result.diagnostics.insert(out->result.diagnostics.end(),
                                   b->result.diagnostics.begin(),
                                   b->result.diagnostics.end());
    return out;
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

void etcs_result_free(etcs_result* result) { delete result; }

int etcs_result_status(const etcs_result* result) {
  if (!result) {
    set_error("null result");
    return ETCS_E_INVALID_ARGUMENT;
  }
  return result->result.exit_status();
}

int64_t etcs_result_report_count(const etcs_result* result) {
  if (!result) return -1;
  return static_cast<int64_t>(result->result.reports.size());
}

int64_t etcs_result_diagnostic_count(const etcs_result* result) {
  if (!result) return -1;
  return static_cast<int64_t>(result->result.diagnostics.size());
}

char* etcs_result_render(const etcs_result* result, etcs_format format) {
  if (!result ||
      (format != ETCS_FORMAT_TEXT && format != ETCS_FORMAT_JSON)) {
    set_error("null result or unknown format");
    return nullptr;
  }
  try {
    std::string rendered = etcs::render_reports(
        result->result.reports, format == ETCS_FORMAT_TEXT
                                    ? etcs::ReportFormat::text
                                    : etcs::ReportFormat::json);
    return dup_string(rendered);
  } catch (const std::exception& e) {
    set_error(e.what());
    return nullptr;
  }
}

char* etcs_result_diagnostics(const etcs_result* result) {
  if (!result) {
    set_error("null result");
    return nullptr;
  }
  return dup_string(etcs::render_diagnostics(result->result.diagnostics,
                                             result->source_name));
}

void etcs_string_free(char* s) { ::operator delete(s); }

}  // extern "C"
