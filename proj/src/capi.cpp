#include "gckit.h"

#include <string>

#include "gckit/document.hpp"
#include "gckit/errors.hpp"

struct gckit_doc {
    gckit::StructureDoc doc;
};

struct gckit_report {
    std::string json;
    int passed = 0;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) {
    g_last_error = msg;
}

} // namespace

extern "C" {

int gckit_abi_version(void) {
    return 1;
}

gckit_status gckit_doc_parse(const char* json_text, gckit_doc** out_doc) {
    if (json_text == nullptr || out_doc == nullptr) {
        set_error("null argument");
        return GCKIT_INVALID_ARGUMENT;
    }
    *out_doc = nullptr;
    try {
        auto* handle = new gckit_doc{gckit::StructureDoc::parse(json_text)};
        *out_doc = handle;
        set_error("");
        return GCKIT_OK;
    } catch (const gckit::ParseError& e) {
        set_error(e.what());
        return GCKIT_PARSE_ERROR;
    } catch (const gckit::Error& e) {
        set_error(e.what());
        return GCKIT_PARSE_ERROR;
    } catch (const std::exception& e) {
        set_error(e.what());
        return GCKIT_INTERNAL_ERROR;
    }
}

void gckit_doc_free(gckit_doc* doc) {
    delete doc;
}

gckit_status gckit_run(const gckit_doc* doc, const char* command,
                       const char* options_json, gckit_report** out_report) {
    if (doc == nullptr || command == nullptr || out_report == nullptr) {
        set_error("null argument");
        return GCKIT_INVALID_ARGUMENT;
    }
    *out_report = nullptr;
    try {
        gckit::RunOptions opts =
            gckit::RunOptions::parse(options_json ? options_json : "");
        gckit::Report rep = gckit::run_command(doc->doc, command, opts);
        auto* handle = new gckit_report{rep.json_text(), rep.passed ? 1 : 0};
        *out_report = handle;
        set_error("");
        return rep.passed ? GCKIT_OK : GCKIT_CHECKS_FAILED;
    } catch (const gckit::ParseError& e) {
        set_error(e.what());
        return GCKIT_PARSE_ERROR;
    } catch (const gckit::DimensionError& e) {
        set_error(e.what());
        return GCKIT_PARSE_ERROR;
    } catch (const gckit::Error& e) {
        set_error(e.what());
        return GCKIT_INTERNAL_ERROR;
    } catch (const std::exception& e) {
        set_error(e.what());
        return GCKIT_INTERNAL_ERROR;
    }
}

const char* gckit_report_json(const gckit_report* report) {
    return report ? report->json.c_str() : "";
}

int gckit_report_passed(const gckit_report* report) {
    return report ? report->passed : 0;
}

void gckit_report_free(gckit_report* report) {
    delete report;
}

const char* gckit_last_error(void) {
    return g_last_error.c_str();
}

} // extern "C"
