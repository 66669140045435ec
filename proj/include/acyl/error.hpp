#pragma once

#include <stdexcept>
#include <string>

namespace acyl {

// Error codes double as stable identifiers in reports.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Error unknown_letter(const std::string& w) { return Error("UnknownLetter", w); }
inline Error preset_mismatch() { return Error("PresetMismatch", "operands belong to different presets"); }
inline Error budget_exceeded(const std::string& w) { return Error("BudgetExceeded", w); }
inline Error depth_insufficient(const std::string& w) { return Error("DepthInsufficient", w); }
inline Error orbit_budget(const std::string& w) { return Error("OrbitDiscoveryBudget", w); }
inline Error segment_undefined(const std::string& w) { return Error("SegmentUndefined", w); }
inline Error unsupported_preset(const std::string& w) { return Error("UnsupportedPreset", w); }
inline Error not_in_small_part(const std::string& w) { return Error("NotInSmallPart", w); }
inline Error tau_too_small(const std::string& w) { return Error("TauTooSmall", w); }
inline Error config_error(const std::string& w) { return Error("ConfigError", w); }
inline Error certification_failed(const std::string& w) { return Error("CertificationFailed", w); }

} // namespace acyl
