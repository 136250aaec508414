#include "qrdp/errors.hpp"

namespace qrdp {

const char* errc_name(errc c) {
  switch (c) {
    case errc::not_hermitian: return "NotHermitian";
    case errc::no_convergence: return "NoConvergence";
    case errc::not_psd: return "NotPsd";
    case errc::trace_not_one: return "TraceNotOne";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::dimension_overflow: return "DimensionOverflow";
    case errc::param_out_of_range: return "ParamOutOfRange";
    case errc::channel_not_trace_preserving: return "ChannelNotTracePreserving";
    case errc::imaginary_probability: return "ImaginaryProbability";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_stochastic: return "NotStochastic";
    case errc::delta_out_of_range: return "DeltaOutOfRange";
    case errc::not_qubit: return "NotQubit";
    case errc::missing_exact_inputs: return "MissingExactInputs";
    case errc::schedule_conflict: return "ScheduleConflict";
    case errc::bad_document: return "BadDocument";
  }
  return "UnknownError";
}

}  // namespace qrdp
