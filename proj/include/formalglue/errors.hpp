#pragma once

#include <stdexcept>
#include <string>

namespace formalglue {

enum class ErrorCode {
	AmbientMismatch,
	BadField,
	ConstantTermPresent,
	DuplicateVariable,
	IllDefinedMap,
	NonSurjectiveMap,
	NoPresentation,
	NotStandardBasis,
	ParseError,
	TrivialFactor,
	TrivialGluing,
	TruncationMismatch,
	UndefinedName,
	ZeroIdeal,
};

inline const char* error_code_name(ErrorCode c)
{
	switch (c) {
	case ErrorCode::AmbientMismatch: return "AmbientMismatch";
	case ErrorCode::BadField: return "BadField";
	case ErrorCode::ConstantTermPresent: return "ConstantTermPresent";
	case ErrorCode::DuplicateVariable: return "DuplicateVariable";
	case ErrorCode::IllDefinedMap: return "IllDefinedMap";
	case ErrorCode::NonSurjectiveMap: return "NonSurjectiveMap";
	case ErrorCode::NoPresentation: return "NoPresentation";
	case ErrorCode::NotStandardBasis: return "NotStandardBasis";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::TrivialFactor: return "TrivialFactor";
	case ErrorCode::TrivialGluing: return "TrivialGluing";
	case ErrorCode::TruncationMismatch: return "TruncationMismatch";
	case ErrorCode::UndefinedName: return "UndefinedName";
	case ErrorCode::ZeroIdeal: return "ZeroIdeal";
	}
	return "Error";
}

class Error : public std::runtime_error {
public:
	Error(ErrorCode code, const std::string& message)
		: std::runtime_error(std::string(error_code_name(code)) + ": " + message),
		  code_(code), message_(message)
	{
	}

	ErrorCode code() const { return code_; }
	const std::string& message() const { return message_; }

private:
	ErrorCode code_;
	std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message)
{
	throw Error(code, message);
}

} // namespace formalglue
