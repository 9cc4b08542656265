#pragma once
#include <stdexcept>
#include <string>

namespace ymh {

struct YmhError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroHiggs : YmhError { using YmhError::YmhError; };
struct BallOutOfDomain : YmhError { using YmhError::YmhError; };
struct WindowOutOfDomain : YmhError { using YmhError::YmhError; };
struct NonconformingPerturbation : YmhError { using YmhError::YmhError; };
struct NonconformingGauge : YmhError { using YmhError::YmhError; };
struct HiggsVanishesOnSphere : YmhError { using YmhError::YmhError; };
struct DomainTooSmall : YmhError { using YmhError::YmhError; };
struct Diverged : YmhError { using YmhError::YmhError; };
struct BadMagic : YmhError { using YmhError::YmhError; };
struct TruncatedFile : YmhError { using YmhError::YmhError; };
struct DimMismatch : YmhError { using YmhError::YmhError; };
struct ParseError : YmhError { using YmhError::YmhError; };
struct ValidationError : YmhError { using YmhError::YmhError; };
struct IoError : YmhError { using YmhError::YmhError; };

}  // namespace ymh
