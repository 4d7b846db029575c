"""pnca 的例外階層。CLI 把 PncaError 轉成 exit code 1 與一行錯誤訊息。"""


class PncaError(Exception):
    pass


class PolynomialError(PncaError, ValueError):
    pass


class FieldMismatchError(PncaError, ValueError):
    pass


class RuleError(PncaError, ValueError):
    pass


class BoundExceededError(PncaError, ValueError):
    pass


class NotBijectiveError(PncaError, RuntimeError):
    pass


class SynthesisError(PncaError, RuntimeError):
    pass


class ZeroSolutionError(PncaError, ValueError):
    pass


class OutsideModelClassError(PncaError, ValueError):
    pass


class SingularSystemError(PncaError, RuntimeError):
    pass


class SequenceError(PncaError, ValueError):
    pass
