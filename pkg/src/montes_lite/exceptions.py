# Copyright: (c) 2024, Jordan Borean (@jborean93) <jborean93@gmail.com>
# MIT License (see LICENSE or https://opensource.org/licenses/MIT)

import enum
import typing


class ErrorCode(enum.IntEnum):
    """Common error codes raised by the montes-lite engine.

    Every code has a corresponding MontesError subclass, creating a MontesError with one of these codes returns an
    instance of that subclass.
    """

    domain = 1  # DomainError
    precondition = 2  # PreconditionError
    out_of_range = 3  # OutOfRangeError
    syntax = 4  # PolynomialSyntaxError
    factoring_budget = 5  # FactoringBudgetExceeded
    invalid_field_spec = 6  # InvalidFieldSpecError


class _MontesErrorRegistry(type):
    __registry: typing.Dict[int, typing.Type] = {}

    def __init__(
        cls,
        *args: typing.Any,
        **kwargs: typing.Any,
    ) -> None:
        # Load up the registry with the instantiated class so we can look it up when creating a MontesError.
        error_code = getattr(cls, "ERROR_CODE", None)

        if error_code is not None and error_code not in cls.__registry:
            cls.__registry[error_code] = cls

    def __call__(
        cls,
        error_code: typing.Optional[int] = None,
        *args: typing.Any,
        **kwargs: typing.Any,
    ) -> "_MontesErrorRegistry":
        error_code = error_code if error_code is not None else getattr(cls, "ERROR_CODE", None)

        if error_code is None:
            raise ValueError("%s requires an error_code" % cls.__name__)

        new_cls = cls.__registry.get(error_code, cls)
        return super(_MontesErrorRegistry, new_cls).__call__(error_code, *args, **kwargs)


class MontesError(Exception, metaclass=_MontesErrorRegistry):
    """Common error for the montes-lite engine.

    Args:
        error_code: The ErrorCode for the error, subclasses provide their own.
        context_msg: Optional message to provide more context around the error.
    """

    # Classes the subclass this type need to provide the following class attribute:
    #
    # ERROR_CODE = common ErrorCode value for the exception
    # _BASE_MESSAGE = common string that explains the error code.

    def __init__(
        self,
        error_code: typing.Optional[typing.Union[int, ErrorCode]] = None,
        context_msg: typing.Optional[str] = None,
    ) -> None:
        self._error_code = error_code
        self._context_message = context_msg

        super(MontesError, self).__init__(self.message)

    @property
    def error_code(self) -> typing.Optional[int]:
        return self._error_code

    @property
    def context_message(self) -> typing.Optional[str]:
        return self._context_message

    @property
    def message(self) -> str:
        base_message = getattr(self, "_BASE_MESSAGE", "Unknown error code")

        msg = "MontesError (%d): %s" % (self._error_code or 0, base_message)
        if self._context_message:
            msg += ", Context: %s" % self._context_message

        return msg


class DomainError(MontesError):
    ERROR_CODE = ErrorCode.domain

    _BASE_MESSAGE = "The operation is not defined for the input value"


class PreconditionError(MontesError):
    ERROR_CODE = ErrorCode.precondition

    _BASE_MESSAGE = "A precondition of the operation does not hold"


class OutOfRangeError(MontesError):
    ERROR_CODE = ErrorCode.out_of_range

    _BASE_MESSAGE = "A value is outside of the supported range"


class PolynomialSyntaxError(MontesError):
    """The polynomial text could not be parsed.

    Args:
        error_code: Always ErrorCode.syntax.
        context_msg: Description of the problem.
        offset: The 0 based character offset in the input text where parsing failed.
    """

    ERROR_CODE = ErrorCode.syntax

    _BASE_MESSAGE = "Invalid polynomial expression"

    def __init__(
        self,
        error_code: typing.Optional[typing.Union[int, ErrorCode]] = None,
        context_msg: typing.Optional[str] = None,
        offset: int = 0,
    ) -> None:
        self.offset = offset
        super(PolynomialSyntaxError, self).__init__(error_code, context_msg)

    @property
    def message(self) -> str:
        return "%s at offset %d" % (super(PolynomialSyntaxError, self).message, self.offset)


class FactoringBudgetExceeded(MontesError):
    ERROR_CODE = ErrorCode.factoring_budget

    _BASE_MESSAGE = "The integer could not be factored within the configured budget, supply its factorization"


class InvalidFieldSpecError(MontesError):
    ERROR_CODE = ErrorCode.invalid_field_spec

    _BASE_MESSAGE = "The field parameters do not describe a supported pure field"
