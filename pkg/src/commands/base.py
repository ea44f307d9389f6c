from abc import ABC, abstractmethod
from typing import ClassVar

from ..errors import QuasiHermitianError
from .errors import ValidationError
from .shared import CommandResult, ExitCode, refusal_payload


class BaseCommandHandler(ABC):
    name: ClassVar[str]
    indent: int | None

    def __init__(self, **kwargs):
        for key, value in kwargs.items():
            setattr(self, key, value)

    @abstractmethod
    def validate(self):
        """
        Parse and check the command-line inputs.

        In order to signify malformed input, throw an instance of :class:`ValidationError`. Domain refusals (an input
        that is not quasi-Hermitian, say) belong in :meth:`execute`.
        """
        pass

    @abstractmethod
    def execute(self) -> CommandResult:
        pass

    def result(self, verdict: bool, **payload) -> CommandResult:
        return CommandResult(
            exit_code=ExitCode.success if verdict else ExitCode.false_verdict,
            payload={"command": self.name, "verdict": verdict, **payload},
        )

    def run(self) -> CommandResult:
        try:
            self.validate()
        except ValidationError as e:
            return CommandResult(ExitCode.malformed_input, {"command": self.name, **e.to_json_dict()})
        try:
            return self.execute()
        except QuasiHermitianError as e:
            return CommandResult(ExitCode.false_verdict, refusal_payload(self.name, e))
