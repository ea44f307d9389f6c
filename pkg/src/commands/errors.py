class ValidationError(ValueError):
    """Malformed command-line input; reported with exit code 2."""

    def __init__(self, message: str, code: str = "malformed-input"):
        super().__init__(message)
        self.message = message
        self.code = code

    def to_json_dict(self) -> dict:
        return {"error": self.code, "detail": self.message}
