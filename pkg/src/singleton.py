from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from typing_extensions import Self


class SingletonClass:
    """One shared instance per subclass.

    Unlike a module-level global, the instance can be dropped with :meth:`reset_instance` so the next construction
    re-reads whatever it was built from (the environment, for :class:`~src.settings.Settings`).
    """

    __instance: Optional[Self] = None

    def __new__(cls, *args, **kwargs) -> Self:
        if cls.__dict__.get("_SingletonClass__instance") is None:
            cls.__instance = super().__new__(cls)
        return cls.__instance

    @classmethod
    def reset_instance(cls):
        cls.__instance = None
