"""CLI subcommands. Every module here that defines ``setup(subparsers)`` is loaded by :class:`src.app.QH2App`."""
